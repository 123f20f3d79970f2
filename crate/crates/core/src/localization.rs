//! Point subgroups of the torus, fixed subfans, and the localization
//! checks.
//!
//! A point `e` of the ambient abelian variety determines the subgroup
//! `T(e)` of the torus cut out by the characters that vanish at `e`.  An
//! orbit of the toric variety is fixed by `T(e)` exactly when the
//! characters of its cone's perpendicular lattice all vanish at `e`, so
//! the fixed locus is read off cone by cone.  Replacing the terms of the
//! Cech complex at the non-fixed cones by zero produces the complex of the
//! fixed locus; the localization check compares fibers of the two
//! complexes at the point and at generic translates of it along every
//! stratum of supports through it.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_traits::One;

use crate::cech::{build_complex, fiber_complex, support_stratification, SheafComplex};
use crate::epoints::{annihilator_lattice, perturb, SymbolGen, TorusPoint};
use crate::fan::{Cone, Fan};
use crate::lattice::{row_lattice_contains_all, smith_normal_form, IntMatrix};
use crate::local_model::SheafTerm;
use crate::{Error, Int};

/// The subgroup of the torus attached to a point: the diagonalizable
/// group whose character group is the ambient character lattice modulo
/// the annihilator of the point.
#[derive(Clone, Debug)]
pub struct TorusSubgroup {
    ambient_rank: usize,
    annihilator: IntMatrix,
    torus_rank: usize,
    orders: Vec<Int>,
}

impl TorusSubgroup {
    pub fn ambient_rank(&self) -> usize {
        self.ambient_rank
    }

    /// Characters of the ambient torus vanishing on the subgroup.
    pub fn annihilator(&self) -> &IntMatrix {
        &self.annihilator
    }

    /// Dimension of the identity component.
    pub fn torus_rank(&self) -> usize {
        self.torus_rank
    }

    /// Orders of the finite cyclic factors, ascending, each above one.
    pub fn orders(&self) -> &[Int] {
        &self.orders
    }

    pub fn component_count(&self) -> Int {
        self.orders.iter().fold(Int::one(), |acc, d| acc * d)
    }

    pub fn is_trivial(&self) -> bool {
        self.torus_rank == 0 && self.orders.is_empty()
    }

    pub fn is_full_torus(&self) -> bool {
        self.torus_rank == self.ambient_rank
    }
}

/// The subgroup of the torus fixing a point of the ambient abelian
/// variety.
pub fn t_of_e(e: &TorusPoint) -> TorusSubgroup {
    let annihilator = annihilator_lattice(e);
    let n = e.rank();
    let snf = smith_normal_form(&annihilator);
    let orders = snf
        .invariant_factors
        .iter()
        .filter(|d| !d.is_one())
        .cloned()
        .collect();
    TorusSubgroup {
        ambient_rank: n,
        annihilator,
        torus_rank: n - snf.rank,
        orders,
    }
}

/// Is the orbit of this cone fixed by the subgroup with the given
/// annihilator lattice?  True exactly when the perpendicular lattice of
/// the cone lies inside the annihilator.
pub fn cone_is_fixed(fan: &Fan, cone: &Cone, annihilator: &IntMatrix) -> Result<bool, Error> {
    let perp = fan.orbit_perp_lattice(cone)?;
    row_lattice_contains_all(annihilator, &perp)
}

/// Fixed faces of a fan under the subgroup of a point.
#[derive(Clone, Debug)]
pub struct FixedLocusReport {
    subgroup: TorusSubgroup,
    fixed_faces: Vec<Cone>,
    minimal_fixed: Vec<Cone>,
    fixed_max_cones: Vec<usize>,
}

impl FixedLocusReport {
    pub fn subgroup(&self) -> &TorusSubgroup {
        &self.subgroup
    }

    /// Every fixed face, in (dimension, lexicographic) order.
    pub fn fixed_faces(&self) -> &[Cone] {
        &self.fixed_faces
    }

    /// Minimal fixed faces; their orbit closures are the components of
    /// the fixed locus.
    pub fn minimal_fixed(&self) -> &[Cone] {
        &self.minimal_fixed
    }

    /// Indices of the fixed maximal cones.
    pub fn fixed_max_cones(&self) -> &[usize] {
        &self.fixed_max_cones
    }

    pub fn is_empty(&self) -> bool {
        self.fixed_faces.is_empty()
    }
}

/// Compute the fixed faces of a validated fan at a point.
pub fn fixed_subfan(fan: &Fan, e: &TorusPoint) -> Result<FixedLocusReport, Error> {
    fan.require_valid()?;
    if e.rank() != fan.rank() {
        return Err(Error::AmbientRankMismatch {
            left: fan.rank(),
            right: e.rank(),
        });
    }
    let subgroup = t_of_e(e);
    let mut fixed_faces = Vec::new();
    for face in fan.faces() {
        if cone_is_fixed(fan, &face, subgroup.annihilator())? {
            fixed_faces.push(face);
        }
    }
    let minimal_fixed = fixed_faces
        .iter()
        .filter(|c| {
            !fixed_faces
                .iter()
                .any(|d| d.ray_indices() != c.ray_indices() && d.is_face_of(c))
        })
        .cloned()
        .collect();
    let fixed_max_cones = fan
        .max_cones()
        .iter()
        .enumerate()
        .filter(|(_, c)| {
            fixed_faces
                .iter()
                .any(|f| f.ray_indices() == c.ray_indices())
        })
        .map(|(i, _)| i)
        .collect();
    Ok(FixedLocusReport {
        subgroup,
        fixed_faces,
        minimal_fixed,
        fixed_max_cones,
    })
}

/// The complex of the fixed locus: the complex of the fan with the terms
/// of every non-fixed cone replaced by zero.
pub fn fixed_complex(fan: &Fan, e: &TorusPoint, cap: usize) -> Result<SheafComplex, Error> {
    let base = build_complex(fan, cap)?;
    fixed_complex_from(&base, fan, e)
}

/// Same, reusing an already built complex of the fan.
pub fn fixed_complex_from(
    base: &SheafComplex,
    fan: &Fan,
    e: &TorusPoint,
) -> Result<SheafComplex, Error> {
    if e.rank() != fan.rank() {
        return Err(Error::AmbientRankMismatch {
            left: fan.rank(),
            right: e.rank(),
        });
    }
    let annihilator = annihilator_lattice(e);
    let mut fixed: BTreeMap<Vec<usize>, bool> = BTreeMap::new();
    for cone in base.cones() {
        let f = cone_is_fixed(fan, cone, &annihilator)?;
        fixed.insert(cone.ray_indices().to_vec(), f);
    }
    Ok(base.map_terms(|cone, term| {
        if fixed[cone.ray_indices()] {
            term.clone()
        } else {
            SheafTerm::Zero
        }
    }))
}

/// One comparison of the two complexes at a probe point.
#[derive(Clone, Debug)]
pub struct LocalizationProbe {
    stratum: Option<usize>,
    full_table: BTreeMap<(usize, usize, usize), u64>,
    fixed_table: BTreeMap<(usize, usize, usize), u64>,
    full_cohomology: BTreeMap<i64, u64>,
    fixed_cohomology: BTreeMap<i64, u64>,
    dd_zero: bool,
}

impl LocalizationProbe {
    /// Index into the stratification, or none for the point itself.
    pub fn stratum(&self) -> Option<usize> {
        self.stratum
    }

    pub fn full_table(&self) -> &BTreeMap<(usize, usize, usize), u64> {
        &self.full_table
    }

    pub fn fixed_table(&self) -> &BTreeMap<(usize, usize, usize), u64> {
        &self.fixed_table
    }

    pub fn full_cohomology(&self) -> &BTreeMap<i64, u64> {
        &self.full_cohomology
    }

    pub fn fixed_cohomology(&self) -> &BTreeMap<i64, u64> {
        &self.fixed_cohomology
    }

    /// Did both squared differentials vanish?
    pub fn dd_zero(&self) -> bool {
        self.dd_zero
    }

    /// The whole bigraded dimension table must match, not just the
    /// cohomology it computes: away from the fixed locus nothing may
    /// survive at all.
    pub fn agree(&self) -> bool {
        self.full_table == self.fixed_table && self.full_cohomology == self.fixed_cohomology
    }
}

/// Outcome of the localization check at one point.
#[derive(Clone, Debug)]
pub struct LocalizationReport {
    fixed: FixedLocusReport,
    strata: Vec<crate::subgroups::SubgroupScheme>,
    probes: Vec<LocalizationProbe>,
}

impl LocalizationReport {
    pub fn fixed_locus(&self) -> &FixedLocusReport {
        &self.fixed
    }

    pub fn strata(&self) -> &[crate::subgroups::SubgroupScheme] {
        &self.strata
    }

    pub fn probes(&self) -> &[LocalizationProbe] {
        &self.probes
    }

    pub fn all_agree(&self) -> bool {
        self.probes.iter().all(|p| p.agree() && p.dd_zero())
    }
}

/// Compare the complex of the fan with the complex of the fixed locus of
/// the point: at the point itself and at a generic translate along every
/// stratum of supports passing through it.
pub fn verify_localization(
    fan: &Fan,
    e: &TorusPoint,
    cap: usize,
) -> Result<LocalizationReport, Error> {
    let base = build_complex(fan, cap)?;
    let fixed_cx = fixed_complex_from(&base, fan, e)?;
    let fixed = fixed_subfan(fan, e)?;
    let strata = support_stratification(&base);
    let mut gen = SymbolGen::new();
    gen.reserve_point(e);

    let mut probes = Vec::new();
    let mut run = |stratum: Option<usize>, x: &TorusPoint| -> Result<(), Error> {
        let full = fiber_complex(&base, x)?;
        let fixed_f = fiber_complex(&fixed_cx, x)?;
        probes.push(LocalizationProbe {
            stratum,
            dd_zero: full.dd_zero() && fixed_f.dd_zero(),
            full_table: full.table().clone(),
            fixed_table: fixed_f.table().clone(),
            full_cohomology: full.cohomology().clone(),
            fixed_cohomology: fixed_f.cohomology().clone(),
        });
        Ok(())
    };
    run(None, e)?;
    for (k, stratum) in strata.iter().enumerate() {
        if !stratum.contains_point(e)? {
            continue;
        }
        let x = perturb(e, stratum, &mut gen)?;
        run(Some(k), &x)?;
    }
    Ok(LocalizationReport {
        fixed,
        strata,
        probes,
    })
}

/// Comparison of the fiber at the identity with the Betti numbers of the
/// variety; only meaningful for complete fans.
#[derive(Clone, Debug)]
pub struct IdentityCheck {
    cohomology: BTreeMap<i64, u64>,
    betti: Vec<Int>,
    dd_zero: bool,
}

impl IdentityCheck {
    pub fn cohomology(&self) -> &BTreeMap<i64, u64> {
        &self.cohomology
    }

    pub fn betti(&self) -> &[Int] {
        &self.betti
    }

    pub fn dd_zero(&self) -> bool {
        self.dd_zero
    }

    pub fn fiber_total(&self) -> Int {
        self.cohomology
            .values()
            .fold(Int::from(0u32), |acc, v| acc + Int::from(*v))
    }

    pub fn betti_total(&self) -> Int {
        self.betti.iter().cloned().sum()
    }

    pub fn matches(&self) -> bool {
        self.dd_zero && self.fiber_total() == self.betti_total()
    }
}

/// Fiber of the complex at the identity against the Betti numbers.
pub fn identity_fiber_check(fan: &Fan, cap: usize) -> Result<IdentityCheck, Error> {
    let betti = fan.betti_numbers()?;
    let base = build_complex(fan, cap)?;
    let fiber = fiber_complex(&base, &TorusPoint::identity(fan.rank()))?;
    Ok(IdentityCheck {
        cohomology: fiber.cohomology().clone(),
        betti,
        dd_zero: fiber.dd_zero(),
    })
}
