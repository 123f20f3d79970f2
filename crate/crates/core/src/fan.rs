//! Fans of smooth toric varieties and their torus-chart weight data.
//!
//! Validation is exact: primitivity is a gcd test, smoothness of a cone is
//! "the Smith form of its ray matrix is an identity block", and the
//! face-intersection property for a pair of simplicial cones reduces to
//! rational LP feasibility (is there a point of `the intersection of cone(S) and cone(T)` that
//! uses a ray outside the shared set?), which a small exact simplex decides.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::lattice::{
    determinant, integer_kernel, smith_normal_form, IntMatrix, RatMatrix,
};
use crate::{Error, Int, Rat};

/// A face of the fan, identified by its sorted ray indices.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Cone {
    ray_indices: Vec<usize>,
}

impl Cone {
    pub fn new(mut ray_indices: Vec<usize>) -> Self {
        ray_indices.sort_unstable();
        ray_indices.dedup();
        Cone { ray_indices }
    }

    pub fn ray_indices(&self) -> &[usize] {
        &self.ray_indices
    }

    /// For simplicial cones the dimension is the number of rays.
    pub fn dim(&self) -> usize {
        self.ray_indices.len()
    }

    pub fn is_face_of(&self, other: &Cone) -> bool {
        self.ray_indices.iter().all(|i| other.ray_indices.binary_search(i).is_ok())
    }
}

/// A single validation failure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    NonPrimitiveRay { ray: usize },
    DuplicateRays { a: usize, b: usize },
    NonSimplicialCone { cone: usize },
    SingularCone { cone: usize },
    ContainedMaxCone { inner: usize, outer: usize },
    IntersectionNotCommonFace { a: usize, b: usize },
    NotFullDimensional { cone: usize },
    WallCountOff { wall: Vec<usize>, count: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::NonPrimitiveRay { ray } => write!(f, "ray {ray} is not primitive"),
            Violation::DuplicateRays { a, b } => write!(f, "rays {a} and {b} coincide"),
            Violation::NonSimplicialCone { cone } => {
                write!(f, "maximal cone {cone} has linearly dependent rays")
            }
            Violation::SingularCone { cone } => {
                write!(f, "maximal cone {cone} is not smooth (invariant factor > 1)")
            }
            Violation::ContainedMaxCone { inner, outer } => {
                write!(f, "maximal cone {inner} is contained in maximal cone {outer}")
            }
            Violation::IntersectionNotCommonFace { a, b } => {
                write!(f, "cones {a} and {b} do not intersect in a common face")
            }
            Violation::NotFullDimensional { cone } => {
                write!(f, "maximal cone {cone} is not full-dimensional")
            }
            Violation::WallCountOff { wall, count } => {
                write!(f, "wall {wall:?} lies on {count} maximal cones instead of 2")
            }
        }
    }
}

/// Outcome of fan validation.  `violations` break validity; the wall data
/// only gates completeness-dependent operations.
#[derive(Debug, Clone)]
pub struct ValidationReport {
    pub primitive: bool,
    pub simplicial: bool,
    pub smooth: bool,
    pub face_check: bool,
    pub wall_check: bool,
    pub violations: Vec<Violation>,
    pub wall_violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.primitive && self.smooth && self.face_check
    }

    pub fn describe(&self) -> String {
        if let Some(v) = self.violations.first() {
            format!("{v}")
        } else {
            String::from("valid")
        }
    }
}

/// A rational fan given by primitive rays and maximal cones.
#[derive(Debug, Clone)]
pub struct Fan {
    rank: usize,
    rays: Vec<Vec<Int>>,
    max_cones: Vec<Cone>,
    assume_complete: bool,
    report: ValidationReport,
}

impl Fan {
    pub fn new(
        rank: usize,
        rays: Vec<Vec<Int>>,
        max_cones: Vec<Vec<usize>>,
        assume_complete: bool,
    ) -> Result<Fan, Error> {
        for (i, r) in rays.iter().enumerate() {
            if r.len() != rank {
                return Err(Error::RayLength { ray: i, expected: rank, found: r.len() });
            }
            if r.iter().all(Zero::is_zero) {
                return Err(Error::ZeroRay { ray: i });
            }
        }
        if max_cones.is_empty() {
            return Err(Error::NoMaxCones);
        }
        let mut cones = Vec::with_capacity(max_cones.len());
        for (ci, c) in max_cones.iter().enumerate() {
            let mut sorted = c.clone();
            sorted.sort_unstable();
            let before = sorted.len();
            sorted.dedup();
            if sorted.len() != before {
                return Err(Error::DuplicateIndexInCone { cone: ci });
            }
            for &i in &sorted {
                if i >= rays.len() {
                    return Err(Error::BadRayIndex { cone: ci, index: i });
                }
            }
            cones.push(Cone { ray_indices: sorted });
        }
        let report = validate(rank, &rays, &cones);
        Ok(Fan { rank, rays, max_cones: cones, assume_complete, report })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn rays(&self) -> &[Vec<Int>] {
        &self.rays
    }

    pub fn max_cones(&self) -> &[Cone] {
        &self.max_cones
    }

    pub fn assume_complete(&self) -> bool {
        self.assume_complete
    }

    pub fn report(&self) -> &ValidationReport {
        &self.report
    }

    pub fn is_valid(&self) -> bool {
        self.report.is_valid()
    }

    pub fn require_valid(&self) -> Result<(), Error> {
        if self.is_valid() {
            Ok(())
        } else {
            Err(Error::InvalidFan(self.report.describe()))
        }
    }

    /// Ray matrix of a cone: one row per ray, in index order.
    pub fn ray_matrix(&self, cone: &Cone) -> IntMatrix {
        let rows = cone.ray_indices.iter().map(|&i| self.rays[i].clone()).collect();
        IntMatrix::from_rows(self.rank, rows).expect("rays have rank length")
    }

    /// Is the cone a face of some maximal cone?
    pub fn is_face(&self, cone: &Cone) -> bool {
        self.max_cones.iter().any(|m| cone.is_face_of(m))
    }

    /// Every face of the fan (all subsets of maximal cones), sorted by
    /// dimension then lexicographically.
    pub fn faces(&self) -> Vec<Cone> {
        let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
        for c in &self.max_cones {
            let k = c.ray_indices.len();
            for mask in 0..(1usize << k) {
                let subset: Vec<usize> = (0..k)
                    .filter(|b| mask & (1 << b) != 0)
                    .map(|b| c.ray_indices[b])
                    .collect();
                seen.insert(subset);
            }
        }
        let mut faces: Vec<Cone> = seen.into_iter().map(|v| Cone { ray_indices: v }).collect();
        faces.sort_by(|a, b| {
            a.dim().cmp(&b.dim()).then_with(|| a.ray_indices.cmp(&b.ray_indices))
        });
        faces
    }

    /// The common face of two faces of a validated fan.
    pub fn cone_intersection(&self, a: &Cone, b: &Cone) -> Result<Cone, Error> {
        self.require_valid()?;
        if !self.is_face(a) || !self.is_face(b) {
            return Err(Error::NotAFace);
        }
        let set: BTreeSet<usize> = a.ray_indices.iter().copied().collect();
        let common = b.ray_indices.iter().copied().filter(|i| set.contains(i)).collect();
        Ok(Cone { ray_indices: common })
    }

    /// Basis (rows) of the lattice of characters vanishing on the cone.
    pub fn orbit_perp_lattice(&self, cone: &Cone) -> Result<IntMatrix, Error> {
        if !self.is_face(cone) {
            return Err(Error::NotAFace);
        }
        Ok(integer_kernel(&self.ray_matrix(cone)))
    }

    /// Weight data of the affine chart of a face: `affine` rows are the
    /// first `l` vectors of a dual basis (pairing to the cone's rays by
    /// Kronecker delta), `torus` rows span the perp lattice of the cone,
    /// and the stacked matrix is unimodular.
    pub fn chart_weights(&self, cone: &Cone) -> Result<ChartWeights, Error> {
        self.require_valid()?;
        if !self.is_face(cone) {
            return Err(Error::NotAFace);
        }
        let n = self.rank;
        let l = cone.dim();
        let r = self.ray_matrix(cone);
        let snf = smith_normal_form(&r);
        debug_assert_eq!(snf.rank, l, "smooth cone has independent rays");
        debug_assert!(snf.invariant_factors.iter().all(One::is_one));
        // rows of v_inv below the pivot block complete the rays to a basis
        let mut basis_rows: Vec<Vec<Int>> = (0..l).map(|i| r.row_vec(i)).collect();
        for k in l..n {
            basis_rows.push(snf.v_inv.row_vec(k));
        }
        let b = IntMatrix::from_rows(n, basis_rows).expect("basis rows have rank length");
        debug_assert_eq!(determinant(&b).abs(), Int::one());
        // dual basis: rows of (b^T)^{-1} = (b^{-1})^T; invert via Smith form
        let bs = smith_normal_form(&b);
        let b_inv = bs.v.mul(&bs.u);
        let m = b_inv.transpose();
        let affine = IntMatrix::from_rows(n, (0..l).map(|i| m.row_vec(i)).collect())
            .expect("dual rows have rank length");
        let torus = IntMatrix::from_rows(n, (l..n).map(|i| m.row_vec(i)).collect())
            .expect("dual rows have rank length");
        Ok(ChartWeights { affine, torus })
    }

    /// Betti numbers `b_0, b_2, ..., b_2n` of the associated complete smooth
    /// toric variety, by inclusion-exclusion over cone counts.
    pub fn betti_numbers(&self) -> Result<Vec<Int>, Error> {
        self.require_valid()?;
        if !(self.report.wall_check && self.assume_complete) {
            return Err(Error::NotComplete);
        }
        let n = self.rank;
        let mut counts = vec![Int::zero(); n + 1];
        for f in self.faces() {
            counts[f.dim()] += 1;
        }
        let mut betti = Vec::with_capacity(n + 1);
        for k in 0..=n {
            let mut b = Int::zero();
            for i in k..=n {
                let term = binomial(i, k) * &counts[n - i];
                if (i - k) % 2 == 0 {
                    b += term;
                } else {
                    b -= term;
                }
            }
            debug_assert!(!b.is_negative());
            betti.push(b);
        }
        Ok(betti)
    }
}

/// Chart weights of a face: affine coordinate weights and torus coordinate
/// weights, stacked unimodularly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChartWeights {
    pub affine: IntMatrix,
    pub torus: IntMatrix,
}

fn binomial(n: usize, k: usize) -> Int {
    if k > n {
        return Int::zero();
    }
    let mut b = Int::one();
    for i in 0..k {
        b = b * Int::from(n - i) / Int::from(i + 1);
    }
    b
}

fn validate(rank: usize, rays: &[Vec<Int>], max_cones: &[Cone]) -> ValidationReport {
    let mut violations = Vec::new();

    let mut primitive = true;
    for (i, r) in rays.iter().enumerate() {
        let g = r.iter().fold(Int::zero(), |acc, v| acc.gcd(v));
        if !g.is_one() {
            primitive = false;
            violations.push(Violation::NonPrimitiveRay { ray: i });
        }
    }
    for a in 0..rays.len() {
        for b in a + 1..rays.len() {
            if rays[a] == rays[b] {
                violations.push(Violation::DuplicateRays { a, b });
            }
        }
    }

    let mut simplicial = true;
    let mut smooth = true;
    let mut cone_ok = vec![true; max_cones.len()];
    for (ci, c) in max_cones.iter().enumerate() {
        let rows = c.ray_indices.iter().map(|&i| rays[i].clone()).collect();
        let m = IntMatrix::from_rows(rank, rows).expect("checked lengths");
        let snf = smith_normal_form(&m);
        if snf.rank < c.dim() {
            simplicial = false;
            smooth = false;
            cone_ok[ci] = false;
            violations.push(Violation::NonSimplicialCone { cone: ci });
        } else if !snf.invariant_factors.iter().all(One::is_one) {
            smooth = false;
            cone_ok[ci] = false;
            violations.push(Violation::SingularCone { cone: ci });
        }
    }

    let mut face_check = true;
    for a in 0..max_cones.len() {
        for b in a + 1..max_cones.len() {
            if max_cones[a].is_face_of(&max_cones[b]) {
                face_check = false;
                violations.push(Violation::ContainedMaxCone { inner: a, outer: b });
                continue;
            }
            if max_cones[b].is_face_of(&max_cones[a]) {
                face_check = false;
                violations.push(Violation::ContainedMaxCone { inner: b, outer: a });
                continue;
            }
            if !(cone_ok[a] && cone_ok[b]) {
                continue;
            }
            if !intersection_is_common_face(rank, rays, &max_cones[a], &max_cones[b]) {
                face_check = false;
                violations.push(Violation::IntersectionNotCommonFace { a, b });
            }
        }
    }

    // Wall condition: all maximal cones full-dimensional and every
    // (n-1)-face shared by exactly two of them.
    let mut wall_violations = Vec::new();
    let mut wall_check = true;
    for (ci, c) in max_cones.iter().enumerate() {
        if c.dim() != rank {
            wall_check = false;
            wall_violations.push(Violation::NotFullDimensional { cone: ci });
        }
    }
    if wall_check && rank > 0 {
        let mut wall_counts: alloc::collections::BTreeMap<Vec<usize>, usize> =
            alloc::collections::BTreeMap::new();
        for c in max_cones {
            for skip in 0..c.ray_indices.len() {
                let wall: Vec<usize> = c
                    .ray_indices
                    .iter()
                    .enumerate()
                    .filter(|(k, _)| *k != skip)
                    .map(|(_, &i)| i)
                    .collect();
                *wall_counts.entry(wall).or_insert(0) += 1;
            }
        }
        for (wall, count) in wall_counts {
            if count != 2 {
                wall_check = false;
                wall_violations.push(Violation::WallCountOff { wall, count });
            }
        }
    }

    ValidationReport {
        primitive,
        simplicial,
        smooth,
        face_check,
        wall_check,
        violations,
        wall_violations,
    }
}

/// Does `the intersection of cone(S) and cone(T)` equal the cone on the shared rays?  Both cones must be
/// simplicial.  A point of the intersection is a pair of nonnegative
/// combinations agreeing in the ambient space; the cones pass exactly when
/// no such pair puts positive weight on a non-shared ray.
fn intersection_is_common_face(rank: usize, rays: &[Vec<Int>], s: &Cone, t: &Cone) -> bool {
    let common: BTreeSet<usize> = s
        .ray_indices
        .iter()
        .copied()
        .filter(|i| t.ray_indices.contains(i))
        .collect();
    let mut columns: Vec<(Vec<Int>, bool)> = Vec::new();
    for &i in &s.ray_indices {
        columns.push((rays[i].clone(), common.contains(&i)));
    }
    for &j in &t.ray_indices {
        let neg = rays[j].iter().map(|v| -v.clone()).collect();
        columns.push((neg, common.contains(&j)));
    }
    for c in 0..columns.len() {
        if columns[c].1 {
            continue;
        }
        // Feasibility of: sum_k z_k col_k = 0, z >= 0, z_c = 1.
        let mut m = RatMatrix::zero(rank, columns.len() - 1);
        let mut rhs = Vec::with_capacity(rank);
        for row in 0..rank {
            let mut jj = 0;
            for (k, (col, _)) in columns.iter().enumerate() {
                if k == c {
                    continue;
                }
                m.set(row, jj, Rat::from_integer(col[row].clone()));
                jj += 1;
            }
            rhs.push(Rat::from_integer(-columns[c].0[row].clone()));
        }
        if lp_feasible(&m, &rhs) {
            return false;
        }
    }
    true
}

/// Exact feasibility of `{ z >= 0 : m z = b }` by phase-1 simplex with
/// Bland's rule (no cycling, no floating point).
pub(crate) fn lp_feasible(m: &RatMatrix, b: &[Rat]) -> bool {
    let n = m.rows();
    let d = m.cols();
    debug_assert_eq!(b.len(), n);
    // tableau rows: [ z columns | artificial columns | rhs ]
    let width = d + n + 1;
    let mut t: Vec<Vec<Rat>> = Vec::with_capacity(n);
    for i in 0..n {
        let mut row = vec![Rat::zero(); width];
        let flip = b[i].is_negative();
        for j in 0..d {
            let v = m.entry(i, j).clone();
            row[j] = if flip { -v } else { v };
        }
        row[d + i] = Rat::one();
        row[width - 1] = if flip { -b[i].clone() } else { b[i].clone() };
        t.push(row);
    }
    let mut basis: Vec<usize> = (d..d + n).collect();
    // reduced costs for minimizing the sum of artificials
    let mut obj = vec![Rat::zero(); width];
    for row in &t {
        for j in 0..width {
            obj[j] -= &row[j];
        }
    }
    for j in d..d + n {
        obj[j] = Rat::zero();
    }

    loop {
        // Bland: entering = lowest-index column with negative reduced cost
        let Some(e) = (0..d + n).find(|&j| obj[j].is_negative()) else { break };
        // leaving row: min ratio, ties by lowest basis variable index
        let mut leave: Option<(Rat, usize)> = None;
        for i in 0..n {
            if t[i][e].is_positive() {
                let ratio = &t[i][width - 1] / &t[i][e];
                let better = match &leave {
                    None => true,
                    Some((r, li)) => {
                        ratio < *r || (ratio == *r && basis[i] < basis[*li])
                    }
                };
                if better {
                    leave = Some((ratio, i));
                }
            }
        }
        let Some((_, li)) = leave else {
            // unbounded phase-1 cannot happen; treat as infeasible guard
            return false;
        };
        // pivot at (li, e)
        let pv = t[li][e].clone();
        for j in 0..width {
            t[li][j] = &t[li][j] / &pv;
        }
        for i in 0..n {
            if i != li && !t[i][e].is_zero() {
                let f = t[i][e].clone();
                for j in 0..width {
                    t[i][j] = &t[i][j] - &f * &t[li][j];
                }
            }
        }
        if !obj[e].is_zero() {
            let f = obj[e].clone();
            for j in 0..width {
                obj[j] = &obj[j] - &f * &t[li][j];
            }
        }
        basis[li] = e;
    }
    // feasible iff all artificial variables sit at level zero
    (0..n).all(|i| basis[i] < d || t[i][width - 1].is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::int;

    fn fan_p1() -> Fan {
        Fan::new(
            1,
            vec![vec![int(1)], vec![int(-1)]],
            vec![vec![0], vec![1]],
            true,
        )
        .unwrap()
    }

    fn fan_p2() -> Fan {
        Fan::new(
            2,
            vec![vec![int(1), int(0)], vec![int(0), int(1)], vec![int(-1), int(-1)]],
            vec![vec![0, 1], vec![1, 2], vec![2, 0]],
            true,
        )
        .unwrap()
    }

    #[test]
    fn p1_and_p2_validate() {
        let f = fan_p1();
        assert!(f.is_valid());
        assert!(f.report().wall_check);
        let f2 = fan_p2();
        assert!(f2.is_valid());
        assert!(f2.report().wall_check);
    }

    #[test]
    fn affine_plane_fails_wall_check_only() {
        let f = Fan::new(
            2,
            vec![vec![int(1), int(0)], vec![int(0), int(1)]],
            vec![vec![0, 1]],
            false,
        )
        .unwrap();
        assert!(f.is_valid());
        assert!(!f.report().wall_check);
        assert_eq!(f.betti_numbers().unwrap_err(), Error::NotComplete);
    }

    #[test]
    fn singular_cone_detected() {
        let f = Fan::new(
            2,
            vec![vec![int(1), int(0)], vec![int(1), int(2)]],
            vec![vec![0, 1]],
            false,
        )
        .unwrap();
        assert!(!f.report().smooth);
        assert!(f
            .report()
            .violations
            .contains(&Violation::SingularCone { cone: 0 }));
    }

    #[test]
    fn overlapping_cones_detected() {
        // cone{(2,1),(1,1)} sits inside cone{(1,0),(0,1)}: both smooth,
        // intersection not a common face
        let f = Fan::new(
            2,
            vec![
                vec![int(1), int(0)],
                vec![int(0), int(1)],
                vec![int(2), int(1)],
                vec![int(1), int(1)],
            ],
            vec![vec![0, 1], vec![2, 3]],
            false,
        )
        .unwrap();
        assert!(!f.report().face_check);
        assert!(f
            .report()
            .violations
            .contains(&Violation::IntersectionNotCommonFace { a: 0, b: 1 }));
    }

    #[test]
    fn nonprimitive_ray_detected() {
        let f = Fan::new(2, vec![vec![int(2), int(4)]], vec![vec![0]], false).unwrap();
        assert!(!f.report().primitive);
    }

    #[test]
    fn structural_errors() {
        assert_eq!(
            Fan::new(1, vec![vec![int(0)]], vec![vec![0]], false).unwrap_err(),
            Error::ZeroRay { ray: 0 }
        );
        assert_eq!(
            Fan::new(1, vec![vec![int(1)]], vec![vec![1]], false).unwrap_err(),
            Error::BadRayIndex { cone: 0, index: 1 }
        );
    }

    #[test]
    fn chart_weights_of_p2_cone_12() {
        let f = fan_p2();
        let w = f.chart_weights(&Cone::new(vec![1, 2])).unwrap();
        assert_eq!(w.affine, IntMatrix::from_i64(2, &[&[-1, 1], &[-1, 0]]));
        assert_eq!(w.torus.rows(), 0);
    }

    #[test]
    fn chart_weights_contract_on_origin_cone() {
        let f = fan_p1();
        let w = f.chart_weights(&Cone::new(vec![])).unwrap();
        assert_eq!(w.affine.rows(), 0);
        assert_eq!(w.torus, IntMatrix::identity(1));
    }

    #[test]
    fn chart_weights_duality_contract() {
        let f = fan_p2();
        for c in f.max_cones() {
            let w = f.chart_weights(c).unwrap();
            let r = f.ray_matrix(c);
            // <m_i, v_j> = delta_ij
            let prod = w.affine.mul(&r.transpose());
            assert_eq!(prod, IntMatrix::identity(c.dim()));
            let stacked = w.affine.stack(&w.torus).unwrap();
            assert_eq!(determinant(&stacked).abs(), int(1));
        }
    }

    #[test]
    fn torus_rows_span_perp_lattice() {
        let f = Fan::new(
            2,
            vec![vec![int(1), int(0)], vec![int(0), int(1)]],
            vec![vec![0], vec![1]],
            false,
        )
        .unwrap();
        let c = Cone::new(vec![0]);
        let w = f.chart_weights(&c).unwrap();
        let perp = f.orbit_perp_lattice(&c).unwrap();
        assert!(crate::lattice::row_lattice_contains_all(&w.torus, &perp).unwrap());
        assert!(crate::lattice::row_lattice_contains_all(&perp, &w.torus).unwrap());
    }

    #[test]
    fn betti_numbers_of_projective_spaces() {
        assert_eq!(fan_p1().betti_numbers().unwrap(), vec![int(1), int(1)]);
        assert_eq!(fan_p2().betti_numbers().unwrap(), vec![int(1), int(1), int(1)]);
        let p1p1 = Fan::new(
            2,
            vec![
                vec![int(1), int(0)],
                vec![int(0), int(1)],
                vec![int(-1), int(0)],
                vec![int(0), int(-1)],
            ],
            vec![vec![0, 1], vec![1, 2], vec![2, 3], vec![3, 0]],
            true,
        )
        .unwrap();
        assert_eq!(p1p1.betti_numbers().unwrap(), vec![int(1), int(2), int(1)]);
    }

    #[test]
    fn cone_intersection_of_p2_max_cones() {
        let f = fan_p2();
        let c = f
            .cone_intersection(&Cone::new(vec![0, 1]), &Cone::new(vec![1, 2]))
            .unwrap();
        assert_eq!(c.ray_indices(), &[1]);
        let o = f
            .cone_intersection(&Cone::new(vec![0, 1]), &Cone::new(vec![2]))
            .unwrap();
        assert_eq!(o.ray_indices(), &[] as &[usize]);
    }

    #[test]
    fn faces_count_for_p2() {
        let f = fan_p2();
        let faces = f.faces();
        // 1 origin + 3 rays + 3 two-dimensional cones
        assert_eq!(faces.len(), 7);
        assert_eq!(faces.iter().filter(|c| c.dim() == 1).count(), 3);
    }

    #[test]
    fn lp_feasibility_smoke() {
        // x >= 0 with x = 1 is feasible; with x = -1 is not.
        let m = RatMatrix::from_rows(1, vec![vec![Rat::from_integer(int(1))]]).unwrap();
        assert!(lp_feasible(&m, &[Rat::from_integer(int(1))]));
        assert!(!lp_feasible(&m, &[Rat::from_integer(int(-1))]));
    }
}

