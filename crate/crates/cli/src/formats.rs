//! JSON input and output documents for the command line tool.
//!
//! Conventions: arbitrary-precision integers (matrix entries, component
//! counts, invariant factors, orders) are serialized as decimal strings,
//! rationals as "p/q" (plain "p" when the denominator is one), and
//! structural quantities (indices, degrees, dimensions) as JSON numbers.
//! All maps are emitted in sorted key order so output is byte-identical
//! across runs.

use std::collections::BTreeMap;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use ellfan_core::cech::{FiberComplex, SectionsComplex, SheafComplex};
use ellfan_core::epoints::{EllipticPoint, Symbol, TorusPoint};
use ellfan_core::Error;
use ellfan_core::fan::{ChartWeights, Fan};
use ellfan_core::lattice::IntMatrix;
use ellfan_core::local_model::SheafTerm;
use ellfan_core::localization::{
    FixedLocusReport, IdentityCheck, LocalizationReport, TorusSubgroup,
};
use ellfan_core::subgroups::SubgroupScheme;
use ellfan_core::{Int, Rat};

/// A failure the tool reports as a JSON document with exit code 1.
#[derive(Debug, Clone, Serialize)]
pub struct CliError {
    pub kind: String,
    pub message: String,
}

impl CliError {
    pub fn parse(message: impl Into<String>) -> Self {
        CliError {
            kind: "parse".into(),
            message: message.into(),
        }
    }

    pub fn io(message: impl Into<String>) -> Self {
        CliError {
            kind: "io".into(),
            message: message.into(),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let kind = match &e {
            Error::DimensionMismatch { .. } => "dimension-mismatch",
            Error::AmbientRankMismatch { .. } => "ambient-rank-mismatch",
            Error::InfiniteRank => "infinite-rank",
            Error::PointNotInSubgroup => "point-not-in-subgroup",
            Error::NotAFace => "not-a-face",
            Error::InvalidFan(_) => "invalid-fan",
            Error::BadRayIndex { .. } => "bad-ray-index",
            Error::ZeroRay { .. } => "zero-ray",
            Error::RayLength { .. } => "ray-length",
            Error::DuplicateIndexInCone { .. } => "duplicate-index-in-cone",
            Error::NoMaxCones => "no-max-cones",
            Error::NotComplete => "not-complete",
            Error::NerveCapExceeded { .. } => "nerve-cap-exceeded",
        };
        CliError {
            kind: kind.into(),
            message: e.to_string(),
        }
    }
}

// ---------------------------------------------------------------- inputs

/// Fan description as stored on disk.
#[derive(Debug, Clone, Deserialize)]
pub struct FanFile {
    #[serde(default)]
    pub name: Option<String>,
    pub rank: usize,
    pub rays: Vec<Vec<i64>>,
    pub max_cones: Vec<Vec<usize>>,
    #[serde(default)]
    pub assume_complete: Option<bool>,
}

impl FanFile {
    pub fn build(&self, force_complete: bool) -> Result<Fan, CliError> {
        let rays: Vec<Vec<Int>> = self
            .rays
            .iter()
            .map(|r| r.iter().map(|&v| Int::from(v)).collect())
            .collect();
        let complete = force_complete || self.assume_complete.unwrap_or(false);
        Fan::new(self.rank, rays, self.max_cones.clone(), complete).map_err(CliError::from)
    }

    pub fn label(&self) -> String {
        self.name.clone().unwrap_or_else(|| "fan".into())
    }
}

/// One coordinate of a point file: an optional torsion pair and an
/// optional map of formal generic symbols to rational coefficients.
#[derive(Debug, Clone, Default, Deserialize)]
pub struct CoordSpec {
    #[serde(default)]
    pub torsion: Option<Vec<String>>,
    #[serde(default)]
    pub generic: Option<BTreeMap<String, String>>,
}

pub fn parse_rat(s: &str) -> Result<Rat, CliError> {
    let t = s.trim();
    let (num, den) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (t, "1"),
    };
    let n = Int::from_str(num).map_err(|_| CliError::parse(format!("bad integer `{num}`")))?;
    let d = Int::from_str(den).map_err(|_| CliError::parse(format!("bad integer `{den}`")))?;
    if d == Int::from(0) {
        return Err(CliError::parse(format!("zero denominator in `{s}`")));
    }
    Ok(Rat::new(n, d))
}

pub fn rat_str(r: &Rat) -> String {
    if r.denom() == &Int::from(1) {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn parse_point(coords: &[CoordSpec]) -> Result<TorusPoint, CliError> {
    let mut out = Vec::with_capacity(coords.len());
    for (i, c) in coords.iter().enumerate() {
        let (a, b) = match &c.torsion {
            None => (Rat::from(Int::from(0)), Rat::from(Int::from(0))),
            Some(pair) => {
                if pair.len() != 2 {
                    return Err(CliError::parse(format!(
                        "coordinate {i}: torsion must have exactly two entries"
                    )));
                }
                (parse_rat(&pair[0])?, parse_rat(&pair[1])?)
            }
        };
        let mut generic = BTreeMap::new();
        if let Some(g) = &c.generic {
            for (sym, coeff) in g {
                if sym.trim().is_empty() {
                    return Err(CliError::parse(format!("coordinate {i}: empty symbol name")));
                }
                generic.insert(Symbol::new(sym), parse_rat(coeff)?);
            }
        }
        out.push(EllipticPoint::new(a, b, generic));
    }
    Ok(TorusPoint::new(out))
}

// ---------------------------------------------------------------- helpers

pub fn mat_doc(m: &IntMatrix) -> Vec<Vec<String>> {
    (0..m.rows())
        .map(|i| (0..m.cols()).map(|j| m.entry(i, j).to_string()).collect())
        .collect()
}

#[derive(Debug, Clone, Serialize)]
pub struct DegreeDim {
    pub degree: i64,
    pub dim: u64,
}

pub fn cohomology_doc(c: &BTreeMap<i64, u64>) -> Vec<DegreeDim> {
    c.iter()
        .map(|(&degree, &dim)| DegreeDim { degree, dim })
        .collect()
}

#[derive(Debug, Clone, Serialize)]
pub struct MultiplicityDoc {
    pub degree: usize,
    pub rank: u64,
}

#[derive(Debug, Clone, Serialize)]
pub struct SupportDoc {
    pub ambient_rank: usize,
    pub full: bool,
    pub dimension: usize,
    pub characters: Vec<Vec<String>>,
    pub invariant_factors: Vec<String>,
    pub components: String,
}

pub fn support_doc(s: &SubgroupScheme) -> SupportDoc {
    SupportDoc {
        ambient_rank: s.ambient_rank(),
        full: s.is_full(),
        dimension: s.dimension(),
        characters: mat_doc(s.characters()),
        invariant_factors: s.invariant_factors().iter().map(Int::to_string).collect(),
        components: s.component_count().to_string(),
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct TermDoc {
    pub cone: Vec<usize>,
    pub zero: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub support: Option<SupportDoc>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub multiplicity: Option<Vec<MultiplicityDoc>>,
}

pub fn term_doc(cone: &[usize], term: &SheafTerm) -> TermDoc {
    match term {
        SheafTerm::Zero => TermDoc {
            cone: cone.to_vec(),
            zero: true,
            support: None,
            multiplicity: None,
        },
        SheafTerm::Term { .. } => TermDoc {
            cone: cone.to_vec(),
            zero: false,
            support: term.support().map(support_doc),
            multiplicity: term.multiplicity().map(|m| {
                m.iter()
                    .map(|(&degree, &rank)| MultiplicityDoc { degree, rank })
                    .collect()
            }),
        },
    }
}

// ---------------------------------------------------------------- outputs

#[derive(Debug, Clone, Serialize)]
pub struct ValidateDoc {
    pub name: String,
    pub rank: usize,
    pub rays: usize,
    pub max_cones: usize,
    pub valid: bool,
    pub assume_complete: bool,
    pub primitive: bool,
    pub simplicial: bool,
    pub smooth: bool,
    pub face_check: bool,
    pub wall_check: bool,
    pub violations: Vec<String>,
}

pub fn validate_doc(name: &str, fan: &Fan) -> ValidateDoc {
    let r = fan.report();
    let mut violations: Vec<String> = r.violations.iter().map(|v| v.to_string()).collect();
    violations.extend(r.wall_violations.iter().map(|v| v.to_string()));
    ValidateDoc {
        name: name.to_string(),
        rank: fan.rank(),
        rays: fan.rays().len(),
        max_cones: fan.max_cones().len(),
        valid: fan.is_valid(),
        assume_complete: fan.assume_complete(),
        primitive: r.primitive,
        simplicial: r.simplicial,
        smooth: r.smooth,
        face_check: r.face_check,
        wall_check: r.wall_check,
        violations,
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ChartDoc {
    pub cone: Vec<usize>,
    pub affine: Vec<Vec<String>>,
    pub torus: Vec<Vec<String>>,
}

pub fn chart_doc(cone: &[usize], w: &ChartWeights) -> ChartDoc {
    ChartDoc {
        cone: cone.to_vec(),
        affine: mat_doc(&w.affine),
        torus: mat_doc(&w.torus),
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ChartsDoc {
    pub name: String,
    pub rank: usize,
    pub charts: Vec<ChartDoc>,
}

#[derive(Debug, Clone, Serialize)]
pub struct ChartHhDoc {
    pub cone: Vec<usize>,
    pub term: TermDoc,
    pub total_rank: u64,
}

#[derive(Debug, Clone, Serialize)]
pub struct SheafDoc {
    pub name: String,
    pub ambient_rank: usize,
    pub max_cones: usize,
    pub entry_count: usize,
    pub terms: Vec<TermDoc>,
}

pub fn sheaf_doc(name: &str, cx: &SheafComplex) -> SheafDoc {
    SheafDoc {
        name: name.to_string(),
        ambient_rank: cx.ambient_rank(),
        max_cones: cx
            .entries()
            .iter()
            .filter(|e| e.cech_degree() == 0)
            .count(),
        entry_count: cx.entries().len(),
        terms: cx
            .cones()
            .iter()
            .zip(cx.terms())
            .map(|(c, t)| term_doc(c.ray_indices(), t))
            .collect(),
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct FiberCell {
    pub cech: usize,
    pub wedge: usize,
    pub internal: usize,
    pub degree: i64,
    pub rank: u64,
}

#[derive(Debug, Clone, Serialize)]
pub struct FiberDoc {
    pub table: Vec<FiberCell>,
    pub cohomology: Vec<DegreeDim>,
    pub dd_zero: bool,
    pub total_rank: u64,
    pub euler_characteristic: i64,
}

pub fn fiber_doc(f: &FiberComplex) -> FiberDoc {
    FiberDoc {
        table: f
            .table()
            .iter()
            .map(|(&(p, j, i), &rank)| FiberCell {
                cech: p,
                wedge: j,
                internal: i,
                degree: p as i64 - j as i64 + i as i64,
                rank,
            })
            .collect(),
        cohomology: cohomology_doc(f.cohomology()),
        dd_zero: f.dd_zero(),
        total_rank: f.total_rank(),
        euler_characteristic: f.euler_characteristic(),
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct GammaCell {
    pub cech: usize,
    pub internal: usize,
    pub degree: i64,
    pub rank: u64,
}

#[derive(Debug, Clone, Serialize)]
pub struct GammaDoc {
    pub table: Vec<GammaCell>,
    pub cohomology: Vec<DegreeDim>,
    pub dd_zero: bool,
    pub total_rank: u64,
}

pub fn gamma_doc(s: &SectionsComplex) -> GammaDoc {
    GammaDoc {
        table: s
            .table()
            .iter()
            .map(|(&(p, i), &rank)| GammaCell {
                cech: p,
                internal: i,
                degree: p as i64 + i as i64,
                rank,
            })
            .collect(),
        cohomology: cohomology_doc(s.cohomology()),
        dd_zero: s.dd_zero(),
        total_rank: s.total_rank(),
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct StrataDoc {
    pub count: usize,
    pub strata: Vec<SupportDoc>,
}

#[derive(Debug, Clone, Serialize)]
pub struct TsubDoc {
    pub ambient_rank: usize,
    pub torus_rank: usize,
    pub orders: Vec<String>,
    pub component_count: String,
    pub trivial: bool,
    pub full_torus: bool,
    pub annihilator: Vec<Vec<String>>,
}

pub fn tsub_doc(t: &TorusSubgroup) -> TsubDoc {
    TsubDoc {
        ambient_rank: t.ambient_rank(),
        torus_rank: t.torus_rank(),
        orders: t.orders().iter().map(Int::to_string).collect(),
        component_count: t.component_count().to_string(),
        trivial: t.is_trivial(),
        full_torus: t.is_full_torus(),
        annihilator: mat_doc(t.annihilator()),
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct FixedDoc {
    pub subgroup: TsubDoc,
    pub empty: bool,
    pub fixed_faces: Vec<Vec<usize>>,
    pub minimal_fixed: Vec<Vec<usize>>,
    pub fixed_max_cones: Vec<usize>,
}

pub fn fixed_doc(r: &FixedLocusReport) -> FixedDoc {
    FixedDoc {
        subgroup: tsub_doc(r.subgroup()),
        empty: r.is_empty(),
        fixed_faces: r
            .fixed_faces()
            .iter()
            .map(|c| c.ray_indices().to_vec())
            .collect(),
        minimal_fixed: r
            .minimal_fixed()
            .iter()
            .map(|c| c.ray_indices().to_vec())
            .collect(),
        fixed_max_cones: r.fixed_max_cones().to_vec(),
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ProbeDoc {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub stratum: Option<usize>,
    pub dd_zero: bool,
    pub agree: bool,
    pub cohomology: Vec<DegreeDim>,
    pub fixed_cohomology: Vec<DegreeDim>,
}

#[derive(Debug, Clone, Serialize)]
pub struct LocalizeDoc {
    pub fixed: FixedDoc,
    pub strata: usize,
    pub probes: Vec<ProbeDoc>,
    pub all_agree: bool,
}

pub fn localize_doc(r: &LocalizationReport) -> LocalizeDoc {
    LocalizeDoc {
        fixed: fixed_doc(r.fixed_locus()),
        strata: r.strata().len(),
        probes: r
            .probes()
            .iter()
            .map(|p| ProbeDoc {
                stratum: p.stratum(),
                dd_zero: p.dd_zero(),
                agree: p.agree(),
                cohomology: cohomology_doc(p.full_cohomology()),
                fixed_cohomology: cohomology_doc(p.fixed_cohomology()),
            })
            .collect(),
        all_agree: r.all_agree(),
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct IdentityDoc {
    pub betti: Vec<String>,
    pub cohomology: Vec<DegreeDim>,
    pub dd_zero: bool,
    pub fiber_total: String,
    pub betti_total: String,
    pub matches: bool,
}

pub fn identity_doc(c: &IdentityCheck) -> IdentityDoc {
    IdentityDoc {
        betti: c.betti().iter().map(Int::to_string).collect(),
        cohomology: cohomology_doc(c.cohomology()),
        dd_zero: c.dd_zero(),
        fiber_total: c.fiber_total().to_string(),
        betti_total: c.betti_total().to_string(),
        matches: c.matches(),
    }
}
