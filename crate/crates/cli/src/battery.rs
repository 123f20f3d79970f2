//! Self-check battery: eleven named acceptance checks covering the local
//! models, the nerve pipeline, fibers, global sections, localization and
//! the randomized algebraic suites.  Each check returns a detail string on
//! success or a description of the first failure.

use std::collections::{BTreeMap, BTreeSet};
use std::time::Instant;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use ellfan_core::cech::{build_complex, fiber_complex, global_sections, SheafComplex};
use ellfan_core::epoints::{evaluate_character, EllipticPoint, Symbol, SymbolGen, TorusPoint};
use ellfan_core::Error;
use ellfan_core::fan::Fan;
use ellfan_core::lattice::{determinant, row_lattice_contains, smith_normal_form, IntMatrix};
use ellfan_core::local_model::{hh_affine_factor, hh_chart, hh_torus_factor, kunneth_tensor};
use ellfan_core::localization::{fixed_subfan, identity_fiber_check, t_of_e, verify_localization};
use ellfan_core::subgroups::{ComponentLabel, SubgroupScheme};
use ellfan_core::{int, rat, Int};

const CAP: usize = 20;

#[derive(Debug, Clone)]
pub struct CheckResult {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

type Check = fn() -> Result<String, String>;

pub fn checks() -> Vec<(&'static str, Check)> {
    vec![
        ("affine-factors", c01_affine_factors as Check),
        ("torus-factors", c02_torus_factors),
        ("kunneth-chart", c03_kunneth_chart),
        ("line-pipeline", c04_line_pipeline),
        ("generic-fibers", c05_generic_fibers),
        ("localization-battery", c06_localization_battery),
        ("identity-totals", c07_identity_totals),
        ("point-subgroups", c08_point_subgroups),
        ("property-suites", c09_property_suites),
        ("parity-fold", c10_parity_fold),
        ("performance", c11_performance),
    ]
}

pub fn run_all(only: Option<&str>) -> Vec<CheckResult> {
    checks()
        .into_iter()
        .filter(|(name, _)| only.map_or(true, |f| name.contains(f)))
        .map(|(name, f)| match f() {
            Ok(detail) => CheckResult { name, passed: true, detail },
            Err(detail) => CheckResult { name, passed: false, detail },
        })
        .collect()
}

// ---------------------------------------------------------------- fixtures

pub fn fan_from(rank: usize, rays: &[&[i64]], cones: &[&[usize]], complete: bool) -> Fan {
    let rays = rays.iter().map(|r| r.iter().map(|&v| int(v)).collect()).collect();
    let cones = cones.iter().map(|c| c.to_vec()).collect();
    let fan = Fan::new(rank, rays, cones, complete).expect("fixture fan must build");
    assert!(fan.is_valid(), "fixture fan must be valid");
    fan
}

pub fn projective_line() -> Fan {
    fan_from(1, &[&[1], &[-1]], &[&[0], &[1]], true)
}

pub fn projective_plane() -> Fan {
    fan_from(2, &[&[1, 0], &[0, 1], &[-1, -1]], &[&[0, 1], &[1, 2], &[2, 0]], true)
}

pub fn quadric_surface() -> Fan {
    fan_from(
        2,
        &[&[1, 0], &[-1, 0], &[0, 1], &[0, -1]],
        &[&[0, 2], &[2, 1], &[1, 3], &[3, 0]],
        true,
    )
}

pub fn hirzebruch_one() -> Fan {
    fan_from(
        2,
        &[&[1, 0], &[0, 1], &[-1, 1], &[0, -1]],
        &[&[0, 1], &[1, 2], &[2, 3], &[3, 0]],
        true,
    )
}

pub fn blown_up_plane() -> Fan {
    fan_from(
        2,
        &[&[1, 0], &[0, 1], &[-1, -1], &[1, 1]],
        &[&[0, 3], &[3, 1], &[1, 2], &[2, 0]],
        true,
    )
}

pub fn affine_plane() -> Fan {
    fan_from(2, &[&[1, 0], &[0, 1]], &[&[0, 1]], false)
}

pub fn punctured_plane() -> Fan {
    fan_from(2, &[&[1, 0], &[0, 1]], &[&[0], &[1]], false)
}

pub fn twelve_cone_fan() -> Fan {
    let rays: [&[i64]; 12] = [
        &[1, 0],
        &[2, 1],
        &[1, 1],
        &[0, 1],
        &[-1, 2],
        &[-1, 1],
        &[-1, 0],
        &[-2, -1],
        &[-1, -1],
        &[0, -1],
        &[1, -2],
        &[1, -1],
    ];
    let cones: Vec<Vec<usize>> = (0..12).map(|i| vec![i, (i + 1) % 12]).collect();
    let cone_refs: Vec<&[usize]> = cones.iter().map(|c| c.as_slice()).collect();
    fan_from(2, &rays, &cone_refs, true)
}

/// Complete fans together with their maximal cone counts.
pub fn complete_fans() -> Vec<(&'static str, Fan, u64)> {
    vec![
        ("projective-line", projective_line(), 2),
        ("projective-plane", projective_plane(), 3),
        ("quadric-surface", quadric_surface(), 4),
        ("hirzebruch-one", hirzebruch_one(), 4),
        ("blown-up-plane", blown_up_plane(), 4),
    ]
}

pub fn all_fans() -> Vec<(&'static str, Fan)> {
    let mut out: Vec<(&'static str, Fan)> =
        complete_fans().into_iter().map(|(n, f, _)| (n, f)).collect();
    out.push(("affine-plane", affine_plane()));
    out.push(("punctured-plane", punctured_plane()));
    out
}

fn tor(n: i64, d: i64) -> EllipticPoint {
    EllipticPoint::from_torsion(rat(n, d), rat(0, 1))
}

fn gen_pt(name: &str) -> EllipticPoint {
    EllipticPoint::generic(Symbol::new(name))
}

/// The bundled probe points of a given ambient rank.
pub fn points_of_rank(rank: usize) -> Vec<(&'static str, TorusPoint)> {
    match rank {
        1 => vec![
            ("identity", TorusPoint::identity(1)),
            ("half", TorusPoint::new(vec![tor(1, 2)])),
            ("third", TorusPoint::new(vec![tor(1, 3)])),
            ("sixth", TorusPoint::new(vec![tor(1, 6)])),
            ("generic", TorusPoint::new(vec![gen_pt("g")])),
        ],
        2 => vec![
            ("identity", TorusPoint::identity(2)),
            ("half-0", TorusPoint::new(vec![tor(1, 2), EllipticPoint::identity()])),
            ("third-0", TorusPoint::new(vec![tor(1, 3), EllipticPoint::identity()])),
            ("sixth-0", TorusPoint::new(vec![tor(1, 6), EllipticPoint::identity()])),
            ("generic-pair", TorusPoint::new(vec![gen_pt("g1"), gen_pt("g2")])),
            ("mixed", TorusPoint::new(vec![tor(1, 2), gen_pt("g")])),
            ("diagonal", TorusPoint::new(vec![gen_pt("g"), gen_pt("g")])),
        ],
        _ => Vec::new(),
    }
}

fn all_generic_point(rank: usize) -> TorusPoint {
    let mut gen = SymbolGen::new();
    TorusPoint::new((0..rank).map(|_| EllipticPoint::generic(gen.fresh())).collect())
}

fn err_str(e: Error) -> String {
    e.to_string()
}

// ------------------------------------------------------------------ checks

fn c01_affine_factors() -> Result<String, String> {
    let unit_mult: BTreeMap<usize, u64> = BTreeMap::from([(0, 1)]);
    let mut cases = 0;
    for n in 1..=2usize {
        for w in [1i64, -1, 3] {
            for pos in 0..n {
                let mut row = vec![int(0); n];
                row[pos] = int(w);
                let term = hh_affine_factor(&row).map_err(err_str)?;
                let support = term
                    .support()
                    .ok_or_else(|| format!("weight {w} at {pos} of {n}: zero term"))?;
                if !support.is_full() {
                    return Err(format!("weight {w} at {pos} of {n}: support not full"));
                }
                if term.multiplicity() != Some(&unit_mult) {
                    return Err(format!("weight {w} at {pos} of {n}: not one copy in degree 0"));
                }
                cases += 1;
            }
        }
    }
    for n in 1..=2usize {
        match hh_affine_factor(&vec![int(0); n]) {
            Err(Error::InfiniteRank) => {}
            other => return Err(format!("zero weight in rank {n}: expected rejection, got {other:?}")),
        }
    }
    Ok(format!("{cases} nonzero weights give the full sheaf in degree 0; zero weight rejected"))
}

fn c02_torus_factors() -> Result<String, String> {
    let mut detail = Vec::new();
    for w in 1i64..=3 {
        let term = hh_torus_factor(&[int(w)]);
        let support = term.support().ok_or_else(|| format!("weight {w}: zero term"))?;
        let expected = int(w * w);
        if support.component_count() != expected {
            return Err(format!(
                "weight {w}: component count {} instead of {}",
                support.component_count(),
                expected
            ));
        }
        let labels = support.component_labels().len();
        if int(labels as i64) != expected {
            return Err(format!("weight {w}: {labels} component labels, expected {expected}"));
        }
        if term.multiplicity() != Some(&BTreeMap::from([(0, 1)])) {
            return Err(format!("weight {w}: internal multiplicity is not one copy in degree 0"));
        }
        if support.dimension() != 0 {
            return Err(format!("weight {w}: support has positive dimension"));
        }
        detail.push(format!("{w}:{labels}"));
    }
    let free = hh_torus_factor(&[int(0)]);
    let want: BTreeMap<usize, u64> = BTreeMap::from([(0, 1), (1, 1)]);
    if free.support().map(|s| s.is_full()) != Some(true) || free.multiplicity() != Some(&want) {
        return Err("zero weight: expected the full sheaf in degrees 0 and 1".into());
    }
    Ok(format!(
        "torsion supports with section dimensions {}; zero weight spreads over two degrees",
        detail.join(", ")
    ))
}

fn c03_kunneth_chart() -> Result<String, String> {
    let a = hh_affine_factor(&[int(1), int(0)]).map_err(err_str)?;
    let t = hh_torus_factor(&[int(0), int(2)]);
    let k = kunneth_tensor(&a, &t).map_err(err_str)?;
    let support = k.support().ok_or("tensor term vanished")?;
    let expected = SubgroupScheme::kernel_of_characters(IntMatrix::from_i64(2, &[&[0, 2]]));
    if support != &expected {
        return Err("tensor support differs from the kernel of (0,2)".into());
    }
    if support.component_count() != int(4) {
        return Err(format!("tensor support has {} components, expected 4", support.component_count()));
    }
    if support.dimension() != 1 {
        return Err("tensor support should be one-dimensional".into());
    }
    let want: BTreeMap<usize, u64> = BTreeMap::from([(0, 1)]);
    if k.multiplicity() != Some(&want) {
        return Err("tensor multiplicity is not a single copy in degree 0".into());
    }
    Ok("mixed chart supported on a four-component curve with the expected grading".into())
}

fn c04_line_pipeline() -> Result<String, String> {
    let fan = projective_line();
    let cx = build_complex(&fan, CAP).map_err(err_str)?;
    if cx.terms().len() != 3 {
        return Err(format!("expected 3 nerve terms, found {}", cx.terms().len()));
    }
    let full_flags: Vec<bool> =
        cx.terms().iter().map(|t| t.support().map_or(false, |s| s.is_full())).collect();
    if full_flags != vec![true, true, false] {
        return Err(format!("chart supports out of shape: {full_flags:?}"));
    }
    let overlap = cx.terms()[2].support().ok_or("overlap term vanished")?;
    if overlap.dimension() != 0 || overlap.component_count() != int(1) {
        return Err("overlap support is not the single identity point".into());
    }
    let gamma = global_sections(&cx).map_err(err_str)?;
    if gamma.cohomology() != &BTreeMap::from([(0, 1)]) {
        return Err(format!("global sections {:?}, expected one class in degree 0", gamma.cohomology()));
    }
    for (name, e) in [
        ("generic", TorusPoint::new(vec![gen_pt("g")])),
        ("third", TorusPoint::new(vec![tor(1, 3)])),
        ("identity", TorusPoint::identity(1)),
    ] {
        let fib = fiber_complex(&cx, &e).map_err(err_str)?;
        if !fib.dd_zero() {
            return Err(format!("{name}: differential does not square to zero"));
        }
        if fib.cohomology() != &BTreeMap::from([(0, 2)]) {
            return Err(format!("{name}: fiber {:?}, expected two classes in degree 0", fib.cohomology()));
        }
    }
    let identity = fiber_complex(&cx, &TorusPoint::identity(1)).map_err(err_str)?;
    let want: BTreeMap<(usize, usize, usize), u64> =
        BTreeMap::from([((0, 0, 0), 2), ((1, 0, 0), 1), ((1, 1, 0), 1)]);
    if identity.table() != &want {
        return Err(format!("identity table {:?}, expected {:?}", identity.table(), want));
    }
    Ok("two affine charts, identity overlap, fibers of rank 2 everywhere, exact identity table".into())
}

fn c05_generic_fibers() -> Result<String, String> {
    let mut detail = Vec::new();
    for (name, fan, max_cones) in complete_fans() {
        let cx = build_complex(&fan, CAP).map_err(err_str)?;
        let e = all_generic_point(fan.rank());
        let fib = fiber_complex(&cx, &e).map_err(err_str)?;
        if fib.cohomology() != &BTreeMap::from([(0, max_cones)]) {
            return Err(format!(
                "{name}: generic fiber {:?}, expected rank {max_cones} in degree 0",
                fib.cohomology()
            ));
        }
        detail.push(format!("{name}:{max_cones}"));
    }
    Ok(format!("generic fiber rank equals the maximal cone count ({})", detail.join(", ")))
}

fn c06_localization_battery() -> Result<String, String> {
    let mut pairs = 0usize;
    let mut probes = 0usize;
    for (fan_name, fan) in all_fans() {
        for (pt_name, e) in points_of_rank(fan.rank()) {
            let report = verify_localization(&fan, &e, CAP)
                .map_err(|e| format!("{fan_name} at {pt_name}: {e}"))?;
            if !report.all_agree() {
                return Err(format!(
                    "{fan_name} at {pt_name}: fixed complex disagrees with the full one"
                ));
            }
            pairs += 1;
            probes += report.probes().len();
        }
    }
    if pairs < 30 {
        return Err(format!("only {pairs} fan/point pairs exercised, need at least 30"));
    }
    Ok(format!(
        "{pairs} fan/point pairs, {probes} probe comparisons; tables and cohomology agree throughout"
    ))
}

fn c07_identity_totals() -> Result<String, String> {
    let mut detail = Vec::new();
    for (name, fan, _) in complete_fans() {
        let check = identity_fiber_check(&fan, CAP).map_err(err_str)?;
        if !check.dd_zero() {
            return Err(format!("{name}: differential does not square to zero"));
        }
        if !check.matches() {
            return Err(format!(
                "{name}: identity fiber total {} but Betti sum {}",
                check.fiber_total(),
                check.betti_total()
            ));
        }
        detail.push(format!("{name}:{}", check.fiber_total()));
    }
    Ok(format!("identity fiber totals match Betti sums ({})", detail.join(", ")))
}

fn c08_point_subgroups() -> Result<String, String> {
    for d in [2i64, 3, 6] {
        let e = TorusPoint::new(vec![tor(1, d)]);
        let t = t_of_e(&e);
        if t.torus_rank() != 0 || t.orders() != [int(d)] {
            return Err(format!("order-{d} point: expected the finite diagonalizable group mu_{d}"));
        }
        if t.component_count() != int(d) {
            return Err(format!(
                "order-{d} point: component count {}, expected {d}",
                t.component_count()
            ));
        }
    }
    let g = t_of_e(&TorusPoint::new(vec![gen_pt("g")]));
    if !g.is_full_torus() || g.torus_rank() != 1 || !g.orders().is_empty() {
        return Err("generic point of the line should see the whole torus".into());
    }
    let diag = t_of_e(&TorusPoint::new(vec![gen_pt("g"), gen_pt("g")]));
    if diag.torus_rank() != 1 || !diag.orders().is_empty() || diag.is_full_torus() {
        return Err("diagonal generic point should see a rank-one connected subgroup".into());
    }
    let anti = vec![int(1), int(-1)];
    if !row_lattice_contains(diag.annihilator(), &anti).map_err(err_str)? {
        return Err("diagonal annihilator misses the difference character".into());
    }
    let span = IntMatrix::from_i64(2, &[&[1, -1]]);
    for i in 0..diag.annihilator().rows() {
        if !row_lattice_contains(&span, &diag.annihilator().row_vec(i)).map_err(err_str)? {
            return Err("diagonal annihilator exceeds the difference character".into());
        }
    }
    Ok("torsion points give exact finite orders, generic points give connected subgroups".into())
}

fn c09_property_suites() -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x00e1_1f0a);
    let a = suite_smith(&mut rng, 220)?;
    let b = suite_duality(&mut rng, 220)?;
    let c = suite_chart_supports(&mut rng, 200)?;
    let d = suite_dd_zero(&mut rng, 200)?;
    let e = suite_fixed_closure(&mut rng, 200)?;
    Ok(format!(
        "randomized suites passed: normal form {a}, duality {b}, chart supports {c}, squared differential {d}, fixed closure {e}"
    ))
}

fn random_matrix(rng: &mut ChaCha8Rng, rows: usize, cols: usize, bound: i64) -> IntMatrix {
    let data: Vec<Vec<Int>> = (0..rows)
        .map(|_| (0..cols).map(|_| int(rng.gen_range(-bound..=bound))).collect())
        .collect();
    IntMatrix::from_rows(cols, data).expect("rows have uniform length")
}

fn suite_smith(rng: &mut ChaCha8Rng, cases: usize) -> Result<usize, String> {
    for case in 0..cases {
        let rows = rng.gen_range(1..=4);
        let cols = rng.gen_range(1..=4);
        let a = random_matrix(rng, rows, cols, 30);
        let sd = smith_normal_form(&a);
        let fail = |why: &str| Err(format!("normal form case {case}: {why}"));
        if sd.u.mul(&sd.u_inv) != IntMatrix::identity(rows)
            || sd.v.mul(&sd.v_inv) != IntMatrix::identity(cols)
        {
            return fail("transforms are not mutually inverse");
        }
        for m in [&sd.u, &sd.v] {
            let det = determinant(m);
            if det != int(1) && det != int(-1) {
                return fail("transform is not unimodular");
            }
        }
        let d = sd.u.mul(&a).mul(&sd.v);
        if d != sd.d {
            return fail("product disagrees with the stored diagonal");
        }
        for i in 0..rows {
            for j in 0..cols {
                if i != j && d.entry(i, j) != &int(0) {
                    return fail("off-diagonal entry survives");
                }
            }
        }
        let r = sd.invariant_factors.len();
        if r != sd.rank {
            return fail("rank disagrees with the factor count");
        }
        for (k, f) in sd.invariant_factors.iter().enumerate() {
            if f <= &int(0) {
                return fail("invariant factor is not positive");
            }
            if d.entry(k, k) != f {
                return fail("diagonal entry disagrees with the factor list");
            }
            if k + 1 < r && &(&sd.invariant_factors[k + 1] % f) != &int(0) {
                return fail("divisibility chain broken");
            }
        }
        for k in r..rows.min(cols) {
            if d.entry(k, k) != &int(0) {
                return fail("diagonal continues past the rank");
            }
        }
    }
    Ok(cases)
}

fn suite_duality(rng: &mut ChaCha8Rng, cases: usize) -> Result<usize, String> {
    for case in 0..cases {
        let n = rng.gen_range(1..=3);
        let rows = rng.gen_range(1..=n);
        let w = random_matrix(rng, rows, n, 6);
        let z = SubgroupScheme::kernel_of_characters(w.clone());
        let u: Vec<Int> = (0..n).map(|_| int(rng.gen_range(-6..=6))).collect();
        let claimed = row_lattice_contains(&w, &u).map_err(|e| format!("case {case}: {e}"))?;

        let mut gen = SymbolGen::new();
        let idp = z.generic_point_of_identity_component(&mut gen);
        let mut vanishes = evaluate_character(&u, &idp)
            .map_err(|e| format!("case {case}: {e}"))?
            .is_identity();
        if vanishes {
            'outer: for (k, dk) in z.invariant_factors().iter().enumerate() {
                if dk <= &int(1) {
                    continue;
                }
                for pair in [(int(1), int(0)), (int(0), int(1))] {
                    let mut label: ComponentLabel =
                        z.invariant_factors().iter().map(|_| (int(0), int(0))).collect();
                    label[k] = pair;
                    let rep = z
                        .component_representative(&label, &mut gen)
                        .map_err(|e| format!("case {case}: {e}"))?;
                    if !evaluate_character(&u, &rep)
                        .map_err(|e| format!("case {case}: {e}"))?
                        .is_identity()
                    {
                        vanishes = false;
                        break 'outer;
                    }
                }
            }
        }
        if vanishes != claimed {
            return Err(format!(
                "duality case {case}: vanishing on the kernel is {vanishes} but lattice membership is {claimed}"
            ));
        }
    }
    Ok(cases)
}

fn suite_chart_supports(rng: &mut ChaCha8Rng, cases: usize) -> Result<usize, String> {
    let pool: Vec<Fan> = all_fans().into_iter().map(|(_, f)| f).collect();
    for case in 0..cases {
        let fan = &pool[rng.gen_range(0..pool.len())];
        let nrays = fan.rays().len();
        let mut perm: Vec<usize> = (0..nrays).collect();
        perm.shuffle(rng);
        let mut inv = vec![0usize; nrays];
        for (new, &old) in perm.iter().enumerate() {
            inv[old] = new;
        }
        let rays: Vec<Vec<Int>> = perm.iter().map(|&old| fan.rays()[old].clone()).collect();
        let cones: Vec<Vec<usize>> = fan
            .max_cones()
            .iter()
            .map(|c| c.ray_indices().iter().map(|&r| inv[r]).collect())
            .collect();
        let permuted = Fan::new(fan.rank(), rays, cones, fan.assume_complete())
            .map_err(|e| format!("chart case {case}: {e}"))?;
        for (ci, cone) in fan.max_cones().iter().enumerate() {
            let base = hh_chart(&fan.chart_weights(cone).map_err(|e| format!("case {case}: {e}"))?)
                .map_err(|e| format!("case {case}: {e}"))?;
            let moved = hh_chart(
                &permuted
                    .chart_weights(&permuted.max_cones()[ci])
                    .map_err(|e| format!("case {case}: {e}"))?,
            )
            .map_err(|e| format!("case {case}: {e}"))?;
            let (s0, s1) = match (base.support(), moved.support()) {
                (Some(a), Some(b)) => (a, b),
                _ => return Err(format!("chart case {case}: a chart term vanished")),
            };
            if s0 != s1 {
                return Err(format!("chart case {case}: support moved under a ray relabeling"));
            }
            let perp = fan
                .orbit_perp_lattice(cone)
                .map_err(|e| format!("case {case}: {e}"))?;
            if s0 != &SubgroupScheme::kernel_of_characters(perp) {
                return Err(format!(
                    "chart case {case}: support differs from the kernel of the orbit annihilator"
                ));
            }
        }
    }
    Ok(cases)
}

fn random_point(rng: &mut ChaCha8Rng, rank: usize) -> TorusPoint {
    let mut gen = SymbolGen::new();
    let coords = (0..rank)
        .map(|_| {
            let den = *[1i64, 2, 3, 4, 6].choose(rng).expect("nonempty");
            let num = rng.gen_range(0..den);
            let mut p = EllipticPoint::from_torsion(rat(num, den), rat(0, 1));
            if rng.gen_bool(0.3) {
                p = p.add(&EllipticPoint::generic(gen.fresh()));
            }
            p
        })
        .collect();
    TorusPoint::new(coords)
}

fn suite_dd_zero(rng: &mut ChaCha8Rng, cases: usize) -> Result<usize, String> {
    let pool: Vec<(Fan, SheafComplex)> = all_fans()
        .into_iter()
        .map(|(_, f)| {
            let cx = build_complex(&f, CAP).expect("fixture complexes build");
            (f, cx)
        })
        .collect();
    for (_, cx) in &pool {
        let gamma = global_sections(cx).map_err(|e| format!("sections: {e}"))?;
        if !gamma.dd_zero() {
            return Err("global sections differential does not square to zero".into());
        }
    }
    for case in 0..cases {
        let (fan, cx) = &pool[rng.gen_range(0..pool.len())];
        let e = random_point(rng, fan.rank());
        let fib = fiber_complex(cx, &e).map_err(|e| format!("fiber case {case}: {e}"))?;
        if !fib.dd_zero() {
            return Err(format!("fiber case {case}: differential does not square to zero"));
        }
        let table_euler: i64 = fib
            .table()
            .iter()
            .map(|(&(p, j, i), &r)| {
                let t = p as i64 - j as i64 + i as i64;
                if t % 2 == 0 {
                    r as i64
                } else {
                    -(r as i64)
                }
            })
            .sum();
        if table_euler != fib.euler_characteristic() {
            return Err(format!("fiber case {case}: Euler characteristic drifts under the differential"));
        }
    }
    Ok(cases)
}

fn suite_fixed_closure(rng: &mut ChaCha8Rng, cases: usize) -> Result<usize, String> {
    let pool = all_fans();
    for case in 0..cases {
        let (_, fan) = &pool[rng.gen_range(0..pool.len())];
        let e = random_point(rng, fan.rank());
        let report = fixed_subfan(fan, &e).map_err(|e| format!("closure case {case}: {e}"))?;
        let fixed: BTreeSet<Vec<usize>> = report
            .fixed_faces()
            .iter()
            .map(|c| c.ray_indices().to_vec())
            .collect();
        let faces = fan.faces();
        for f in &faces {
            if !fixed.contains(f.ray_indices()) {
                continue;
            }
            for g in &faces {
                if f.is_face_of(g) && !fixed.contains(g.ray_indices()) {
                    return Err(format!(
                        "closure case {case}: face {:?} fixed but {:?} is not",
                        f.ray_indices(),
                        g.ray_indices()
                    ));
                }
            }
        }
    }
    Ok(cases)
}

fn c10_parity_fold() -> Result<String, String> {
    let mut folds = 0usize;
    for (name, fan, _) in complete_fans() {
        let cx = build_complex(&fan, CAP).map_err(err_str)?;
        let gamma = global_sections(&cx).map_err(err_str)?;
        let odd: u64 = gamma
            .cohomology()
            .iter()
            .filter(|(&t, _)| t.rem_euclid(2) == 1)
            .map(|(_, &d)| d)
            .sum();
        if odd != 0 {
            return Err(format!("{name}: global sections carry odd-degree classes"));
        }
        folds += 1;
        for (pt_name, e) in points_of_rank(fan.rank()) {
            let fib = fiber_complex(&cx, &e).map_err(err_str)?;
            let odd: u64 = fib
                .cohomology()
                .iter()
                .filter(|(&t, _)| t.rem_euclid(2) == 1)
                .map(|(_, &d)| d)
                .sum();
            if odd != 0 {
                return Err(format!("{name} at {pt_name}: odd-degree classes survive"));
            }
            folds += 1;
        }
    }
    Ok(format!("{folds} graded tables fold to even degrees only"))
}

fn c11_performance() -> Result<String, String> {
    let t0 = Instant::now();
    let fan = projective_plane();
    let cx = build_complex(&fan, CAP).map_err(err_str)?;
    for (_, e) in points_of_rank(2).iter().take(6) {
        let fib = fiber_complex(&cx, e).map_err(err_str)?;
        if !fib.dd_zero() {
            return Err("plane fiber differential failed".into());
        }
    }
    global_sections(&cx).map_err(err_str)?;
    for (name, e) in [
        ("identity", TorusPoint::identity(2)),
        ("half-0", TorusPoint::new(vec![tor(1, 2), EllipticPoint::identity()])),
        ("mixed", TorusPoint::new(vec![tor(1, 2), gen_pt("g")])),
        ("diagonal", TorusPoint::new(vec![gen_pt("g"), gen_pt("g")])),
    ] {
        let rep = verify_localization(&fan, &e, CAP).map_err(err_str)?;
        if !rep.all_agree() {
            return Err(format!("plane localization at {name} disagrees"));
        }
    }
    let plane = t0.elapsed();
    if plane.as_millis() >= 1000 {
        return Err(format!("plane pipeline took {} ms, budget is 1000", plane.as_millis()));
    }

    let t1 = Instant::now();
    let big = twelve_cone_fan();
    let cx = build_complex(&big, CAP).map_err(err_str)?;
    let idf = fiber_complex(&cx, &TorusPoint::identity(2)).map_err(err_str)?;
    if !idf.dd_zero() {
        return Err("large fan identity fiber differential failed".into());
    }
    let gf = fiber_complex(&cx, &all_generic_point(2)).map_err(err_str)?;
    if gf.cohomology() != &BTreeMap::from([(0, 12)]) {
        return Err("large fan generic fiber is not twelve lines".into());
    }
    let gamma = global_sections(&cx).map_err(err_str)?;
    if gamma.cohomology() != &BTreeMap::from([(0, 1)]) {
        return Err("large fan global sections are not one-dimensional".into());
    }
    let e = TorusPoint::new(vec![tor(1, 2), EllipticPoint::identity()]);
    let rep = verify_localization(&big, &e, CAP).map_err(err_str)?;
    if !rep.all_agree() {
        return Err("large fan localization disagrees".into());
    }
    let large = t1.elapsed();
    if large.as_secs() >= 30 {
        return Err(format!("large fan pipeline took {} s, budget is 30", large.as_secs()));
    }
    Ok(format!(
        "plane pipeline {} ms (budget 1000), twelve-cone pipeline {} ms (budget 30000)",
        plane.as_millis(),
        large.as_millis()
    ))
}
