//! Points of an elliptic curve `E` and of the torus `E^n`, in the group
//! model.
//!
//! A point of `E` is stored as a torsion pair `(a, b)` of rationals mod 1
//! together with a formal rational combination of *generic symbols*.  A
//! symbol stands for a coordinate with no rational relation to anything
//! else, so a character `w` kills a point exactly when it kills the torsion
//! pair mod 1 and kills every symbol coefficient on the nose.  This is all
//! the structure the sheaf computations downstream ever inspect.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::lattice::{integer_kernel, row_times_matrix, IntMatrix, RatMatrix};
use crate::subgroups::SubgroupScheme;
use crate::{Error, Int, Rat};

/// Name of a generic (transcendental) coordinate.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Symbol(String);

impl Symbol {
    pub fn new(name: &str) -> Self {
        Symbol(name.to_string())
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// Deterministic source of fresh symbols for one computation session.
///
/// Fresh names are `t1, t2, ...`, skipping anything already reserved, so a
/// session that starts from the same inputs always produces the same names.
#[derive(Debug, Clone, Default)]
pub struct SymbolGen {
    counter: u64,
    used: BTreeSet<Symbol>,
}

impl SymbolGen {
    pub fn new() -> Self {
        SymbolGen::default()
    }

    pub fn reserve(&mut self, s: &Symbol) {
        self.used.insert(s.clone());
    }

    pub fn reserve_point(&mut self, e: &TorusPoint) {
        for c in &e.coords {
            for s in c.generic.keys() {
                self.reserve(s);
            }
        }
    }

    pub fn fresh(&mut self) -> Symbol {
        loop {
            self.counter += 1;
            let cand = Symbol(alloc::format!("t{}", self.counter));
            if !self.used.contains(&cand) {
                self.used.insert(cand.clone());
                return cand;
            }
        }
    }
}

fn reduce_mod_one(x: &Rat) -> Rat {
    x - x.floor()
}

/// A point of `E`: torsion pair mod 1 plus a generic tail.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EllipticPoint {
    torsion: (Rat, Rat),
    generic: BTreeMap<Symbol, Rat>,
}

impl EllipticPoint {
    pub fn identity() -> Self {
        EllipticPoint { torsion: (Rat::zero(), Rat::zero()), generic: BTreeMap::new() }
    }

    pub fn from_torsion(a: Rat, b: Rat) -> Self {
        EllipticPoint { torsion: (reduce_mod_one(&a), reduce_mod_one(&b)), generic: BTreeMap::new() }
    }

    pub fn generic(sym: Symbol) -> Self {
        let mut g = BTreeMap::new();
        g.insert(sym, Rat::one());
        EllipticPoint { torsion: (Rat::zero(), Rat::zero()), generic: g }
    }

    pub fn new(a: Rat, b: Rat, generic: BTreeMap<Symbol, Rat>) -> Self {
        let generic = generic.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        EllipticPoint { torsion: (reduce_mod_one(&a), reduce_mod_one(&b)), generic }
    }

    pub fn torsion(&self) -> &(Rat, Rat) {
        &self.torsion
    }

    pub fn generic_part(&self) -> &BTreeMap<Symbol, Rat> {
        &self.generic
    }

    pub fn is_identity(&self) -> bool {
        self.torsion.0.is_zero() && self.torsion.1.is_zero() && self.generic.is_empty()
    }

    pub fn add(&self, other: &EllipticPoint) -> EllipticPoint {
        let mut generic = self.generic.clone();
        for (s, c) in &other.generic {
            let e = generic.entry(s.clone()).or_insert_with(Rat::zero);
            *e += c;
        }
        EllipticPoint::new(
            &self.torsion.0 + &other.torsion.0,
            &self.torsion.1 + &other.torsion.1,
            generic,
        )
    }

    pub fn neg(&self) -> EllipticPoint {
        let generic = self.generic.iter().map(|(s, c)| (s.clone(), -c.clone())).collect();
        EllipticPoint::new(-self.torsion.0.clone(), -self.torsion.1.clone(), generic)
    }

    pub fn mul_int(&self, k: &Int) -> EllipticPoint {
        let kr = Rat::from_integer(k.clone());
        let generic = self.generic.iter().map(|(s, c)| (s.clone(), c * &kr)).collect();
        EllipticPoint::new(&self.torsion.0 * &kr, &self.torsion.1 * &kr, generic)
    }
}

/// Order of a point in the group `E`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Order {
    Finite(Int),
    Infinite,
}

/// Order of the cyclic subgroup generated by `p`: the lcm of the reduced
/// denominators of the torsion pair, or infinite if a generic tail is
/// present.
pub fn torsion_order(p: &EllipticPoint) -> Order {
    if !p.generic.is_empty() {
        return Order::Infinite;
    }
    let (a, b) = &p.torsion;
    Order::Finite(a.denom().lcm(b.denom()))
}

/// A point of the torus `E^n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TorusPoint {
    coords: Vec<EllipticPoint>,
}

impl TorusPoint {
    pub fn new(coords: Vec<EllipticPoint>) -> Self {
        TorusPoint { coords }
    }

    pub fn identity(rank: usize) -> Self {
        TorusPoint { coords: vec![EllipticPoint::identity(); rank] }
    }

    pub fn rank(&self) -> usize {
        self.coords.len()
    }

    pub fn coord(&self, i: usize) -> &EllipticPoint {
        &self.coords[i]
    }

    pub fn coords(&self) -> &[EllipticPoint] {
        &self.coords
    }

    pub fn is_identity(&self) -> bool {
        self.coords.iter().all(EllipticPoint::is_identity)
    }

    pub fn add(&self, other: &TorusPoint) -> Result<TorusPoint, Error> {
        if self.rank() != other.rank() {
            return Err(Error::AmbientRankMismatch { left: self.rank(), right: other.rank() });
        }
        Ok(TorusPoint {
            coords: self.coords.iter().zip(&other.coords).map(|(a, b)| a.add(b)).collect(),
        })
    }

    /// Applies an integer matrix: coordinate `i` of the result is
    /// `sum_j m[i][j] * e_j`.  Used for Smith coordinate changes.
    pub fn transform(&self, m: &IntMatrix) -> Result<TorusPoint, Error> {
        if m.cols() != self.rank() {
            return Err(Error::DimensionMismatch { expected: self.rank(), found: m.cols() });
        }
        let coords = (0..m.rows())
            .map(|i| {
                let mut acc = EllipticPoint::identity();
                for (j, e) in self.coords.iter().enumerate() {
                    let c = m.entry(i, j);
                    if !c.is_zero() {
                        acc = acc.add(&e.mul_int(c));
                    }
                }
                acc
            })
            .collect();
        Ok(TorusPoint { coords })
    }

    /// All generic symbols appearing in any coordinate, sorted.
    pub fn symbols(&self) -> BTreeSet<Symbol> {
        let mut out = BTreeSet::new();
        for c in &self.coords {
            for s in c.generic.keys() {
                out.insert(s.clone());
            }
        }
        out
    }
}

/// Pairing `<w, e> = sum_i w_i * e_i` of a character with a torus point.
pub fn evaluate_character(w: &[Int], e: &TorusPoint) -> Result<EllipticPoint, Error> {
    if w.len() != e.rank() {
        return Err(Error::DimensionMismatch { expected: e.rank(), found: w.len() });
    }
    let mut acc = EllipticPoint::identity();
    for (wi, ei) in w.iter().zip(e.coords()) {
        if !wi.is_zero() {
            acc = acc.add(&ei.mul_int(wi));
        }
    }
    Ok(acc)
}

/// The annihilator lattice `A(e) = { w : <w, e> = identity }`, returned as a
/// basis matrix (rows).  The lattice need not be saturated: `e = (1/3, 0)`
/// in rank 1 gives `A(e) = 3Z`.
pub fn annihilator_lattice(e: &TorusPoint) -> IntMatrix {
    let n = e.rank();
    let symbols: Vec<Symbol> = e.symbols().into_iter().collect();

    // Step 1: kill the generic tails.  Build the (symbols x n) coefficient
    // matrix, clear denominators row by row, take the saturated integer
    // kernel.
    let kernel = if symbols.is_empty() {
        IntMatrix::identity(n)
    } else {
        let mut rows = Vec::with_capacity(symbols.len());
        for s in &symbols {
            let coeffs: Vec<Rat> = e
                .coords()
                .iter()
                .map(|c| c.generic.get(s).cloned().unwrap_or_else(Rat::zero))
                .collect();
            let lcm = coeffs
                .iter()
                .fold(Int::one(), |acc, c| acc.lcm(c.denom()));
            let row: Vec<Int> = coeffs
                .iter()
                .map(|c| c.numer() * (&lcm / c.denom()))
                .collect();
            rows.push(row);
        }
        let g = IntMatrix::from_rows(n, rows).expect("coefficient rows have rank length");
        integer_kernel(&g)
    };
    let m = kernel.rows();
    if m == 0 {
        return IntMatrix::zero(0, n);
    }

    // Step 2: within that kernel, solve the torsion congruences.  For a
    // combination w = c * kernel the torsion pairing is c . (alpha, beta);
    // both components must be integers.
    let alpha: Vec<Rat> = (0..m)
        .map(|j| {
            kernel
                .row(j)
                .iter()
                .zip(e.coords())
                .map(|(k, c)| Rat::from_integer(k.clone()) * &c.torsion.0)
                .sum()
        })
        .collect();
    let beta: Vec<Rat> = (0..m)
        .map(|j| {
            kernel
                .row(j)
                .iter()
                .zip(e.coords())
                .map(|(k, c)| Rat::from_integer(k.clone()) * &c.torsion.1)
                .sum()
        })
        .collect();
    let l = alpha
        .iter()
        .chain(beta.iter())
        .fold(Int::one(), |acc, r| acc.lcm(r.denom()));
    if l.is_one() {
        return kernel;
    }

    // Solutions of  M c = 0 mod L  are the projection of the integer kernel
    // of [M | L*I] to the first m coordinates.
    let scale = |r: &Rat| -> Int { r.numer() * (&l / r.denom()) };
    let mut m0: Vec<Int> = alpha.iter().map(scale).collect();
    let mut m1: Vec<Int> = beta.iter().map(scale).collect();
    m0.extend([l.clone(), Int::zero()]);
    m1.extend([Int::zero(), l.clone()]);
    let aug = IntMatrix::from_rows(m + 2, vec![m0, m1]).expect("rows sized m+2");
    let sols = integer_kernel(&aug);
    let mut rows = Vec::with_capacity(sols.rows());
    for i in 0..sols.rows() {
        let c = &sols.row(i)[..m];
        rows.push(row_times_matrix(c, &kernel));
    }
    IntMatrix::from_rows(n, rows).expect("annihilator rows have rank length")
}

/// Rational matrix whose rows are the generic-symbol coefficient vectors of
/// `e`; the rational relations a character must satisfy.
pub fn generic_coefficient_matrix(e: &TorusPoint) -> RatMatrix {
    let symbols: Vec<Symbol> = e.symbols().into_iter().collect();
    let rows = symbols
        .iter()
        .map(|s| {
            e.coords()
                .iter()
                .map(|c| c.generic.get(s).cloned().unwrap_or_else(Rat::zero))
                .collect()
        })
        .collect();
    RatMatrix::from_rows(e.rank(), rows).expect("rows have rank length")
}

/// `e + delta` where `delta` is a fresh generic point of the identity
/// component of `z`.  Every character of `z` takes the same value at the
/// input and the output.
pub fn perturb(e: &TorusPoint, z: &SubgroupScheme, gen: &mut SymbolGen) -> Result<TorusPoint, Error> {
    if e.rank() != z.ambient_rank() {
        return Err(Error::AmbientRankMismatch { left: e.rank(), right: z.ambient_rank() });
    }
    gen.reserve_point(e);
    let delta = z.generic_point_of_identity_component(gen);
    e.add(&delta)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{int, rat};

    fn sym(s: &str) -> Symbol {
        Symbol::new(s)
    }

    #[test]
    fn torsion_reduction_and_orders() {
        let p = EllipticPoint::from_torsion(rat(7, 2), rat(-1, 3));
        assert_eq!(p.torsion(), &(rat(1, 2), rat(2, 3)));
        assert_eq!(torsion_order(&p), Order::Finite(int(6)));
        assert_eq!(torsion_order(&EllipticPoint::identity()), Order::Finite(int(1)));
        assert_eq!(torsion_order(&EllipticPoint::generic(sym("g"))), Order::Infinite);
    }

    #[test]
    fn doubling_an_order_two_point() {
        let p = EllipticPoint::from_torsion(rat(1, 2), rat(0, 1));
        assert!(p.mul_int(&int(2)).is_identity());
        assert!(!p.mul_int(&int(3)).is_identity());
    }

    #[test]
    fn generic_cancellation() {
        let g = EllipticPoint::generic(sym("g"));
        assert!(g.add(&g.neg()).is_identity());
        let sum = g.add(&g);
        assert_eq!(sum.generic_part().get(&sym("g")), Some(&rat(2, 1)));
    }

    #[test]
    fn character_evaluation_is_bilinear_sample() {
        let e = TorusPoint::new(vec![
            EllipticPoint::from_torsion(rat(1, 2), rat(0, 1)),
            EllipticPoint::generic(sym("g")),
        ]);
        let w = [int(2), int(0)];
        assert!(evaluate_character(&w, &e).unwrap().is_identity());
        let w2 = [int(1), int(1)];
        let v = evaluate_character(&w2, &e).unwrap();
        assert_eq!(v.torsion(), &(rat(1, 2), rat(0, 1)));
        assert_eq!(v.generic_part().len(), 1);
        assert!(evaluate_character(&[int(1)], &e).is_err());
    }

    #[test]
    fn annihilator_of_identity_is_full_lattice() {
        let a = annihilator_lattice(&TorusPoint::identity(2));
        assert_eq!(a.rows(), 2);
        assert!(crate::lattice::row_lattice_contains(&a, &[int(1), int(0)]).unwrap());
        assert!(crate::lattice::row_lattice_contains(&a, &[int(0), int(1)]).unwrap());
    }

    #[test]
    fn annihilator_of_order_three_point() {
        let e = TorusPoint::new(vec![EllipticPoint::from_torsion(rat(1, 3), rat(0, 1))]);
        let a = annihilator_lattice(&e);
        assert!(crate::lattice::row_lattice_contains(&a, &[int(3)]).unwrap());
        assert!(!crate::lattice::row_lattice_contains(&a, &[int(1)]).unwrap());
    }

    #[test]
    fn annihilator_of_diagonal_generic_pair() {
        let g = EllipticPoint::generic(sym("g"));
        let e = TorusPoint::new(vec![g.clone(), g]);
        let a = annihilator_lattice(&e);
        assert_eq!(a.rows(), 1);
        assert!(crate::lattice::row_lattice_contains(&a, &[int(1), int(-1)]).unwrap());
        assert!(!crate::lattice::row_lattice_contains(&a, &[int(1), int(1)]).unwrap());
    }

    #[test]
    fn annihilator_respects_mixed_torsion_and_generic() {
        // e = ((1/2, 0), g): annihilator is generated by (2, 0).
        let e = TorusPoint::new(vec![
            EllipticPoint::from_torsion(rat(1, 2), rat(0, 1)),
            EllipticPoint::generic(sym("g")),
        ]);
        let a = annihilator_lattice(&e);
        assert!(crate::lattice::row_lattice_contains(&a, &[int(2), int(0)]).unwrap());
        assert!(!crate::lattice::row_lattice_contains(&a, &[int(1), int(0)]).unwrap());
        assert!(!crate::lattice::row_lattice_contains(&a, &[int(0), int(1)]).unwrap());
    }

    #[test]
    fn fresh_symbols_avoid_collisions() {
        let mut gen = SymbolGen::new();
        gen.reserve(&sym("t1"));
        let a = gen.fresh();
        let b = gen.fresh();
        assert_eq!(a, sym("t2"));
        assert_eq!(b, sym("t3"));
    }
}
