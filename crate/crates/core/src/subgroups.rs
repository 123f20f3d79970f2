//! Subgroup schemes of `E^n` cut out by integer characters.
//!
//! A `k x n` integer matrix `W` defines the kernel of the induced map
//! `E^n -> E^k`.  After the unimodular coordinate change from the Smith form
//! of `W` the kernel becomes `E[d1] x ... x E[dr] x E^(n-r)`, which pins
//! down its dimension (`n - r`), its component count (`prod d_i^2`, since
//! the `d`-torsion of `E` is `(Z/d)^2`) and a labelling of the components.
//! Two subgroup schemes are equal exactly when their character row lattices
//! coincide, which is what `PartialEq` implements.

use alloc::vec::Vec;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::epoints::{evaluate_character, SymbolGen, TorusPoint};
use crate::lattice::{
    row_lattice_contains, row_lattice_contains_all, smith_normal_form, IntMatrix, RatMatrix,
    SmithDecomposition,
};
use crate::{Error, Int, Rat};

/// Label of a connected component: for each invariant factor `d_j` a pair
/// of residues mod `d_j` describing the torsion part in Smith coordinates.
pub type ComponentLabel = Vec<(Int, Int)>;

/// Closed subgroup scheme of `E^n` presented as a kernel of characters.
#[derive(Debug, Clone)]
pub struct SubgroupScheme {
    ambient_rank: usize,
    characters: IntMatrix,
    smith: SmithDecomposition,
}

impl SubgroupScheme {
    /// The subgroup cut out by the rows of `characters` inside `E^n`,
    /// where `n = characters.cols()`.
    pub fn kernel_of_characters(characters: IntMatrix) -> Self {
        let smith = smith_normal_form(&characters);
        SubgroupScheme { ambient_rank: characters.cols(), characters, smith }
    }

    /// All of `E^n` (kernel of no characters).
    pub fn full(n: usize) -> Self {
        SubgroupScheme::kernel_of_characters(IntMatrix::zero(0, n))
    }

    pub fn ambient_rank(&self) -> usize {
        self.ambient_rank
    }

    pub fn characters(&self) -> &IntMatrix {
        &self.characters
    }

    pub fn smith(&self) -> &SmithDecomposition {
        &self.smith
    }

    /// Invariant factors `d1 | ... | dr` of the character matrix.
    pub fn invariant_factors(&self) -> &[Int] {
        &self.smith.invariant_factors
    }

    pub fn rank_of_characters(&self) -> usize {
        self.smith.rank
    }

    /// Dimension of the subgroup scheme as a variety.
    pub fn dimension(&self) -> usize {
        self.ambient_rank - self.smith.rank
    }

    pub fn is_full(&self) -> bool {
        self.smith.rank == 0
    }

    /// Number of connected components: `prod d_j^2`.
    pub fn component_count(&self) -> Int {
        let mut c = Int::one();
        for d in self.invariant_factors() {
            c *= d * d;
        }
        c
    }

    pub fn contains_point(&self, e: &TorusPoint) -> Result<bool, Error> {
        if e.rank() != self.ambient_rank {
            return Err(Error::AmbientRankMismatch { left: self.ambient_rank, right: e.rank() });
        }
        for i in 0..self.characters.rows() {
            if !evaluate_character(self.characters.row(i), e)?.is_identity() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Does `self` contain `other` as a subgroup scheme?  Equivalent to the
    /// characters of `self` lying in the row lattice of `other`'s.
    pub fn contains(&self, other: &SubgroupScheme) -> Result<bool, Error> {
        if self.ambient_rank != other.ambient_rank {
            return Err(Error::AmbientRankMismatch {
                left: self.ambient_rank,
                right: other.ambient_rank,
            });
        }
        row_lattice_contains_all(&other.characters, &self.characters)
    }

    pub fn intersect(&self, other: &SubgroupScheme) -> Result<SubgroupScheme, Error> {
        if self.ambient_rank != other.ambient_rank {
            return Err(Error::AmbientRankMismatch {
                left: self.ambient_rank,
                right: other.ambient_rank,
            });
        }
        let stacked = self.characters.stack(&other.characters)?;
        Ok(SubgroupScheme::kernel_of_characters(stacked))
    }

    /// Smith coordinates of a point: `v_inv * e`.
    fn smith_coordinates(&self, e: &TorusPoint) -> Result<TorusPoint, Error> {
        e.transform(&self.smith.v_inv)
    }

    /// Component label of a point of the subgroup.
    pub fn component_index(&self, e: &TorusPoint) -> Result<ComponentLabel, Error> {
        if !self.contains_point(e)? {
            return Err(Error::PointNotInSubgroup);
        }
        let f = self.smith_coordinates(e)?;
        let mut label = Vec::with_capacity(self.smith.rank);
        for (j, d) in self.invariant_factors().iter().enumerate() {
            let c = f.coord(j);
            debug_assert!(c.generic_part().is_empty(), "torsion coordinate has generic tail");
            let (a, b) = c.torsion();
            let dr = Rat::from_integer(d.clone());
            let p = (a * &dr).to_integer().mod_floor(d);
            let q = (b * &dr).to_integer().mod_floor(d);
            label.push((p, q));
        }
        Ok(label)
    }

    /// All component labels, lexicographically.  Sized `prod d_j^2`; meant
    /// for desk-scale subgroups.
    pub fn component_labels(&self) -> Vec<ComponentLabel> {
        let mut out = Vec::new();
        let mut cur: ComponentLabel = Vec::with_capacity(self.smith.rank);
        fn rec(factors: &[Int], cur: &mut ComponentLabel, out: &mut Vec<ComponentLabel>) {
            match factors.first() {
                None => out.push(cur.clone()),
                Some(d) => {
                    let mut p = Int::zero();
                    while &p < d {
                        let mut q = Int::zero();
                        while &q < d {
                            cur.push((p.clone(), q.clone()));
                            rec(&factors[1..], cur, out);
                            cur.pop();
                            q += 1;
                        }
                        p += 1;
                    }
                }
            }
        }
        rec(self.invariant_factors(), &mut cur, &mut out);
        out
    }

    /// A point on the component with the given label.  Torsion coordinates
    /// are exact; the free Smith coordinates get fresh generic symbols so
    /// the representative avoids every proper subgroup it is not forced
    /// into.
    pub fn component_representative(
        &self,
        label: &ComponentLabel,
        gen: &mut SymbolGen,
    ) -> Result<TorusPoint, Error> {
        if label.len() != self.smith.rank {
            return Err(Error::DimensionMismatch { expected: self.smith.rank, found: label.len() });
        }
        let n = self.ambient_rank;
        let mut coords = Vec::with_capacity(n);
        for (j, d) in self.invariant_factors().iter().enumerate() {
            let (p, q) = &label[j];
            coords.push(crate::epoints::EllipticPoint::from_torsion(
                Rat::new(p.clone(), d.clone()),
                Rat::new(q.clone(), d.clone()),
            ));
        }
        for _ in self.smith.rank..n {
            coords.push(crate::epoints::EllipticPoint::generic(gen.fresh()));
        }
        let f = TorusPoint::new(coords);
        f.transform(&self.smith.v)
    }

    /// Generic point of the identity component.
    pub fn generic_point_of_identity_component(&self, gen: &mut SymbolGen) -> TorusPoint {
        let label: ComponentLabel =
            self.invariant_factors().iter().map(|_| (Int::zero(), Int::zero())).collect();
        self.component_representative(&label, gen)
            .expect("identity label always has the right length")
    }

    /// Canonical basis (reduced row echelon form) of the conormal space:
    /// the rational span of the characters.
    pub fn conormal_space(&self) -> Vec<Vec<Rat>> {
        RatMatrix::from_int(&self.characters).row_space_basis()
    }

    /// Membership of a single character in the character row lattice.
    pub fn character_lattice_contains(&self, w: &[Int]) -> Result<bool, Error> {
        row_lattice_contains(&self.characters, w)
    }
}

impl PartialEq for SubgroupScheme {
    /// Semantic equality: mutual containment of character row lattices.
    fn eq(&self, other: &Self) -> bool {
        self.ambient_rank == other.ambient_rank
            && self.contains(other).unwrap_or(false)
            && other.contains(self).unwrap_or(false)
    }
}

impl Eq for SubgroupScheme {}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::epoints::EllipticPoint;
    use crate::{int, rat};

    fn torsion_point(pairs: &[(i64, i64, i64)]) -> TorusPoint {
        TorusPoint::new(
            pairs
                .iter()
                .map(|&(a, b, m)| EllipticPoint::from_torsion(rat(a, m), rat(b, m)))
                .collect(),
        )
    }

    #[test]
    fn torsion_subgroup_counts() {
        let e2 = SubgroupScheme::kernel_of_characters(IntMatrix::from_i64(1, &[&[2]]));
        assert_eq!(e2.invariant_factors(), &[int(2)]);
        assert_eq!(e2.dimension(), 0);
        assert_eq!(e2.component_count(), int(4));

        let e3 = SubgroupScheme::kernel_of_characters(IntMatrix::from_i64(1, &[&[3]]));
        assert_eq!(e3.component_count(), int(9));

        let sq = SubgroupScheme::kernel_of_characters(IntMatrix::from_i64(2, &[&[2, 0], &[0, 2]]));
        assert_eq!(sq.component_count(), int(16));
        assert_eq!(sq.dimension(), 0);
    }

    #[test]
    fn full_subgroup_is_connected() {
        let f = SubgroupScheme::full(2);
        assert!(f.is_full());
        assert_eq!(f.dimension(), 2);
        assert_eq!(f.component_count(), int(1));
        assert!(f.conormal_space().is_empty());
    }

    #[test]
    fn membership_and_containment() {
        let e2 = SubgroupScheme::kernel_of_characters(IntMatrix::from_i64(1, &[&[2]]));
        assert!(e2.contains_point(&torsion_point(&[(1, 1, 2)])).unwrap());
        assert!(!e2.contains_point(&torsion_point(&[(1, 0, 3)])).unwrap());

        let e4 = SubgroupScheme::kernel_of_characters(IntMatrix::from_i64(1, &[&[4]]));
        assert!(e4.contains(&e2).unwrap());
        assert!(!e2.contains(&e4).unwrap());
    }

    #[test]
    fn semantic_equality_ignores_presentation() {
        let a = SubgroupScheme::kernel_of_characters(IntMatrix::from_i64(2, &[&[1, 1], &[0, 2]]));
        let b = SubgroupScheme::kernel_of_characters(IntMatrix::from_i64(2, &[&[1, -1], &[0, 2]]));
        assert_eq!(a, b);
        let c = SubgroupScheme::kernel_of_characters(IntMatrix::from_i64(2, &[&[1, 1]]));
        assert_ne!(a, c);
    }

    #[test]
    fn intersection_of_coordinate_kernels_is_identity() {
        let z1 = SubgroupScheme::kernel_of_characters(IntMatrix::from_i64(2, &[&[1, 0]]));
        let z2 = SubgroupScheme::kernel_of_characters(IntMatrix::from_i64(2, &[&[0, 1]]));
        let z = z1.intersect(&z2).unwrap();
        assert_eq!(z.dimension(), 0);
        assert_eq!(z.component_count(), int(1));
        assert!(z.contains_point(&TorusPoint::identity(2)).unwrap());
    }

    #[test]
    fn component_labels_round_trip() {
        let e2 = SubgroupScheme::kernel_of_characters(IntMatrix::from_i64(1, &[&[2]]));
        let labels = e2.component_labels();
        assert_eq!(labels.len(), 4);
        let mut gen = SymbolGen::new();
        for label in &labels {
            let rep = e2.component_representative(label, &mut gen).unwrap();
            assert!(e2.contains_point(&rep).unwrap());
            assert_eq!(&e2.component_index(&rep).unwrap(), label);
        }
    }

    #[test]
    fn component_index_rejects_outsiders() {
        let e2 = SubgroupScheme::kernel_of_characters(IntMatrix::from_i64(1, &[&[2]]));
        let bad = torsion_point(&[(1, 0, 3)]);
        assert_eq!(e2.component_index(&bad).unwrap_err(), Error::PointNotInSubgroup);
    }

    #[test]
    fn conormal_of_torsion_subgroup_is_full_line() {
        let e2 = SubgroupScheme::kernel_of_characters(IntMatrix::from_i64(1, &[&[2]]));
        let c = e2.conormal_space();
        assert_eq!(c.len(), 1);
        assert_eq!(c[0], alloc::vec![Rat::from_integer(int(1))]);
    }

    #[test]
    fn generic_identity_point_lies_in_identity_component() {
        let z = SubgroupScheme::kernel_of_characters(IntMatrix::from_i64(2, &[&[2, 0]]));
        let mut gen = SymbolGen::new();
        let p = z.generic_point_of_identity_component(&mut gen);
        assert!(z.contains_point(&p).unwrap());
        let label = z.component_index(&p).unwrap();
        assert!(label.iter().all(|(a, b)| a.is_zero() && b.is_zero()));
        // the free direction really is generic
        assert_eq!(p.symbols().len(), 1);
    }
}
