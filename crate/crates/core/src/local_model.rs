//! Local chart contributions to the elliptic homology sheaf.
//!
//! An affine chart of a smooth toric variety factors equivariantly as a
//! product of weighted affine lines and weighted torus factors.  Each factor
//! contributes a coherent sheaf on the ambient abelian variety `E^n`:
//!
//! * an affine line of nonzero weight is equivariantly contractible and
//!   contributes the structure sheaf of all of `E^n`,
//! * a torus factor of nonzero weight `w` contributes the structure sheaf of
//!   the kernel subgroup `ker(w)`,
//! * a torus factor of weight zero is a free circle and contributes a rank
//!   one piece in internal degrees 0 and 1,
//! * an affine line of weight zero has infinite dimensional invariants and is
//!   rejected.
//!
//! Terms record only the internal grading.  The exterior powers of the
//! conormal space of the support, which every torus factor of nonzero weight
//! also carries, are reattached uniformly when a complex is specialised at a
//! point; keeping them implicit is what makes adjacent terms comparable.

use alloc::collections::BTreeMap;

use crate::error::Error;
use crate::fan::ChartWeights;
use crate::lattice::IntMatrix;
use crate::subgroups::SubgroupScheme;
use crate::Int;
use num_traits::Zero;

/// Multiplicities of a term, keyed by internal degree.
pub type Multiplicity = BTreeMap<usize, u64>;

/// One summand of the homology sheaf attached to a chart or cone.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SheafTerm {
    /// The zero sheaf.
    Zero,
    /// A sheaf supported on a subgroup scheme with finite internal ranks.
    Term {
        support: SubgroupScheme,
        multiplicity: Multiplicity,
    },
}

impl SheafTerm {
    /// The unit for the tensor product: the structure sheaf of `E^n` in
    /// internal degree zero.
    pub fn unit(ambient_rank: usize) -> Self {
        let mut multiplicity = Multiplicity::new();
        multiplicity.insert(0, 1);
        SheafTerm::Term {
            support: SubgroupScheme::full(ambient_rank),
            multiplicity,
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, SheafTerm::Zero)
    }

    pub fn support(&self) -> Option<&SubgroupScheme> {
        match self {
            SheafTerm::Zero => None,
            SheafTerm::Term { support, .. } => Some(support),
        }
    }

    pub fn multiplicity(&self) -> Option<&Multiplicity> {
        match self {
            SheafTerm::Zero => None,
            SheafTerm::Term { multiplicity, .. } => Some(multiplicity),
        }
    }

    /// Sum of the internal ranks, zero for the zero sheaf.
    pub fn total_rank(&self) -> u64 {
        match self {
            SheafTerm::Zero => 0,
            SheafTerm::Term { multiplicity, .. } => multiplicity.values().sum(),
        }
    }
}

fn is_zero_row(w: &[Int]) -> bool {
    w.iter().all(Zero::is_zero)
}

fn single_row(w: &[Int]) -> IntMatrix {
    IntMatrix::from_rows(w.len(), alloc::vec![w.to_vec()]).expect("row length fixed")
}

/// Contribution of one affine line factor with weight row `w`.
pub fn hh_affine_factor(w: &[Int]) -> Result<SheafTerm, Error> {
    if is_zero_row(w) {
        return Err(Error::InfiniteRank);
    }
    Ok(SheafTerm::unit(w.len()))
}

/// Contribution of one torus factor with weight row `w`.
pub fn hh_torus_factor(w: &[Int]) -> SheafTerm {
    let mut multiplicity = Multiplicity::new();
    multiplicity.insert(0, 1);
    let support = if is_zero_row(w) {
        multiplicity.insert(1, 1);
        SubgroupScheme::full(w.len())
    } else {
        SubgroupScheme::kernel_of_characters(single_row(w))
    };
    SheafTerm::Term {
        support,
        multiplicity,
    }
}

/// Tensor product of two terms over the ambient abelian variety: supports
/// intersect and internal multiplicities convolve.
pub fn kunneth_tensor(a: &SheafTerm, b: &SheafTerm) -> Result<SheafTerm, Error> {
    let (sa, ma) = match a {
        SheafTerm::Zero => return Ok(SheafTerm::Zero),
        SheafTerm::Term {
            support,
            multiplicity,
        } => (support, multiplicity),
    };
    let (sb, mb) = match b {
        SheafTerm::Zero => return Ok(SheafTerm::Zero),
        SheafTerm::Term {
            support,
            multiplicity,
        } => (support, multiplicity),
    };
    let support = sa.intersect(sb)?;
    let mut multiplicity = Multiplicity::new();
    for (da, ra) in ma {
        for (db, rb) in mb {
            *multiplicity.entry(da + db).or_insert(0) += ra * rb;
        }
    }
    Ok(SheafTerm::Term {
        support,
        multiplicity,
    })
}

/// Contribution of a whole chart with the given affine and torus weights.
///
/// Every affine weight row must be nonzero.  The support is the kernel of the
/// torus weight matrix and the internal rank doubles for each zero torus row.
pub fn hh_chart(weights: &ChartWeights) -> Result<SheafTerm, Error> {
    let n = weights.affine.cols();
    if weights.torus.cols() != n {
        return Err(Error::AmbientRankMismatch {
            left: n,
            right: weights.torus.cols(),
        });
    }
    let mut acc = SheafTerm::unit(n);
    for i in 0..weights.affine.rows() {
        let factor = hh_affine_factor(&weights.affine.row_vec(i))?;
        acc = kunneth_tensor(&acc, &factor)?;
    }
    for i in 0..weights.torus.rows() {
        let factor = hh_torus_factor(&weights.torus.row_vec(i));
        acc = kunneth_tensor(&acc, &factor)?;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::int;
    use alloc::vec::Vec;

    fn row(vals: &[i64]) -> Vec<Int> {
        vals.iter().map(|&v| int(v)).collect()
    }

    fn mult(pairs: &[(usize, u64)]) -> Multiplicity {
        pairs.iter().copied().collect()
    }

    #[test]
    fn affine_factor_zero_weight_rejected() {
        assert!(matches!(
            hh_affine_factor(&row(&[0, 0])),
            Err(Error::InfiniteRank)
        ));
    }

    #[test]
    fn affine_factor_full_support() {
        let t = hh_affine_factor(&row(&[2, 0])).unwrap();
        let s = t.support().unwrap();
        assert!(s.is_full());
        assert_eq!(s.ambient_rank(), 2);
        assert_eq!(t.multiplicity().unwrap(), &mult(&[(0, 1)]));
    }

    #[test]
    fn torus_factor_kernel_support() {
        let t = hh_torus_factor(&row(&[2]));
        let s = t.support().unwrap();
        assert_eq!(s.dimension(), 0);
        assert_eq!(s.component_count(), int(4));
        assert_eq!(t.multiplicity().unwrap(), &mult(&[(0, 1)]));
    }

    #[test]
    fn torus_factor_zero_weight_is_circle() {
        let t = hh_torus_factor(&row(&[0, 0]));
        assert!(t.support().unwrap().is_full());
        assert_eq!(t.multiplicity().unwrap(), &mult(&[(0, 1), (1, 1)]));
    }

    #[test]
    fn tensor_zero_absorbs() {
        let t = hh_torus_factor(&row(&[1]));
        assert!(kunneth_tensor(&SheafTerm::Zero, &t).unwrap().is_zero());
        assert!(kunneth_tensor(&t, &SheafTerm::Zero).unwrap().is_zero());
    }

    #[test]
    fn tensor_convolves_multiplicities() {
        let c = hh_torus_factor(&row(&[0]));
        let t = kunneth_tensor(&c, &c).unwrap();
        assert_eq!(t.multiplicity().unwrap(), &mult(&[(0, 1), (1, 2), (2, 1)]));
        assert!(t.support().unwrap().is_full());
    }

    #[test]
    fn tensor_intersects_supports() {
        let a = hh_torus_factor(&row(&[2, 0]));
        let b = hh_torus_factor(&row(&[0, 3]));
        let t = kunneth_tensor(&a, &b).unwrap();
        let s = t.support().unwrap();
        assert_eq!(s.dimension(), 0);
        assert_eq!(s.component_count(), int(36));
    }

    #[test]
    fn tensor_rank_mismatch_rejected() {
        let a = hh_torus_factor(&row(&[1]));
        let b = hh_torus_factor(&row(&[1, 0]));
        assert!(matches!(
            kunneth_tensor(&a, &b),
            Err(Error::AmbientRankMismatch { .. })
        ));
    }

    #[test]
    fn chart_mixed_weights() {
        let weights = ChartWeights {
            affine: IntMatrix::from_i64(2, &[&[1, 0]]),
            torus: IntMatrix::from_i64(2, &[&[0, 2]]),
        };
        let t = hh_chart(&weights).unwrap();
        let s = t.support().unwrap();
        assert_eq!(s.dimension(), 1);
        assert_eq!(s.component_count(), int(4));
        assert_eq!(t.multiplicity().unwrap(), &mult(&[(0, 1)]));
    }

    #[test]
    fn chart_rejects_zero_affine_row() {
        let weights = ChartWeights {
            affine: IntMatrix::from_i64(2, &[&[0, 0]]),
            torus: IntMatrix::zero(0, 2),
        };
        assert!(matches!(hh_chart(&weights), Err(Error::InfiniteRank)));
    }

    #[test]
    fn chart_of_bare_torus() {
        let weights = ChartWeights {
            affine: IntMatrix::zero(0, 1),
            torus: IntMatrix::from_i64(1, &[&[1]]),
        };
        let t = hh_chart(&weights).unwrap();
        let s = t.support().unwrap();
        assert_eq!(s.dimension(), 0);
        assert_eq!(s.component_count(), int(1));
        assert_eq!(t.multiplicity().unwrap(), &mult(&[(0, 1)]));
    }
}
