//! Property tests for elliptic points, annihilators, and subgroup schemes.

use ellfan_core::epoints::{
    annihilator_lattice, evaluate_character, perturb, torsion_order, EllipticPoint, Order,
    Symbol, SymbolGen, TorusPoint,
};
use ellfan_core::lattice::{row_lattice_contains, IntMatrix};
use ellfan_core::subgroups::SubgroupScheme;
use ellfan_core::{int, rat, Int};
use proptest::prelude::*;

#[derive(Debug, Clone)]
struct CoordSpec {
    tor_a: (i64, i64),
    tor_b: (i64, i64),
    sym: Option<(u8, i64, i64)>,
}

fn coord_strategy() -> impl Strategy<Value = CoordSpec> {
    (
        (0i64..6, 1i64..=6),
        (0i64..6, 1i64..=6),
        proptest::option::of((0u8..2, -2i64..=2, 1i64..=2)),
    )
        .prop_map(|(tor_a, tor_b, sym)| CoordSpec { tor_a, tor_b, sym })
}

fn build_point(coords: &[CoordSpec]) -> TorusPoint {
    let names = ["g1", "g2"];
    TorusPoint::new(
        coords
            .iter()
            .map(|c| {
                let mut generic = std::collections::BTreeMap::new();
                if let Some((which, num, den)) = c.sym {
                    let coeff = rat(num, den);
                    if num != 0 {
                        generic.insert(Symbol::new(names[which as usize]), coeff);
                    }
                }
                EllipticPoint::new(
                    rat(c.tor_a.0, c.tor_a.1),
                    rat(c.tor_b.0, c.tor_b.1),
                    generic,
                )
            })
            .collect(),
    )
}

fn point_strategy(rank: usize) -> impl Strategy<Value = TorusPoint> {
    proptest::collection::vec(coord_strategy(), rank).prop_map(|c| build_point(&c))
}

fn char_matrix(rows: usize, cols: usize, span: i64) -> impl Strategy<Value = IntMatrix> {
    proptest::collection::vec(proptest::collection::vec(-span..=span, cols), rows).prop_map(
        move |rows| {
            let rows: Vec<Vec<Int>> =
                rows.into_iter().map(|r| r.into_iter().map(int).collect()).collect();
            IntMatrix::from_rows(cols, rows).unwrap()
        },
    )
}

proptest! {
    #[test]
    fn character_evaluation_is_linear(
        e in point_strategy(2),
        w1 in proptest::collection::vec(-4i64..=4, 2),
        w2 in proptest::collection::vec(-4i64..=4, 2),
    ) {
        let w1: Vec<Int> = w1.into_iter().map(int).collect();
        let w2: Vec<Int> = w2.into_iter().map(int).collect();
        let sum: Vec<Int> = w1.iter().zip(&w2).map(|(a, b)| a + b).collect();
        let lhs = evaluate_character(&sum, &e).unwrap();
        let rhs = evaluate_character(&w1, &e)
            .unwrap()
            .add(&evaluate_character(&w2, &e).unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn annihilator_characterizes_vanishing(e in point_strategy(2)) {
        let ann = annihilator_lattice(&e);
        // every lattice row vanishes at the point
        for i in 0..ann.rows() {
            prop_assert!(evaluate_character(&ann.row_vec(i), &e).unwrap().is_identity());
        }
        // and over a small window the lattice is exactly the vanishing set
        for a in -4i64..=4 {
            for b in -4i64..=4 {
                let w = vec![int(a), int(b)];
                let vanishes = evaluate_character(&w, &e).unwrap().is_identity();
                let contained = row_lattice_contains(&ann, &w).unwrap();
                prop_assert_eq!(vanishes, contained, "w = ({}, {})", a, b);
            }
        }
    }

    #[test]
    fn torsion_points_have_exact_order(num in 0i64..12, den in 1i64..=12) {
        let e = EllipticPoint::from_torsion(rat(num, den), rat(0, 1));
        match torsion_order(&e) {
            Order::Finite(n) => {
                let killed = e.mul_int(&n);
                prop_assert!(killed.is_identity());
                // no smaller positive multiple dies
                let mut k = Int::from(1u32);
                while &k < &n {
                    prop_assert!(!e.mul_int(&k).is_identity());
                    k += 1;
                }
            }
            Order::Infinite => prop_assert!(false, "pure torsion point reported infinite"),
        }
    }

    #[test]
    fn perturbation_preserves_subgroup_characters(
        e in point_strategy(2),
        w in char_matrix(2, 2, 3),
    ) {
        let z = SubgroupScheme::kernel_of_characters(w.clone());
        let mut gen = SymbolGen::new();
        gen.reserve_point(&e);
        let x = perturb(&e, &z, &mut gen).unwrap();
        prop_assert_eq!(x.rank(), e.rank());
        for i in 0..w.rows() {
            let before = evaluate_character(&w.row_vec(i), &e).unwrap();
            let after = evaluate_character(&w.row_vec(i), &x).unwrap();
            prop_assert_eq!(before, after);
        }
    }

    #[test]
    fn representatives_round_trip_their_labels(w in char_matrix(2, 2, 3)) {
        let z = SubgroupScheme::kernel_of_characters(w);
        let labels = z.component_labels();
        prop_assert_eq!(Int::from(labels.len() as u64), z.component_count());
        let mut gen = SymbolGen::new();
        for label in labels.iter().take(12) {
            let rep = z.component_representative(label, &mut gen).unwrap();
            prop_assert!(z.contains_point(&rep).unwrap());
            let back = z.component_index(&rep).unwrap();
            prop_assert_eq!(&back, label);
        }
    }

    #[test]
    fn intersection_is_contained_in_both(
        w1 in char_matrix(1, 2, 3),
        w2 in char_matrix(1, 2, 3),
    ) {
        let a = SubgroupScheme::kernel_of_characters(w1);
        let b = SubgroupScheme::kernel_of_characters(w2);
        let c = a.intersect(&b).unwrap();
        prop_assert!(a.contains(&c).unwrap());
        prop_assert!(b.contains(&c).unwrap());
        prop_assert!(SubgroupScheme::full(2).contains(&a).unwrap());
    }

    #[test]
    fn row_operations_preserve_the_scheme(
        w in char_matrix(2, 2, 3),
        k in -3i64..=3,
    ) {
        // add a multiple of the first row to the second
        let mut rows = vec![w.row_vec(0), w.row_vec(1)];
        for j in 0..2 {
            let bump = int(k) * &rows[0][j];
            rows[1][j] += bump;
        }
        let w2 = IntMatrix::from_rows(2, rows).unwrap();
        let a = SubgroupScheme::kernel_of_characters(w.clone());
        let b = SubgroupScheme::kernel_of_characters(w2);
        prop_assert!(a == b);
        // the canonical conormal bases agree exactly
        prop_assert_eq!(a.conormal_space(), b.conormal_space());
    }
}
