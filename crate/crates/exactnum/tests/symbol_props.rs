//! Property tests for the symbol layer: symmetry, bimultiplicativity, the
//! product formula, and the agreement between square classes, the local
//! square test, and the Hilbert pairing.

use exactnum::symbols::{hilbert_product, hilbert_symbol, is_square_local};
use exactnum::{valuation, Int, Place, Rat, SquareClass, Valuation};
use proptest::prelude::*;

fn nonzero_rat() -> impl Strategy<Value = Rat> {
    (
        (-10_000i64..=10_000).prop_filter("nonzero", |n| *n != 0),
        1i64..=10_000,
    )
        .prop_map(|(n, d)| Rat::new(Int::from(n), Int::from(d)))
}

fn small_place() -> impl Strategy<Value = Place> {
    prop_oneof![
        Just(Place::Real),
        prop::sample::select(vec![2i64, 3, 5, 7, 11, 13]).prop_map(Place::at),
    ]
}

// Representatives of every square class of ℚ_v^×; the Hilbert pairing is
// nondegenerate, so a ∈ (ℚ_v^×)² iff it pairs to +1 with all of these.
fn class_reps(v: &Place) -> Vec<Rat> {
    let ints: Vec<i64> = match v {
        Place::Real => vec![1, -1],
        Place::Prime(p) if *p == Int::from(2) => vec![1, -1, 5, -5, 2, -2, 10, -10],
        Place::Prime(p) => {
            let p = i64::try_from(p).expect("small prime");
            let r = (2..).find(|r| {
                exactnum::legendre_symbol(&Int::from(*r), &Int::from(p)).unwrap() == -1
            });
            let r = r.expect("nonresidue exists");
            vec![1, r, p, r * p]
        }
    };
    ints.into_iter()
        .map(|n| Rat::from_integer(Int::from(n)))
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn hilbert_symmetric(a in nonzero_rat(), b in nonzero_rat(), v in small_place()) {
        prop_assert_eq!(
            hilbert_symbol(&a, &b, &v).unwrap(),
            hilbert_symbol(&b, &a, &v).unwrap()
        );
    }

    #[test]
    fn hilbert_bimultiplicative(
        a in nonzero_rat(),
        b in nonzero_rat(),
        c in nonzero_rat(),
        v in small_place()
    ) {
        let lhs = hilbert_symbol(&a, &(&b * &c), &v).unwrap();
        let rhs = hilbert_symbol(&a, &b, &v).unwrap() * hilbert_symbol(&a, &c, &v).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn product_formula(a in nonzero_rat(), b in nonzero_rat()) {
        prop_assert_eq!(hilbert_product(&a, &b).unwrap(), 1);
    }

    #[test]
    fn square_class_equality_is_ratio_square(
        a in nonzero_rat(),
        b in nonzero_rat(),
        v in small_place()
    ) {
        let same = SquareClass::of(&a, &v).unwrap() == SquareClass::of(&b, &v).unwrap();
        let ratio_square = is_square_local(&(&a / &b), &v).unwrap();
        prop_assert_eq!(same, ratio_square);
    }

    #[test]
    fn square_iff_pairs_trivially(a in nonzero_rat(), v in small_place()) {
        let all_trivial = class_reps(&v)
            .iter()
            .all(|u| hilbert_symbol(&a, u, &v).unwrap() == 1);
        prop_assert_eq!(is_square_local(&a, &v).unwrap(), all_trivial);
    }

    #[test]
    fn valuation_is_additive(a in nonzero_rat(), b in nonzero_rat()) {
        for p in [2i64, 3, 5] {
            let p = Int::from(p);
            let (va, vb) = (valuation(&a, &p), valuation(&b, &p));
            let (va, vb) = (va.expect_finite("a"), vb.expect_finite("b"));
            prop_assert_eq!(valuation(&(&a * &b), &p), Valuation::Finite(va + vb));
            let sum = &a + &b;
            if let Valuation::Finite(vs) = valuation(&sum, &p) {
                prop_assert!(vs >= va.min(vb));
            }
        }
    }
}
