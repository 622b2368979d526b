//! The dimension-mod-8 relation between the Hasse invariant and the
//! Clifford–Witt invariant, checked place-by-place on random diagonal forms,
//! plus the explicit low-dimensional algebra isomorphisms the recursion
//! rests on.

use clifford::{
    clifford_witt_invariant, cw_hasse_correction, quaternion_class, BrauerClass2,
    CliffordElement,
};
use exactnum::{rat_int, Rat};
use num_traits::One;
use quadspace::{invariants, GramMatrix};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeSet;

fn hasse_class(coeffs: &[Rat]) -> BrauerClass2 {
    let g = GramMatrix::from_q_diag(coeffs);
    let inv = invariants(&g).expect("regular diagonal form");
    let mut set = BTreeSet::new();
    for v in &inv.relevant {
        if inv.hasse_at(v) == -1 {
            set.insert(v.clone());
        }
    }
    BrauerClass2::new(set).expect("product formula forces even cardinality")
}

#[test]
fn hasse_equals_cw_times_correction_on_random_forms() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_c1ff);
    for _ in 0..200 {
        let dim = rng.gen_range(1..=5);
        let coeffs: Vec<Rat> = (0..dim)
            .map(|_| {
                let mut c = 0i64;
                while c == 0 {
                    c = rng.gen_range(-10..=10);
                }
                rat_int(c)
            })
            .collect();
        let det: Rat = coeffs.iter().fold(Rat::one(), |p, a| p * a);
        let cw = clifford_witt_invariant(&coeffs).unwrap();
        let corr = cw_hasse_correction(dim, &det).unwrap();
        assert_eq!(
            cw.product(&corr),
            hasse_class(&coeffs),
            "relation fails for {coeffs:?}"
        );
    }
}

#[test]
fn every_dim_mod_8_branch_is_exercised() {
    // Deterministic forms covering dims 1..=8 so each branch of the table
    // appears at least once.
    for dim in 1..=8usize {
        let coeffs: Vec<Rat> = (0..dim).map(|i| rat_int([3, -5, 7, -1][i % 4])).collect();
        let det: Rat = coeffs.iter().fold(Rat::one(), |p, a| p * a);
        let cw = clifford_witt_invariant(&coeffs).unwrap();
        let corr = cw_hasse_correction(dim, &det).unwrap();
        assert_eq!(cw.product(&corr), hasse_class(&coeffs), "dim {dim}");
    }
}

#[test]
fn even_clifford_of_ternary_form_is_the_expected_quaternion_algebra() {
    // For ⟨a,b,c⟩ the elements u = e₁e₃, w = e₂e₃ of C₀ satisfy u² = −ac,
    // w² = −bc, uw = −wu: the defining relations of (−ac, −bc).
    for [a, b, c] in [[1i64, 1, 1], [2, -3, 5], [-7, 2, -10]] {
        let form = vec![rat_int(a), rat_int(b), rat_int(c)];
        let e1 = CliffordElement::generator(&form, 0);
        let e2 = CliffordElement::generator(&form, 1);
        let e3 = CliffordElement::generator(&form, 2);
        let u = e1.mul(&e3).unwrap();
        let w = e2.mul(&e3).unwrap();
        assert_eq!(
            u.mul(&u).unwrap(),
            CliffordElement::scalar(&form, &rat_int(-a * c))
        );
        assert_eq!(
            w.mul(&w).unwrap(),
            CliffordElement::scalar(&form, &rat_int(-b * c))
        );
        let anti = u.mul(&w).unwrap().add(&w.mul(&u).unwrap()).unwrap();
        assert!(anti.is_zero());
        // And the ramification sets agree with the recursion's output.
        assert_eq!(
            clifford_witt_invariant(&form).unwrap(),
            quaternion_class(&rat_int(-a * c), &rat_int(-b * c)).unwrap()
        );
    }
}

#[test]
fn cw_is_a_congruence_invariant() {
    // Two diagonalizations of congruent forms give the same class.
    use quadspace::{diagonalize, Mat};
    let g = GramMatrix::from_q_ints(&[3, -5, 7]);
    let t = Mat::from_int_rows(&[&[1, 2, 0], &[0, 1, -1], &[1, 0, 1]]);
    let h = g.congruent_by(&t);
    let two = rat_int(2);
    let (d1, _) = diagonalize(&g).unwrap();
    let (d2, _) = diagonalize(&h).unwrap();
    let q1: Vec<Rat> = d1.iter().map(|x| x / &two).collect();
    let q2: Vec<Rat> = d2.iter().map(|x| x / &two).collect();
    assert_eq!(
        clifford_witt_invariant(&q1).unwrap(),
        clifford_witt_invariant(&q2).unwrap()
    );
}
