//! Pins the invariant-based local isotropy test to an exhaustive search for
//! primitive zeros modulo p^k.
//!
//! For a diagonal form Σ aᵢxᵢ² a primitive solution mod p^k with
//! k = 1 + 2·max v_p(2aᵢ) lifts to ℤ_p by Newton's lemma (some coordinate
//! keeps a partial derivative of minimal valuation), and conversely any
//! p-adic zero reduces; so the search below is an exact oracle.

use quadspace::{is_isotropic, GramMatrix, Scope};
use exactnum::Place;

fn val_p(mut a: i64, p: i64) -> u32 {
    assert!(a != 0);
    let mut v = 0;
    while a % p == 0 {
        a /= p;
        v += 1;
    }
    v
}

// Values of Σ aᵢxᵢ² over all x in (ℤ/m)^len, split into "any vector" and
// "some coordinate is a p-unit" tables.
fn half_tables(coeffs: &[i64], p: i64, m: i64) -> (Vec<bool>, Vec<bool>) {
    let mm = m as usize;
    let mut all = vec![false; mm];
    let mut prim = vec![false; mm];
    let n = coeffs.len();
    if n == 0 {
        all[0] = true;
        return (all, prim);
    }
    let sq: Vec<Vec<i64>> = coeffs
        .iter()
        .map(|a| (0..m).map(|x| (a.rem_euclid(m) * (x * x % m)) % m).collect())
        .collect();
    let mut x = vec![0i64; n];
    loop {
        let mut val = 0i64;
        let mut primitive = false;
        for i in 0..n {
            val = (val + sq[i][x[i] as usize]) % m;
            primitive |= x[i] % p != 0;
        }
        all[val as usize] = true;
        if primitive {
            prim[val as usize] = true;
        }
        let mut i = n;
        loop {
            if i == 0 {
                return (all, prim);
            }
            x[i - 1] += 1;
            if x[i - 1] == m {
                x[i - 1] = 0;
                i -= 1;
            } else {
                break;
            }
        }
    }
}

fn isotropic_by_search(coeffs: &[i64], p: i64) -> bool {
    let t = coeffs.iter().map(|a| val_p(2 * a, p)).max().expect("nonempty");
    let m = p.pow(1 + 2 * t);
    let (a1, a2) = coeffs.split_at(coeffs.len() / 2);
    let (all1, prim1) = half_tables(a1, p, m);
    let (all2, prim2) = half_tables(a2, p, m);
    (0..m as usize).any(|v| {
        let w = (m as usize - v) % m as usize;
        (prim1[v] && all2[w]) || (all1[v] && prim2[w])
    })
}

const COEFFS: [i64; 8] = [1, -1, 2, -2, 3, -3, 5, -5];

fn run_grid(p: i64) {
    let place = Place::at(p);
    for dim in 1..=4usize {
        let mut idx = vec![0usize; dim];
        loop {
            let coeffs: Vec<i64> = idx.iter().map(|&i| COEFFS[i]).collect();
            let g = GramMatrix::from_q_ints(&coeffs);
            let got = is_isotropic(&g, &Scope::Local(place.clone())).expect("regular form");
            let expected = isotropic_by_search(&coeffs, p);
            assert_eq!(got, expected, "isotropy mismatch for {coeffs:?} at p = {p}");
            let mut i = dim;
            loop {
                if i == 0 {
                    break;
                }
                idx[i - 1] += 1;
                if idx[i - 1] == COEFFS.len() {
                    idx[i - 1] = 0;
                    i -= 1;
                } else {
                    break;
                }
            }
            if i == 0 {
                break;
            }
        }
    }
}

#[test]
fn exhaustive_search_agrees_at_2() {
    run_grid(2);
}

#[test]
fn exhaustive_search_agrees_at_3() {
    run_grid(3);
}

#[test]
fn exhaustive_search_agrees_at_5() {
    run_grid(5);
}

#[test]
fn exhaustive_search_agrees_at_7() {
    run_grid(7);
}
