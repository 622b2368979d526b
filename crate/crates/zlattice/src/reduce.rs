//! Reduction membership tests (Minkowski for n ≤ 4, Siegel domains, HKZ)
//! and HKZ reduction in small dimension.

use crate::gso::gso_from_b_gram;
use crate::lattice::unimodular_completion;
use crate::lll::lll_reduce;
use crate::{short_vectors, successive_minima, Lattice, LatticeError, Result};
use exactnum::{rat, Int, Rat};
use num_traits::{One, Signed, Zero};
use quadspace::{GramMatrix, Mat};

/// Minkowski reduction test for n ≤ 4, where the defining infinitely many
/// inequalities collapse to a finite set: a nondecreasing positive diagonal,
/// and Q(x) ≥ Q(e_j) for every x with x_i ∈ {0,±1} below position j, x_j = 1
/// and zeros above. Larger n is rejected — no comparably small condition
/// set is implemented here.
pub fn is_minkowski_reduced(g: &GramMatrix) -> Result<bool> {
    let n = g.dim();
    if n > 4 {
        return Err(LatticeError::UnsupportedDimension { dim: n, max: 4 });
    }
    let b_gram = g.mat().scale(&rat(1, 2));
    gso_from_b_gram(&b_gram)?; // positive definiteness with minor index
    for i in 0..n - 1 {
        if g.entry(i, i) > g.entry(i + 1, i + 1) {
            return Ok(false);
        }
    }
    for j in 0..n {
        let qj = g.entry(j, j) / rat(2, 1);
        let mut pattern = vec![0usize; j];
        loop {
            let mut x = vec![Rat::zero(); n];
            for (i, &d) in pattern.iter().enumerate() {
                x[i] = match d {
                    0 => Rat::zero(),
                    1 => Rat::one(),
                    _ => -Rat::one(),
                };
            }
            x[j] = Rat::one();
            if g.q(&x) < qj {
                return Ok(false);
            }
            // Next base-3 pattern.
            let mut carry = true;
            for d in pattern.iter_mut() {
                if carry {
                    *d += 1;
                    carry = *d == 3;
                    if carry {
                        *d = 0;
                    }
                }
            }
            if carry || j == 0 {
                break;
            }
        }
    }
    Ok(true)
}

/// Membership in the Siegel domain 𝒮(δ, ε): Gram–Schmidt values satisfy
/// h_j ≤ δ·h_{j+1} and all coefficients |c_{ij}| ≤ ε.
pub fn is_siegel_member(g: &GramMatrix, delta: &Rat, eps: &Rat) -> Result<bool> {
    let (h, c) = gso_from_b_gram(&g.mat().scale(&rat(1, 2)))?;
    let n = h.len();
    for j in 0..n.saturating_sub(1) {
        if &h[j] > &(delta * &h[j + 1]) {
            return Ok(false);
        }
    }
    for j in 0..n {
        for i in 0..j {
            if c[(i, j)].abs() > *eps {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// B-Gram of the lattice p̃_{j−1}(Λ) spanned by the projections of the basis
/// vectors v_j,…,v_n orthogonally to the first j − 1.
fn projected_b_gram(h: &[Rat], c: &Mat, j: usize) -> Mat {
    let n = h.len();
    let k = n - j;
    let coeff = |t: usize, a: usize| {
        if t == a {
            Rat::one()
        } else {
            c[(j + t, j + a)].clone()
        }
    };
    let mut p = Mat::zero(k, k);
    for a in 0..k {
        for b in 0..=a {
            let mut s = Rat::zero();
            for t in 0..=b.min(a) {
                s += &h[j + t] * coeff(t, a) * coeff(t, b);
            }
            p[(a, b)] = s.clone();
            p[(b, a)] = s;
        }
    }
    p
}

/// Hermite–Korkine–Zolotarev test: size-reduced, and every h_j is the
/// minimum of the projected lattice at stage j.
pub fn is_hkz(g: &GramMatrix) -> Result<bool> {
    let (h, c) = gso_from_b_gram(&g.mat().scale(&rat(1, 2)))?;
    let n = h.len();
    let half = rat(1, 2);
    for j in 0..n {
        for i in 0..j {
            if c[(i, j)].abs() > half {
                return Ok(false);
            }
        }
    }
    for j in 0..n {
        let p = projected_b_gram(&h, &c, j);
        let proj = Lattice::from_gram(GramMatrix::new(p.scale(&rat(2, 1))).expect("symmetric"));
        let ball = short_vectors(&proj, &h[j])?;
        if ball.iter().any(|v| v.q < h[j]) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Produce an HKZ-reduced basis (dimension ≤ 6): at every stage install a
/// shortest vector of the projected lattice, complete to a basis, and
/// finish with a size-reduction pass. The final pass is LLL, which cannot
/// swap anything because an HKZ basis satisfies the exchange condition at
/// every α ≤ 1.
pub fn hkz_reduce(l: &Lattice) -> Result<(Lattice, Mat)> {
    let n = l.rank();
    if n > 6 {
        return Err(LatticeError::UnsupportedDimension { dim: n, max: 6 });
    }
    let (mut cur, mut u) = lll_reduce(l, &rat(3, 4))?;
    for j in 0..n {
        let (h, c) = gso_from_b_gram(&cur.gram().mat().scale(&rat(1, 2)))?;
        let p = projected_b_gram(&h, &c, j);
        let proj = Lattice::from_gram(GramMatrix::new(p.scale(&rat(2, 1))).expect("symmetric"));
        let ball = short_vectors(&proj, &h[j])?;
        let best = ball.first().expect("the projected basis vector itself is in the ball");
        // A shortest vector has coprime coefficients, so it extends to a
        // basis of the trailing block.
        let w = unimodular_completion(&best.coords);
        let mut full = Mat::identity(n);
        for a in 0..n - j {
            for b in 0..n - j {
                full[(j + a, j + b)] = w[(a, b)].clone();
            }
        }
        u = &u * &full;
        cur = Lattice::new(l.ambient().clone(), l.basis() * &u)?;
    }
    let (reduced, u2) = lll_reduce(&cur, &rat(3, 4))?;
    Ok((reduced, &u * &u2))
}

/// Can the given successive-minimum witnesses (j ≤ n ≤ 3, basis
/// coordinates) be extended to a Minkowski-reduced basis? Complete
/// positions j+1..n from vectors of exactly the right norms — in rank ≤ 4 a
/// Minkowski basis realizes every successive minimum on the nose — and test
/// each completion.
pub fn extends_to_minkowski_reduced(l: &Lattice, witnesses: &[Vec<Int>]) -> Result<bool> {
    let n = l.rank();
    if n > 3 {
        return Err(LatticeError::UnsupportedDimension { dim: n, max: 3 });
    }
    let j = witnesses.len();
    assert!(j <= n, "more witnesses than the rank");
    let minima = successive_minima(l)?;
    let pools: Vec<Vec<Vec<Int>>> = (j..n)
        .map(|pos| {
            short_vectors(l, &minima.mu[pos]).map(|ball| {
                ball.into_iter()
                    .filter(|v| v.q == minima.mu[pos])
                    .map(|v| v.coords)
                    .collect()
            })
        })
        .collect::<Result<_>>()?;
    let mut choice = vec![0usize; pools.len()];
    loop {
        let mut cols: Vec<Vec<Rat>> = witnesses
            .iter()
            .map(|w| w.iter().map(|c| Rat::from_integer(c.clone())).collect())
            .collect();
        for (pool, &pick) in pools.iter().zip(&choice) {
            if pool.is_empty() {
                return Ok(false);
            }
            cols.push(pool[pick].iter().map(|c| Rat::from_integer(c.clone())).collect());
        }
        let t = Mat::from_cols(cols);
        if t.det().abs().is_one() && is_minkowski_reduced(&l.gram().congruent_by(&t))? {
            return Ok(true);
        }
        // Advance the product counter over the pools.
        let mut done = true;
        for (digit, pool) in choice.iter_mut().zip(&pools) {
            *digit += 1;
            if *digit < pool.len() {
                done = false;
                break;
            }
            *digit = 0;
        }
        if done {
            return Ok(false);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use exactnum::{int, rat_int};

    #[test]
    fn identity_grams_are_minkowski_reduced() {
        for n in 1..=4 {
            let g = GramMatrix::from_diag_b(&vec![rat_int(2); n]);
            assert!(is_minkowski_reduced(&g).unwrap());
        }
        let g5 = GramMatrix::from_diag_b(&vec![rat_int(2); 5]);
        assert!(matches!(
            is_minkowski_reduced(&g5),
            Err(LatticeError::UnsupportedDimension { dim: 5, max: 4 })
        ));
    }

    #[test]
    fn unsorted_diagonal_is_not_reduced() {
        let g = GramMatrix::from_diag_b(&[rat_int(4), rat_int(2)]);
        assert!(!is_minkowski_reduced(&g).unwrap());
    }

    #[test]
    fn large_off_diagonal_is_not_reduced() {
        // Q = x² + 2xy + 2y² has Q(−1,1) = 1 < Q(e₂) = 2.
        let g = GramMatrix::from_b_rows(&[&[2, 2], &[2, 4]]);
        assert!(!is_minkowski_reduced(&g).unwrap());
        // |2a_{ij}| ≤ a_{ii} holds after reducing: x² + y².
        let r = GramMatrix::from_b_rows(&[&[2, 0], &[0, 2]]);
        assert!(is_minkowski_reduced(&r).unwrap());
    }

    #[test]
    fn hexagonal_gram_is_reduced() {
        assert!(is_minkowski_reduced(&catalog::a_lattice(2).gram()).unwrap());
    }

    #[test]
    fn siegel_domain_membership() {
        let hex = catalog::a_lattice(2).gram();
        assert!(is_siegel_member(&hex, &rat(4, 3), &rat(1, 2)).unwrap());
        // h = (1, 1/8): fails h₁ ≤ (4/3)h₂.
        let squashed = GramMatrix::from_diag_b(&[rat_int(2), rat(1, 4)]);
        assert!(!is_siegel_member(&squashed, &rat(4, 3), &rat(1, 2)).unwrap());
    }

    #[test]
    fn hkz_detects_a_misordered_basis() {
        let bad = GramMatrix::from_b_rows(&[&[8, 0], &[0, 2]]);
        assert!(!is_hkz(&bad).unwrap());
        let good = GramMatrix::from_b_rows(&[&[2, 0], &[0, 8]]);
        assert!(is_hkz(&good).unwrap());
    }

    #[test]
    fn hkz_reduce_fixes_the_misordered_basis() {
        let l = Lattice::from_gram(GramMatrix::from_b_rows(&[&[8, 0], &[0, 2]]));
        let (red, u) = hkz_reduce(&l).unwrap();
        assert!(is_hkz(&red.gram()).unwrap());
        assert!(red.same_lattice(&l));
        assert_eq!(u.det().abs(), rat_int(1));
        assert!(is_siegel_member(&red.gram(), &rat(4, 3), &rat(1, 2)).unwrap());
    }

    #[test]
    fn e8_cartan_basis_is_hkz() {
        // All h_j ≥ … the root basis of E8 happens to be HKZ-reduced.
        let (red, _) = hkz_reduce(&catalog::a_lattice(3)).unwrap();
        assert!(is_hkz(&red.gram()).unwrap());
        assert!(is_hkz(&catalog::a_lattice(2).gram()).unwrap());
    }

    #[test]
    fn dimension_guard_on_hkz_reduce() {
        assert!(matches!(
            hkz_reduce(&catalog::i_lattice(7)),
            Err(LatticeError::UnsupportedDimension { dim: 7, max: 6 })
        ));
    }

    #[test]
    fn witnesses_extend_in_rank_two() {
        let l = catalog::a_lattice(2);
        let m = successive_minima(&l).unwrap();
        assert!(extends_to_minkowski_reduced(&l, &m.witnesses[..1]).unwrap());
        assert!(extends_to_minkowski_reduced(&l, &m.witnesses).unwrap());
    }

    #[test]
    fn dependent_witnesses_do_not_extend() {
        let l = catalog::i_lattice(2);
        // Twice the same direction can never be part of a basis.
        let w = vec![vec![int(1), int(0)], vec![int(-1), int(0)]];
        assert!(!extends_to_minkowski_reduced(&l, &w).unwrap());
    }
}
