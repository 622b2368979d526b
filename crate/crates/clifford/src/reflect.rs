//! Constructive factorization of isometries into reflections, and the
//! spinor norm computed from such a factorization.
//!
//! The reflection in an anisotropic vector y is τ_y(x) = x − (b(x,y)/Q(y))·y.
//! Factorization follows the inductive proof of generation by symmetries:
//! find an anisotropic x, send φx back to x with one reflection when
//! Q(x − φx) ≠ 0 and with two (through −x) otherwise, then recurse on x^⊥.
//! This costs at most two reflections per dimension.

use crate::{CliffordError, Result};
use exactnum::primes::factor;
use exactnum::{Int, Rat};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use quadspace::{GramMatrix, Mat, QuadError};

/// Matrix of τ_y on the ambient coordinates of G.
fn reflection_matrix(g: &GramMatrix, y: &[Rat]) -> Mat {
    let n = g.dim();
    let qy = g.q(y);
    assert!(!qy.is_zero(), "reflection vector must be anisotropic");
    let mut m = Mat::identity(n);
    for j in 0..n {
        let mut e = vec![Rat::zero(); n];
        e[j] = Rat::one();
        let c = g.b(&e, y) / &qy;
        for i in 0..n {
            let sub = &c * &y[i];
            m[(i, j)] -= sub;
        }
    }
    m
}

/// Compose τ_{y₁}∘τ_{y₂}∘… as a matrix over the coordinates of G.
pub fn apply_reflections(g: &GramMatrix, ys: &[Vec<Rat>]) -> Mat {
    let mut m = Mat::identity(g.dim());
    for y in ys {
        m = &m * &reflection_matrix(g, y);
    }
    m
}

// Scale to a primitive integer vector with positive leading entry.
fn normalize_vector(y: &[Rat]) -> Vec<Rat> {
    let mut den = Int::one();
    for c in y {
        den = den.lcm(c.denom());
    }
    let ints: Vec<Int> = y.iter().map(|c| (c * Rat::from_integer(den.clone())).to_integer()).collect();
    let mut content = Int::zero();
    for c in &ints {
        content = content.gcd(c);
    }
    assert!(!content.is_zero(), "zero reflection vector");
    let lead_negative = ints
        .iter()
        .find(|c| !c.is_zero())
        .map(|c| c.is_negative())
        .unwrap_or(false);
    if lead_negative {
        content = -content;
    }
    ints.iter().map(|c| Rat::from_integer(c / &content)).collect()
}

fn candidates(n: usize) -> Vec<Vec<(usize, i64)>> {
    // Basis vectors, then eᵢ ± eⱼ, then eᵢ ± 2eⱼ: enough to always contain
    // an unfixed anisotropic vector for a regular form (an isotropic moved
    // basis vector pairs with some eⱼ, and at most two of the four shifts
    // eᵢ + t·eⱼ are isotropic or fixed).
    let mut out: Vec<Vec<(usize, i64)>> = (0..n).map(|i| vec![(i, 1)]).collect();
    for i in 0..n {
        for j in 0..n {
            if i < j {
                out.push(vec![(i, 1), (j, 1)]);
                out.push(vec![(i, 1), (j, -1)]);
            }
        }
    }
    for i in 0..n {
        for j in 0..n {
            if i != j {
                out.push(vec![(i, 1), (j, 2)]);
                out.push(vec![(i, 1), (j, -2)]);
            }
        }
    }
    out
}

fn factorize_recursive(g: &GramMatrix, phi: &Mat) -> Vec<Vec<Rat>> {
    let n = g.dim();
    if n == 0 || *phi == Mat::identity(n) {
        return Vec::new();
    }
    let column = |m: &Mat, x: &[Rat]| m.apply(x);

    let mut chosen: Option<(Vec<Rat>, bool)> = None;
    let cands = candidates(n);
    // First pass: one reflection suffices when Q(x − φx) ≠ 0.
    for cand in &cands {
        let mut x = vec![Rat::zero(); n];
        for &(i, c) in cand {
            x[i] = Rat::from_integer(Int::from(c));
        }
        if g.q(&x).is_zero() {
            continue;
        }
        let fx = column(phi, &x);
        let diff: Vec<Rat> = x.iter().zip(&fx).map(|(a, b)| a - b).collect();
        if !g.q(&diff).is_zero() {
            chosen = Some((x, true));
            break;
        }
    }
    // Second pass: route through −x with two reflections.
    if chosen.is_none() {
        for cand in &cands {
            let mut x = vec![Rat::zero(); n];
            for &(i, c) in cand {
                x[i] = Rat::from_integer(Int::from(c));
            }
            if g.q(&x).is_zero() {
                continue;
            }
            let fx = column(phi, &x);
            if fx != x {
                chosen = Some((x, false));
                break;
            }
        }
    }
    let Some((x, single)) = chosen else {
        unreachable!("a non-identity isometry of a regular form moves some anisotropic candidate")
    };

    let fx = column(phi, &x);
    let mut reflections: Vec<Vec<Rat>> = Vec::new();
    let mut psi = phi.clone();
    if single {
        let y: Vec<Rat> = x.iter().zip(&fx).map(|(a, b)| a - b).collect();
        let y = normalize_vector(&y);
        psi = &reflection_matrix(g, &y) * &psi;
        reflections.push(y);
    } else {
        // τ_{x+φx} sends φx to −x, then τ_x sends −x to x; the factorization
        // reads φ = τ_w ∘ τ_x ∘ ψ.
        let w: Vec<Rat> = x.iter().zip(&fx).map(|(a, b)| a + b).collect();
        let w = normalize_vector(&w);
        let xn = normalize_vector(&x);
        psi = &reflection_matrix(g, &xn) * &(&reflection_matrix(g, &w) * &psi);
        reflections.push(w);
        reflections.push(xn);
    }
    debug_assert_eq!(psi.apply(&x), x);
    if psi == Mat::identity(n) {
        return reflections;
    }

    // Recurse on x^⊥: ψ fixes x, hence stabilizes the complement.
    let mut row = Mat::zero(1, n);
    for j in 0..n {
        let mut e = vec![Rat::zero(); n];
        e[j] = Rat::one();
        row[(0, j)] = g.b(&x, &e);
    }
    let w_basis = row.kernel();
    let w = Mat::from_cols(w_basis.clone());
    let g_sub = g.congruent_by(&w);
    // Coordinates of ψW in the basis [W | x]: the x-component vanishes.
    let mut full_cols = w_basis;
    full_cols.push(x);
    let b_full = Mat::from_cols(full_cols);
    let b_inv = b_full.inverse().expect("basis with complement is invertible");
    let coords = &b_inv * &(&psi * &w);
    let mut psi_sub = Mat::zero(n - 1, n - 1);
    for i in 0..n - 1 {
        for j in 0..n - 1 {
            psi_sub[(i, j)] = coords[(i, j)].clone();
        }
    }
    for j in 0..n - 1 {
        debug_assert!(coords[(n - 1, j)].is_zero());
    }

    for y_sub in factorize_recursive(&g_sub, &psi_sub) {
        let y_amb = w.apply(&y_sub);
        reflections.push(normalize_vector(&y_amb));
    }
    reflections
}

/// Factor an isometry of a regular form into reflections:
/// φ = τ_{y₁} ∘ … ∘ τ_{y_r} with r ≤ 2·dim, each yᵢ a primitive integer
/// vector with positive leading entry.
pub fn reflection_factorization(phi: &Mat, g: &GramMatrix) -> Result<Vec<Vec<Rat>>> {
    let n = g.dim();
    if phi.rows() != n || phi.cols() != n {
        return Err(CliffordError::Quad(QuadError::DimensionMismatch(
            phi.rows(),
            n,
        )));
    }
    if !g.is_regular() {
        let radical_rank = n - g.mat().rank();
        return Err(CliffordError::Quad(QuadError::Degenerate { radical_rank }));
    }
    let transported = g.congruent_by(phi);
    for i in 0..n {
        for j in 0..n {
            if transported.entry(i, j) != g.entry(i, j) {
                return Err(CliffordError::NotIsometry { row: i, col: j });
            }
        }
    }
    Ok(factorize_recursive(g, phi))
}

/// The squarefree integer representing a nonzero rational modulo squares.
pub fn squarefree_part(r: &Rat) -> Result<Int> {
    if r.is_zero() {
        return Err(CliffordError::Num(exactnum::NumError::ZeroArgument));
    }
    let n = r.numer() * r.denom();
    let mut out = Int::one();
    for (p, e) in factor(&n.abs()) {
        if e % 2 == 1 {
            out *= p;
        }
    }
    if n.is_negative() {
        out = -out;
    }
    Ok(out)
}

/// Spinor norm of a rotation φ ∈ SO(G): the product of Q(yᵢ) over any
/// reflection factorization, as a squarefree integer modulo squares.
pub fn spinor_norm(phi: &Mat, g: &GramMatrix) -> Result<Rat> {
    if phi.det() == -Rat::one() {
        return Err(CliffordError::ImproperIsometry);
    }
    let ys = reflection_factorization(phi, g)?;
    let prod: Rat = ys.iter().map(|y| g.q(y)).fold(Rat::one(), |p, q| p * q);
    Ok(Rat::from_integer(squarefree_part(&prod)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use exactnum::{rat, rat_int};

    fn diag(b: &[i64]) -> GramMatrix {
        GramMatrix::from_diag_b(&b.iter().map(|&x| rat_int(x)).collect::<Vec<_>>())
    }

    #[test]
    fn identity_factors_into_nothing() {
        let g = diag(&[2, 4, 6]);
        assert!(reflection_factorization(&Mat::identity(3), &g).unwrap().is_empty());
    }

    #[test]
    fn coordinate_swap_is_one_reflection() {
        let g = diag(&[2, 2]);
        let swap = Mat::from_int_rows(&[&[0, 1], &[1, 0]]);
        let ys = reflection_factorization(&swap, &g).unwrap();
        assert_eq!(ys, vec![vec![rat_int(1), rat_int(-1)]]);
        assert_eq!(apply_reflections(&g, &ys), swap);
    }

    #[test]
    fn minus_identity_on_a_diagonal_plane() {
        let g = diag(&[2, 4]);
        let minus = Mat::from_int_rows(&[&[-1, 0], &[0, -1]]);
        let ys = reflection_factorization(&minus, &g).unwrap();
        assert_eq!(
            ys,
            vec![vec![rat_int(1), rat_int(0)], vec![rat_int(0), rat_int(1)]]
        );
        assert_eq!(apply_reflections(&g, &ys), minus);
        // θ(−Id) = Q(e₁)·Q(e₂) = 1·2 = 2 modulo squares.
        assert_eq!(spinor_norm(&minus, &g).unwrap(), rat_int(2));
    }

    #[test]
    fn hyperbolic_plane_scaling() {
        // (x, y) ↦ (3x, y/3) on Q = xy is a rotation with spinor norm 3.
        let g = GramMatrix::from_b_rows(&[&[0, 1], &[1, 0]]);
        let phi = Mat::from_rows(vec![
            vec![rat_int(3), rat_int(0)],
            vec![rat_int(0), rat(1, 3)],
        ]);
        let ys = reflection_factorization(&phi, &g).unwrap();
        assert!(ys.len() <= 4);
        assert_eq!(apply_reflections(&g, &ys), phi);
        assert_eq!(spinor_norm(&phi, &g).unwrap(), rat_int(3));
    }

    #[test]
    fn non_isometry_is_rejected_with_entry() {
        let g = diag(&[2, 4]);
        let m = Mat::from_int_rows(&[&[1, 1], &[0, 1]]);
        match reflection_factorization(&m, &g) {
            Err(CliffordError::NotIsometry { row: 0, col: 1 }) => {}
            other => panic!("expected NotIsometry at (0,1), got {other:?}"),
        }
    }

    #[test]
    fn improper_rotation_rejected_for_spinor_norm() {
        let g = diag(&[2, 2]);
        let swap = Mat::from_int_rows(&[&[0, 1], &[1, 0]]);
        assert!(matches!(
            spinor_norm(&swap, &g),
            Err(CliffordError::ImproperIsometry)
        ));
    }

    #[test]
    fn squarefree_parts() {
        assert_eq!(squarefree_part(&rat_int(18)).unwrap(), Int::from(2));
        assert_eq!(squarefree_part(&rat(4, 9)).unwrap(), Int::from(1));
        assert_eq!(squarefree_part(&rat(-8, 3)).unwrap(), Int::from(-6));
        assert_eq!(squarefree_part(&rat(1, 2)).unwrap(), Int::from(2));
        assert!(squarefree_part(&Rat::zero()).is_err());
    }

    #[test]
    fn scaling_the_form_preserves_spinor_norms() {
        let g = diag(&[2, 4, 6]);
        let scaled = g.scaled(&rat_int(5));
        // A rotation: −1 on the first two coordinates.
        let phi = Mat::from_int_rows(&[&[-1, 0, 0], &[0, -1, 0], &[0, 0, 1]]);
        assert_eq!(
            spinor_norm(&phi, &g).unwrap(),
            spinor_norm(&phi, &scaled).unwrap()
        );
    }
}
