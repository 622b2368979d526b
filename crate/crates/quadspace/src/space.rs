//! Diagonalization and the local–global machinery of quadratic spaces over ℚ:
//! invariants, isotropy, Witt decomposition, representation, and equivalence.
//!
//! All decisions at a finite place reduce to the invariant triple
//! (dim, det, Hasse) of the space, with the real place handled by signature.
//! The Hasse invariant here is s(V) = ∏_{i<j} (aᵢ, aⱼ)_v over a
//! diagonalization V ≅ ⟨a₁, …, a_n⟩ in **Q-coefficients** aᵢ = dᵢ/2.

use crate::gram::GramMatrix;
use crate::mat::Mat;
use crate::QuadError;
use exactnum::symbols::{hilbert_symbol, is_square_local};
use exactnum::{relevant_places, Int, Place, Rat, SquareClass};
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;

/// Where a question is asked: at one completion of ℚ, or over ℚ itself
/// (decided by local–global, checking every relevant place).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Scope {
    Local(Place),
    Global,
}

/// Diagonalize a regular symmetric form by congruence: returns the diagonal
/// b-entries (d₁, …, d_n) and an invertible T with TᵗGT = diag(d).
///
/// Pivoting is deterministic: use the first nonzero diagonal entry at or
/// after the current column, else add a later basis vector (the first with
/// nonzero pairing) to create one. Each output basis vector is scaled by the
/// denominator of its diagonal entry, so the dᵢ are integers when G is.
pub fn diagonalize(g: &GramMatrix) -> Result<(Vec<Rat>, Mat), QuadError> {
    let n = g.dim();
    let rank = g.mat().rank();
    if rank < n {
        return Err(QuadError::Degenerate {
            radical_rank: n - rank,
        });
    }
    let mut a = g.mat().clone();
    let mut t = Mat::identity(n);

    // Symmetric congruence operations, applied to rows and columns together.
    let col_add = |a: &mut Mat, t: &mut Mat, dst: usize, src: usize, f: &Rat| {
        // basis[dst] += f · basis[src]
        for i in 0..n {
            let x = &a[(i, src)] * f;
            a[(i, dst)] += x;
        }
        for j in 0..n {
            let x = &a[(src, j)] * f;
            a[(dst, j)] += x;
        }
        for i in 0..n {
            let x = &t[(i, src)] * f;
            t[(i, dst)] += x;
        }
    };
    let col_swap = |a: &mut Mat, t: &mut Mat, i: usize, j: usize| {
        for r in 0..n {
            let x = a[(r, i)].clone();
            a[(r, i)] = a[(r, j)].clone();
            a[(r, j)] = x;
        }
        for c in 0..n {
            let x = a[(i, c)].clone();
            a[(i, c)] = a[(j, c)].clone();
            a[(j, c)] = x;
        }
        for r in 0..n {
            let x = t[(r, i)].clone();
            t[(r, i)] = t[(r, j)].clone();
            t[(r, j)] = x;
        }
    };

    for i in 0..n {
        if a[(i, i)].is_zero() {
            if let Some(j) = (i + 1..n).find(|&j| !a[(j, j)].is_zero()) {
                col_swap(&mut a, &mut t, i, j);
            } else {
                // All later diagonal entries vanish; regularity guarantees
                // some pairing b(eᵢ, eⱼ) ≠ 0, and eᵢ += eⱼ makes
                // b(eᵢ, eᵢ) = 2·b(eᵢ, eⱼ) ≠ 0.
                let j = (i + 1..n)
                    .find(|&j| !a[(i, j)].is_zero())
                    .expect("regular form has a nonzero pairing");
                let one = Rat::one();
                col_add(&mut a, &mut t, i, j, &one);
            }
        }
        let inv = a[(i, i)].recip();
        for j in i + 1..n {
            if a[(i, j)].is_zero() {
                continue;
            }
            let f = -(&a[(i, j)] * &inv);
            col_add(&mut a, &mut t, j, i, &f);
        }
    }

    // Clear denominators: scaling basis vector i by c scales dᵢ by c².
    let mut d = Vec::with_capacity(n);
    for i in 0..n {
        let di = a[(i, i)].clone();
        let den = Rat::from_integer(di.denom().clone());
        for r in 0..n {
            t[(r, i)] *= &den;
        }
        d.push(&di * &(&den * &den));
    }
    Ok((d, t))
}

/// Basis of the radical rad_b = {x : b(x, V) = 0}; empty iff G is regular.
pub fn radical(g: &GramMatrix) -> Vec<Vec<Rat>> {
    g.mat().kernel()
}

/// The complete invariant data of a regular quadratic space over ℚ.
///
/// `det` is the space determinant (product of Q-coefficients of any
/// diagonalization, i.e. det(b)/2^n up to squares). Maps are stored on the
/// relevant places; accessors answer for arbitrary places, using the fact
/// that everything is trivial outside the support.
#[derive(Debug, Clone)]
pub struct SpaceInvariants {
    pub dim: usize,
    pub signature: (usize, usize),
    pub det: Rat,
    pub relevant: Vec<Place>,
    hasse: BTreeMap<Place, i32>,
    witt: BTreeMap<Place, usize>,
}

impl SpaceInvariants {
    /// Hasse invariant s_v; +1 automatically outside the relevant places.
    pub fn hasse_at(&self, v: &Place) -> i32 {
        self.hasse.get(v).copied().unwrap_or(1)
    }

    /// Square class of the determinant at a place.
    pub fn det_class_at(&self, v: &Place) -> SquareClass {
        SquareClass::of(&self.det, v).expect("regular space has nonzero det")
    }

    /// Witt index at a place.
    pub fn witt_index_at(&self, v: &Place) -> usize {
        if let Some(&w) = self.witt.get(v) {
            return w;
        }
        match v {
            Place::Real => self.signature.0.min(self.signature.1),
            Place::Prime(_) => {
                local_witt_index(self.dim, &self.det, self.hasse_at(v), v)
            }
        }
    }

    /// Equality as mathematical invariants (dim, signature, global det class,
    /// Hasse everywhere).
    pub fn same_as(&self, other: &SpaceInvariants) -> bool {
        if self.dim != other.dim || self.signature != other.signature {
            return false;
        }
        if !is_square_rational(&(&self.det / &other.det)) {
            return false;
        }
        let places: Vec<&Place> = self.relevant.iter().chain(&other.relevant).collect();
        places
            .into_iter()
            .all(|v| self.hasse_at(v) == other.hasse_at(v))
    }
}

impl PartialEq for SpaceInvariants {
    fn eq(&self, other: &Self) -> bool {
        self.same_as(other)
    }
}

/// Is a nonzero rational a square in ℚ (not merely locally somewhere)?
pub fn is_square_rational(r: &Rat) -> bool {
    if !r.is_positive() {
        return false;
    }
    let (n, d) = (r.numer(), r.denom());
    let sn = n.sqrt();
    let sd = d.sqrt();
    &sn * &sn == *n && &sd * &sd == *d
}

/// Compute the full invariant set of a regular space.
pub fn invariants(g: &GramMatrix) -> Result<SpaceInvariants, QuadError> {
    let (d, _) = diagonalize(g)?;
    let two = Rat::from_integer(Int::from(2));
    let a: Vec<Rat> = d.iter().map(|x| x / &two).collect();
    let n = a.len();
    let signature = (
        a.iter().filter(|x| x.is_positive()).count(),
        a.iter().filter(|x| x.is_negative()).count(),
    );
    let det: Rat = a.iter().fold(Rat::one(), |p, x| p * x);
    let relevant = relevant_places(&a);
    let mut hasse = BTreeMap::new();
    let mut witt = BTreeMap::new();
    for v in &relevant {
        let mut s = 1;
        for i in 0..n {
            for j in i + 1..n {
                s *= hilbert_symbol(&a[i], &a[j], v)?;
            }
        }
        hasse.insert(v.clone(), s);
        let w = match v {
            Place::Real => signature.0.min(signature.1),
            Place::Prime(_) => local_witt_index(n, &det, s, v),
        };
        witt.insert(v.clone(), w);
    }
    Ok(SpaceInvariants {
        dim: n,
        signature,
        det,
        relevant,
        hasse,
        witt,
    })
}

// Isotropy of a regular space over ℚ_p (finite place) from its invariant
// triple. Binary spaces are isotropic iff det = −1·(ℚ_p^×)²; ternary iff
// s = (−1, −det); quaternary anisotropic only for square det with
// s = −(−1,−1); dim ≥ 5 always isotropic.
fn local_isotropy_data(dim: usize, det: &Rat, hasse: i32, v: &Place) -> bool {
    debug_assert!(!v.is_real());
    match dim {
        0 | 1 => false,
        2 => is_square_local(&-det.clone(), v).expect("nonzero det"),
        3 => hasse == hilbert_symbol(&-Rat::one(), &-det.clone(), v).expect("nonzero"),
        4 => {
            let minus_one = -Rat::one();
            let aniso = is_square_local(det, v).expect("nonzero det")
                && hasse == -hilbert_symbol(&minus_one, &minus_one, v).expect("nonzero");
            !aniso
        }
        _ => true,
    }
}

// Witt index over ℚ_p by repeatedly splitting hyperbolic planes at the
// invariant level: H ⊥ W has det = −det(W) and s = s(W)·(−1, det W).
fn local_witt_index(dim: usize, det: &Rat, hasse: i32, v: &Place) -> usize {
    let mut dim = dim;
    let mut det = det.clone();
    let mut s = hasse;
    let mut r = 0;
    while local_isotropy_data(dim, &det, s, v) {
        dim -= 2;
        det = -det;
        s *= hilbert_symbol(&-Rat::one(), &det, v).expect("nonzero det");
        r += 1;
    }
    r
}

/// Is the space isotropic (does Q have a nontrivial zero) at `scope`?
pub fn is_isotropic(g: &GramMatrix, scope: &Scope) -> Result<bool, QuadError> {
    let inv = invariants(g)?;
    Ok(isotropic_from_invariants(&inv, scope))
}

fn isotropic_from_invariants(inv: &SpaceInvariants, scope: &Scope) -> bool {
    match scope {
        Scope::Local(Place::Real) => inv.signature.0 >= 1 && inv.signature.1 >= 1,
        Scope::Local(v) => local_isotropy_data(inv.dim, &inv.det, inv.hasse_at(v), v),
        // Strong local–global: isotropic over ℚ iff isotropic at the real
        // place and at every prime of the support.
        Scope::Global => {
            inv.relevant.iter().all(|v| {
                isotropic_from_invariants(inv, &Scope::Local(v.clone()))
            })
        }
    }
}

/// Witt decomposition data at a place or over ℚ: the Witt index and the
/// invariants of the anisotropic kernel.
#[derive(Debug, Clone, PartialEq)]
pub struct WittSplit {
    pub witt_index: usize,
    pub kernel_dim: usize,
    /// Space determinant of the kernel (meaningful as a square class).
    pub kernel_det: Rat,
    /// Hasse invariant of the kernel, at finite local scope.
    pub kernel_hasse: Option<i32>,
    /// Signature of the kernel, at real scope.
    pub kernel_signature: Option<(usize, usize)>,
}

pub fn witt_decomposition(g: &GramMatrix, scope: &Scope) -> Result<WittSplit, QuadError> {
    let inv = invariants(g)?;
    let r = match scope {
        Scope::Local(v) => inv.witt_index_at(v),
        // Over ℚ the Witt index is the minimum of the local ones (split a
        // plane globally iff the form is isotropic everywhere, and recurse).
        Scope::Global => inv
            .relevant
            .iter()
            .map(|v| inv.witt_index_at(v))
            .min()
            .expect("relevant places nonempty"),
    };
    let kernel_dim = inv.dim - 2 * r;
    let sign = if r % 2 == 0 { 1 } else { -1 };
    let kernel_det = &inv.det * &Rat::from_integer(Int::from(sign));
    let kernel_hasse = match scope {
        Scope::Local(v) if !v.is_real() => {
            let mut s = inv.hasse_at(v);
            let mut det = inv.det.clone();
            for _ in 0..r {
                det = -det;
                s *= hilbert_symbol(&-Rat::one(), &det, v).expect("nonzero det");
            }
            Some(s)
        }
        _ => None,
    };
    let kernel_signature = match scope {
        Scope::Local(Place::Real) => {
            Some((inv.signature.0 - r, inv.signature.1 - r))
        }
        _ => None,
    };
    Ok(WittSplit {
        witt_index: r,
        kernel_dim,
        kernel_det,
        kernel_hasse,
        kernel_signature,
    })
}

/// Outcome of a representation question, with the obstruction when negative.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RepVerdict {
    Represents,
    /// dim of the candidate exceeds dim of the ambient form.
    DimensionExceeds,
    /// Fails at this place (first one found).
    LocalObstruction(Place),
}

impl RepVerdict {
    pub fn as_bool(&self) -> bool {
        matches!(self, RepVerdict::Represents)
    }
}

/// Does the space represent the nonzero rational `a` at `scope`? Decided by
/// isotropy of ⟨−a⟩ ⊥ V, composed at the invariant level.
pub fn represents_number(
    g: &GramMatrix,
    a: &Rat,
    scope: &Scope,
) -> Result<RepVerdict, QuadError> {
    if a.is_zero() {
        return Err(QuadError::Num(exactnum::NumError::ZeroArgument));
    }
    let inv = invariants(g)?;
    let ext = extend_invariants(&inv, &-a.clone());
    let places: Vec<Place> = match scope {
        Scope::Local(v) => vec![v.clone()],
        Scope::Global => ext.relevant.clone(),
    };
    for v in places {
        if !isotropic_from_invariants(&ext, &Scope::Local(v.clone())) {
            return Ok(RepVerdict::LocalObstruction(v));
        }
    }
    Ok(RepVerdict::Represents)
}

// Invariants of ⟨c⟩ ⊥ V from invariants of V: s′ = s·(c, det V),
// det′ = c·det, dim′ = dim+1, and the places of c join the support.
fn extend_invariants(inv: &SpaceInvariants, c: &Rat) -> SpaceInvariants {
    let mut all = inv.relevant.clone();
    for v in relevant_places(&[c.clone()]) {
        if !all.contains(&v) {
            all.push(v);
        }
    }
    all.sort();
    let det = c * &inv.det;
    let signature = if c.is_positive() {
        (inv.signature.0 + 1, inv.signature.1)
    } else {
        (inv.signature.0, inv.signature.1 + 1)
    };
    let mut hasse = BTreeMap::new();
    let mut witt = BTreeMap::new();
    for v in &all {
        let s = inv.hasse_at(v) * hilbert_symbol(c, &inv.det, v).expect("nonzero");
        hasse.insert(v.clone(), s);
        let w = match v {
            Place::Real => signature.0.min(signature.1),
            Place::Prime(_) => local_witt_index(inv.dim + 1, &det, s, v),
        };
        witt.insert(v.clone(), w);
    }
    SpaceInvariants {
        dim: inv.dim + 1,
        signature,
        det,
        relevant: all,
        hasse,
        witt,
    }
}

/// Does G represent the form H at `scope` (is H isometric to a subspace)?
/// Decided by witt_index(G ⊥ (−H)) ≥ dim H, place by place.
pub fn represents_form(
    g: &GramMatrix,
    h: &GramMatrix,
    scope: &Scope,
) -> Result<RepVerdict, QuadError> {
    if h.dim() > g.dim() {
        return Ok(RepVerdict::DimensionExceeds);
    }
    let sum = g.perp(&h.negated());
    let inv = invariants(&sum)?;
    let places: Vec<Place> = match scope {
        Scope::Local(v) => vec![v.clone()],
        Scope::Global => inv.relevant.clone(),
    };
    for v in places {
        if inv.witt_index_at(&v) < h.dim() {
            return Ok(RepVerdict::LocalObstruction(v));
        }
    }
    Ok(RepVerdict::Represents)
}

/// Are two regular spaces isometric at `scope`? Locally: equal dim, det
/// class, and Hasse (signature at ℝ). Globally: equal dim, signature, det
/// class in ℚ, and Hasse at every place.
pub fn equivalent(g1: &GramMatrix, g2: &GramMatrix, scope: &Scope) -> Result<bool, QuadError> {
    let (i1, i2) = (invariants(g1)?, invariants(g2)?);
    if i1.dim != i2.dim {
        return Ok(false);
    }
    Ok(match scope {
        Scope::Local(Place::Real) => i1.signature == i2.signature,
        Scope::Local(v) => {
            i1.det_class_at(v) == i2.det_class_at(v) && i1.hasse_at(v) == i2.hasse_at(v)
        }
        Scope::Global => i1.same_as(&i2),
    })
}

/// Does an even unimodular lattice of signature (n₊, n₋) exist? Exactly when
/// n₊ ≡ n₋ mod 8.
pub fn exists_even_unimodular(n_plus: usize, n_minus: usize) -> bool {
    assert!(n_plus + n_minus >= 1, "empty signature");
    n_plus % 8 == n_minus % 8
}

#[cfg(test)]
mod tests {
    use super::*;
    use exactnum::{rat_int, valuation, Valuation};

    fn h_plane() -> GramMatrix {
        GramMatrix::from_b_rows(&[&[0, 1], &[1, 0]])
    }

    #[test]
    fn diagonalize_hyperbolic() {
        let (d, t) = diagonalize(&h_plane()).unwrap();
        assert_eq!(d, vec![rat_int(2), rat_int(-2)]);
        let g2 = h_plane().congruent_by(&t);
        assert_eq!(g2, GramMatrix::from_diag_b(&d));
        // Hyperbolic det class is −1 (as a space determinant).
        assert!(is_square_local(
            &(-h_plane().det_space()),
            &Place::Real
        )
        .unwrap());
    }

    #[test]
    fn diagonalize_identity_case() {
        let g = GramMatrix::from_diag_b(&[rat_int(2), rat_int(6)]);
        let (d, t) = diagonalize(&g).unwrap();
        assert_eq!(d, vec![rat_int(2), rat_int(6)]);
        assert_eq!(t, Mat::identity(2));
    }

    #[test]
    fn degenerate_reports_radical_rank() {
        let g = GramMatrix::from_b_rows(&[&[2, 0, 0], &[0, 0, 0], &[0, 0, 0]]);
        match diagonalize(&g) {
            Err(QuadError::Degenerate { radical_rank }) => assert_eq!(radical_rank, 2),
            other => panic!("expected degenerate error, got {other:?}"),
        }
        assert_eq!(radical(&g).len(), 2);
        assert_eq!(radical(&h_plane()).len(), 0);
    }

    #[test]
    fn invariants_of_sum_of_squares() {
        // diag b (2,2,2) = Q-coefficients (1,1,1).
        let g = GramMatrix::from_q_ints(&[1, 1, 1]);
        let inv = invariants(&g).unwrap();
        assert_eq!(inv.dim, 3);
        assert_eq!(inv.signature, (3, 0));
        assert!(is_square_rational(&inv.det));
        for v in &inv.relevant {
            assert_eq!(inv.hasse_at(v), 1);
        }
    }

    #[test]
    fn invariants_of_negative_plane() {
        let g = GramMatrix::from_q_ints(&[-1, -1]);
        let inv = invariants(&g).unwrap();
        assert_eq!(inv.hasse_at(&Place::two()), -1);
        assert_eq!(inv.hasse_at(&Place::Real), -1);
        assert_eq!(inv.hasse_at(&Place::at(3)), 1);
        assert_eq!(inv.hasse_at(&Place::at(97)), 1);
    }

    #[test]
    fn isotropy_cases() {
        // (1,1,−3): anisotropic at 3, hence over ℚ.
        let g = GramMatrix::from_q_ints(&[1, 1, -3]);
        assert!(!is_isotropic(&g, &Scope::Global).unwrap());
        assert!(!is_isotropic(&g, &Scope::Local(Place::at(3))).unwrap());
        assert!(is_isotropic(&g, &Scope::Local(Place::Real)).unwrap());

        let g = GramMatrix::from_q_ints(&[1, 1, 1, -1, -1]);
        assert!(is_isotropic(&g, &Scope::Global).unwrap());

        // Meyer's theorem territory: dim 5 indefinite is isotropic.
        let g = GramMatrix::from_q_ints(&[1, 1, 1, 1, -7]);
        assert!(is_isotropic(&g, &Scope::Global).unwrap());

        // Sum of four squares is anisotropic over ℚ₂.
        let g = GramMatrix::from_q_ints(&[1, 1, 1, 1]);
        assert!(!is_isotropic(&g, &Scope::Local(Place::two())).unwrap());
        assert!(is_isotropic(&g, &Scope::Local(Place::at(3))).unwrap());
    }

    #[test]
    fn witt_indices() {
        let g = GramMatrix::from_q_ints(&[1, -1, 1, -1]);
        let w = witt_decomposition(&g, &Scope::Global).unwrap();
        assert_eq!(w.witt_index, 2);
        assert_eq!(w.kernel_dim, 0);

        let g = GramMatrix::from_q_ints(&[1, 1, 1, 1]);
        let w = witt_decomposition(&g, &Scope::Local(Place::two())).unwrap();
        assert_eq!(w.witt_index, 0);

        // Any regular dim-5 space has Witt index ≥ 1 at a finite place.
        let g = GramMatrix::from_q_ints(&[1, 2, 3, 5, 7]);
        for p in [2i64, 3, 5, 7, 11] {
            let w = witt_decomposition(&g, &Scope::Local(Place::at(p))).unwrap();
            assert!(w.witt_index >= 1, "witt index 0 at {p}");
            assert!(w.kernel_dim <= 4);
        }
    }

    #[test]
    fn representation_cases() {
        let g = GramMatrix::from_q_ints(&[1, 1]);
        assert_eq!(
            represents_number(&g, &rat_int(2), &Scope::Global).unwrap(),
            RepVerdict::Represents
        );
        // 7 = 4·1+3 ≡ 7 mod 8 is not a sum of three squares, even rationally.
        let g3 = GramMatrix::from_q_ints(&[1, 1, 1]);
        let verdict = represents_number(&g3, &rat_int(7), &Scope::Global).unwrap();
        assert_eq!(verdict, RepVerdict::LocalObstruction(Place::two()));

        assert_eq!(
            represents_form(&g3, &g3, &Scope::Global).unwrap(),
            RepVerdict::Represents
        );
        let g4 = GramMatrix::from_q_ints(&[1, 1, 1, 1]);
        assert_eq!(
            represents_form(&g3, &g4, &Scope::Global).unwrap(),
            RepVerdict::DimensionExceeds
        );
        // Scaling the target by a square never changes the answer.
        let scaled = &rat_int(28); // 7·2²
        assert_eq!(
            represents_number(&g3, scaled, &Scope::Global).unwrap(),
            RepVerdict::LocalObstruction(Place::two())
        );
    }

    #[test]
    fn equivalence_cases() {
        let g1 = GramMatrix::from_diag_b(&[rat_int(2), rat_int(110)]);
        let g2 = GramMatrix::from_diag_b(&[rat_int(10), rat_int(22)]);
        assert!(equivalent(&g1, &g2, &Scope::Global).unwrap());
        // Explicit rational isometry, found by a small search: the columns
        // (5/4, 1/4) and (−11/4, 1/4) have b-values 10, 22 and pair to 0.
        let t = Mat::from_rows(vec![
            vec![exactnum::rat(5, 4), exactnum::rat(-11, 4)],
            vec![exactnum::rat(1, 4), exactnum::rat(1, 4)],
        ]);
        assert_eq!(g1.congruent_by(&t), g2);

        let a = GramMatrix::from_q_ints(&[1, 1]);
        let b = GramMatrix::from_q_ints(&[1, -1]);
        assert!(!equivalent(&a, &b, &Scope::Global).unwrap());
        assert!(!equivalent(&a, &b, &Scope::Local(Place::Real)).unwrap());
    }

    #[test]
    fn even_unimodular_signatures() {
        assert!(exists_even_unimodular(8, 0));
        assert!(exists_even_unimodular(12, 4));
        assert!(exists_even_unimodular(9, 1)); // E₈ ⊥ H
        assert!(!exists_even_unimodular(9, 2));
        assert!(!exists_even_unimodular(4, 0));
        assert!(exists_even_unimodular(1, 1));
    }

    #[test]
    fn valuation_of_det_after_congruence() {
        // Congruence changes det by squares only.
        let g = GramMatrix::from_q_ints(&[3, 5]);
        let t = Mat::from_int_rows(&[&[2, 1], &[3, 2]]);
        let g2 = g.congruent_by(&t);
        let ratio = g.det_b() / g2.det_b();
        assert_eq!(valuation(&ratio, &Int::from(3)), Valuation::Finite(0));
        assert!(is_square_rational(&ratio));
    }
}
