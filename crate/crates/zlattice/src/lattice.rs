//! The lattice type: an ambient quadratic space plus a basis matrix.

use crate::{LatticeError, Result};
use exactnum::{Int, Rat};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use quadspace::{GramMatrix, Mat};

/// A ℤ-lattice of full column rank inside a rational quadratic space.
///
/// `ambient` carries the bilinear form b (with Q(x) = b(x,x)/2) on the
/// surrounding space; the columns of `basis` are the lattice generators in
/// ambient coordinates. The intrinsic Gram matrix is TᵗST.
#[derive(Debug, Clone, PartialEq)]
pub struct Lattice {
    ambient: GramMatrix,
    basis: Mat,
}

impl Lattice {
    pub fn new(ambient: GramMatrix, basis: Mat) -> Result<Lattice> {
        if basis.rows() != ambient.dim() {
            return Err(LatticeError::Quad(quadspace::QuadError::DimensionMismatch(
                basis.rows(),
                ambient.dim(),
            )));
        }
        if basis.rank() != basis.cols() {
            return Err(LatticeError::DependentBasis);
        }
        Ok(Lattice { ambient, basis })
    }

    /// The standard lattice ℤⁿ with the given intrinsic form.
    pub fn from_gram(g: GramMatrix) -> Lattice {
        let n = g.dim();
        Lattice { ambient: g, basis: Mat::identity(n) }
    }

    pub fn ambient(&self) -> &GramMatrix {
        &self.ambient
    }

    pub fn basis(&self) -> &Mat {
        &self.basis
    }

    /// Rank of the lattice (number of basis vectors).
    pub fn rank(&self) -> usize {
        self.basis.cols()
    }

    /// Intrinsic Gram matrix TᵗST in the b-convention.
    pub fn gram(&self) -> GramMatrix {
        self.ambient.congruent_by(&self.basis)
    }

    /// Ambient coordinates of the lattice vector with the given basis coordinates.
    pub fn to_ambient(&self, coords: &[Int]) -> Vec<Rat> {
        let v: Vec<Rat> = coords.iter().map(|c| Rat::from_integer(c.clone())).collect();
        self.basis.apply(&v)
    }

    pub fn is_integral(&self) -> bool {
        self.gram().mat().is_integral()
    }

    /// Even: integral with Q(x) ∈ ℤ, i.e. the b-Gram diagonal lies in 2ℤ.
    pub fn is_even(&self) -> bool {
        let g = self.gram();
        if !g.mat().is_integral() {
            return false;
        }
        (0..g.dim()).all(|i| g.entry(i, i).numer().is_even())
    }

    pub fn det_b(&self) -> Rat {
        self.gram().det_b()
    }

    /// det_B = det_b / 2^rank, the determinant of the B = b/2 Gram matrix.
    pub fn det_big_b(&self) -> Rat {
        let half = Rat::new(Int::one(), Int::from(2));
        self.gram().mat().scale(&half).det()
    }

    /// Does `other` describe the same point set in the same ambient space?
    pub fn same_lattice(&self, other: &Lattice) -> bool {
        if self.ambient != other.ambient || self.rank() != other.rank() {
            return false;
        }
        // T₂ = T₁V with V integral of determinant ±1, and vice versa.
        let Some(v) = solve_columns(&self.basis, &other.basis) else {
            return false;
        };
        if !v.is_integral() {
            return false;
        }
        let d = v.det();
        d == Rat::one() || d == -Rat::one()
    }
}

/// Solve A·X = B column by column; None if some column is not in the span.
fn solve_columns(a: &Mat, b: &Mat) -> Option<Mat> {
    let rows = a.rows();
    let cols_a = a.cols();
    let cols_b = b.cols();
    // Row-reduce the augmented matrix [A | B] once.
    let mut aug = Mat::zero(rows, cols_a + cols_b);
    for i in 0..rows {
        for j in 0..cols_a {
            aug[(i, j)] = a[(i, j)].clone();
        }
        for j in 0..cols_b {
            aug[(i, cols_a + j)] = b[(i, j)].clone();
        }
    }
    let (r, pivots) = aug.rref();
    if pivots.iter().any(|&p| p >= cols_a) {
        return None; // some B-column is independent of A
    }
    let mut x = Mat::zero(cols_a, cols_b);
    for (row, &p) in pivots.iter().enumerate() {
        for j in 0..cols_b {
            x[(p, j)] = r[(row, cols_a + j)].clone();
        }
    }
    Some(x)
}

/// The dual lattice L^# = {v : b(v, L) ⊆ ℤ} in the same ambient space.
///
/// Its basis is T·G⁻¹ for G = TᵗST, so its intrinsic Gram is G⁻¹; taking the
/// dual twice returns the original basis exactly.
pub fn dual_lattice(l: &Lattice) -> Result<Lattice> {
    let g = l.gram();
    let Some(g_inv) = g.mat().inverse() else {
        let radical_rank = g.dim() - g.mat().rank();
        return Err(LatticeError::Quad(quadspace::QuadError::Degenerate { radical_rank }));
    };
    let basis = l.basis() * &g_inv;
    Ok(Lattice { ambient: l.ambient.clone(), basis })
}

/// Complete a primitive integer column to a unimodular matrix whose first
/// column is that vector (used when extending partial bases).
pub(crate) fn unimodular_completion(x: &[Int]) -> Mat {
    let n = x.len();
    // Reduce x to e₁ by elementary integer row operations, collecting the
    // inverse operations applied to the identity; entries stay integral.
    let mut v: Vec<Int> = x.to_vec();
    let mut u = Mat::identity(n); // will satisfy U·e₁ = x
    loop {
        let nonzero: Vec<usize> = (0..n).filter(|&i| !v[i].is_zero()).collect();
        assert!(!nonzero.is_empty(), "completion of the zero vector");
        if nonzero.len() == 1 {
            let i = nonzero[0];
            assert!(v[i].abs().is_one(), "completion of a non-primitive vector");
            if v[i].is_negative() {
                v[i] = -v[i].clone();
                for r in 0..n {
                    let neg = -u[(r, i)].clone();
                    u[(r, i)] = neg;
                }
            }
            if i != 0 {
                v.swap(0, i);
                for r in 0..n {
                    let tmp = u[(r, 0)].clone();
                    u[(r, 0)] = u[(r, i)].clone();
                    u[(r, i)] = tmp;
                }
            }
            return u;
        }
        // Reduce the largest entry by the smallest nonzero one.
        let &small = nonzero
            .iter()
            .min_by_key(|&&i| v[i].abs())
            .expect("nonempty");
        for i in 0..n {
            if i == small || v[i].is_zero() {
                continue;
            }
            let q = v[i].div_floor(&v[small]);
            if q.is_zero() {
                continue;
            }
            let qr = Rat::from_integer(q.clone());
            v[i] -= &q * &v[small];
            // Row op on v is v ← Ev; keep U·e₁ = x by U ← U·E⁻¹.
            for r in 0..n {
                let add = &qr * &u[(r, i)];
                u[(r, small)] += add;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use exactnum::{rat, rat_int};

    #[test]
    fn intrinsic_gram_and_parity() {
        let l = catalog::i_lattice(3);
        assert!(l.is_integral());
        assert!(l.is_even());
        assert_eq!(l.det_big_b(), rat_int(1));

        // ℤ² with Q(x,y) = x² + xy + y²: odd b-Gram diagonal after rescaling.
        let g = GramMatrix::from_b_rows(&[&[2, 1], &[1, 2]]);
        let l = Lattice::from_gram(g);
        assert!(l.is_integral() && l.is_even());
        let shrunk = Lattice::new(
            l.ambient().clone(),
            Mat::from_rows(vec![
                vec![rat(1, 2), rat_int(0)],
                vec![rat_int(0), rat_int(1)],
            ]),
        )
        .unwrap();
        assert!(!shrunk.is_integral());
    }

    #[test]
    fn dependent_basis_rejected() {
        let g = GramMatrix::from_b_rows(&[&[2, 0], &[0, 2]]);
        let t = Mat::from_int_rows(&[&[1, 2], &[2, 4]]);
        assert!(matches!(
            Lattice::new(g, t),
            Err(LatticeError::DependentBasis)
        ));
    }

    #[test]
    fn dual_of_standard_cube() {
        // b = 2·Id: the dual is (1/2)ℤⁿ in the same space.
        let l = catalog::i_lattice(2);
        let d = dual_lattice(&l).unwrap();
        assert_eq!(d.gram().mat(), &Mat::from_rows(vec![
            vec![rat(1, 2), rat_int(0)],
            vec![rat_int(0), rat(1, 2)],
        ]));
        let dd = dual_lattice(&d).unwrap();
        assert!(dd.same_lattice(&l));
        assert_eq!(d.det_b(), l.det_b().recip());
    }

    #[test]
    fn even_unimodular_lattices_are_self_dual() {
        for l in [catalog::e8(), catalog::d_plus(8)] {
            let d = dual_lattice(&l).unwrap();
            assert!(d.same_lattice(&l));
        }
    }

    #[test]
    fn d_plus_is_even_unimodular_exactly_when_eight_divides_n() {
        let l = catalog::d_plus(8);
        assert!(l.is_even());
        assert_eq!(l.det_b().abs(), rat_int(1));
        let l16 = catalog::d_plus(16);
        assert!(l16.is_even());
        assert_eq!(l16.det_b().abs(), rat_int(1));
    }

    #[test]
    fn same_lattice_distinguishes_sublattices() {
        let g = GramMatrix::from_b_rows(&[&[2, 0], &[0, 2]]);
        let l = Lattice::from_gram(g.clone());
        let sub = Lattice::new(g, Mat::from_int_rows(&[&[2, 0], &[0, 1]])).unwrap();
        assert!(!sub.same_lattice(&l));
        // A different basis of the same lattice.
        let other = Lattice::new(
            l.ambient().clone(),
            Mat::from_int_rows(&[&[1, 3], &[1, 4]]),
        )
        .unwrap();
        assert!(other.same_lattice(&l));
    }

    #[test]
    fn unimodular_completion_returns_the_vector_first() {
        let x = vec![Int::from(6), Int::from(10), Int::from(15)];
        let u = unimodular_completion(&x);
        assert_eq!(u.det().abs(), rat_int(1));
        for i in 0..3 {
            assert_eq!(u[(i, 0)], Rat::from_integer(x[i].clone()));
        }
    }
}
