//! Named lattices used throughout the tests and the genus machinery.

use crate::Lattice;
use exactnum::{rat, rat_int, Rat};
use num_traits::Zero;
use quadspace::{GramMatrix, Mat};

/// Root lattice Aₙ via its Cartan matrix as b-Gram (roots have Q = 1).
pub fn a_lattice(n: usize) -> Lattice {
    Lattice::from_gram(cartan_chain(n, &[]))
}

/// Root lattice Dₙ (n ≥ 3): chain with one fork at the end.
pub fn d_lattice(n: usize) -> Lattice {
    assert!(n >= 3, "D_n needs n >= 3");
    Lattice::from_gram(cartan_chain(n, &[(n - 3, n - 1)]))
}

/// The even unimodular E₈ lattice via its Cartan matrix.
pub fn e8() -> Lattice {
    // Nodes 0-6 form the A₇ chain; node 7 hangs off node 4.
    Lattice::from_gram(cartan_chain(8, &[(4, 7)]))
}

/// ℤⁿ with Q(x) = Σxᵢ², i.e. b = 2·Id.
pub fn i_lattice(n: usize) -> Lattice {
    Lattice::from_gram(GramMatrix::from_diag_b(&vec![rat_int(2); n]))
}

/// The hyperbolic plane, Q(x, y) = xy.
pub fn hyperbolic_plane() -> Lattice {
    Lattice::from_gram(GramMatrix::from_b_rows(&[&[0, 1], &[1, 0]]))
}

/// Dₙ⁺: the index-2 overlattice of Dₙ ⊂ ℤⁿ glued by (½,…,½); even
/// unimodular exactly when 8 | n (D₈⁺ ≅ E₈, D₁₆⁺ is the rank-16 example).
pub fn d_plus(n: usize) -> Lattice {
    assert!(n % 2 == 0 && n >= 8, "D_n^+ is a lattice for even n; built here for n >= 8");
    // Ambient ℝⁿ with b = ⟨,⟩, so Q(x) = |x|²/2 and e_i ± e_j are roots.
    let ambient = GramMatrix::from_diag_b(&vec![rat_int(1); n]);
    let mut cols: Vec<Vec<Rat>> = Vec::new();
    for i in 0..n - 1 {
        let mut c = vec![Rat::zero(); n];
        c[i] = rat_int(1);
        c[i + 1] = rat_int(-1);
        cols.push(c);
    }
    cols.push(vec![rat(1, 2); n]);
    Lattice::new(ambient, Mat::from_cols(cols)).expect("glue basis is independent")
}

/// Simply-laced Cartan matrix on a chain 0–1–…–(n−1) plus extra edges.
fn cartan_chain(n: usize, extra_edges: &[(usize, usize)]) -> GramMatrix {
    let mut m = Mat::zero(n, n);
    for i in 0..n {
        m[(i, i)] = rat_int(2);
    }
    let mut link = |i: usize, j: usize, m: &mut Mat| {
        m[(i, j)] = rat_int(-1);
        m[(j, i)] = rat_int(-1);
    };
    for i in 0..n.saturating_sub(1) {
        // Chain edge i–(i+1), except we skip the one a fork replaces.
        if extra_edges.iter().any(|&(a, b)| b == n - 1 && a != n - 2 && i == n - 2) {
            continue;
        }
        link(i, i + 1, &mut m);
    }
    for &(a, b) in extra_edges {
        link(a, b, &mut m);
    }
    GramMatrix::new(m).expect("Cartan matrices are symmetric")
}
