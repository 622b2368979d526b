//! Dense matrices over ℚ with exact arithmetic: products, determinants,
//! inverses, kernels, and the integer Hermite normal form the lattice code
//! leans on. Dimensions here are small (lattice ranks), so the classical
//! O(n³) algorithms on rationals are the right tool — no pivoting heuristics,
//! no floating point.

use exactnum::{Int, Rat};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// A dense rows×cols matrix of exact rationals, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mat {
    rows: usize,
    cols: usize,
    data: Vec<Rat>,
}

impl Mat {
    pub fn zero(rows: usize, cols: usize) -> Mat {
        Mat {
            rows,
            cols,
            data: vec![Rat::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Mat {
        let mut m = Mat::zero(n, n);
        for i in 0..n {
            m[(i, i)] = Rat::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rat>>) -> Mat {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(
            rows.iter().all(|row| row.len() == c),
            "ragged rows in matrix literal"
        );
        Mat {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    /// Convenience for integer literals in tests and fixtures.
    pub fn from_int_rows(rows: &[&[i64]]) -> Mat {
        Mat::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| Rat::from_integer(Int::from(x))).collect())
                .collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, i: usize) -> &[Rat] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn col(&self, j: usize) -> Vec<Rat> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn transpose(&self) -> Mat {
        let mut t = Mat::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square()
            && (0..self.rows)
                .all(|i| (0..i).all(|j| self[(i, j)] == self[(j, i)]))
    }

    pub fn is_integral(&self) -> bool {
        self.data.iter().all(|x| x.is_integer())
    }

    /// Matrix–vector product.
    pub fn apply(&self, v: &[Rat]) -> Vec<Rat> {
        assert_eq!(v.len(), self.cols, "dimension mismatch in apply");
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .map(|(a, b)| a * b)
                    .fold(Rat::zero(), |s, t| s + t)
            })
            .collect()
    }

    /// Hstack of columns.
    pub fn from_cols(cols: Vec<Vec<Rat>>) -> Mat {
        let c = cols.len();
        let r = cols.first().map_or(0, Vec::len);
        let mut m = Mat::zero(r, c);
        for (j, col) in cols.into_iter().enumerate() {
            assert_eq!(col.len(), r, "ragged columns");
            for (i, x) in col.into_iter().enumerate() {
                m[(i, j)] = x;
            }
        }
        m
    }

    pub fn scale(&self, c: &Rat) -> Mat {
        let mut out = self.clone();
        for x in &mut out.data {
            *x *= c;
        }
        out
    }

    /// Determinant by fraction-free-ish Gaussian elimination (exact rationals,
    /// partial pivoting on the first nonzero entry).
    pub fn det(&self) -> Rat {
        assert!(self.is_square(), "determinant of non-square matrix");
        let n = self.rows;
        let mut a = self.clone();
        let mut det = Rat::one();
        for i in 0..n {
            let pivot = (i..n).find(|&r| !a[(r, i)].is_zero());
            let Some(p) = pivot else {
                return Rat::zero();
            };
            if p != i {
                a.swap_rows(p, i);
                det = -det;
            }
            det *= a[(i, i)].clone();
            let inv = a[(i, i)].recip();
            for r in i + 1..n {
                if a[(r, i)].is_zero() {
                    continue;
                }
                let f = &a[(r, i)] * &inv;
                for c in i..n {
                    let t = &a[(i, c)] * &f;
                    a[(r, c)] -= t;
                }
            }
        }
        det
    }

    /// Inverse, if the matrix is square and nonsingular.
    pub fn inverse(&self) -> Option<Mat> {
        assert!(self.is_square(), "inverse of non-square matrix");
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = Mat::identity(n);
        for i in 0..n {
            let p = (i..n).find(|&r| !a[(r, i)].is_zero())?;
            if p != i {
                a.swap_rows(p, i);
                inv.swap_rows(p, i);
            }
            let d = a[(i, i)].recip();
            for c in 0..n {
                a[(i, c)] *= &d;
                inv[(i, c)] *= &d;
            }
            for r in 0..n {
                if r == i || a[(r, i)].is_zero() {
                    continue;
                }
                let f = a[(r, i)].clone();
                for c in 0..n {
                    let t = &a[(i, c)] * &f;
                    a[(r, c)] -= t;
                    let t = &inv[(i, c)] * &f;
                    inv[(r, c)] -= t;
                }
            }
        }
        Some(inv)
    }

    fn swap_rows(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(i * self.cols + c, j * self.cols + c);
        }
    }

    /// Reduced row echelon form; returns (rref, pivot columns).
    pub fn rref(&self) -> (Mat, Vec<usize>) {
        let mut a = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..a.cols {
            let Some(p) = (r..a.rows).find(|&i| !a[(i, c)].is_zero()) else {
                continue;
            };
            a.swap_rows(p, r);
            let d = a[(r, c)].recip();
            for j in 0..a.cols {
                a[(r, j)] *= &d;
            }
            for i in 0..a.rows {
                if i == r || a[(i, c)].is_zero() {
                    continue;
                }
                let f = a[(i, c)].clone();
                for j in 0..a.cols {
                    let t = &a[(r, j)] * &f;
                    a[(i, j)] -= t;
                }
            }
            pivots.push(c);
            r += 1;
            if r == a.rows {
                break;
            }
        }
        (a, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the right kernel {x : Ax = 0}, from the reduced echelon form.
    pub fn kernel(&self) -> Vec<Vec<Rat>> {
        let (rref, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&fc| {
                let mut v = vec![Rat::zero(); self.cols];
                v[fc] = Rat::one();
                for (r, &pc) in pivots.iter().enumerate() {
                    v[pc] = -rref[(r, fc)].clone();
                }
                v
            })
            .collect()
    }

    /// Hermite normal form of the row span of an integral matrix.
    ///
    /// Returns the canonical basis of the ℤ-module generated by the rows:
    /// row echelon, positive pivots, entries above each pivot reduced into
    /// [0, pivot). Zero rows are dropped. Two integral matrices have equal
    /// HNF iff their rows generate the same ℤ-module.
    pub fn hnf_rows(&self) -> Mat {
        assert!(self.is_integral(), "HNF requires an integral matrix");
        let mut a: Vec<Vec<Int>> = (0..self.rows)
            .map(|i| self.row(i).iter().map(|x| x.to_integer()).collect())
            .collect();
        let (rows, cols) = (self.rows, self.cols);
        let mut r = 0;
        for c in 0..cols {
            // Euclid down column c on rows r.., until one nonzero entry remains.
            loop {
                let mut nz: Vec<usize> = (r..rows).filter(|&i| !a[i][c].is_zero()).collect();
                if nz.is_empty() {
                    break;
                }
                if nz.len() == 1 {
                    let i = nz[0];
                    a.swap(i, r);
                    break;
                }
                // Reduce everything by the smallest-magnitude entry.
                nz.sort_by_key(|&i| a[i][c].abs());
                let (small, rest) = (nz[0], &nz[1..]);
                for &i in rest {
                    let q = div_round(&a[i][c], &a[small][c]);
                    for j in 0..cols {
                        let t = &a[small][j] * &q;
                        a[i][j] -= t;
                    }
                }
            }
            if r < rows && !a[r][c].is_zero() {
                if a[r][c].is_negative() {
                    for x in &mut a[r] {
                        *x = -x.clone();
                    }
                }
                // Reduce the entries above the pivot into [0, pivot).
                for i in 0..r {
                    let q = a[i][c].div_floor(&a[r][c]);
                    if !q.is_zero() {
                        for j in 0..cols {
                            let t = &a[r][j] * &q;
                            a[i][j] -= t;
                        }
                    }
                }
                r += 1;
                if r == rows {
                    break;
                }
            }
        }
        let kept: Vec<Vec<Rat>> = a
            .into_iter()
            .take(r)
            .map(|row| row.into_iter().map(Rat::from_integer).collect())
            .collect();
        Mat::from_rows(kept)
    }
}

// Nearest-integer quotient, for fast Euclidean descent in the HNF.
fn div_round(a: &Int, b: &Int) -> Int {
    let two_rem = (a % b) * Int::from(2);
    let q = a / b;
    if two_rem.abs() > b.abs() {
        if two_rem.is_negative() == b.is_negative() {
            q + Int::one()
        } else {
            q - Int::one()
        }
    } else {
        q
    }
}

impl std::ops::Index<(usize, usize)> for Mat {
    type Output = Rat;
    fn index(&self, (i, j): (usize, usize)) -> &Rat {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for Mat {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rat {
        &mut self.data[i * self.cols + j]
    }
}

impl Mul for &Mat {
    type Output = Mat;
    fn mul(self, rhs: &Mat) -> Mat {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch in product");
        let mut out = Mat::zero(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let t = a * &rhs[(k, j)];
                    out[(i, j)] += t;
                }
            }
        }
        out
    }
}

impl Add for &Mat {
    type Output = Mat;
    fn add(self, rhs: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        let mut out = self.clone();
        for (x, y) in out.data.iter_mut().zip(&rhs.data) {
            *x += y;
        }
        out
    }
}

impl Sub for &Mat {
    type Output = Mat;
    fn sub(self, rhs: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        let mut out = self.clone();
        for (x, y) in out.data.iter_mut().zip(&rhs.data) {
            *x -= y;
        }
        out
    }
}

impl Neg for &Mat {
    type Output = Mat;
    fn neg(self) -> Mat {
        self.scale(&-Rat::one())
    }
}

impl fmt::Display for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(Rat::to_string).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}
