//! Quadratic forms over small finite fields 𝔽_q, with full support for
//! characteristic 2.
//!
//! A form here is a homogeneous quadratic polynomial Q(x) = Σ_{i≤j} mᵢⱼxᵢxⱼ,
//! stored by its upper-triangular coefficients — the representation that
//! still separates Q from its polar form b(x,y) = Q(x+y) − Q(x) − Q(y) when
//! 2 = 0. Isotropy searches, radicals, isometry counting, and the Witt group
//! census are all exhaustive; the closed order formulas for SO are checked
//! against those counts in the tests.

use crate::QuadError;
use exactnum::Int;
use num_traits::One;

/// Arithmetic tables for 𝔽_q. Elements are indices 0..q; for q = pᵉ an
/// element Σ aᵢtⁱ is encoded as Σ aᵢpⁱ, so 0 and 1 are always the additive
/// and multiplicative identities. Supported sizes: primes up to 1024, 4, 8,
/// and p² for odd p (modulus t² − r with r the first nonresidue).
pub struct Fq {
    pub p: usize,
    pub e: u32,
    pub q: usize,
    add: Vec<u16>,
    mul: Vec<u16>,
    neg: Vec<u16>,
    inv: Vec<u16>,
    sqrt: Vec<u16>, // q used as a "no square root" sentinel
}

fn small_prime(n: usize) -> bool {
    n >= 2 && (2..n).take_while(|d| d * d <= n).all(|d| n % d != 0)
}

impl Fq {
    pub fn new(q: usize) -> Result<Fq, QuadError> {
        if q < 2 || q > 1024 {
            return Err(QuadError::UnsupportedField { q });
        }
        let p = (2..=q).find(|d| q % d == 0).expect("q >= 2 has a divisor");
        let mut e = 0u32;
        let mut m = q;
        while m % p == 0 {
            m /= p;
            e += 1;
        }
        if m != 1 || !small_prime(p) {
            return Err(QuadError::UnsupportedField { q });
        }

        // The polynomial modulus, recorded as the expansion of tᵉ in lower
        // powers of t: t² = t+1 over 𝔽₂, t³ = t+1 over 𝔽₂, t² = r over odd p.
        let red_top: Vec<usize> = match (p, e) {
            (_, 1) => vec![],
            (2, 2) | (2, 3) => {
                let mut v = vec![0; e as usize];
                v[0] = 1;
                v[1] = 1;
                v
            }
            (_, 2) => {
                let r = (2..p)
                    .find(|&r| (1..p).all(|x| x * x % p != r))
                    .expect("odd p has a nonresidue");
                let mut v = vec![0; 2];
                v[0] = r;
                v
            }
            _ => return Err(QuadError::UnsupportedField { q }),
        };
        let e_us = e as usize;
        let digits = |x: usize| -> Vec<usize> {
            let mut d = vec![0; e_us];
            let mut x = x;
            for slot in d.iter_mut() {
                *slot = x % p;
                x /= p;
            }
            d
        };
        let undigits = |d: &[usize]| -> usize { d.iter().rev().fold(0, |acc, &a| acc * p + a) };

        // reductions[k] = tᵉ⁺ᵏ written in powers t⁰..tᵉ⁻¹
        let mut reductions: Vec<Vec<usize>> = vec![red_top.clone()];
        for _ in 1..e_us.max(1) {
            let prev = reductions.last().expect("seeded").clone();
            let mut shifted = vec![0; e_us + 1];
            for (i, &c) in prev.iter().enumerate() {
                shifted[i + 1] = c;
            }
            let top = shifted[e_us];
            let mut next: Vec<usize> = shifted[..e_us].to_vec();
            for i in 0..e_us {
                next[i] = (next[i] + top * red_top[i]) % p;
            }
            reductions.push(next);
        }

        let mul_elems = |a: usize, b: usize| -> usize {
            if e == 1 {
                return a * b % p;
            }
            let (da, db) = (digits(a), digits(b));
            let mut prod = vec![0usize; 2 * e_us - 1];
            for i in 0..e_us {
                for j in 0..e_us {
                    prod[i + j] += da[i] * db[j];
                }
            }
            let mut low: Vec<usize> = prod[..e_us].to_vec();
            for k in e_us..2 * e_us - 1 {
                let c = prod[k] % p;
                for i in 0..e_us {
                    low[i] += c * reductions[k - e_us][i];
                }
            }
            for slot in low.iter_mut() {
                *slot %= p;
            }
            undigits(&low)
        };
        let add_elems = |a: usize, b: usize| -> usize {
            if e == 1 {
                return (a + b) % p;
            }
            let (da, db) = (digits(a), digits(b));
            let sum: Vec<usize> = da.iter().zip(&db).map(|(x, y)| (x + y) % p).collect();
            undigits(&sum)
        };

        let mut add = vec![0u16; q * q];
        let mut mul = vec![0u16; q * q];
        for a in 0..q {
            for b in a..q {
                let s = add_elems(a, b) as u16;
                let m = mul_elems(a, b) as u16;
                add[a * q + b] = s;
                add[b * q + a] = s;
                mul[a * q + b] = m;
                mul[b * q + a] = m;
            }
        }
        let mut neg = vec![0u16; q];
        let mut inv = vec![0u16; q];
        let mut sqrt = vec![q as u16; q];
        for a in 0..q {
            neg[a] = (0..q).find(|&b| add[a * q + b] == 0).expect("additive inverse") as u16;
            if a != 0 {
                inv[a] =
                    (1..q).find(|&b| mul[a * q + b] == 1).expect("multiplicative inverse") as u16;
            }
            let s = mul[a * q + a] as usize;
            if sqrt[s] == q as u16 {
                sqrt[s] = a as u16;
            }
        }
        Ok(Fq {
            p,
            e,
            q,
            add,
            mul,
            neg,
            inv,
            sqrt,
        })
    }

    #[inline]
    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add[a * self.q + b] as usize
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.q + b] as usize
    }

    #[inline]
    pub fn neg(&self, a: usize) -> usize {
        self.neg[a] as usize
    }

    #[inline]
    pub fn sub(&self, a: usize, b: usize) -> usize {
        self.add(a, self.neg(b))
    }

    /// Multiplicative inverse; a must be nonzero.
    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        debug_assert!(a != 0, "inverse of zero");
        self.inv[a] as usize
    }

    pub fn pow(&self, a: usize, k: usize) -> usize {
        let mut acc = 1;
        for _ in 0..k {
            acc = self.mul(acc, a);
        }
        acc
    }

    pub fn sqrt(&self, a: usize) -> Option<usize> {
        let s = self.sqrt[a] as usize;
        (s < self.q).then_some(s)
    }

    pub fn is_square(&self, a: usize) -> bool {
        (self.sqrt[a] as usize) < self.q
    }

    pub fn char_is_two(&self) -> bool {
        self.p == 2
    }

    /// First non-square in element order; only odd characteristic has one.
    pub fn nonresidue(&self) -> usize {
        assert!(!self.char_is_two(), "every element is a square in char 2");
        (1..self.q).find(|&a| !self.is_square(a)).expect("odd q has a nonresidue")
    }

    fn same_field(&self, other: &Fq) -> bool {
        self.p == other.p && self.e == other.e
    }
}

// --- linear algebra over 𝔽_q, on row-major Vec<Vec<usize>> ---

fn fq_rref(f: &Fq, mut m: Vec<Vec<usize>>) -> (Vec<Vec<usize>>, Vec<usize>) {
    let rows = m.len();
    let cols = if rows == 0 { 0 } else { m[0].len() };
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(i) = (r..rows).find(|&i| m[i][c] != 0) else {
            continue;
        };
        m.swap(r, i);
        let inv = f.inv(m[r][c]);
        for j in 0..cols {
            m[r][j] = f.mul(m[r][j], inv);
        }
        for i2 in 0..rows {
            if i2 != r && m[i2][c] != 0 {
                let factor = m[i2][c];
                for j in 0..cols {
                    let t = f.mul(factor, m[r][j]);
                    m[i2][j] = f.sub(m[i2][j], t);
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    (m, pivots)
}

fn fq_rank(f: &Fq, m: &[Vec<usize>]) -> usize {
    fq_rref(f, m.to_vec()).1.len()
}

fn fq_kernel(f: &Fq, m: &[Vec<usize>], cols: usize) -> Vec<Vec<usize>> {
    let (r, pivots) = fq_rref(f, m.to_vec());
    let mut basis = Vec::new();
    for fc in (0..cols).filter(|c| !pivots.contains(c)) {
        let mut v = vec![0; cols];
        v[fc] = 1;
        for (k, &pc) in pivots.iter().enumerate() {
            v[pc] = f.neg(r[k][fc]);
        }
        basis.push(v);
    }
    basis
}

fn fq_det(f: &Fq, m: &[Vec<usize>]) -> usize {
    let n = m.len();
    let mut m = m.to_vec();
    let mut det = 1;
    for c in 0..n {
        let Some(i) = (c..n).find(|&i| m[i][c] != 0) else {
            return 0;
        };
        if i != c {
            m.swap(c, i);
            det = f.neg(det);
        }
        det = f.mul(det, m[c][c]);
        let inv = f.inv(m[c][c]);
        for i2 in c + 1..n {
            if m[i2][c] != 0 {
                let factor = f.mul(m[i2][c], inv);
                for j in c..n {
                    let t = f.mul(factor, m[c][j]);
                    m[i2][j] = f.sub(m[i2][j], t);
                }
            }
        }
    }
    det
}

/// A quadratic form over 𝔽_q in n variables, by upper-triangular
/// coefficients: Q(x) = Σ_{i≤j} mᵢⱼ xᵢ xⱼ.
#[derive(Clone)]
pub struct FqForm<'a> {
    f: &'a Fq,
    n: usize,
    m: Vec<usize>,
}

impl<'a> FqForm<'a> {
    /// Coefficients in row order: m₀₀, m₀₁, …, m₀ₙ₋₁, m₁₁, …, mₙ₋₁ₙ₋₁.
    pub fn new(f: &'a Fq, n: usize, coeffs: &[usize]) -> FqForm<'a> {
        assert_eq!(coeffs.len(), n * (n + 1) / 2, "triangular coefficient count");
        assert!(coeffs.iter().all(|&c| c < f.q), "coefficients must be field elements");
        FqForm {
            f,
            n,
            m: coeffs.to_vec(),
        }
    }

    pub fn from_diag(f: &'a Fq, diag: &[usize]) -> FqForm<'a> {
        let n = diag.len();
        let mut m = vec![0; n * (n + 1) / 2];
        for (i, &d) in diag.iter().enumerate() {
            m[Self::pos(n, i, i)] = d;
        }
        FqForm::new(f, n, &m)
    }

    fn pos(n: usize, i: usize, j: usize) -> usize {
        debug_assert!(i <= j && j < n);
        i * n - i * (i + 1) / 2 + j
    }

    pub fn field(&self) -> &'a Fq {
        self.f
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    /// Coefficient mᵢⱼ for i ≤ j.
    pub fn coeff(&self, i: usize, j: usize) -> usize {
        self.m[Self::pos(self.n, i, j)]
    }

    pub fn q_value(&self, x: &[usize]) -> usize {
        let f = self.f;
        let mut acc = 0;
        for i in 0..self.n {
            if x[i] == 0 {
                continue;
            }
            for j in i..self.n {
                let t = f.mul(self.coeff(i, j), f.mul(x[i], x[j]));
                acc = f.add(acc, t);
            }
        }
        acc
    }

    /// Polar form b(x,y) = Q(x+y) − Q(x) − Q(y).
    pub fn b_value(&self, x: &[usize], y: &[usize]) -> usize {
        let f = self.f;
        let bm = self.b_matrix();
        let mut acc = 0;
        for i in 0..self.n {
            for j in 0..self.n {
                let t = f.mul(bm[i][j], f.mul(x[i], y[j]));
                acc = f.add(acc, t);
            }
        }
        acc
    }

    /// Gram matrix of the polar form: bᵢⱼ = mᵢⱼ for i ≠ j, bᵢᵢ = 2mᵢᵢ
    /// (zero diagonal in characteristic 2).
    pub fn b_matrix(&self) -> Vec<Vec<usize>> {
        let f = self.f;
        let mut bm = vec![vec![0; self.n]; self.n];
        for i in 0..self.n {
            bm[i][i] = f.add(self.coeff(i, i), self.coeff(i, i));
            for j in i + 1..self.n {
                bm[i][j] = self.coeff(i, j);
                bm[j][i] = self.coeff(i, j);
            }
        }
        bm
    }

    /// Basis of rad_b = {x : b(x, V) = 0}.
    pub fn radical_b(&self) -> Vec<Vec<usize>> {
        fq_kernel(self.f, &self.b_matrix(), self.n)
    }

    /// Basis of rad_Q = {x ∈ rad_b : Q(x) = 0}. Away from characteristic 2
    /// this is rad_b; in characteristic 2, Q is additive on rad_b and the
    /// kernel is cut out by one square-root substitution.
    pub fn radical_q(&self) -> Vec<Vec<usize>> {
        let rb = self.radical_b();
        if !self.f.char_is_two() {
            return rb;
        }
        let f = self.f;
        let vals: Vec<usize> = rb.iter().map(|v| self.q_value(v)).collect();
        let Some(j) = vals.iter().position(|&v| v != 0) else {
            return rb;
        };
        // wᵢ = vᵢ + √(Q(vᵢ)/Q(vⱼ))·vⱼ kills Q: the polar form vanishes on
        // rad_b and squaring is the Frobenius.
        let mut out = Vec::new();
        for (i, v) in rb.iter().enumerate() {
            if i == j {
                continue;
            }
            let c = f
                .sqrt(f.mul(vals[i], f.inv(vals[j])))
                .expect("char-2 squaring is onto");
            let w: Vec<usize> = v
                .iter()
                .zip(&rb[j])
                .map(|(&a, &b)| f.add(a, f.mul(c, b)))
                .collect();
            out.push(w);
        }
        out
    }

    /// Regular means rad_Q = 0; this is the right notion in every
    /// characteristic (an odd-dimensional form in characteristic 2 may be
    /// regular while its polar form is degenerate).
    pub fn is_regular(&self) -> bool {
        self.radical_q().is_empty()
    }

    /// First nonzero isotropic vector in lexicographic order, if any. Every
    /// regular form in ≥ 3 variables has one (a form of degree 2 < n has a
    /// nontrivial zero over a finite field); anisotropic forms return None.
    pub fn find_isotropic(&self) -> Option<Vec<usize>> {
        if self.n == 0 {
            return None;
        }
        let q = self.f.q;
        let mut x = vec![0usize; self.n];
        loop {
            let mut i = self.n;
            while i > 0 {
                x[i - 1] += 1;
                if x[i - 1] == q {
                    x[i - 1] = 0;
                    i -= 1;
                } else {
                    break;
                }
            }
            if i == 0 {
                return None;
            }
            if self.q_value(&x) == 0 {
                return Some(x);
            }
        }
    }

    /// Orthogonal (block) sum.
    pub fn perp(&self, other: &FqForm<'a>) -> FqForm<'a> {
        assert!(self.f.same_field(other.f), "forms over different fields");
        let n = self.n + other.n;
        let mut m = vec![0; n * (n + 1) / 2];
        for i in 0..self.n {
            for j in i..self.n {
                m[Self::pos(n, i, j)] = self.coeff(i, j);
            }
        }
        for i in 0..other.n {
            for j in i..other.n {
                m[Self::pos(n, self.n + i, self.n + j)] = other.coeff(i, j);
            }
        }
        FqForm::new(self.f, n, &m)
    }

    /// The form restricted to the span of `basis` (coordinates in that basis).
    pub fn restricted(&self, basis: &[Vec<usize>]) -> FqForm<'a> {
        let k = basis.len();
        let mut m = vec![0; k * (k + 1) / 2];
        for i in 0..k {
            m[Self::pos(k, i, i)] = self.q_value(&basis[i]);
            for j in i + 1..k {
                m[Self::pos(k, i, j)] = self.b_value(&basis[i], &basis[j]);
            }
        }
        FqForm::new(self.f, k, &m)
    }

    /// Split off hyperbolic planes until nothing isotropic remains; returns
    /// the anisotropic kernel. Requires rad_Q = 0.
    pub fn anisotropic_kernel(&self) -> FqForm<'a> {
        let f = self.f;
        let mut cur = self.clone();
        while let Some(z) = cur.find_isotropic() {
            let n = cur.n;
            let bm = cur.b_matrix();
            // b(z, eⱼ) as a row of functionals; z ∉ rad_b since rad_Q = 0.
            let bz: Vec<usize> = (0..n)
                .map(|j| {
                    (0..n).fold(0, |acc, i| f.add(acc, f.mul(z[i], bm[i][j])))
                })
                .collect();
            let j = bz
                .iter()
                .position(|&v| v != 0)
                .expect("isotropic vector outside rad_b; regular form required");
            // y = eⱼ/b(z,eⱼ), then y ← y − Q(y)z makes (z, y) hyperbolic.
            let mut y = vec![0; n];
            y[j] = f.inv(bz[j]);
            let c = f.neg(cur.q_value(&y));
            for (yi, zi) in y.iter_mut().zip(&z) {
                *yi = f.add(*yi, f.mul(c, *zi));
            }
            let by: Vec<usize> = (0..n)
                .map(|jj| {
                    (0..n).fold(0, |acc, i| f.add(acc, f.mul(y[i], bm[i][jj])))
                })
                .collect();
            let complement = fq_kernel(f, &[bz, by], n);
            debug_assert_eq!(complement.len(), n - 2);
            cur = cur.restricted(&complement);
        }
        cur
    }

    /// Exhaustively count isometries `other` → `self` (equal forms: the
    /// orthogonal group). `special` applies the determinant-1 condition in
    /// odd characteristic and the Dickson condition rank(φ+1) ≡ 0 (mod 2)
    /// in characteristic 2; for odd dimension in characteristic 2 every
    /// isometry is special.
    pub fn count_isometries(&self, other: &FqForm) -> IsometryCount {
        assert!(self.f.same_field(other.f), "forms over different fields");
        let mut count = IsometryCount { total: 0, special: 0 };
        if self.n != other.n {
            return count;
        }
        let n = self.n;
        if n == 0 {
            return IsometryCount { total: 1, special: 1 };
        }
        let f = self.f;
        let q = f.q;

        // Bucket the nonzero vectors by Q-value once.
        let mut by_q: Vec<Vec<Vec<usize>>> = vec![Vec::new(); q];
        let mut v = vec![0usize; n];
        loop {
            let mut i = n;
            while i > 0 {
                v[i - 1] += 1;
                if v[i - 1] == q {
                    v[i - 1] = 0;
                    i -= 1;
                } else {
                    break;
                }
            }
            if i == 0 {
                break;
            }
            by_q[self.q_value(&v)].push(v.clone());
        }
        let target_b = other.b_matrix();

        let mut cols: Vec<Vec<usize>> = Vec::with_capacity(n);
        self.isometry_dfs(&by_q, &target_b, other, &mut cols, &mut count);
        count
    }

    fn isometry_dfs(
        &self,
        by_q: &[Vec<Vec<usize>>],
        target_b: &[Vec<usize>],
        other: &FqForm,
        cols: &mut Vec<Vec<usize>>,
        count: &mut IsometryCount,
    ) {
        let f = self.f;
        let n = self.n;
        let j = cols.len();
        if j == n {
            let rows: Vec<Vec<usize>> =
                (0..n).map(|i| (0..n).map(|c| cols[c][i]).collect()).collect();
            if fq_rank(f, &rows) < n {
                return;
            }
            count.total += 1;
            let special = if !f.char_is_two() {
                fq_det(f, &rows) == 1
            } else if n % 2 == 1 {
                true
            } else {
                let shifted: Vec<Vec<usize>> = (0..n)
                    .map(|i| {
                        (0..n)
                            .map(|c| if i == c { f.add(cols[c][i], 1) } else { cols[c][i] })
                            .collect()
                    })
                    .collect();
                fq_rank(f, &shifted) % 2 == 0
            };
            if special {
                count.special += 1;
            }
            return;
        }
        'cand: for c in &by_q[other.coeff(j, j)] {
            for (i, prev) in cols.iter().enumerate() {
                if self.b_value(prev, c) != target_b[i][j] {
                    continue 'cand;
                }
            }
            cols.push(c.clone());
            self.isometry_dfs(by_q, target_b, other, cols, count);
            cols.pop();
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IsometryCount {
    pub total: u64,
    pub special: u64,
}

/// Isometry type of a regular form over 𝔽_q: odd rank, or even rank split
/// (maximal Witt index m) versus non-split (Witt index m−1).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FormShape {
    Odd,
    SplitEven,
    NonSplitEven,
}

/// Order of the special orthogonal group of a regular n-ary form of the
/// given shape over 𝔽_q. One uniform set of formulas covers every
/// characteristic (in characteristic 2 "special" is the Dickson kernel,
/// and for odd n the group is the full isometry group ≅ Sp_{n−1}):
///
///   n = 2m+1:        q^{m²}·∏_{i=1}^{m}(q^{2i}−1)
///   n = 2m split:    q^{m(m−1)}·(q^m−1)·∏_{i=1}^{m−1}(q^{2i}−1)
///   n = 2m nonsplit: q^{m(m−1)}·(q^m+1)·∏_{i=1}^{m−1}(q^{2i}−1)
pub fn so_order(n: usize, shape: FormShape, q: &Int) -> Int {
    let pow = |b: &Int, k: usize| -> Int {
        let mut acc = Int::one();
        for _ in 0..k {
            acc *= b;
        }
        acc
    };
    match shape {
        FormShape::Odd => {
            assert!(n % 2 == 1, "odd shape needs odd rank");
            let m = n / 2;
            let mut ord = pow(q, m * m);
            for i in 1..=m {
                ord *= pow(q, 2 * i) - Int::one();
            }
            ord
        }
        FormShape::SplitEven | FormShape::NonSplitEven => {
            assert!(n % 2 == 0 && n >= 2, "even shape needs even positive rank");
            let m = n / 2;
            let mut ord = pow(q, m * (m - 1));
            ord *= match shape {
                FormShape::SplitEven => pow(q, m) - Int::one(),
                _ => pow(q, m) + Int::one(),
            };
            for i in 1..m {
                ord *= pow(q, 2 * i) - Int::one();
            }
            ord
        }
    }
}

/// A regular model of each shape: hyperbolic planes Q = x·y, plus x² for odd
/// rank, with the last plane replaced by an anisotropic binary form in the
/// non-split case (x² − r·y² for odd q; x² + xy + c·y² with t²+t+c
/// irreducible in characteristic 2).
pub fn standard_form<'a>(f: &'a Fq, n: usize, shape: FormShape) -> FqForm<'a> {
    let mut m = vec![0usize; n * (n + 1) / 2];
    let mut set = |mv: &mut Vec<usize>, i: usize, j: usize, v: usize| {
        mv[FqForm::pos(n, i, j)] = v;
    };
    match shape {
        FormShape::Odd => {
            assert!(n % 2 == 1, "odd shape needs odd rank");
            for i in 0..n / 2 {
                set(&mut m, 2 * i, 2 * i + 1, 1);
            }
            set(&mut m, n - 1, n - 1, 1);
        }
        FormShape::SplitEven => {
            assert!(n % 2 == 0 && n >= 2, "even shape needs even positive rank");
            for i in 0..n / 2 {
                set(&mut m, 2 * i, 2 * i + 1, 1);
            }
        }
        FormShape::NonSplitEven => {
            assert!(n % 2 == 0 && n >= 2, "even shape needs even positive rank");
            for i in 0..n / 2 - 1 {
                set(&mut m, 2 * i, 2 * i + 1, 1);
            }
            let (a, b) = (n - 2, n - 1);
            if f.char_is_two() {
                let c = (1..f.q)
                    .find(|&c| (0..f.q).all(|x| f.add(f.mul(x, x), f.add(x, c)) != 0))
                    .expect("irreducible t²+t+c exists");
                set(&mut m, a, a, 1);
                set(&mut m, a, b, 1);
                set(&mut m, b, b, c);
            } else {
                set(&mut m, a, a, 1);
                set(&mut m, b, b, f.neg(f.nonresidue()));
            }
        }
    }
    FqForm::new(f, n, &m)
}

/// Abstract isomorphism type of the Witt group W(𝔽_q).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WittGroup {
    Cyclic2,
    Cyclic4,
    KleinFour,
}

/// W(𝔽_q) in closed form: ℤ/2 in characteristic 2 (classes of even-rank
/// forms under Arf), ℤ/4 for q ≡ 3 (mod 4), ℤ/2 × ℤ/2 for q ≡ 1 (mod 4).
pub fn witt_group_structure(q: usize) -> Result<WittGroup, QuadError> {
    let p = (2..=q.max(2)).find(|d| q % d == 0).unwrap_or(0);
    let mut m = q;
    while p > 1 && m % p == 0 {
        m /= p;
    }
    if q < 2 || m != 1 || !small_prime(p) {
        return Err(QuadError::UnsupportedField { q });
    }
    Ok(if q % 2 == 0 {
        WittGroup::Cyclic2
    } else if q % 4 == 3 {
        WittGroup::Cyclic4
    } else {
        WittGroup::KleinFour
    })
}

/// Determine W(𝔽_q) by brute force: enumerate the regular forms of rank ≤ 2
/// (rank exactly 2 with nondegenerate polar form in characteristic 2), keep
/// the anisotropic ones, merge isometric ones by exhaustive isometry counts,
/// then read off the group from the element count and orders under
/// orthogonal sum followed by hyperbolic splitting.
pub fn witt_group_census(f: &Fq) -> WittGroup {
    let q = f.q;
    let mut classes: Vec<FqForm> = Vec::new();
    let mut candidates: Vec<FqForm> = Vec::new();
    if !f.char_is_two() {
        for a in 1..q {
            candidates.push(FqForm::from_diag(f, &[a]));
        }
    }
    for a in 0..q {
        for b in 0..q {
            for c in 0..q {
                let form = FqForm::new(f, 2, &[a, b, c]);
                if fq_rank(f, &form.b_matrix()) == 2 {
                    candidates.push(form);
                }
            }
        }
    }
    for form in candidates {
        if form.find_isotropic().is_some() {
            continue;
        }
        if classes
            .iter()
            .all(|known| form.count_isometries(known).total == 0)
        {
            classes.push(form);
        }
    }

    // Orders of the nonzero classes; the zero class is the empty form.
    let mut max_order = 1;
    for class in &classes {
        let mut acc = class.clone();
        let mut order = 1;
        while acc.dim() > 0 {
            acc = acc.perp(class).anisotropic_kernel();
            order += 1;
        }
        max_order = max_order.max(order);
    }
    match (classes.len() + 1, max_order) {
        (2, 2) => WittGroup::Cyclic2,
        (4, 4) => WittGroup::Cyclic4,
        (4, 2) => WittGroup::KleinFour,
        other => panic!("census found an unexpected Witt group shape {other:?}"),
    }
}
