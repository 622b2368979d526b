//! Quadratic symbols over ℚ_v: the Legendre symbol, local squares, and the
//! Hilbert symbol.
//!
//! `hilbert_symbol` evaluates closed residue formulas. The defining property —
//! (a,b)_v = +1 iff x² − ay² − bz² has a nontrivial zero over ℚ_v — is kept
//! alongside as [`hilbert_symbol_search`], an exhaustive primitive-zero search
//! to a Hensel-sufficient depth. The search is the ground truth; the test
//! suite holds the formulas to it over a dense grid of inputs.

use crate::place::{int_valuation, unit_part};
use crate::{primes, Int, NumError, Place, Rat, Result};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Legendre symbol (a|p) ∈ {−1, 0, +1} for an odd prime p, via Euler's
/// criterion.
pub fn legendre_symbol(a: &Int, p: &Int) -> Result<i32> {
    if p.is_even() {
        return Err(NumError::EvenModulus(p.clone()));
    }
    if !primes::is_prime(p) {
        return Err(NumError::NotPrime(p.clone()));
    }
    let a_mod = a.mod_floor(p);
    if a_mod.is_zero() {
        return Ok(0);
    }
    let e = (p - Int::one()) >> 1;
    let pow = a_mod.modpow(&e, p);
    Ok(if pow.is_one() { 1 } else { -1 })
}

/// Smallest positive quadratic nonresidue mod an odd prime.
pub fn smallest_nonresidue(p: &Int) -> Int {
    let mut n = Int::from(2);
    loop {
        if legendre_symbol(&n, p).expect("odd prime") == -1 {
            return n;
        }
        n += 1;
    }
}

// Legendre symbol of a p-adic unit given as a rational: (m/n | p) = (m|p)(n|p)
// since (n|p)(n⁻¹|p) = (1|p) = 1 makes inversion invisible to the symbol.
fn legendre_rat_unit(u: &Rat, p: &Int) -> i32 {
    let num = legendre_symbol(u.numer(), p).expect("odd prime, unit numerator");
    let den = legendre_symbol(u.denom(), p).expect("odd prime, unit denominator");
    debug_assert!(num != 0 && den != 0, "not a p-adic unit");
    num * den
}

// Residue mod 8 of a 2-adic unit m/n, in {1,3,5,7}. For odd n, n² ≡ 1 mod 8,
// so n⁻¹ ≡ n and m/n ≡ m·n mod 8.
fn unit_mod8(u: &Rat) -> u8 {
    let m = u.numer().mod_floor(&Int::from(8));
    let n = u.denom().mod_floor(&Int::from(8));
    ((m * n).mod_floor(&Int::from(8)))
        .to_u8()
        .expect("residue mod 8")
}

/// Is the nonzero rational `a` a square in ℚ_v?
///
/// Real place: a > 0. Odd p: even valuation and the unit part a residue.
/// p = 2: even valuation and unit part ≡ 1 mod 8.
pub fn is_square_local(a: &Rat, v: &Place) -> Result<bool> {
    if a.is_zero() {
        return Err(NumError::ZeroArgument);
    }
    match v {
        Place::Real => Ok(a.is_positive()),
        Place::Prime(p) => {
            if !primes::is_prime(p) {
                return Err(NumError::NotPrime(p.clone()));
            }
            let (val, u) = unit_part(a, p);
            if val % 2 != 0 {
                return Ok(false);
            }
            if p.is_even() {
                Ok(unit_mod8(&u) == 1)
            } else {
                Ok(legendre_rat_unit(&u, p) == 1)
            }
        }
    }
}

// (u−1)/2 mod 2: nonzero iff u ≡ 3 mod 4.
fn eps2(u_mod8: u8) -> u32 {
    ((u_mod8 % 4) == 3) as u32
}

// (u²−1)/8 mod 2: nonzero iff u ≡ 3, 5 mod 8.
fn omega2(u_mod8: u8) -> u32 {
    (u_mod8 == 3 || u_mod8 == 5) as u32
}

/// Hilbert symbol (a,b)_v ∈ {±1} for nonzero rationals.
///
/// +1 exactly when x² − ay² − bz² has a nontrivial zero over ℚ_v, i.e. when
/// the quaternion algebra (a,b) splits at v. Computed by residue formulas:
///
/// * real place: −1 iff a < 0 and b < 0;
/// * odd p, a = p^α u, b = p^β w: (−1|p)^{αβ} (u|p)^β (w|p)^α;
/// * p = 2: (−1)^{ε(u)ε(w) + α·ω(w) + β·ω(u)} with ε(u) = (u−1)/2,
///   ω(u) = (u²−1)/8 taken mod 2.
pub fn hilbert_symbol(a: &Rat, b: &Rat, v: &Place) -> Result<i32> {
    if a.is_zero() || b.is_zero() {
        return Err(NumError::ZeroArgument);
    }
    match v {
        Place::Real => Ok(if a.is_negative() && b.is_negative() {
            -1
        } else {
            1
        }),
        Place::Prime(p) => {
            if !primes::is_prime(p) {
                return Err(NumError::NotPrime(p.clone()));
            }
            let (alpha, u) = unit_part(a, p);
            let (beta, w) = unit_part(b, p);
            if p.is_even() {
                let (um, wm) = (unit_mod8(&u), unit_mod8(&w));
                let exponent = eps2(um) * eps2(wm)
                    + (alpha.rem_euclid(2) as u32) * omega2(wm)
                    + (beta.rem_euclid(2) as u32) * omega2(um);
                Ok(if exponent % 2 == 0 { 1 } else { -1 })
            } else {
                let mut sign = 1;
                if alpha % 2 != 0 && beta % 2 != 0 {
                    sign *= legendre_symbol(&Int::from(-1), p).expect("odd prime");
                }
                if beta % 2 != 0 {
                    sign *= legendre_rat_unit(&u, p);
                }
                if alpha % 2 != 0 {
                    sign *= legendre_rat_unit(&w, p);
                }
                Ok(sign)
            }
        }
    }
}

/// Product of Hilbert symbols of `a, b` over every place where it can be −1.
/// By the product formula this is always +1; exposed so tests can say so.
pub fn hilbert_product(a: &Rat, b: &Rat) -> Result<i32> {
    let mut prod = 1;
    for v in crate::place::relevant_places(&[a.clone(), b.clone()]) {
        prod *= hilbert_symbol(a, b, &v)?;
    }
    Ok(prod)
}

// ---------------------------------------------------------------------------
// Reference oracle: exhaustive primitive-zero search.
// ---------------------------------------------------------------------------

// Fixed-size bit set over residues, with a doubled variant so that windowed
// 64-bit reads at offset s + c never wrap (s < m, c < m ⇒ s + c < 2m).
struct BitSet {
    words: Vec<u64>,
}

impl BitSet {
    fn new(bits: usize) -> BitSet {
        BitSet {
            // One spare word so unaligned 64-bit windows can always read words[j+1].
            words: vec![0; bits / 64 + 2],
        }
    }

    fn set(&mut self, i: usize) {
        self.words[i / 64] |= 1u64 << (i % 64);
    }

    fn get(&self, i: usize) -> bool {
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    // The 64 bits starting at bit offset `o`.
    fn window(&self, o: usize) -> u64 {
        let (j, r) = (o / 64, o % 64);
        if r == 0 {
            self.words[j]
        } else {
            self.words[j] >> r | self.words[j + 1] << (64 - r)
        }
    }

    fn iter_ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(j, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let t = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(j * 64 + t)
            })
        })
    }
}

// Is there s ∈ A and c ∈ C with s + c ∈ T (mod m)? `t2` must be the doubled
// bitset of T over [0, 2m). Word-parallel: for each c, slide A against t2.
fn sum_hits(a: &BitSet, c: &BitSet, t2: &BitSet, m: usize) -> bool {
    let n_words = m / 64 + 1;
    c.iter_ones().any(|c0| {
        (0..n_words).any(|j| {
            let w = a.words[j];
            w != 0 && w & t2.window(64 * j + c0) != 0
        })
    })
}

/// Exhaustive primitive-zero search deciding the Hilbert symbol for nonzero
/// **integers** a, b at p: searches x² − ay² − bz² ≡ 0 mod p^k over all
/// residue triples with at least one unit coordinate, k = 3 + 2·max(v_p(a),
/// v_p(b)). Such a zero lifts to ℚ_p by Hensel's lemma (the unit coordinate's
/// partial derivative 2·coeff·x has valuation ≤ (k−1)/2), and conversely a
/// ℚ_p-zero scales to a primitive one mod every power, so the search decides
/// the symbol exactly. Slow and memory-hungry by design — this is the
/// reference the closed formulas are tested against, not a production path.
pub fn hilbert_symbol_search(a: &Int, b: &Int, p: &Int) -> i32 {
    assert!(!a.is_zero() && !b.is_zero(), "symbol of zero");
    assert!(primes::is_prime(p), "search requires a prime");
    let k = 3 + 2 * int_valuation(a, p).max(int_valuation(b, p));
    let p_u = p.to_u64().expect("oracle prime fits u64");
    let m_int = p.pow(k as u32);
    let m = m_int.to_u64().expect("oracle modulus fits u64") as usize;
    assert!(m <= 1 << 27, "oracle modulus {m} too large for search");
    let a_m = a.mod_floor(&m_int).to_u64().expect("reduced") as usize;
    let b_m = b.mod_floor(&m_int).to_u64().expect("reduced") as usize;

    // Squares mod m, with and without the unit-argument restriction.
    let mut sq_all = BitSet::new(m);
    let mut sq_unit = BitSet::new(m);
    for x in 0..m as u64 {
        let s = ((x as u128 * x as u128) % m as u128) as usize;
        sq_all.set(s);
        if x % p_u != 0 {
            sq_unit.set(s);
        }
    }
    // Doubled copies of the x²-value sets for wrap-free windowed lookups.
    let mut sq_all2 = BitSet::new(2 * m);
    let mut sq_unit2 = BitSet::new(2 * m);
    for s in sq_all.iter_ones() {
        if s < m {
            sq_all2.set(s);
            sq_all2.set(s + m);
            if sq_unit.get(s) {
                sq_unit2.set(s);
                sq_unit2.set(s + m);
            }
        }
    }
    // a·y² and b·z² value sets.
    let scale = |c: usize, src: &BitSet| {
        let mut out = BitSet::new(m);
        for s in src.iter_ones() {
            if s < m {
                out.set((c as u128 * s as u128 % m as u128) as usize);
            }
        }
        out
    };
    let ay_all = scale(a_m, &sq_all);
    let ay_unit = scale(a_m, &sq_unit);
    let bz_all = scale(b_m, &sq_all);
    let bz_unit = scale(b_m, &sq_unit);

    // x² = ay² + bz² with x, y, or z a unit, in that case order.
    let found = sum_hits(&ay_all, &bz_all, &sq_unit2, m)
        || sum_hits(&ay_unit, &bz_all, &sq_all2, m)
        || sum_hits(&ay_all, &bz_unit, &sq_all2, m);
    if found {
        1
    } else {
        -1
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{int, rat, rat_int};

    #[test]
    fn legendre_examples() {
        assert_eq!(legendre_symbol(&int(3), &int(7)), Ok(-1));
        assert_eq!(legendre_symbol(&int(2), &int(7)), Ok(1));
        assert_eq!(legendre_symbol(&int(14), &int(7)), Ok(0));
        assert_eq!(legendre_symbol(&int(-1), &int(5)), Ok(1));
        assert_eq!(legendre_symbol(&int(-1), &int(7)), Ok(-1));
        assert_eq!(
            legendre_symbol(&int(3), &int(2)),
            Err(NumError::EvenModulus(int(2)))
        );
        assert_eq!(
            legendre_symbol(&int(3), &int(9)),
            Err(NumError::NotPrime(int(9)))
        );
    }

    #[test]
    fn local_square_examples() {
        assert_eq!(is_square_local(&rat_int(17), &Place::two()), Ok(true));
        assert_eq!(is_square_local(&rat_int(2), &Place::at(5)), Ok(false));
        assert_eq!(is_square_local(&rat_int(-4), &Place::Real), Ok(false));
        assert_eq!(is_square_local(&rat_int(4), &Place::at(3)), Ok(true));
        assert_eq!(is_square_local(&rat(1, 4), &Place::two()), Ok(true));
        assert_eq!(is_square_local(&rat_int(8), &Place::two()), Ok(false));
        assert_eq!(
            is_square_local(&rat_int(0), &Place::Real),
            Err(NumError::ZeroArgument)
        );
    }

    #[test]
    fn hilbert_examples() {
        let two = Place::two();
        assert_eq!(hilbert_symbol(&rat_int(-1), &rat_int(-1), &two), Ok(-1));
        assert_eq!(
            hilbert_symbol(&rat_int(-1), &rat_int(-1), &Place::Real),
            Ok(-1)
        );
        assert_eq!(
            hilbert_symbol(&rat_int(-1), &rat_int(-1), &Place::at(3)),
            Ok(1)
        );
        // (1, b) and (a, −a) always split.
        for b in [-7i64, -1, 2, 15] {
            assert_eq!(hilbert_symbol(&rat_int(1), &rat_int(b), &two), Ok(1));
            assert_eq!(
                hilbert_symbol(&rat_int(b), &rat_int(-b), &Place::at(5)),
                Ok(1)
            );
            assert_eq!(
                hilbert_symbol(&rat_int(b), &rat_int(-b), &Place::Real),
                Ok(1)
            );
        }
    }

    #[test]
    fn hilbert_search_base_cases() {
        // x² + y² + z² ≡ 0 mod 8 has no primitive zero.
        assert_eq!(hilbert_symbol_search(&int(-1), &int(-1), &int(2)), -1);
        assert_eq!(hilbert_symbol_search(&int(-1), &int(-1), &int(3)), 1);
        assert_eq!(hilbert_symbol_search(&int(1), &int(-1), &int(2)), 1);
        assert_eq!(hilbert_symbol_search(&int(2), &int(5), &int(5)), -1);
    }

    #[test]
    fn product_formula_spot_checks() {
        for (a, b) in [(-1, -1), (2, 3), (-5, 7), (30, -30), (15, 21)] {
            assert_eq!(hilbert_product(&rat_int(a), &rat_int(b)), Ok(1));
        }
    }
}
