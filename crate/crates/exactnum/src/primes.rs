//! Primality testing and factorization.
//!
//! Miller–Rabin with a fixed witness set (deterministic for everything below
//! 3.3·10²⁴, far beyond what lattice invariants produce), trial division for
//! small factors, and Brent's cycle variant of Pollard's rho for the rest.

use crate::Int;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

// Sorted witness set; deterministic for n < 3_317_044_064_679_887_385_961_981.
const MR_WITNESSES: [u32; 13] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41];

const SMALL_PRIMES: [u32; 25] = [
    2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89,
    97,
];

/// Primality test. Exact for every input this crate's callers produce; for
/// inputs beyond 3.3·10²⁴ the fixed witness set is merely overwhelming odds.
pub fn is_prime(n: &Int) -> bool {
    if n.sign() == num_bigint::Sign::Minus {
        return false;
    }
    for &q in &SMALL_PRIMES {
        let q = Int::from(q);
        if *n == q {
            return true;
        }
        if n.is_multiple_of(&q) {
            return false;
        }
    }
    if *n < Int::from(97u32 * 97) {
        // No prime factor ≤ 97 and below 97²: prime unless it's 0 or 1.
        return *n > Int::one();
    }
    miller_rabin(n)
}

fn miller_rabin(n: &Int) -> bool {
    // n odd, n > 97², no small factors.
    let one = Int::one();
    let n_minus_1 = n - &one;
    let s = n_minus_1.trailing_zeros().expect("n-1 is nonzero");
    let d = &n_minus_1 >> s;
    'witness: for &a in &MR_WITNESSES {
        let a = Int::from(a);
        let mut x = a.modpow(&d, n);
        if x.is_one() || x == n_minus_1 {
            continue;
        }
        for _ in 1..s {
            x = x.modpow(&Int::from(2u32), n);
            if x == n_minus_1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Factor |n| into a sorted list of (prime, exponent) pairs. Panics on n = 0.
pub fn factor(n: &Int) -> Vec<(Int, u32)> {
    assert!(!n.is_zero(), "cannot factor zero");
    let mut m = n.abs();
    let mut factors: Vec<(Int, u32)> = Vec::new();
    for &q in &SMALL_PRIMES {
        let q = Int::from(q);
        let mut e = 0u32;
        while m.is_multiple_of(&q) {
            m /= &q;
            e += 1;
        }
        if e > 0 {
            factors.push((q, e));
        }
    }
    let mut stack = vec![m];
    let mut found: Vec<Int> = Vec::new();
    while let Some(m) = stack.pop() {
        if m.is_one() {
            continue;
        }
        if is_prime(&m) {
            found.push(m);
            continue;
        }
        let d = pollard_brent(&m);
        stack.push(&m / &d);
        stack.push(d);
    }
    found.sort();
    for p in found {
        match factors.last_mut() {
            Some((q, e)) if *q == p => *e += 1,
            _ => factors.push((p, 1)),
        }
    }
    factors.sort();
    factors
}

// Brent's variant of Pollard's rho; returns a nontrivial divisor of composite odd m.
fn pollard_brent(m: &Int) -> Int {
    // Perfect squares defeat rho's gcd trick less often than they deserve; peel them off.
    let root = m.sqrt();
    if &root * &root == *m {
        return root;
    }
    let one = Int::one();
    for c in 1u64.. {
        let c = Int::from(c);
        let f = |x: &Int| (x * x + &c) % m;
        let mut y = Int::from(2u32);
        let (mut cycle, mut d) = (1u64, one.clone());
        'outer: while d.is_one() {
            let x = y.clone();
            for _ in 0..cycle {
                y = f(&y);
            }
            let mut count = 0u64;
            while count < cycle {
                // Batch gcd every 128 steps to amortize the BigInt gcd cost.
                let mut prod = one.clone();
                let y_save = y.clone();
                let batch = 128.min(cycle - count);
                for _ in 0..batch {
                    y = f(&y);
                    prod = (&prod * ((&x - &y).abs() % m)) % m;
                }
                count += batch;
                d = prod.gcd(m);
                if !d.is_one() {
                    if d == *m {
                        // Overshot inside the batch; replay one step at a time.
                        y = y_save;
                        loop {
                            y = f(&y);
                            d = (&x - &y).abs().gcd(m);
                            if !d.is_one() {
                                break;
                            }
                        }
                    }
                    break 'outer;
                }
            }
            cycle *= 2;
        }
        if d != *m {
            return d;
        }
        // Rare: the whole cycle collapsed at once; retry with the next polynomial.
    }
    unreachable!("pollard_brent: exhausted polynomials");
}

/// Sorted distinct prime divisors of |n|; n must be nonzero.
pub fn prime_divisors(n: &Int) -> Vec<Int> {
    factor(n).into_iter().map(|(p, _)| p).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::int;

    #[test]
    fn small_primality() {
        let primes = [2i64, 3, 5, 7, 97, 101, 65537, 2147483647];
        let composites = [0i64, 1, 4, 91, 97 * 97, 65535, 2147483649];
        for p in primes {
            assert!(is_prime(&int(p)), "{p} should be prime");
        }
        for c in composites {
            assert!(!is_prime(&int(c)), "{c} should not be prime");
        }
        assert!(!is_prime(&int(-7)));
    }

    #[test]
    fn strong_pseudoprimes_rejected() {
        // 3215031751 is the smallest strong pseudoprime to bases 2,3,5,7.
        assert!(!is_prime(&Int::from(3215031751u64)));
        assert!(!is_prime(&(Int::from(1000003u64) * Int::from(1000033u64))));
    }

    #[test]
    fn factor_roundtrip() {
        for n in [2i64, 12, 360, 1001, 65536, 600851475143, -840] {
            let f = factor(&int(n));
            let mut prod = Int::one();
            for (p, e) in &f {
                assert!(is_prime(p));
                prod *= p.pow(*e);
            }
            assert_eq!(prod, int(n).abs());
        }
    }

    #[test]
    fn factor_semiprime() {
        let n = Int::from(1000003u64) * Int::from(1000033u64);
        let f = factor(&n);
        assert_eq!(f.len(), 2);
        assert_eq!(f[0], (Int::from(1000003u64), 1));
        assert_eq!(f[1], (Int::from(1000033u64), 1));
    }

    #[test]
    fn factor_perfect_power() {
        let f = factor(&Int::from(1000003u64).pow(2));
        assert_eq!(f, vec![(Int::from(1000003u64), 2)]);
    }
}
