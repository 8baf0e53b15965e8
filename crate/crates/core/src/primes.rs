//! Rational primes: sieve, primality, integer factorization, and the
//! classical prime-sum estimates used throughout the bound formulas.

use crate::interval::{ln_biguint, RealInterval};
use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use std::collections::BTreeMap;

/// Primes up to `n` inclusive, by Eratosthenes.
pub fn sieve(n: u64) -> Vec<u64> {
    if n < 2 {
        return Vec::new();
    }
    let n = n as usize;
    let mut composite = vec![false; n + 1];
    let mut out = Vec::new();
    for p in 2..=n {
        if !composite[p] {
            out.push(p as u64);
            let mut k = p * p;
            while k <= n {
                composite[k] = true;
                k += p;
            }
        }
    }
    out
}

fn mulmod(a: u128, b: u128, m: u128) -> u128 {
    // m < 2^64 keeps the product inside u128
    a * b % m
}

fn powmod(mut base: u128, mut exp: u128, m: u128) -> u128 {
    let mut acc = 1u128 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mulmod(acc, base, m);
        }
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Deterministic Miller–Rabin for `n < 2^64`.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == p {
            return true;
        }
        if n % p == 0 {
            return false;
        }
    }
    let n128 = n as u128;
    let mut d = n - 1;
    let mut s = 0u32;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    // this base set decides primality for all n < 2^64
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = powmod(a as u128, d as u128, n128);
        if x == 1 || x == n128 - 1 {
            continue;
        }
        for _ in 1..s {
            x = mulmod(x, x, n128);
            if x == n128 - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Strong probable-prime test for big integers (Miller–Rabin with fixed
/// bases, deterministic below 3.3·10^24 and overwhelmingly reliable above).
pub fn is_prime_big(n: &BigUint) -> bool {
    if let Some(small) = n.to_u64() {
        return is_prime_u64(small);
    }
    let one = BigUint::one();
    let two = BigUint::from(2u32);
    if (n % &two).is_zero() {
        return false;
    }
    let n_minus_1 = n - &one;
    let mut d = n_minus_1.clone();
    let mut s = 0u64;
    while (&d % &two).is_zero() {
        d >>= 1;
        s += 1;
    }
    'witness: for a in [2u32, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41] {
        let a = BigUint::from(a);
        if &a >= n {
            continue;
        }
        let mut x = a.modpow(&d, n);
        if x == one || x == n_minus_1 {
            continue;
        }
        for _ in 1..s {
            x = (&x * &x) % n;
            if x == n_minus_1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn pollard_rho_u128(n: u128) -> Option<u128> {
    // Brent's cycle variant with batched gcds
    if n % 2 == 0 {
        return Some(2);
    }
    for c in 1u128..40 {
        let f = |x: u128| (mulmod(x, x, n) + c) % n;
        let mut x = 2u128;
        let mut y = 2u128;
        let mut d = 1u128;
        let mut count = 0u64;
        while d == 1 {
            x = f(x);
            y = f(f(y));
            let diff = if x > y { x - y } else { y - x };
            d = gcd_u128(diff, n);
            count += 1;
            if count > 50_000_000 {
                break;
            }
        }
        if d != n && d != 1 {
            return Some(d);
        }
    }
    None
}

fn gcd_u128(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

fn pollard_rho_big(n: &BigUint, budget: u64) -> Option<BigUint> {
    let one = BigUint::one();
    for c in 1u32..20 {
        let c = BigUint::from(c);
        let mut x = BigUint::from(2u32);
        let mut y = x.clone();
        let mut d = one.clone();
        let mut count = 0u64;
        while d.is_one() {
            x = (&x * &x + &c) % n;
            y = (&y * &y + &c) % n;
            y = (&y * &y + &c) % n;
            let diff = if x > y { &x - &y } else { &y - &x };
            if diff.is_zero() {
                break;
            }
            d = diff.gcd(n);
            count += 1;
            if count > budget {
                return None;
            }
        }
        if !d.is_one() && &d != n {
            return Some(d);
        }
    }
    None
}

/// Full factorization of a positive integer into `prime -> exponent`.
/// Fails (returns `None`) only when a large composite cofactor resists the
/// rho budget; callers that need certainty treat that as an error.
pub fn factor_big(n: &BigUint) -> Option<BTreeMap<BigUint, u32>> {
    let mut out = BTreeMap::new();
    if n.is_zero() {
        return None;
    }
    let mut rest = n.clone();
    // trial division by small primes
    for p in sieve(100_000) {
        if rest.is_one() {
            break;
        }
        let pb = BigUint::from(p);
        if &pb * &pb > rest {
            break;
        }
        while (&rest % &pb).is_zero() {
            rest /= &pb;
            *out.entry(pb.clone()).or_insert(0) += 1;
        }
    }
    let mut stack = vec![rest];
    while let Some(m) = stack.pop() {
        if m.is_one() {
            continue;
        }
        if is_prime_big(&m) {
            *out.entry(m).or_insert(0) += 1;
            continue;
        }
        // perfect powers split for free
        if let Some((root, k)) = perfect_power(&m) {
            for _ in 0..k {
                stack.push(root.clone());
            }
            continue;
        }
        let d = if let Some(small) = m.to_u128() {
            pollard_rho_u128(small).map(BigUint::from)
        } else {
            pollard_rho_big(&m, 4_000_000)
        };
        match d {
            Some(d) => {
                stack.push(&m / &d);
                stack.push(d);
            }
            None => return None,
        }
    }
    Some(out)
}

/// Writes `n = root^k` with `k` maximal; `None` when `k = 1`.
fn perfect_power(n: &BigUint) -> Option<(BigUint, u32)> {
    let bits = n.bits();
    for k in (2..=bits.max(2) as u32).rev() {
        let root = n.nth_root(k);
        if root.pow(k) == *n {
            return Some((root, k));
        }
    }
    None
}

/// Distinct prime divisors of a positive integer, sorted.
pub fn prime_divisors(n: &BigUint) -> Option<Vec<BigUint>> {
    Some(factor_big(n)?.into_keys().collect())
}

/// One evaluation of the three prime-sum estimates at `x`:
/// `#\{p <= x\}`, `sum log p`, and `sum log p/(p-1)`, each against its
/// classical upper bound.
#[derive(Clone, Debug)]
pub struct PrimeSumCheck {
    pub x: u64,
    pub pi_sum: u64,
    pub theta_sum: RealInterval,
    pub mertens_sum: RealInterval,
    pub pi_bound: f64,
    pub theta_bound: f64,
    pub mertens_bound: f64,
    pub bounds_hold: (bool, bool, bool),
}

/// Evaluates the prime-sum inequalities at a single `x >= 2`.
pub fn prime_sum_checks(x: u64) -> PrimeSumCheck {
    assert!(x >= 2);
    let primes = sieve(x);
    let mut check = None;
    scan_prime_sums(&primes, x, |c| {
        if c.x == x {
            check = Some(c);
        }
    });
    check.expect("x >= 2 always produces a record")
}

/// Streams a `PrimeSumCheck` for every integer `2 <= x <= limit`, reusing a
/// single sieve and running sums. The driver for the exhaustive audit.
pub fn scan_prime_sums<F: FnMut(PrimeSumCheck)>(primes: &[u64], limit: u64, mut f: F) {
    let mut pi: u64 = 0;
    let mut theta = RealInterval::zero();
    let mut mertens = RealInterval::zero();
    let mut idx = 0usize;
    for x in 2..=limit {
        while idx < primes.len() && primes[idx] <= x {
            let p = primes[idx];
            pi += 1;
            let logp = ln_biguint(&BigUint::from(p));
            theta = theta.add(logp);
            mertens = mertens.add(logp.div(RealInterval::exact((p - 1) as f64)));
            idx += 1;
        }
        let xf = x as f64;
        let pi_bound = 1.26 * xf / xf.ln();
        let theta_bound = 1.02 * xf;
        let mertens_bound = 2.0 * xf.ln();
        f(PrimeSumCheck {
            x,
            pi_sum: pi,
            theta_sum: theta,
            mertens_sum: mertens,
            pi_bound,
            theta_bound,
            mertens_bound,
            bounds_hold: (
                (pi as f64) <= pi_bound,
                theta.hi <= theta_bound,
                mertens.hi <= mertens_bound,
            ),
        });
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sieve_small() {
        assert_eq!(sieve(10), vec![2, 3, 5, 7]);
        assert_eq!(sieve(1), Vec::<u64>::new());
    }

    #[test]
    fn primality() {
        assert!(is_prime_u64(2));
        assert!(is_prime_u64(1_000_000_007));
        assert!(!is_prime_u64(1_000_000_001));
        assert!(is_prime_big(&BigUint::from(2305843009213693951u64))); // 2^61-1
    }

    #[test]
    fn factor_roundtrip() {
        let n = BigUint::from(2u32).pow(8) * BigUint::from(3u32).pow(2) * BigUint::from(101u32);
        let f = factor_big(&n).unwrap();
        let mut prod = BigUint::one();
        for (p, e) in &f {
            prod *= p.pow(*e);
        }
        assert_eq!(prod, n);
        assert_eq!(f[&BigUint::from(2u32)], 8);
    }

    #[test]
    fn prime_sums_at_ten() {
        let c = prime_sum_checks(10);
        assert_eq!(c.pi_sum, 4);
        // theta(10) = log 210
        assert!(c.theta_sum.contains(210f64.ln()));
        assert!(c.mertens_sum.contains(
            2f64.ln() + 3f64.ln() / 2.0 + 5f64.ln() / 4.0 + 7f64.ln() / 6.0
        ));
        assert_eq!(c.bounds_hold, (true, true, true));
    }
}
