//! Small shared helpers for rational/integer conversions.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub fn q(n: i64) -> BigRational {
    BigRational::from(BigInt::from(n))
}

pub fn qr(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Least common multiple of the denominators of a rational family.
pub fn common_denominator<'a, I: IntoIterator<Item = &'a BigRational>>(items: I) -> BigInt {
    let mut l = BigInt::one();
    for x in items {
        l = l.lcm(x.denom());
    }
    l
}

/// Greatest common divisor of the numerators after clearing denominators;
/// zero for an all-zero family.
pub fn integer_content(items: &[BigInt]) -> BigInt {
    let mut g = BigInt::zero();
    for x in items {
        g = g.gcd(x);
    }
    g
}

/// v_p of a nonzero rational (negative for denominators).
pub fn valuation_rational(x: &BigRational, p: &BigUint) -> i64 {
    assert!(!x.is_zero(), "valuation of zero");
    let p = BigInt::from(p.clone());
    let mut v = 0i64;
    let mut n = x.numer().abs();
    while (&n % &p).is_zero() {
        n /= &p;
        v += 1;
    }
    let mut d = x.denom().abs();
    while (&d % &p).is_zero() {
        d /= &p;
        v -= 1;
    }
    v
}

pub fn gcd_u64(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

pub fn gcd_i64(a: i64, b: i64) -> i64 {
    gcd_u64(a.unsigned_abs(), b.unsigned_abs()) as i64
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_valuations() {
        let x = qr(18, 1);
        assert_eq!(valuation_rational(&x, &BigUint::from(3u32)), 2);
        assert_eq!(valuation_rational(&x, &BigUint::from(2u32)), 1);
        let y = qr(3, 2);
        assert_eq!(valuation_rational(&y, &BigUint::from(2u32)), -1);
    }
}
