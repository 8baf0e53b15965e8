//! Certified real intervals and complex boxes.
//!
//! Every arithmetic operation rounds outward by a few ulps, so an interval
//! always contains the exact real value it was built from. Transcendental
//! functions (`ln`, `exp`) rely on libm being faithfully rounded and widen
//! by four ulps on each side.

use num_bigint::{BigInt, BigUint, Sign};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::fmt;

/// Ulps of outward slack applied after transcendental operations.
const TRANS_SLACK: u32 = 4;

/// A closed interval `[lo, hi]` guaranteed to contain the exact value.
#[derive(Clone, Copy, PartialEq)]
pub struct RealInterval {
    pub lo: f64,
    pub hi: f64,
}

fn step_down(x: f64, n: u32) -> f64 {
    let mut y = x;
    for _ in 0..n {
        y = y.next_down();
    }
    y
}

fn step_up(x: f64, n: u32) -> f64 {
    let mut y = x;
    for _ in 0..n {
        y = y.next_up();
    }
    y
}

impl RealInterval {
    pub fn exact(x: f64) -> Self {
        RealInterval { lo: x, hi: x }
    }

    pub fn new(lo: f64, hi: f64) -> Self {
        assert!(lo <= hi, "inverted interval [{lo}, {hi}]");
        RealInterval { lo, hi }
    }

    pub fn zero() -> Self {
        Self::exact(0.0)
    }

    /// Widens each endpoint outward by one rounding step.
    fn slack(self, n: u32) -> Self {
        RealInterval {
            lo: step_down(self.lo, n),
            hi: step_up(self.hi, n),
        }
    }

    pub fn width(self) -> f64 {
        self.hi - self.lo
    }

    pub fn midpoint(self) -> f64 {
        0.5 * (self.lo + self.hi)
    }

    pub fn contains(self, x: f64) -> bool {
        self.lo <= x && x <= self.hi
    }

    pub fn add(self, o: Self) -> Self {
        RealInterval {
            lo: self.lo + o.lo,
            hi: self.hi + o.hi,
        }
        .slack(1)
    }

    pub fn sub(self, o: Self) -> Self {
        RealInterval {
            lo: self.lo - o.hi,
            hi: self.hi - o.lo,
        }
        .slack(1)
    }

    pub fn neg(self) -> Self {
        RealInterval {
            lo: -self.hi,
            hi: -self.lo,
        }
    }

    pub fn mul(self, o: Self) -> Self {
        let c = [
            self.lo * o.lo,
            self.lo * o.hi,
            self.hi * o.lo,
            self.hi * o.hi,
        ];
        let lo = c.iter().cloned().fold(f64::INFINITY, f64::min);
        let hi = c.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
        RealInterval { lo, hi }.slack(1)
    }

    pub fn div(self, o: Self) -> Self {
        assert!(
            !(o.lo <= 0.0 && o.hi >= 0.0),
            "division by interval containing zero"
        );
        let c = [
            self.lo / o.lo,
            self.lo / o.hi,
            self.hi / o.lo,
            self.hi / o.hi,
        ];
        let lo = c.iter().cloned().fold(f64::INFINITY, f64::min);
        let hi = c.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
        RealInterval { lo, hi }.slack(1)
    }

    pub fn scale(self, k: f64) -> Self {
        self.mul(Self::exact(k))
    }

    pub fn abs(self) -> Self {
        if self.lo >= 0.0 {
            self
        } else if self.hi <= 0.0 {
            self.neg()
        } else {
            RealInterval {
                lo: 0.0,
                hi: (-self.lo).max(self.hi),
            }
        }
    }

    pub fn max(self, o: Self) -> Self {
        RealInterval {
            lo: self.lo.max(o.lo),
            hi: self.hi.max(o.hi),
        }
    }

    pub fn min(self, o: Self) -> Self {
        RealInterval {
            lo: self.lo.min(o.lo),
            hi: self.hi.min(o.hi),
        }
    }

    pub fn sqrt(self) -> Self {
        assert!(self.hi >= 0.0, "sqrt of negative interval");
        RealInterval {
            lo: self.lo.max(0.0).sqrt(),
            hi: self.hi.sqrt(),
        }
        .slack(2)
    }

    /// Natural logarithm; requires `lo > 0`.
    pub fn ln(self) -> Self {
        assert!(self.lo > 0.0, "ln of interval touching zero: {self:?}");
        if self.lo == 1.0 && self.hi == 1.0 {
            return Self::zero();
        }
        RealInterval {
            lo: self.lo.ln(),
            hi: self.hi.ln(),
        }
        .slack(TRANS_SLACK)
    }

    /// `max(0, ln)` valid for intervals with `hi > 0`; the part of the
    /// interval at or below 1 contributes 0.
    pub fn ln_plus(self) -> Self {
        assert!(self.hi > 0.0, "ln_plus of nonpositive interval");
        let hi = if self.hi <= 1.0 {
            0.0
        } else {
            step_up(self.hi.ln(), TRANS_SLACK)
        };
        let lo = if self.lo <= 1.0 {
            0.0
        } else {
            step_down(self.lo.ln(), TRANS_SLACK)
        };
        RealInterval { lo, hi }
    }

    pub fn exp(self) -> Self {
        RealInterval {
            lo: self.lo.exp(),
            hi: self.hi.exp(),
        }
        .slack(TRANS_SLACK)
    }

    /// `self^q` for positive intervals, `q` an arbitrary rational exponent.
    pub fn pow_rational(self, num: i64, den: i64) -> Self {
        assert!(self.lo > 0.0 && den != 0);
        let q = Self::exact(num as f64).div(Self::exact(den as f64));
        self.ln().mul(q).exp()
    }

    pub fn log2(self) -> Self {
        self.ln().div(ln_2())
    }

    /// Certified `self <= other`.
    pub fn definitely_le(self, o: Self) -> bool {
        self.hi <= o.lo
    }

    /// Certified `self > other`.
    pub fn definitely_gt(self, o: Self) -> bool {
        self.lo > o.hi
    }

    pub fn sum<I: IntoIterator<Item = Self>>(items: I) -> Self {
        items
            .into_iter()
            .fold(Self::zero(), |acc, x| acc.add(x))
    }
}

impl fmt::Debug for RealInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.lo, self.hi)
    }
}

impl fmt::Display for RealInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:.12e} ± {:.2e}", self.midpoint(), self.width() / 2.0)
    }
}

pub fn ln_2() -> RealInterval {
    RealInterval::exact(std::f64::consts::LN_2).slack(2)
}

/// Brackets a nonnegative `BigUint` by two adjacent floats.
fn biguint_to_interval(n: &BigUint) -> RealInterval {
    if n.is_zero() {
        return RealInterval::zero();
    }
    let bits = n.bits();
    if bits <= 53 {
        return RealInterval::exact(n.to_f64().unwrap());
    }
    // keep the top 53 bits; the discarded tail makes the value strictly larger
    let shift = bits - 53;
    let top = (n >> shift).to_f64().unwrap();
    let scale = 2f64.powi(shift as i32);
    if scale.is_finite() {
        RealInterval {
            lo: top * scale,
            hi: (top + 1.0) * scale,
        }
        .slack(2)
    } else {
        RealInterval {
            lo: f64::MAX,
            hi: f64::INFINITY,
        }
    }
}

/// `ln` of a positive big integer, computed from its bit decomposition so it
/// stays accurate far past the f64 overflow range.
pub fn ln_biguint(n: &BigUint) -> RealInterval {
    assert!(!n.is_zero(), "ln of zero");
    if n.is_one() {
        return RealInterval::zero();
    }
    let bits = n.bits();
    if bits <= 53 {
        return RealInterval::exact(n.to_f64().unwrap()).ln();
    }
    let shift = bits - 53;
    let top = (n >> shift).to_f64().unwrap();
    let mantissa = RealInterval {
        lo: top,
        hi: top + 1.0,
    };
    mantissa
        .ln()
        .add(ln_2().scale(shift as f64))
}

pub fn ln_bigint_abs(n: &BigInt) -> RealInterval {
    ln_biguint(n.magnitude())
}

/// Outward-rounded interval for an exact rational.
pub fn rational_to_interval(q: &BigRational) -> RealInterval {
    if q.is_zero() {
        return RealInterval::zero();
    }
    let num = biguint_to_interval(q.numer().magnitude());
    let den = biguint_to_interval(q.denom().magnitude());
    let mag = num.div(den);
    if q.is_negative() {
        mag.neg()
    } else {
        mag
    }
}

/// `ln |q|` for a nonzero rational.
pub fn ln_rational_abs(q: &BigRational) -> RealInterval {
    assert!(!q.is_zero());
    ln_biguint(q.numer().magnitude()).sub(ln_biguint(q.denom().magnitude()))
}

/// `log^+ |q| = ln max(1, |q|)`, exact zero for |q| <= 1.
pub fn ln_plus_rational_abs(q: &BigRational) -> RealInterval {
    if q.is_zero() || q.numer().magnitude() <= q.denom().magnitude() {
        return RealInterval::zero();
    }
    ln_rational_abs(q)
}

/// A rectangle in the complex plane.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ComplexBox {
    pub re: RealInterval,
    pub im: RealInterval,
}

impl ComplexBox {
    pub fn exact(re: f64, im: f64) -> Self {
        ComplexBox {
            re: RealInterval::exact(re),
            im: RealInterval::exact(im),
        }
    }

    pub fn zero() -> Self {
        Self::exact(0.0, 0.0)
    }

    pub fn add(self, o: Self) -> Self {
        ComplexBox {
            re: self.re.add(o.re),
            im: self.im.add(o.im),
        }
    }

    pub fn sub(self, o: Self) -> Self {
        ComplexBox {
            re: self.re.sub(o.re),
            im: self.im.sub(o.im),
        }
    }

    pub fn mul(self, o: Self) -> Self {
        ComplexBox {
            re: self.re.mul(o.re).sub(self.im.mul(o.im)),
            im: self.re.mul(o.im).add(self.im.mul(o.re)),
        }
    }

    pub fn abs_sq(self) -> RealInterval {
        let rr = self.re.mul(self.re);
        let ii = self.im.mul(self.im);
        let s = rr.add(ii);
        RealInterval {
            lo: s.lo.max(0.0),
            hi: s.hi,
        }
    }

    pub fn abs(self) -> RealInterval {
        self.abs_sq().sqrt()
    }

    pub fn contains_zero(self) -> bool {
        self.re.contains(0.0) && self.im.contains(0.0)
    }

    pub fn midpoint(self) -> (f64, f64) {
        (self.re.midpoint(), self.im.midpoint())
    }

    pub fn diameter(self) -> f64 {
        self.re.width().max(self.im.width())
    }

    /// True when the two boxes cannot share a point.
    pub fn disjoint(self, o: Self) -> bool {
        self.re.hi < o.re.lo
            || o.re.hi < self.re.lo
            || self.im.hi < o.im.lo
            || o.im.hi < self.im.lo
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;
    use std::str::FromStr;

    #[test]
    fn arithmetic_contains_exact_values() {
        let a = RealInterval::exact(0.1);
        let b = RealInterval::exact(0.2);
        let s = a.add(b);
        assert!(s.contains(0.1f64 + 0.2f64));
        assert!(s.width() < 1e-15);
    }

    #[test]
    fn ln_of_big_integer() {
        let n = BigUint::from_str("340282366920938463463374607431768211456").unwrap(); // 2^128
        let l = ln_biguint(&n);
        let expect = 128.0 * std::f64::consts::LN_2;
        assert!(l.contains(expect), "{l:?} vs {expect}");
        assert!(l.width() < 1e-10);
    }

    #[test]
    fn rational_conversion_brackets() {
        let q = BigRational::new(BigInt::from(2), BigInt::from(3));
        let iv = rational_to_interval(&q);
        assert!(iv.contains(2.0 / 3.0));
        assert!(iv.width() < 1e-15);
        let one = BigRational::one();
        assert_eq!(ln_plus_rational_abs(&one).hi, 0.0);
    }

    #[test]
    fn pow_rational_matches() {
        let x = RealInterval::exact(16.0);
        let p = x.pow_rational(5, 2);
        assert!(p.contains(1024.0));
        assert!(p.width() < 1e-9);
    }

    #[test]
    fn complex_box_abs() {
        let z = ComplexBox::exact(3.0, 4.0);
        assert!(z.abs().contains(5.0));
    }
}
