//! Dense univariate and bivariate polynomials over a generic scalar.
//!
//! `Poly1<T>` stores coefficients by ascending degree with a normalized
//! tail (the last stored coefficient is nonzero). `Poly2<T>` is a vector
//! of X-coefficient polynomials indexed by the Y power, which is the shape
//! the Y-resultant and Newton polygon work wants.

use crate::scalar::{ExactDiv, Ring, Scalar};
use num_traits::{One, Zero};
use std::fmt;

#[derive(Clone, PartialEq)]
pub struct Poly1<T> {
    coeffs: Vec<T>,
}

impl<T: Ring> Poly1<T> {
    pub fn new(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().map_or(false, Zero::is_zero) {
            coeffs.pop();
        }
        Poly1 { coeffs }
    }

    pub fn zero() -> Self {
        Poly1 { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly1 {
            coeffs: vec![T::one()],
        }
    }

    pub fn constant(c: T) -> Self {
        Self::new(vec![c])
    }

    /// The monomial `c · x^k`.
    pub fn monomial(c: T, k: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut v = vec![T::zero(); k + 1];
        v[k] = c;
        Poly1 { coeffs: v }
    }

    pub fn x() -> Self {
        Self::monomial(T::one(), 1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// Degree of a nonzero polynomial.
    pub fn degree(&self) -> usize {
        assert!(!self.is_zero(), "degree of the zero polynomial");
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, k: usize) -> T {
        self.coeffs.get(k).cloned().unwrap_or_else(T::zero)
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn leading(&self) -> T {
        self.coeffs.last().cloned().unwrap_or_else(T::zero)
    }

    /// Order of vanishing at 0; `None` for the zero polynomial.
    pub fn order_at_zero(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn add(&self, o: &Self) -> Self {
        let n = self.coeffs.len().max(o.coeffs.len());
        let mut v = Vec::with_capacity(n);
        for k in 0..n {
            v.push(self.coeff(k) + o.coeff(k));
        }
        Self::new(v)
    }

    pub fn sub(&self, o: &Self) -> Self {
        let n = self.coeffs.len().max(o.coeffs.len());
        let mut v = Vec::with_capacity(n);
        for k in 0..n {
            v.push(self.coeff(k) - o.coeff(k));
        }
        Self::new(v)
    }

    pub fn neg(&self) -> Self {
        Poly1 {
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        let mut v = vec![T::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                v[i + j] = v[i + j].clone() + a.clone() * b.clone();
            }
        }
        Self::new(v)
    }

    pub fn scale(&self, c: &T) -> Self {
        Self::new(self.coeffs.iter().map(|a| a.clone() * c.clone()).collect())
    }

    pub fn pow(&self, mut e: usize) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    pub fn eval(&self, x: &T) -> T {
        let mut acc = T::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x.clone() + c.clone();
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Self::zero();
        }
        let mut v = Vec::with_capacity(self.coeffs.len() - 1);
        for (k, c) in self.coeffs.iter().enumerate().skip(1) {
            let mut m = T::zero();
            for _ in 0..k {
                m = m + c.clone();
            }
            v.push(m);
        }
        Self::new(v)
    }

    /// `x^(deg) · f(1/x)`.
    pub fn reverse(&self) -> Self {
        let mut v = self.coeffs.clone();
        v.reverse();
        Self::new(v)
    }

    /// `f(x^k)`.
    pub fn inflate(&self, k: usize) -> Self {
        assert!(k >= 1);
        if self.is_zero() {
            return Self::zero();
        }
        let mut v = vec![T::zero(); (self.coeffs.len() - 1) * k + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            v[i * k] = c.clone();
        }
        Self::new(v)
    }

    pub fn map_coeffs<U: Ring, F: Fn(&T) -> U>(&self, f: F) -> Poly1<U> {
        Poly1::new(self.coeffs.iter().map(f).collect())
    }
}

impl<T: Scalar> Poly1<T> {
    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let lead = self.leading();
        if lead.is_one() {
            return self.clone();
        }
        Self::new(
            self.coeffs
                .iter()
                .map(|c| c.clone() / lead.clone())
                .collect(),
        )
    }

    pub fn divrem(&self, d: &Self) -> (Self, Self) {
        assert!(!d.is_zero(), "division by zero polynomial");
        if self.is_zero() || self.degree() < d.degree() {
            return (Self::zero(), self.clone());
        }
        let dlead = d.leading();
        let mut rem = self.coeffs.clone();
        let dd = d.degree();
        let qd = self.degree() - dd;
        let mut q = vec![T::zero(); qd + 1];
        for k in (0..=qd).rev() {
            let c = rem[k + dd].clone();
            if c.is_zero() {
                continue;
            }
            let f = c / dlead.clone();
            for (j, dc) in d.coeffs.iter().enumerate() {
                rem[k + j] = rem[k + j].clone() - f.clone() * dc.clone();
            }
            q[k] = f;
        }
        (Self::new(q), Self::new(rem))
    }

    pub fn rem(&self, d: &Self) -> Self {
        self.divrem(d).1
    }

    /// Monic gcd via the Euclidean algorithm.
    pub fn gcd(&self, o: &Self) -> Self {
        let mut a = self.clone();
        let mut b = o.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Extended gcd: returns `(g, s, t)` with `g = s·self + t·other`, g monic.
    pub fn extended_gcd(&self, o: &Self) -> (Self, Self, Self) {
        let mut r0 = self.clone();
        let mut r1 = o.clone();
        let mut s0 = Self::one();
        let mut s1 = Self::zero();
        let mut t0 = Self::zero();
        let mut t1 = Self::one();
        while !r1.is_zero() {
            let (q, r) = r0.divrem(&r1);
            let s = s0.sub(&q.mul(&s1));
            let t = t0.sub(&q.mul(&t1));
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s;
            t0 = t1;
            t1 = t;
        }
        if r0.is_zero() {
            return (r0, s0, t0);
        }
        let lead = r0.leading();
        let inv = T::one() / lead;
        (r0.scale(&inv), s0.scale(&inv), t0.scale(&inv))
    }

    /// Squarefree part `f / gcd(f, f')`, made monic.
    pub fn squarefree_part(&self) -> Self {
        assert!(!self.is_zero());
        let g = self.gcd(&self.derivative());
        if g.is_constant() {
            return self.monic();
        }
        self.divrem(&g).0.monic()
    }

    /// `f(x + a)`.
    pub fn translate(&self, a: &T) -> Self {
        let shift = Self::new(vec![a.clone(), T::one()]);
        let mut acc = Self::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(&shift).add(&Self::constant(c.clone()));
        }
        acc
    }

    /// `f(c·x)`.
    pub fn dilate(&self, c: &T) -> Self {
        let mut p = T::one();
        let mut v = Vec::with_capacity(self.coeffs.len());
        for a in &self.coeffs {
            v.push(a.clone() * p.clone());
            p = p * c.clone();
        }
        Self::new(v)
    }
}

impl<T: Ring> Poly1<T> {
    /// Exact polynomial division in `R[x]` for a unit-led divisor; panics if
    /// the division leaves a remainder or needs a scalar inverse.
    pub fn exact_div_poly(&self, d: &Self) -> Self
    where
        T: ExactDiv,
    {
        assert!(!d.is_zero(), "division by zero polynomial");
        if self.is_zero() {
            return Self::zero();
        }
        assert!(self.degree() >= d.degree(), "inexact polynomial division");
        let dlead = d.leading();
        let mut rem = self.coeffs.clone();
        let dd = d.degree();
        let qd = self.degree() - dd;
        let mut q = vec![T::zero(); qd + 1];
        for k in (0..=qd).rev() {
            let c = rem[k + dd].clone();
            if c.is_zero() {
                continue;
            }
            let f = c.exact_div(&dlead);
            for (j, dc) in d.coeffs.iter().enumerate() {
                rem[k + j] = rem[k + j].clone() - f.clone() * dc.clone();
            }
            q[k] = f;
        }
        assert!(
            rem.iter().all(Zero::is_zero),
            "inexact polynomial division (nonzero remainder)"
        );
        Self::new(q)
    }
}

impl<T: Ring> fmt::Debug for Poly1<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({c:?})·x^{k}")?;
        }
        Ok(())
    }
}

// Poly1 itself forms a ring, so matrices of polynomials work in the
// fraction-free determinant below.
impl<T: Ring> Zero for Poly1<T> {
    fn zero() -> Self {
        Poly1::zero()
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl<T: Ring> One for Poly1<T> {
    fn one() -> Self {
        Poly1::one()
    }
}

impl<T: Ring> std::ops::Add for Poly1<T> {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Poly1::add(&self, &o)
    }
}

impl<T: Ring> std::ops::Sub for Poly1<T> {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        Poly1::sub(&self, &o)
    }
}

impl<T: Ring> std::ops::Mul for Poly1<T> {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        Poly1::mul(&self, &o)
    }
}

impl<T: Ring> std::ops::Neg for Poly1<T> {
    type Output = Self;
    fn neg(self) -> Self {
        Poly1::neg(&self)
    }
}

impl<T: Ring + ExactDiv> ExactDiv for Poly1<T> {
    fn exact_div(&self, d: &Self) -> Self {
        self.exact_div_poly(d)
    }
}

/// Fraction-free Bareiss determinant over an integral domain.
pub fn bareiss_determinant<R: ExactDiv>(mut m: Vec<Vec<R>>) -> R {
    let n = m.len();
    if n == 0 {
        return R::one();
    }
    for row in &m {
        assert_eq!(row.len(), n, "determinant of a non-square matrix");
    }
    let mut sign_flip = false;
    let mut prev = R::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let Some(p) = (k + 1..n).find(|&i| !m[i][k].is_zero()) else {
                return R::zero();
            };
            m.swap(k, p);
            sign_flip = !sign_flip;
        }
        let pivot = m[k][k].clone();
        for i in k + 1..n {
            for j in k + 1..n {
                let t = pivot.clone() * m[i][j].clone() - m[i][k].clone() * m[k][j].clone();
                m[i][j] = t.exact_div(&prev);
            }
            m[i][k] = R::zero();
        }
        prev = pivot;
    }
    let det = m[n - 1][n - 1].clone();
    if sign_flip {
        -det
    } else {
        det
    }
}

/// Resultant of two univariate polynomials over an integral domain, via the
/// Sylvester matrix and Bareiss elimination.
pub fn resultant<R: ExactDiv>(f: &Poly1<R>, g: &Poly1<R>) -> R {
    if f.is_zero() || g.is_zero() {
        return R::zero();
    }
    let df = f.degree();
    let dg = g.degree();
    if df == 0 {
        let mut acc = R::one();
        for _ in 0..dg {
            acc = acc * f.leading();
        }
        return acc;
    }
    if dg == 0 {
        let mut acc = R::one();
        for _ in 0..df {
            acc = acc * g.leading();
        }
        return acc;
    }
    let n = df + dg;
    let mut m = vec![vec![R::zero(); n]; n];
    for i in 0..dg {
        for k in 0..=df {
            m[i][i + k] = f.coeff(df - k);
        }
    }
    for i in 0..df {
        for k in 0..=dg {
            m[dg + i][i + k] = g.coeff(dg - k);
        }
    }
    bareiss_determinant(m)
}

/// Discriminant-style resultant `Res(f, f')`.
pub fn resultant_with_derivative<R: ExactDiv>(f: &Poly1<R>) -> R {
    resultant(f, &f.derivative())
}

#[derive(Clone, PartialEq)]
pub struct Poly2<T> {
    /// `ycoeffs[j]` is the X-polynomial coefficient of `Y^j`.
    ycoeffs: Vec<Poly1<T>>,
}

impl<T: Ring> Poly2<T> {
    pub fn new(mut ycoeffs: Vec<Poly1<T>>) -> Self {
        while ycoeffs.last().map_or(false, Poly1::is_zero) {
            ycoeffs.pop();
        }
        Poly2 { ycoeffs }
    }

    pub fn zero() -> Self {
        Poly2 { ycoeffs: vec![] }
    }

    pub fn is_zero(&self) -> bool {
        self.ycoeffs.is_empty()
    }

    pub fn from_terms(terms: &[(usize, usize, T)]) -> Self {
        let max_j = terms.iter().map(|t| t.1).max().unwrap_or(0);
        let mut cols: Vec<Vec<(usize, T)>> = vec![Vec::new(); max_j + 1];
        for (i, j, c) in terms {
            cols[*j].push((*i, c.clone()));
        }
        let ycoeffs = cols
            .into_iter()
            .map(|col| {
                let max_i = col.iter().map(|t| t.0).max().unwrap_or(0);
                let mut v = vec![T::zero(); max_i + 1];
                for (i, c) in col {
                    v[i] = v[i].clone() + c;
                }
                Poly1::new(v)
            })
            .collect();
        Poly2::new(ycoeffs)
    }

    pub fn deg_y(&self) -> usize {
        assert!(!self.is_zero());
        self.ycoeffs.len() - 1
    }

    pub fn deg_x(&self) -> usize {
        self.ycoeffs
            .iter()
            .filter(|c| !c.is_zero())
            .map(|c| c.degree())
            .max()
            .expect("deg_x of zero polynomial")
    }

    pub fn ycoeff(&self, j: usize) -> Poly1<T> {
        self.ycoeffs.get(j).cloned().unwrap_or_else(Poly1::zero)
    }

    pub fn ycoeffs(&self) -> &[Poly1<T>] {
        &self.ycoeffs
    }

    /// The coefficient of `Y^n`, `f_0` in the usual normal form.
    pub fn lead_ycoeff(&self) -> Poly1<T> {
        self.ycoeffs.last().cloned().unwrap_or_else(Poly1::zero)
    }

    pub fn coeff(&self, i: usize, j: usize) -> T {
        self.ycoeff(j).coeff(i)
    }

    /// All nonzero coefficients, X-major within each Y power.
    pub fn coefficient_vector(&self) -> Vec<T> {
        let mut v = Vec::new();
        for c in &self.ycoeffs {
            for a in c.coeffs() {
                if !a.is_zero() {
                    v.push(a.clone());
                }
            }
        }
        v
    }

    pub fn map_coeffs<U: Ring, F: Fn(&T) -> U + Copy>(&self, f: F) -> Poly2<U> {
        Poly2::new(self.ycoeffs.iter().map(|c| c.map_coeffs(f)).collect())
    }

    pub fn add(&self, o: &Self) -> Self {
        let n = self.ycoeffs.len().max(o.ycoeffs.len());
        Poly2::new((0..n).map(|j| self.ycoeff(j).add(&o.ycoeff(j))).collect())
    }

    pub fn sub(&self, o: &Self) -> Self {
        let n = self.ycoeffs.len().max(o.ycoeffs.len());
        Poly2::new((0..n).map(|j| self.ycoeff(j).sub(&o.ycoeff(j))).collect())
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        let mut v = vec![Poly1::zero(); self.ycoeffs.len() + o.ycoeffs.len() - 1];
        for (i, a) in self.ycoeffs.iter().enumerate() {
            for (j, b) in o.ycoeffs.iter().enumerate() {
                v[i + j] = v[i + j].add(&a.mul(b));
            }
        }
        Poly2::new(v)
    }

    pub fn scale(&self, c: &T) -> Self {
        Poly2::new(self.ycoeffs.iter().map(|p| p.scale(c)).collect())
    }

    pub fn derivative_y(&self) -> Self {
        if self.ycoeffs.len() <= 1 {
            return Self::zero();
        }
        let mut v = Vec::with_capacity(self.ycoeffs.len() - 1);
        for (j, c) in self.ycoeffs.iter().enumerate().skip(1) {
            let mut m = Poly1::zero();
            for _ in 0..j {
                m = m.add(c);
            }
            v.push(m);
        }
        Poly2::new(v)
    }

    /// Substitute a scalar for X, leaving a polynomial in Y.
    pub fn eval_x(&self, x: &T) -> Poly1<T> {
        Poly1::new(self.ycoeffs.iter().map(|c| c.eval(x)).collect())
    }

    /// Substitute a univariate polynomial for Y, collapsing to `R[X]`.
    pub fn eval_y_poly(&self, y: &Poly1<T>) -> Poly1<T> {
        let mut acc = Poly1::zero();
        for c in self.ycoeffs.iter().rev() {
            acc = acc.mul(y).add(c);
        }
        acc
    }

    /// The Y-resultant `Res_Y(f, g)` as a polynomial in X.
    pub fn resultant_y(&self, o: &Self) -> Poly1<T>
    where
        T: ExactDiv,
    {
        let f = Poly1::new(self.ycoeffs.clone());
        let g = Poly1::new(o.ycoeffs.clone());
        resultant(&f, &g)
    }
}

impl<T: Scalar> Poly2<T> {
    /// `f(X + a, Y)`.
    pub fn translate_x(&self, a: &T) -> Self {
        Poly2::new(self.ycoeffs.iter().map(|c| c.translate(a)).collect())
    }

    /// `X^m · f(1/X, Y)` with `m = deg_X f`: the model at infinity.
    pub fn reverse_x(&self) -> Self {
        let m = self.deg_x();
        Poly2::new(
            self.ycoeffs
                .iter()
                .map(|c| {
                    if c.is_zero() {
                        Poly1::zero()
                    } else {
                        let mut v = vec![T::zero(); m + 1];
                        for (i, a) in c.coeffs().iter().enumerate() {
                            v[m - i] = a.clone();
                        }
                        Poly1::new(v)
                    }
                })
                .collect(),
        )
    }

    /// Divide through by a scalar.
    pub fn div_scalar(&self, c: &T) -> Self {
        let inv = T::one() / c.clone();
        self.scale(&inv)
    }
}

impl<T: Ring> fmt::Debug for Poly2<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (j, c) in self.ycoeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "[{c:?}]·Y^{j}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use num_rational::BigRational;

    fn q(n: i64) -> BigRational {
        BigRational::from(BigInt::from(n))
    }

    fn qp(coeffs: &[i64]) -> Poly1<BigRational> {
        Poly1::new(coeffs.iter().map(|&c| q(c)).collect())
    }

    #[test]
    fn divrem_roundtrip() {
        let f = qp(&[2, 0, -3, 1]); // x^3 - 3x^2 + 2
        let d = qp(&[-1, 1]); // x - 1
        let (quo, rem) = f.divrem(&d);
        assert!(rem.is_zero());
        assert_eq!(quo.mul(&d), f);
    }

    #[test]
    fn gcd_of_shared_factor() {
        let a = qp(&[-1, 0, 1]); // x^2-1
        let b = qp(&[-1, 1]).mul(&qp(&[3, 1])); // (x-1)(x+3)
        assert_eq!(a.gcd(&b), qp(&[-1, 1]));
    }

    #[test]
    fn resultant_univariate() {
        // Res(x^2-1, x-2) = (2-1)(2+1)... = f(2) for monic f: 3
        let f = qp(&[-1, 0, 1]);
        let g = qp(&[-2, 1]);
        assert_eq!(resultant(&f, &g), q(3));
    }

    #[test]
    fn resultant_y_quadratic_models() {
        // f = Y^2 - X  ->  Res_Y(f, f_Y) = -4X
        let f = Poly2::from_terms(&[(0, 2, q(1)), (1, 0, q(-1))]);
        let r = f.resultant_y(&f.derivative_y());
        assert_eq!(r, qp(&[0, -4]));

        // f = Y^2 - X(X+1)  ->  -4X(X+1)
        let f = Poly2::from_terms(&[(0, 2, q(1)), (1, 0, q(-1)), (2, 0, q(-1))]);
        let r = f.resultant_y(&f.derivative_y());
        assert_eq!(r, qp(&[0, -4, -4]));

        // f = Y^2 - XY + 1  ->  4 - X^2 (standard Sylvester sign)
        let f = Poly2::from_terms(&[(0, 2, q(1)), (1, 1, q(-1)), (0, 0, q(1))]);
        let r = f.resultant_y(&f.derivative_y());
        assert_eq!(r, qp(&[4, 0, -1]));
    }

    #[test]
    fn translate_and_reverse() {
        // f = Y^2 - X(X+1) at X -> X-1 gives Y^2 - X^2 + X
        let f = Poly2::from_terms(&[(0, 2, q(1)), (1, 0, q(-1)), (2, 0, q(-1))]);
        let t = f.translate_x(&q(-1));
        assert_eq!(
            t,
            Poly2::from_terms(&[(0, 2, q(1)), (1, 0, q(1)), (2, 0, q(-1))])
        );

        // Y^2 - X reversed: X·Y^2 - 1
        let f = Poly2::from_terms(&[(0, 2, q(1)), (1, 0, q(-1))]);
        assert_eq!(
            f.reverse_x(),
            Poly2::from_terms(&[(1, 2, q(1)), (0, 0, q(-1))])
        );
    }

    #[test]
    fn squarefree_part_strips_multiplicity() {
        let f = qp(&[-1, 1]).pow(3).mul(&qp(&[2, 1]));
        let s = f.squarefree_part();
        assert_eq!(s, qp(&[-1, 1]).mul(&qp(&[2, 1])).monic());
    }

    #[test]
    fn bareiss_matches_small_determinant() {
        let m = vec![
            vec![q(2), q(3), q(1)],
            vec![q(0), q(1), q(-1)],
            vec![q(4), q(2), q(5)],
        ];
        assert_eq!(bareiss_determinant(m), q(-2));
    }
}
