//! Number fields presented by a rational minimal polynomial: exact element
//! arithmetic, maximal orders and field discriminants, certified conjugate
//! enclosures, factorization over the field, and norms of generated ideals.

mod enclosure;
mod factor;
mod ideal;
mod round2;
mod splitting;

pub use enclosure::isolate_complex_roots;
pub use factor::{
    compositum, embed, extend_by_irreducible, factor_over_field, roots_in_field, Compositum,
    FieldExtension,
};
pub use ideal::{generated_ideal_norms, IdealNorms};
pub use splitting::splitting_type;

use crate::interval::ComplexBox;
use crate::poly::{resultant, Poly1};
use crate::polyfactor::{self, integral_rescale, ZPoly};
use crate::scalar::{ExactDiv, Scalar};
use crate::util::q;
use crate::{Error, NfPoly, QPoly, Result, Q};
use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::sync::Arc;

/// Cap on absolute degrees of constructed fields.
pub const FIELD_DEGREE_CAP: usize = 16;

/// A number field ℚ(θ) with its maximal order.
pub struct NumberField {
    /// Monic irreducible minimal polynomial of the presented generator θ.
    minpoly: QPoly,
    degree: usize,
    /// Monic integral minimal polynomial of ω = scale·θ.
    zmin: ZPoly,
    gen_scale: BigInt,
    /// Integral basis, rows of rational coordinates over the power basis of θ.
    integral_basis: Vec<Vec<Q>>,
    /// Field discriminant (signed).
    disc: BigInt,
    /// Index [O_K : ℤ[ω]].
    index: BigUint,
    /// Primes dividing the field discriminant, sorted.
    ramified: Vec<BigUint>,
    /// Certified enclosures of the conjugates of θ, deterministically ordered.
    root_boxes: Vec<ComplexBox>,
}

impl fmt::Debug for NumberField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "NumberField(deg {}, disc {})", self.degree, self.disc)
    }
}

impl PartialEq for NumberField {
    fn eq(&self, o: &Self) -> bool {
        self.minpoly == o.minpoly
    }
}

impl NumberField {
    /// Builds ℚ(θ) from a monic irreducible polynomial over ℚ.
    pub fn new(minpoly: &QPoly) -> Result<Arc<NumberField>> {
        Self::build(minpoly, true)
    }

    /// Same, for callers that already hold a proof of irreducibility (e.g. a
    /// squarefree characteristic polynomial of full degree).
    pub(crate) fn new_unchecked_irreducible(minpoly: &QPoly) -> Result<Arc<NumberField>> {
        Self::build(minpoly, false)
    }

    fn build(minpoly: &QPoly, check: bool) -> Result<Arc<NumberField>> {
        if minpoly.is_zero() || minpoly.is_constant() {
            return Err(Error::Invalid("minimal polynomial must be nonconstant".into()));
        }
        let minpoly = minpoly.monic();
        let degree = minpoly.degree();
        if degree > FIELD_DEGREE_CAP {
            return Err(Error::FieldTowerTooLarge(degree, FIELD_DEGREE_CAP));
        }
        if check && degree > 1 && !polyfactor::is_irreducible(&minpoly)? {
            return Err(Error::NotIrreducible);
        }
        let (zmin, gen_scale) = integral_rescale(&minpoly);
        let order = round2::maximal_order(&zmin)?;
        // convert basis coordinates from ω-powers to θ-powers: ω^k = scale^k θ^k
        let mut pow = Vec::with_capacity(degree);
        let mut s = BigRational::one();
        for _ in 0..degree {
            pow.push(s.clone());
            s *= BigRational::from(gen_scale.clone());
        }
        let integral_basis = order
            .basis
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .map(|(k, c)| c * &pow[k])
                    .collect()
            })
            .collect();
        let root_boxes = enclosure::isolate_complex_roots(&minpoly, 1e-13)?;
        let ramified = crate::primes::prime_divisors(&order.disc.magnitude().clone())
            .ok_or_else(|| Error::Uncertified("field discriminant resists factorization".into()))?;
        Ok(Arc::new(NumberField {
            minpoly,
            degree,
            zmin,
            gen_scale,
            integral_basis,
            disc: order.disc,
            index: order.index,
            ramified,
            root_boxes,
        }))
    }

    /// The rational field presented as ℚ(θ) with θ = 0.
    pub fn rationals() -> Arc<NumberField> {
        Arc::new(NumberField {
            minpoly: QPoly::x(),
            degree: 1,
            zmin: ZPoly::new(vec![BigInt::zero(), BigInt::one()]),
            gen_scale: BigInt::one(),
            integral_basis: vec![vec![Q::one()]],
            disc: BigInt::one(),
            index: BigUint::one(),
            ramified: vec![],
            root_boxes: vec![ComplexBox::zero()],
        })
    }

    pub fn minpoly(&self) -> &QPoly {
        &self.minpoly
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn discriminant(&self) -> &BigInt {
        &self.disc
    }

    pub fn index(&self) -> &BigUint {
        &self.index
    }

    pub fn ramified_primes(&self) -> &[BigUint] {
        &self.ramified
    }

    pub fn integral_basis(&self) -> &[Vec<Q>] {
        &self.integral_basis
    }

    pub(crate) fn zmin(&self) -> &ZPoly {
        &self.zmin
    }

    pub(crate) fn gen_scale(&self) -> &BigInt {
        &self.gen_scale
    }

    /// Enclosures of the conjugates of θ at construction precision.
    pub fn root_enclosures(&self) -> &[ComplexBox] {
        &self.root_boxes
    }

    /// Re-isolates the conjugates of θ to a smaller radius.
    pub fn refined_root_enclosures(&self, radius: f64) -> Result<Vec<ComplexBox>> {
        enclosure::isolate_complex_roots(&self.minpoly, radius)
    }

    /// Normalized logarithmic discriminant over ℚ: `log|disc| / degree`.
    pub fn log_disc_over_q(&self) -> crate::interval::RealInterval {
        if self.disc.is_one() || self.disc.magnitude().is_one() {
            return crate::interval::RealInterval::zero();
        }
        crate::interval::ln_bigint_abs(&self.disc)
            .div(crate::interval::RealInterval::exact(self.degree as f64))
    }
}

/// An element of a number field (or a plain rational, which embeds in all of
/// them). Coordinates are over the power basis of the presented generator.
#[derive(Clone)]
pub enum NfElem {
    Rat(Q),
    Ext(Arc<NumberField>, QPoly),
}

impl NfElem {
    pub fn from_rational(c: Q) -> Self {
        NfElem::Rat(c)
    }

    pub fn generator(field: &Arc<NumberField>) -> Self {
        NfElem::Ext(field.clone(), QPoly::x()).reduced()
    }

    pub fn from_coord_poly(field: &Arc<NumberField>, coords: QPoly) -> Self {
        NfElem::Ext(field.clone(), coords).reduced()
    }

    fn reduced(self) -> Self {
        match self {
            NfElem::Rat(c) => NfElem::Rat(c),
            NfElem::Ext(f, p) => {
                let p = if !p.is_zero() && p.degree() >= f.degree {
                    p.rem(&f.minpoly)
                } else {
                    p
                };
                if p.is_constant() {
                    NfElem::Rat(p.coeff(0))
                } else {
                    NfElem::Ext(f, p)
                }
            }
        }
    }

    pub fn field(&self) -> Option<&Arc<NumberField>> {
        match self {
            NfElem::Rat(_) => None,
            NfElem::Ext(f, _) => Some(f),
        }
    }

    /// Coordinate polynomial in the given field.
    pub fn coord_poly(&self, field: &Arc<NumberField>) -> QPoly {
        match self {
            NfElem::Rat(c) => QPoly::constant(c.clone()),
            NfElem::Ext(f, p) => {
                assert!(f.minpoly == field.minpoly, "element of a different field");
                p.clone()
            }
        }
    }

    pub fn as_rational(&self) -> Option<Q> {
        match self {
            NfElem::Rat(c) => Some(c.clone()),
            NfElem::Ext(_, _) => None,
        }
    }

    pub fn is_rational(&self) -> bool {
        matches!(self, NfElem::Rat(_))
    }

    fn binop<FR, FE>(self, o: Self, fr: FR, fe: FE) -> Self
    where
        FR: Fn(Q, Q) -> Q,
        FE: Fn(&Arc<NumberField>, QPoly, QPoly) -> QPoly,
    {
        match (self, o) {
            (NfElem::Rat(a), NfElem::Rat(b)) => NfElem::Rat(fr(a, b)),
            (NfElem::Ext(f, a), NfElem::Rat(b)) => {
                let bb = QPoly::constant(b);
                NfElem::Ext(f.clone(), fe(&f, a, bb)).reduced()
            }
            (NfElem::Rat(a), NfElem::Ext(f, b)) => {
                let aa = QPoly::constant(a);
                NfElem::Ext(f.clone(), fe(&f, aa, b)).reduced()
            }
            (NfElem::Ext(f, a), NfElem::Ext(g, b)) => {
                assert!(
                    f.minpoly == g.minpoly,
                    "arithmetic between elements of different fields"
                );
                NfElem::Ext(f.clone(), fe(&f, a, b)).reduced()
            }
        }
    }

    pub fn inverse(&self) -> Self {
        match self {
            NfElem::Rat(c) => {
                assert!(!c.is_zero(), "inverse of zero");
                NfElem::Rat(c.recip())
            }
            NfElem::Ext(f, p) => {
                assert!(!p.is_zero(), "inverse of zero");
                let (g, _, t) = f.minpoly.extended_gcd(p);
                assert!(g.is_constant(), "non-invertible element");
                let c = g.coeff(0);
                NfElem::Ext(f.clone(), t.scale(&(Q::one() / c))).reduced()
            }
        }
    }

    /// Characteristic polynomial of the element over ℚ, relative to its
    /// field presentation (degree = field degree); `X - c` for rationals.
    pub fn charpoly(&self) -> QPoly {
        match self {
            NfElem::Rat(c) => Poly1::new(vec![-c.clone(), Q::one()]),
            NfElem::Ext(f, p) => {
                // Res_θ(minpoly(θ), X - p(θ)) as a polynomial in X
                let theta_deg = p.degree();
                let mp: Poly1<QPoly> =
                    Poly1::new(f.minpoly.coeffs().iter().map(|c| QPoly::constant(c.clone())).collect());
                let mut sub_coeffs: Vec<QPoly> = Vec::with_capacity(theta_deg + 1);
                for k in 0..=theta_deg {
                    let mut c = QPoly::constant(-p.coeff(k));
                    if k == 0 {
                        c = Poly1::add(&c, &QPoly::x());
                    }
                    sub_coeffs.push(c);
                }
                let sub: Poly1<QPoly> = Poly1::new(sub_coeffs);
                resultant(&mp, &sub)
            }
        }
    }

    /// Minimal polynomial over ℚ (monic): the squarefree part of the
    /// characteristic polynomial.
    pub fn minpoly_q(&self) -> QPoly {
        self.charpoly().squarefree_part()
    }

    /// Field norm N_{K/ℚ} relative to the element's field presentation.
    pub fn norm(&self) -> Q {
        let cp = self.charpoly();
        let d = cp.degree();
        let c0 = cp.coeff(0);
        if d % 2 == 0 {
            c0
        } else {
            -c0
        }
    }

    /// Evaluates the element at each conjugate of the field generator,
    /// giving enclosures of all its conjugates (with multiplicity ordered
    /// by the field's root ordering). Rationals give a single exact box.
    pub fn conjugate_boxes(&self) -> Vec<ComplexBox> {
        match self {
            NfElem::Rat(c) => {
                let iv = crate::interval::rational_to_interval(c);
                vec![ComplexBox {
                    re: iv,
                    im: crate::interval::RealInterval::zero(),
                }]
            }
            NfElem::Ext(f, p) => f
                .root_boxes
                .iter()
                .map(|b| enclosure::eval_qpoly_box(p, *b))
                .collect(),
        }
    }
}

impl PartialEq for NfElem {
    fn eq(&self, o: &Self) -> bool {
        match (self, o) {
            (NfElem::Rat(a), NfElem::Rat(b)) => a == b,
            (NfElem::Ext(_, a), NfElem::Rat(b)) | (NfElem::Rat(b), NfElem::Ext(_, a)) => {
                a.is_constant() && a.coeff(0) == *b
            }
            (NfElem::Ext(f, a), NfElem::Ext(g, b)) => {
                assert!(
                    f.minpoly == g.minpoly,
                    "comparison between elements of different fields"
                );
                a == b
            }
        }
    }
}

impl fmt::Debug for NfElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NfElem::Rat(c) => write!(f, "{c}"),
            NfElem::Ext(_, p) => write!(f, "{p:?}"),
        }
    }
}

impl Zero for NfElem {
    fn zero() -> Self {
        NfElem::Rat(Q::zero())
    }
    fn is_zero(&self) -> bool {
        match self {
            NfElem::Rat(c) => c.is_zero(),
            NfElem::Ext(_, p) => p.is_zero(),
        }
    }
}

impl One for NfElem {
    fn one() -> Self {
        NfElem::Rat(Q::one())
    }
}

impl Add for NfElem {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        self.binop(o, |a, b| a + b, |_, a, b| Poly1::add(&a, &b))
    }
}

impl Sub for NfElem {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        self.binop(o, |a, b| a - b, |_, a, b| Poly1::sub(&a, &b))
    }
}

impl Mul for NfElem {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        self.binop(o, |a, b| a * b, |f, a, b| Poly1::mul(&a, &b).rem(&f.minpoly))
    }
}

impl Neg for NfElem {
    type Output = Self;
    fn neg(self) -> Self {
        match self {
            NfElem::Rat(c) => NfElem::Rat(-c),
            NfElem::Ext(f, p) => NfElem::Ext(f, p.neg()),
        }
    }
}

impl Div for NfElem {
    type Output = Self;
    fn div(self, o: Self) -> Self {
        let inv = o.inverse();
        self * inv
    }
}

impl Scalar for NfElem {}

impl ExactDiv for NfElem {
    fn exact_div(&self, d: &Self) -> Self {
        self.clone() / d.clone()
    }
}

/// Lifts a rational polynomial coefficient-wise into `K[x]`.
pub fn qpoly_to_nfpoly(f: &QPoly) -> NfPoly {
    f.map_coeffs(|c| NfElem::Rat(c.clone()))
}

/// Projects a polynomial with (necessarily) rational coefficients back.
pub fn nfpoly_to_qpoly(f: &NfPoly) -> Option<QPoly> {
    let mut v = Vec::with_capacity(f.coeffs().len());
    for c in f.coeffs() {
        v.push(c.as_rational()?);
    }
    Some(Poly1::new(v))
}

/// The element `n` as a rational scalar.
pub fn nf_int(n: i64) -> NfElem {
    NfElem::Rat(q(n))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::util::qr;

    fn qp(coeffs: &[i64]) -> QPoly {
        Poly1::new(coeffs.iter().map(|&c| q(c)).collect())
    }

    #[test]
    fn sqrt2_field_basics() {
        let k = NumberField::new(&qp(&[-2, 0, 1])).unwrap();
        assert_eq!(k.degree(), 2);
        assert_eq!(*k.discriminant(), BigInt::from(8));
        assert_eq!(k.ramified_primes(), &[BigUint::from(2u32)]);
        let s = NfElem::generator(&k);
        let two = s.clone() * s.clone();
        assert_eq!(two, nf_int(2));
        let inv = s.clone().inverse();
        assert_eq!(s * inv, nf_int(1));
    }

    #[test]
    fn golden_ratio_maximal_order() {
        // X^2 - 5: integral basis contains (1+sqrt5)/2, disc 5, index 2
        let k = NumberField::new(&qp(&[-5, 0, 1])).unwrap();
        assert_eq!(*k.discriminant(), BigInt::from(5));
        assert_eq!(*k.index(), BigUint::from(2u32));
    }

    #[test]
    fn cubic_squarefree_disc() {
        let k = NumberField::new(&qp(&[-1, -1, 0, 1])).unwrap();
        assert_eq!(*k.discriminant(), BigInt::from(-23));
        assert_eq!(*k.index(), BigUint::one());
    }

    #[test]
    fn biquadratic_field() {
        // Q(sqrt2, sqrt3) = Q[x]/(x^4 - 10x^2 + 1), disc 2304, index 8
        let k = NumberField::new(&qp(&[1, 0, -10, 0, 1])).unwrap();
        assert_eq!(*k.discriminant(), BigInt::from(2304));
        assert_eq!(*k.index(), BigUint::from(8u32));
    }

    #[test]
    fn gaussian_and_sqrt3() {
        let k = NumberField::new(&qp(&[1, 0, 1])).unwrap();
        assert_eq!(*k.discriminant(), BigInt::from(-4));
        let k3 = NumberField::new(&qp(&[-3, 0, 1])).unwrap();
        assert_eq!(*k3.discriminant(), BigInt::from(12));
    }

    #[test]
    fn charpoly_norm_trace() {
        let k = NumberField::new(&qp(&[-2, 0, 1])).unwrap();
        // α = 1 + √2: charpoly X^2 - 2X - 1, norm -1
        let a = NfElem::from_coord_poly(&k, qp(&[1, 1]));
        assert_eq!(a.charpoly(), qp(&[-1, -2, 1]));
        assert_eq!(a.norm(), q(-1));
        assert_eq!(a.minpoly_q(), qp(&[-1, -2, 1]));
    }

    #[test]
    fn reducible_minpoly_rejected() {
        assert!(matches!(
            NumberField::new(&qp(&[-1, 0, 1])),
            Err(Error::NotIrreducible)
        ));
    }

    #[test]
    fn half_coordinates_work() {
        // (1+√5)/2 has charpoly X^2 - X - 1
        let k = NumberField::new(&qp(&[-5, 0, 1])).unwrap();
        let phi = NfElem::from_coord_poly(&k, Poly1::new(vec![qr(1, 2), qr(1, 2)]));
        assert_eq!(phi.charpoly(), qp(&[-1, -1, 1]));
        assert_eq!(phi.norm(), q(-1));
    }
}
