//! Projective and affine heights of rational and algebraic vectors, heights
//! of finite place sets, denominator/numerator places, and the prime-sum
//! inequality checks.
//!
//! Finite places enter through norms of generated ideals, archimedean places
//! through certified conjugate enclosures, so a height is always a certified
//! real interval containing the exact value.

use crate::interval::{ln_biguint, ln_rational_abs, RealInterval};
use crate::numfield::{compositum, generated_ideal_norms, NfElem, NumberField};
use crate::util::integer_content;
use crate::{Error, Result, Q};
use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::collections::BTreeSet;
use std::sync::Arc;

pub use crate::primes::{prime_sum_checks, scan_prime_sums, PrimeSumCheck};

/// A certified real interval; heights and discriminant logarithms all carry
/// this type.
pub type HeightValue = RealInterval;

/// A finite set of rational primes, optionally together with the infinite
/// place (which has norm 1 and contributes nothing to the height).
#[derive(Clone, Debug, Default, PartialEq)]
pub struct PlaceSet {
    primes: BTreeSet<BigUint>,
    pub includes_infinite: bool,
}

impl PlaceSet {
    pub fn empty() -> Self {
        PlaceSet::default()
    }

    pub fn from_primes<I: IntoIterator<Item = BigUint>>(primes: I) -> Self {
        PlaceSet {
            primes: primes.into_iter().collect(),
            includes_infinite: false,
        }
    }

    pub fn from_u64_primes(primes: &[u64]) -> Self {
        Self::from_primes(primes.iter().map(|&p| BigUint::from(p)))
    }

    pub fn infinite_only() -> Self {
        PlaceSet {
            primes: BTreeSet::new(),
            includes_infinite: true,
        }
    }

    pub fn with_infinite(mut self) -> Self {
        self.includes_infinite = true;
        self
    }

    pub fn insert(&mut self, p: BigUint) {
        self.primes.insert(p);
    }

    pub fn primes(&self) -> impl Iterator<Item = &BigUint> {
        self.primes.iter()
    }

    pub fn contains(&self, p: &BigUint) -> bool {
        self.primes.contains(p)
    }

    pub fn len(&self) -> usize {
        self.primes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.primes.is_empty()
    }

    pub fn union(&self, o: &Self) -> Self {
        PlaceSet {
            primes: self.primes.union(&o.primes).cloned().collect(),
            includes_infinite: self.includes_infinite || o.includes_infinite,
        }
    }

    pub fn is_subset(&self, o: &Self) -> bool {
        self.primes.is_subset(&o.primes)
    }

    /// `h(S) = Σ_{p ∈ S} log p`; the infinite place contributes 0.
    pub fn height(&self) -> HeightValue {
        RealInterval::sum(self.primes.iter().map(ln_biguint))
    }
}

/// Scales a rational vector to coprime integers (zeros stay zero).
fn to_coprime_integers(v: &[Q]) -> Vec<BigInt> {
    let den = crate::util::common_denominator(v.iter());
    let ints: Vec<BigInt> = v
        .iter()
        .map(|c| (c * BigRational::from(den.clone())).to_integer())
        .collect();
    let g = integer_content(&ints);
    if g.is_zero() || g.is_one() {
        return ints;
    }
    ints.iter().map(|c| c / &g).collect()
}

/// Projective height of a nonzero rational vector (exact modulo the final
/// logarithm).
pub fn projective_height_rational(v: &[Q]) -> Result<HeightValue> {
    if v.iter().all(Zero::is_zero) {
        return Err(Error::ZeroVector);
    }
    let ints = to_coprime_integers(v);
    let max = ints
        .iter()
        .map(|c| c.magnitude().clone())
        .max()
        .expect("nonempty");
    Ok(ln_biguint(&max))
}

/// Affine height of a rational vector (`h_a(0) = 0`).
pub fn affine_height_rational(v: &[Q]) -> HeightValue {
    if v.iter().all(Zero::is_zero) {
        return RealInterval::zero();
    }
    let mut w = v.to_vec();
    w.push(Q::one());
    projective_height_rational(&w).expect("vector contains 1")
}

/// Puts a family of elements into one common field, building composita as
/// needed.
pub fn to_common_field(v: &[NfElem]) -> Result<(Arc<NumberField>, Vec<NfElem>)> {
    let mut field = NumberField::rationals();
    for e in v {
        if let Some(f) = e.field() {
            if field.degree() == 1 {
                field = f.clone();
            } else if field.minpoly() != f.minpoly() {
                let c = compositum(&field, f)?;
                field = c.field;
            }
        }
    }
    let mut out = Vec::with_capacity(v.len());
    for e in v {
        out.push(transport(e, &field)?);
    }
    Ok((field, out))
}

/// Rewrites an element inside `target` (which must contain its field).
pub fn transport(e: &NfElem, target: &Arc<NumberField>) -> Result<NfElem> {
    match e {
        NfElem::Rat(c) => Ok(NfElem::Rat(c.clone())),
        NfElem::Ext(f, p) => {
            if f.minpoly() == target.minpoly() {
                return Ok(NfElem::Ext(target.clone(), p.clone()));
            }
            let gen_image = crate::numfield::embed(f, target)?;
            let mut acc = NfElem::Rat(Q::zero());
            for c in p.coeffs().iter().rev() {
                acc = acc * gen_image.clone() + NfElem::Rat(c.clone());
            }
            Ok(acc)
        }
    }
}

fn all_rational(v: &[NfElem]) -> Option<Vec<Q>> {
    v.iter().map(NfElem::as_rational).collect()
}

/// Projective height of a nonzero vector of algebraic numbers.
pub fn projective_height(v: &[NfElem]) -> Result<HeightValue> {
    if v.iter().all(Zero::is_zero) {
        return Err(Error::ZeroVector);
    }
    if let Some(rats) = all_rational(v) {
        return projective_height_rational(&rats);
    }
    let (field, w) = to_common_field(v)?;
    height_over_field(&field, &w, false)
}

/// Affine height of a vector of algebraic numbers.
pub fn affine_height(v: &[NfElem]) -> Result<HeightValue> {
    if v.iter().all(Zero::is_zero) {
        return Ok(RealInterval::zero());
    }
    if let Some(rats) = all_rational(v) {
        return Ok(affine_height_rational(&rats));
    }
    let (field, w) = to_common_field(v)?;
    height_over_field(&field, &w, true)
}

/// Shared place-sum evaluation: affine mode adjoins the coordinate 1.
fn height_over_field(field: &Arc<NumberField>, v: &[NfElem], affine: bool) -> Result<HeightValue> {
    let d = field.degree();
    let nonzero: Vec<NfElem> = v.iter().filter(|e| !e.is_zero()).cloned().collect();
    let mut gens = nonzero.clone();
    if affine {
        gens.push(NfElem::Rat(Q::one()));
    }
    let norms = generated_ideal_norms(field, &gens)?;
    let finite_part = ln_rational_abs(&norms.norm).neg();

    // archimedean part: Σ_σ log max_i |σ v_i| (max with 1 in affine mode)
    let boxes: Vec<Vec<crate::interval::ComplexBox>> = nonzero
        .iter()
        .map(|e| conjugates_in(field, e))
        .collect();
    let mut arch = RealInterval::zero();
    for sigma in 0..d {
        let mut m = if affine {
            RealInterval::exact(1.0)
        } else {
            RealInterval::exact(0.0)
        };
        for b in &boxes {
            m = m.max(b[sigma].abs());
        }
        if m.lo <= 0.0 {
            return Err(Error::Uncertified(
                "conjugate enclosure too wide to separate from zero".into(),
            ));
        }
        arch = arch.add(m.ln());
    }
    Ok(arch.add(finite_part).scale(1.0 / d as f64))
}

fn conjugates_in(field: &Arc<NumberField>, e: &NfElem) -> Vec<crate::interval::ComplexBox> {
    match e {
        NfElem::Rat(c) => {
            let iv = crate::interval::rational_to_interval(c);
            vec![
                crate::interval::ComplexBox {
                    re: iv,
                    im: RealInterval::zero(),
                };
                field.degree()
            ]
        }
        NfElem::Ext(_, _) => e.conjugate_boxes(),
    }
}

/// Affine height of a single algebraic number.
pub fn affine_height_element(e: &NfElem) -> Result<HeightValue> {
    affine_height(std::slice::from_ref(e))
}

/// Mahler-form affine height of an algebraic number from its monic minimal
/// polynomial over ℚ: `(log|lead| + Σ log⁺|conjugates|)/deg` after clearing
/// to the primitive integer polynomial. Independent of the place-sum route.
pub fn mahler_affine_height(minpoly: &crate::QPoly) -> Result<HeightValue> {
    let z = crate::polyfactor::ZPoly::from_qpoly_primitive(minpoly);
    let d = z.degree();
    let lead = z.leading().magnitude().clone();
    let roots = crate::numfield::isolate_complex_roots(&minpoly.monic(), 1e-13)?;
    assert_eq!(roots.len(), d);
    let mut acc = ln_biguint(&lead);
    for r in roots {
        acc = acc.add(r.abs().ln_plus());
    }
    Ok(acc.scale(1.0 / d as f64))
}

/// Denominator and numerator place sets of a vector of algebraic numbers:
/// primes with some extension where the sup-norm exceeds 1, respectively
/// stays below 1. The numerator set requires a nonzero vector.
pub fn denominator_numerator_places(v: &[NfElem]) -> Result<(PlaceSet, PlaceSet)> {
    if v.iter().all(Zero::is_zero) {
        return Err(Error::ZeroVector);
    }
    let (field, w) = to_common_field(v)?;
    let nonzero: Vec<NfElem> = w.iter().filter(|e| !e.is_zero()).cloned().collect();
    let norms = generated_ideal_norms(&field, &nonzero)?;
    let den = PlaceSet::from_primes(norms.denominator_primes()?);
    let num = PlaceSet::from_primes(norms.numerator_primes()?);
    Ok((den, num))
}

/// Denominator places only (defined even for the zero vector).
pub fn denominator_places(v: &[NfElem]) -> Result<PlaceSet> {
    if v.iter().all(Zero::is_zero) {
        return Ok(PlaceSet::empty());
    }
    let (field, w) = to_common_field(v)?;
    let nonzero: Vec<NfElem> = w.iter().filter(|e| !e.is_zero()).cloned().collect();
    let norms = generated_ideal_norms(&field, &nonzero)?;
    Ok(PlaceSet::from_primes(norms.denominator_primes()?))
}

/// Normalized logarithmic relative discriminant `∂_{L/K}` through the tower
/// over ℚ: `∂_{L/ℚ} − ∂_{K/ℚ}` after checking K embeds in L.
pub fn normalized_log_discriminant(
    sup: &Arc<NumberField>,
    sub: &Arc<NumberField>,
) -> Result<HeightValue> {
    if sub.degree() > 1 {
        crate::numfield::embed(sub, sup)?;
    }
    Ok(sup.log_disc_over_q().sub(sub.log_disc_over_q()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numfield::nf_int;
    use crate::poly::Poly1;
    use crate::util::{q, qr};

    fn qp(coeffs: &[i64]) -> crate::QPoly {
        Poly1::new(coeffs.iter().map(|&c| q(c)).collect())
    }

    #[test]
    fn place_set_heights() {
        let s = PlaceSet::infinite_only();
        assert_eq!(s.height().hi, 0.0);
        let s = PlaceSet::from_u64_primes(&[2, 5]).with_infinite();
        assert!(s.height().contains(10f64.ln()));
        let s2 = PlaceSet::from_u64_primes(&[2]);
        assert!(s2.height().contains(2f64.ln()));
        assert!(s2.is_subset(&s));
    }

    #[test]
    fn rational_heights() {
        assert_eq!(projective_height_rational(&[q(1), q(1)]).unwrap().hi, 0.0);
        assert!(projective_height_rational(&[q(3), q(4)])
            .unwrap()
            .contains(4f64.ln()));
        assert!(affine_height_rational(&[qr(2, 3)]).contains(3f64.ln()));
        assert_eq!(affine_height_rational(&[q(0)]).hi, 0.0);
        // coefficients of Y^2 - XY + 1
        assert_eq!(
            projective_height_rational(&[q(1), q(-1), q(1)]).unwrap().hi,
            0.0
        );
        assert!(projective_height_rational(&[q(0), q(0)]).is_err());
    }

    #[test]
    fn sqrt2_affine_height() {
        let k = NumberField::new(&qp(&[-2, 0, 1])).unwrap();
        let s = NfElem::generator(&k);
        let h = affine_height_element(&s).unwrap();
        assert!(h.contains(0.5 * 2f64.ln()), "{h:?}");
        assert!(h.width() < 1e-9);
        // agrees with the Mahler route
        let m = mahler_affine_height(&qp(&[-2, 0, 1])).unwrap();
        assert!(m.contains(0.5 * 2f64.ln()));
    }

    #[test]
    fn den_num_places() {
        let (den, num) = denominator_numerator_places(&[NfElem::Rat(qr(3, 2))]).unwrap();
        assert!(den.contains(&BigUint::from(2u32)) && den.len() == 1);
        assert!(num.contains(&BigUint::from(3u32)) && num.len() == 1);
        let (den, num) = denominator_numerator_places(&[nf_int(1)]).unwrap();
        assert!(den.is_empty() && num.is_empty());
        let (den, num) = denominator_numerator_places(&[nf_int(4), nf_int(6)]).unwrap();
        assert!(den.is_empty());
        assert!(num.contains(&BigUint::from(2u32)) && num.len() == 1);
    }

    #[test]
    fn log_discriminants() {
        let k2 = NumberField::new(&qp(&[-2, 0, 1])).unwrap();
        let rat = NumberField::rationals();
        let d = normalized_log_discriminant(&k2, &rat).unwrap();
        assert!(d.contains(8f64.ln() / 2.0));
        assert!(d.width() < 1e-12);
        // tower: Q(√2,√3) over Q(√3) gives log 2
        let big = NumberField::new(&qp(&[1, 0, -10, 0, 1])).unwrap();
        let k3 = NumberField::new(&qp(&[-3, 0, 1])).unwrap();
        let rel = normalized_log_discriminant(&big, &k3).unwrap();
        assert!(rel.contains(2f64.ln()), "{rel:?}");
    }

    #[test]
    fn projective_height_scaling_invariance() {
        let k = NumberField::new(&qp(&[-2, 0, 1])).unwrap();
        let s = NfElem::generator(&k);
        let v = vec![s.clone() + nf_int(1), nf_int(3), s.clone()];
        let h1 = projective_height(&v).unwrap();
        let scaled: Vec<NfElem> = v.iter().map(|e| e.clone() * NfElem::Rat(qr(7, 3))).collect();
        let h2 = projective_height(&scaled).unwrap();
        assert!(h1.lo <= h2.hi && h2.lo <= h1.hi, "{h1:?} vs {h2:?}");
    }
}
