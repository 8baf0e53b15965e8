//! Factorization shape of a rational prime in a number field: the list of
//! (ramification index, residue degree) pairs, via Dedekind's theorem at a
//! generator whose index the prime does not divide.

use super::{NfElem, NumberField};
use crate::polyfactor::{factor_fp_full, FpPoly, ZPoly};
use crate::util::q;
use crate::{Error, Result};
use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Zero};
use std::sync::Arc;

fn valuation_int(n: &BigInt, p: &BigInt) -> u32 {
    assert!(!n.is_zero());
    let mut v = 0;
    let mut m = n.clone();
    while (&m % p).is_zero() {
        m /= p;
        v += 1;
    }
    v
}

/// Splitting type of `p` in the field: sorted list of `(e, f)` with
/// `Σ e·f = degree`. Fails only when no tried generator avoids the index.
pub fn splitting_type(field: &Arc<NumberField>, p: &BigUint) -> Result<Vec<(u32, u32)>> {
    let d = field.degree();
    if d == 1 {
        return Ok(vec![(1, 1)]);
    }
    let p_int = BigInt::from(p.clone());
    let disc_field_v = valuation_int(field.discriminant(), &p_int);

    // candidate generators: integral-basis elements and small combinations
    // (the integral basis reaches past ℤ[ω] where the index hides)
    let basis: Vec<NfElem> = field
        .integral_basis()
        .iter()
        .map(|row| NfElem::from_coord_poly(field, crate::poly::Poly1::new(row.clone())))
        .collect();
    let mut candidates: Vec<NfElem> = Vec::new();
    for b in &basis {
        for c in [0i64, 1, -1, 2, -2, 3, -3, 4, 5] {
            candidates.push(b.clone() + super::nf_int(c));
        }
    }
    let sum_all = basis
        .iter()
        .fold(NfElem::Rat(q(0)), |a, b| a + b.clone());
    for c in [0i64, 1, 2, -1, 3] {
        candidates.push(sum_all.clone() + super::nf_int(c));
    }
    for (i, b1) in basis.iter().enumerate() {
        for b2 in basis.iter().skip(i + 1) {
            candidates.push(b1.clone() + b2.clone());
            candidates.push(b1.clone() - b2.clone());
            candidates.push(b1.clone() + b2.clone() * super::nf_int(2));
        }
        candidates.push(b1.clone() * b1.clone() + b1.clone());
    }

    for cand in candidates {
        let cp = cand.charpoly();
        if !cp.gcd(&cp.derivative()).is_constant() {
            continue; // not a primitive element
        }
        // integral candidate: charpoly must be integer monic
        let int_coeffs: Option<Vec<BigInt>> = cp
            .coeffs()
            .iter()
            .map(|c| if c.is_integer() { Some(c.to_integer()) } else { None })
            .collect();
        let Some(int_coeffs) = int_coeffs else {
            continue;
        };
        let zp = ZPoly::new(int_coeffs);
        let disc_poly = super::round2::poly_discriminant(&zp);
        if disc_poly.is_zero() {
            continue;
        }
        // p ∤ index  ⟺  v_p(disc of the generator) = v_p(field disc)
        if valuation_int(&disc_poly, &p_int) != disc_field_v {
            continue;
        }
        let fp = FpPoly::from_zpoly(&zp, p);
        if fp.is_zero() || fp.degree() != d {
            continue;
        }
        let mut shape: Vec<(u32, u32)> = factor_fp_full(&fp)
            .into_iter()
            .map(|(g, e)| (e, g.degree() as u32))
            .collect();
        shape.sort();
        debug_assert_eq!(
            shape.iter().map(|(e, f)| (e * f) as usize).sum::<usize>(),
            d
        );
        return Ok(shape);
    }
    Err(Error::Uncertified(format!(
        "no generator with index prime to {p} found"
    )))
}

/// Largest ramification index of `p` in the field.
pub fn ramification_index(field: &Arc<NumberField>, p: &BigUint) -> Result<u32> {
    Ok(splitting_type(field, p)?
        .iter()
        .map(|&(e, _)| e)
        .max()
        .unwrap_or(1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Poly1;

    fn qp(coeffs: &[i64]) -> crate::QPoly {
        Poly1::new(coeffs.iter().map(|&c| q(c)).collect())
    }

    #[test]
    fn quadratic_splitting() {
        let k = NumberField::new(&qp(&[-2, 0, 1])).unwrap(); // Q(√2)
        assert_eq!(splitting_type(&k, &BigUint::from(2u32)).unwrap(), vec![(2, 1)]);
        assert_eq!(splitting_type(&k, &BigUint::from(7u32)).unwrap(), vec![(1, 1), (1, 1)]);
        assert_eq!(splitting_type(&k, &BigUint::from(3u32)).unwrap(), vec![(1, 2)]);
    }

    #[test]
    fn golden_field_index_two_at_two() {
        // Q(√5): 2 is inert, and the power basis 1, √5 has index 2, so the
        // generator search must move off ω
        let k = NumberField::new(&qp(&[-5, 0, 1])).unwrap();
        assert_eq!(splitting_type(&k, &BigUint::from(2u32)).unwrap(), vec![(1, 2)]);
        assert_eq!(splitting_type(&k, &BigUint::from(5u32)).unwrap(), vec![(2, 1)]);
        assert_eq!(
            splitting_type(&k, &BigUint::from(11u32)).unwrap(),
            vec![(1, 1), (1, 1)]
        );
    }

    #[test]
    fn cubic_ramification() {
        // Q(cbrt(2)): 2 and 3 totally ramified, 5 = (1,1)(1,2)
        let k = NumberField::new(&qp(&[-2, 0, 0, 1])).unwrap();
        assert_eq!(splitting_type(&k, &BigUint::from(2u32)).unwrap(), vec![(3, 1)]);
        assert_eq!(splitting_type(&k, &BigUint::from(3u32)).unwrap(), vec![(3, 1)]);
        assert_eq!(ramification_index(&k, &BigUint::from(5u32)).unwrap(), 1);
    }
}
