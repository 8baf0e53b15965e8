//! Factorization over a number field by the norm method, primitive-element
//! field extensions, and composita.

use super::{NfElem, NumberField, FIELD_DEGREE_CAP};
use crate::poly::{resultant, Poly1};
use crate::polyfactor::{factor_rational_poly, FACTOR_DEGREE_CAP};
use crate::{Error, NfPoly, QPoly, Result, Q};
use num_traits::{One, Zero};
use std::sync::Arc;

/// Resultant in θ of `minpoly(θ)` against a polynomial whose coefficients
/// (outer index = θ power) live in ℚ[z].
fn resultant_theta(minpoly: &QPoly, g: Poly1<QPoly>) -> QPoly {
    let mp: Poly1<QPoly> = minpoly.map_coeffs(|c| QPoly::constant(c.clone()));
    resultant(&mp, &g)
}

/// Builds `ĝ(z - s·θ, θ)` as a θ-polynomial with ℚ[z] coefficients, where
/// `g ∈ K[y]` has θ-power coordinate polynomials as coefficients.
fn substituted_norm_input(field: &Arc<NumberField>, g: &NfPoly, s: i64) -> Poly1<QPoly> {
    let deg_y = g.degree();
    let d = field.degree();
    // table[theta_power] = polynomial in z
    let mut table: Vec<Vec<Q>> = vec![vec![Q::zero(); deg_y + 1]; d + deg_y + 1];
    let sq = crate::util::q(s);
    for (j, cj) in g.coeffs().iter().enumerate() {
        let cp = cj.coord_poly(field);
        // (z - sθ)^j = Σ_i C(j,i) z^i (-s)^(j-i) θ^(j-i)
        let mut binom = Q::one();
        for i in (0..=j).rev() {
            // binom = C(j, i)
            let pw = j - i;
            let mut factor = binom.clone();
            for _ in 0..pw {
                factor *= -sq.clone();
            }
            for (u, cu) in cp.coeffs().iter().enumerate() {
                if !cu.is_zero() {
                    table[u + pw][i] += cu * &factor;
                }
            }
            // C(j, i-1) = C(j, i) * i / (j - i + 1)
            if i > 0 {
                binom = binom * crate::util::q(i as i64) / crate::util::q((j - i + 1) as i64);
            }
        }
    }
    Poly1::new(table.into_iter().map(Poly1::new).collect())
}

/// Factors a polynomial over a number field into monic irreducible factors
/// with multiplicities (the unit is dropped).
pub fn factor_over_field(
    field: &Arc<NumberField>,
    f: &NfPoly,
) -> Result<Vec<(NfPoly, u32)>> {
    if f.is_zero() {
        return Err(Error::Invalid("factorization of zero".into()));
    }
    if f.is_constant() {
        return Ok(vec![]);
    }
    if field.degree() == 1 {
        let fq = super::nfpoly_to_qpoly(f)
            .ok_or_else(|| Error::Invalid("non-rational element in degree-1 field".into()))?;
        return Ok(factor_rational_poly(&fq)?
            .into_iter()
            .map(|(g, m)| (super::qpoly_to_nfpoly(&g.monic()), m))
            .collect());
    }
    if field.degree() * f.degree() > FACTOR_DEGREE_CAP {
        return Err(Error::FieldTowerTooLarge(
            field.degree() * f.degree(),
            FACTOR_DEGREE_CAP,
        ));
    }
    let mut out: Vec<(NfPoly, u32)> = Vec::new();
    // squarefree decomposition works verbatim over K
    let mut parts: Vec<(NfPoly, u32)> = Vec::new();
    {
        let f = f.monic();
        let fp = f.derivative();
        let a0 = f.gcd(&fp);
        if a0.is_constant() {
            parts.push((f, 1));
        } else {
            let mut b = f.divrem(&a0).0;
            let mut c = fp.divrem(&a0).0;
            let mut i = 1u32;
            loop {
                let d = c.sub(&b.derivative());
                if d.is_zero() {
                    if !b.is_constant() {
                        parts.push((b.monic(), i));
                    }
                    break;
                }
                let g = b.gcd(&d);
                if !g.is_constant() {
                    parts.push((g.clone(), i));
                }
                b = b.divrem(&g).0;
                c = d.divrem(&g).0;
                i += 1;
                if b.is_constant() {
                    break;
                }
            }
        }
    }
    for (g, mult) in parts {
        for irr in factor_squarefree_over_field(field, &g)? {
            out.push((irr, mult));
        }
    }
    Ok(out)
}

fn factor_squarefree_over_field(field: &Arc<NumberField>, g: &NfPoly) -> Result<Vec<NfPoly>> {
    let g = g.monic();
    if g.degree() == 1 {
        return Ok(vec![g]);
    }
    for s in [0i64, 1, -1, 2, -2, 3, -3, 4, -4, 5, -5, 6, 7, 8] {
        let norm = resultant_theta(field.minpoly(), substituted_norm_input(field, &g, s));
        if norm.is_zero() {
            continue;
        }
        if !norm.gcd(&norm.derivative()).is_constant() {
            continue; // norm not squarefree: bad shift
        }
        let factors = factor_rational_poly(&norm)?;
        let shift = NfElem::generator(field) * super::nf_int(s);
        let mut out = Vec::new();
        let mut rest = g.clone();
        for (h, _) in factors {
            if rest.is_constant() {
                break;
            }
            let h_shifted: NfPoly = super::qpoly_to_nfpoly(&h).translate(&shift);
            let factor = rest.gcd(&h_shifted);
            if factor.is_constant() {
                continue;
            }
            rest = rest.divrem(&factor).0;
            out.push(factor.monic());
        }
        if !rest.is_constant() {
            out.push(rest.monic());
        }
        out.sort_by_key(|p| p.degree());
        return Ok(out);
    }
    Err(Error::Uncertified(
        "no squarefree norm shift found for field factorization".into(),
    ))
}

/// Roots of `f` lying in the field.
pub fn roots_in_field(field: &Arc<NumberField>, f: &NfPoly) -> Result<Vec<NfElem>> {
    let mut out = Vec::new();
    for (g, _) in factor_over_field(field, f)? {
        if g.degree() == 1 {
            out.push(-g.coeff(0));
        }
    }
    Ok(out)
}

/// A field extension collapsed to a primitive element.
pub struct FieldExtension {
    /// The new absolute field M.
    pub field: Arc<NumberField>,
    /// Image of the base generator θ inside M.
    pub base_gen: NfElem,
    /// The adjoined root inside M.
    pub new_root: NfElem,
}

/// Extends `base` by a root of `psi`, irreducible over `base`, returning an
/// absolute presentation with a primitive element.
pub fn extend_by_irreducible(base: &Arc<NumberField>, psi: &NfPoly) -> Result<FieldExtension> {
    let psi = psi.monic();
    assert!(!psi.is_zero() && psi.degree() >= 1);
    if psi.degree() == 1 {
        return Ok(FieldExtension {
            field: base.clone(),
            base_gen: NfElem::generator(base),
            new_root: -psi.coeff(0),
        });
    }
    let new_degree = base.degree() * psi.degree();
    if new_degree > FIELD_DEGREE_CAP {
        return Err(Error::FieldTowerTooLarge(new_degree, FIELD_DEGREE_CAP));
    }
    if base.degree() == 1 {
        let pq = super::nfpoly_to_qpoly(&psi)
            .ok_or_else(|| Error::Invalid("non-rational coefficients over ℚ".into()))?;
        let field = NumberField::new(&pq)?;
        return Ok(FieldExtension {
            base_gen: NfElem::Rat(Q::zero()),
            new_root: NfElem::generator(&field),
            field,
        });
    }
    for k in [1i64, -1, 2, -2, 3, -3, 4, -4, 5, 6, 7, 8, 9, 11] {
        // candidate primitive element ρ = (root of psi) + k·θ:
        // its characteristic polynomial is Res_θ(minpoly, psi(z - kθ))
        let cand = resultant_theta(base.minpoly(), substituted_norm_input(base, &psi, k));
        if cand.is_zero() || cand.degree() != new_degree {
            continue;
        }
        if !cand.gcd(&cand.derivative()).is_constant() {
            continue; // not a primitive element for this k
        }
        // squarefree characteristic polynomial of a field element of full
        // degree is its (irreducible) minimal polynomial
        let field = NumberField::new_unchecked_irreducible(&cand)?;
        // θ inside M: the unique common root of minpoly_base(x) and
        // psi(ρ - k·x)
        let rho = NfElem::generator(&field);
        let minpoly_in_m: NfPoly = super::qpoly_to_nfpoly(base.minpoly());
        // build psi(ρ - k·x) ∈ M[x]
        let mut psi_sub = NfPoly::zero();
        let x_term = Poly1::new(vec![rho.clone(), super::nf_int(-k)]); // ρ - kx
        for (j, cj) in psi.coeffs().iter().enumerate() {
            // coefficient c_j of y^j lives in base: map through θ ↦ x
            let cp = cj.coord_poly(base);
            let cj_in_m: NfPoly = super::qpoly_to_nfpoly(&cp); // polynomial in x
            psi_sub = psi_sub.add(&cj_in_m.mul(&x_term.pow(j)));
        }
        let g = minpoly_in_m.gcd(&psi_sub);
        if g.is_constant() || g.degree() != 1 {
            continue;
        }
        let theta_in_m = -(g.coeff(0) / g.leading());
        let new_root = rho.clone() - theta_in_m.clone() * super::nf_int(k);
        debug_assert!(minpoly_in_m.eval(&theta_in_m).is_zero());
        return Ok(FieldExtension {
            field,
            base_gen: theta_in_m,
            new_root,
        });
    }
    Err(Error::Uncertified(
        "no primitive shift found for the field extension".into(),
    ))
}

/// Compositum of two fields with embeddings of both generators.
pub struct Compositum {
    pub field: Arc<NumberField>,
    pub left_gen: NfElem,
    pub right_gen: NfElem,
}

pub fn compositum(left: &Arc<NumberField>, right: &Arc<NumberField>) -> Result<Compositum> {
    if right.degree() == 1 {
        return Ok(Compositum {
            field: left.clone(),
            left_gen: NfElem::generator(left),
            right_gen: NfElem::Rat(Q::zero()),
        });
    }
    if left.degree() == 1 {
        return Ok(Compositum {
            field: right.clone(),
            left_gen: NfElem::Rat(Q::zero()),
            right_gen: NfElem::generator(right),
        });
    }
    let rp: NfPoly = super::qpoly_to_nfpoly(right.minpoly());
    let factors = factor_over_field(left, &rp)?;
    let psi = &factors
        .iter()
        .min_by_key(|(g, _)| g.degree())
        .expect("minimal polynomial has at least one factor")
        .0;
    let ext = extend_by_irreducible(left, psi)?;
    Ok(Compositum {
        field: ext.field,
        left_gen: ext.base_gen,
        right_gen: ext.new_root,
    })
}

/// Finds an embedding of `sub` into `sup`: a root of `sub.minpoly` in `sup`.
pub fn embed(sub: &Arc<NumberField>, sup: &Arc<NumberField>) -> Result<NfElem> {
    if sub.degree() == 1 {
        return Ok(NfElem::Rat(Q::zero()));
    }
    if sup.degree() % sub.degree() != 0 {
        return Err(Error::NoEmbedding);
    }
    let mp = super::qpoly_to_nfpoly(sub.minpoly());
    let roots = roots_in_field(sup, &mp)?;
    roots.into_iter().next().ok_or(Error::NoEmbedding)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numfield::nf_int;
    use crate::util::q;
    use num_bigint::BigInt;

    fn qp(coeffs: &[i64]) -> QPoly {
        Poly1::new(coeffs.iter().map(|&c| q(c)).collect())
    }

    #[test]
    fn factor_over_gaussian_field() {
        // y^2 + 1 over Q(i) splits into (y - i)(y + i)
        let k = NumberField::new(&qp(&[1, 0, 1])).unwrap();
        let f = super::super::qpoly_to_nfpoly(&qp(&[1, 0, 1]));
        let fs = factor_over_field(&k, &f).unwrap();
        assert_eq!(fs.len(), 2);
        assert!(fs.iter().all(|(g, m)| g.degree() == 1 && *m == 1));
        let roots = roots_in_field(&k, &f).unwrap();
        assert_eq!(roots.len(), 2);
        let i = NfElem::generator(&k);
        assert!(roots.contains(&i));
    }

    #[test]
    fn factor_stays_irreducible() {
        // y^2 - 3 over Q(sqrt2) stays irreducible
        let k = NumberField::new(&qp(&[-2, 0, 1])).unwrap();
        let f = super::super::qpoly_to_nfpoly(&qp(&[-3, 0, 1]));
        let fs = factor_over_field(&k, &f).unwrap();
        assert_eq!(fs.len(), 1);
        assert_eq!(fs[0].0.degree(), 2);
    }

    #[test]
    fn factor_splits_sqrt8() {
        // y^2 - 8 = (y - 2√2)(y + 2√2) over Q(√2)
        let k = NumberField::new(&qp(&[-2, 0, 1])).unwrap();
        let f = super::super::qpoly_to_nfpoly(&qp(&[-8, 0, 1]));
        let roots = roots_in_field(&k, &f).unwrap();
        assert_eq!(roots.len(), 2);
        let two_sqrt2 = NfElem::generator(&k) * nf_int(2);
        assert!(roots.contains(&two_sqrt2));
    }

    #[test]
    fn compositum_of_quadratics() {
        let k2 = NumberField::new(&qp(&[-2, 0, 1])).unwrap();
        let k3 = NumberField::new(&qp(&[-3, 0, 1])).unwrap();
        let c = compositum(&k2, &k3).unwrap();
        assert_eq!(c.field.degree(), 4);
        assert_eq!(*c.field.discriminant(), BigInt::from(2304));
        // embedded generators really are √2 and √3
        let g2 = c.left_gen.clone() * c.left_gen.clone();
        let g3 = c.right_gen.clone() * c.right_gen.clone();
        assert_eq!(g2, nf_int(2));
        assert_eq!(g3, nf_int(3));
    }

    #[test]
    fn extension_by_quadratic_over_quadratic() {
        // Q(√2)(√3) built from the factor y^2 - 3
        let k = NumberField::new(&qp(&[-2, 0, 1])).unwrap();
        let psi = super::super::qpoly_to_nfpoly(&qp(&[-3, 0, 1]));
        let ext = extend_by_irreducible(&k, &psi).unwrap();
        assert_eq!(ext.field.degree(), 4);
        let r2 = ext.base_gen.clone() * ext.base_gen.clone();
        let r3 = ext.new_root.clone() * ext.new_root.clone();
        assert_eq!(r2, nf_int(2));
        assert_eq!(r3, nf_int(3));
    }

    #[test]
    fn embed_quadratic_in_biquadratic() {
        let k = NumberField::new(&qp(&[-2, 0, 1])).unwrap();
        let big = NumberField::new(&qp(&[1, 0, -10, 0, 1])).unwrap();
        let e = embed(&k, &big).unwrap();
        assert_eq!(e.clone() * e, nf_int(2));
        let k7 = NumberField::new(&qp(&[-7, 0, 1])).unwrap();
        assert!(embed(&k7, &big).is_err());
    }
}
