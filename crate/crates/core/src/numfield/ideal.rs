//! Integer/rational linear algebra (HNF, inverses) and norms of ideals
//! generated by field elements, used for denominator/numerator place sets
//! and the finite parts of heights.

use super::{NfElem, NumberField};
use crate::primes::prime_divisors;
use crate::util::common_denominator;
use crate::{Error, Result, Q};
use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::sync::Arc;

/// Row-style Hermite normal form of a full-column-rank integer matrix:
/// returns a `d×d` upper-triangular basis with positive diagonal of the row
/// lattice spanned by the input.
pub(super) fn hnf(mut rows: Vec<Vec<BigInt>>, d: usize) -> Vec<Vec<BigInt>> {
    rows.retain(|r| r.iter().any(|x| !x.is_zero()));
    let mut out: Vec<Vec<BigInt>> = Vec::with_capacity(d);
    let mut pivot_col = 0usize;
    while pivot_col < d {
        // gather rows with support starting at pivot_col
        loop {
            let mut best: Option<usize> = None;
            for (i, r) in rows.iter().enumerate() {
                if !r[pivot_col].is_zero() {
                    match best {
                        None => best = Some(i),
                        Some(b) => {
                            if r[pivot_col].magnitude() < rows[b][pivot_col].magnitude() {
                                best = Some(i)
                            }
                        }
                    }
                }
            }
            let Some(b) = best else {
                break;
            };
            let pivot = rows.swap_remove(b);
            let mut others = false;
            for r in rows.iter_mut() {
                if !r[pivot_col].is_zero() {
                    let q = r[pivot_col].div_floor(&pivot[pivot_col]);
                    if !q.is_zero() {
                        for k in 0..d {
                            let t = &r[k] - &q * &pivot[k];
                            r[k] = t;
                        }
                    }
                    if !r[pivot_col].is_zero() {
                        others = true;
                    }
                }
            }
            rows.push(pivot);
            if !others {
                // unique pivot survives
                let idx = rows
                    .iter()
                    .position(|r| !r[pivot_col].is_zero())
                    .expect("pivot vanished");
                let mut p = rows.swap_remove(idx);
                if p[pivot_col].is_negative() {
                    for x in p.iter_mut() {
                        *x = -x.clone();
                    }
                }
                out.push(p);
                break;
            }
        }
        pivot_col += 1;
    }
    assert_eq!(out.len(), d, "HNF input was not of full column rank");
    // reduce above-diagonal entries
    for i in (0..d).rev() {
        for j in 0..i {
            let q = out[j][i].div_floor(&out[i][i]);
            if !q.is_zero() {
                for k in 0..d {
                    let t = &out[j][k] - &q * &out[i][k];
                    out[j][k] = t;
                }
            }
        }
    }
    out
}

/// Solves `c · U = v` for an upper-triangular integer `U` with nonzero
/// diagonal; returns `None` when the solution is not integral.
pub(super) fn solve_upper_integer(u: &[Vec<BigInt>], v: &[BigInt]) -> Option<Vec<BigInt>> {
    let d = u.len();
    let mut c = vec![BigInt::zero(); d];
    for j in 0..d {
        let mut acc = v[j].clone();
        for i in 0..j {
            acc -= &c[i] * &u[i][j];
        }
        let (q, r) = acc.div_rem(&u[j][j]);
        if !r.is_zero() {
            return None;
        }
        c[j] = q;
    }
    Some(c)
}

/// Inverse of a square rational matrix by Gauss–Jordan elimination.
pub(super) fn invert_rational(mat: &[Vec<Q>]) -> Vec<Vec<Q>> {
    let d = mat.len();
    let mut a: Vec<Vec<Q>> = mat.to_vec();
    let mut inv: Vec<Vec<Q>> = (0..d)
        .map(|i| {
            (0..d)
                .map(|j| if i == j { Q::one() } else { Q::zero() })
                .collect()
        })
        .collect();
    for col in 0..d {
        let pivot = (col..d)
            .find(|&r| !a[r][col].is_zero())
            .expect("singular matrix");
        a.swap(col, pivot);
        inv.swap(col, pivot);
        let p = a[col][col].clone();
        for k in 0..d {
            a[col][k] /= &p;
            inv[col][k] /= &p;
        }
        for r in 0..d {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                for k in 0..d {
                    let t = &a[col][k] * &f;
                    a[r][k] -= t;
                    let t = &inv[col][k] * &f;
                    inv[r][k] -= t;
                }
            }
        }
    }
    inv
}

pub(super) fn det_rational(mat: &[Vec<Q>]) -> Q {
    let d = mat.len();
    let mut a: Vec<Vec<Q>> = mat.to_vec();
    let mut det = Q::one();
    for col in 0..d {
        let Some(pivot) = (col..d).find(|&r| !a[r][col].is_zero()) else {
            return Q::zero();
        };
        if pivot != col {
            a.swap(col, pivot);
            det = -det;
        }
        let p = a[col][col].clone();
        det *= &p;
        for r in col + 1..d {
            if !a[r][col].is_zero() {
                let f = &a[r][col] / &p;
                for k in col..d {
                    let t = &a[col][k] * &f;
                    a[r][k] -= t;
                }
            }
        }
    }
    det
}

/// Norm data of the fractional ideal generated by a family of elements.
#[derive(Clone, Debug)]
pub struct IdealNorms {
    /// `N(𝔞)` as a positive rational.
    pub norm: Q,
    /// Norm of the denominator ideal (positive integer).
    pub denominator_norm: BigUint,
    /// Norm of the numerator ideal (positive integer).
    pub numerator_norm: BigUint,
}

impl IdealNorms {
    /// Rational primes below places of the denominator ideal.
    pub fn denominator_primes(&self) -> Result<Vec<BigUint>> {
        if self.denominator_norm.is_one() {
            return Ok(vec![]);
        }
        prime_divisors(&self.denominator_norm)
            .ok_or_else(|| Error::Uncertified("ideal norm resists factorization".into()))
    }

    /// Rational primes below places of the numerator ideal.
    pub fn numerator_primes(&self) -> Result<Vec<BigUint>> {
        if self.numerator_norm.is_one() {
            return Ok(vec![]);
        }
        prime_divisors(&self.numerator_norm)
            .ok_or_else(|| Error::Uncertified("ideal norm resists factorization".into()))
    }
}

/// Computes the norms for `𝔞 = Σ β_i·O_K` (with 1 optionally adjoined by the
/// caller). Every `β_i` must lie in `field`; at least one must be nonzero.
pub fn generated_ideal_norms(field: &Arc<NumberField>, elems: &[NfElem]) -> Result<IdealNorms> {
    let d = field.degree();
    let nonzero: Vec<&NfElem> = elems.iter().filter(|e| !e.is_zero()).collect();
    if nonzero.is_empty() {
        return Err(Error::ZeroVector);
    }
    // coordinates of each β_i·ω_j over the integral basis
    let basis_inv = invert_rational(
        &field
            .integral_basis
            .iter()
            .map(|r| pad(r, d))
            .collect::<Vec<_>>(),
    );
    let mut rows_q: Vec<Vec<Q>> = Vec::new();
    for beta in nonzero {
        let bp = beta.coord_poly(field);
        for omega in &field.integral_basis {
            // power-basis product β·ω mod minpoly
            let omega_poly = crate::poly::Poly1::new(omega.clone());
            let prod = bp.mul(&omega_poly).rem(field.minpoly());
            let v = pad(prod.coeffs(), d);
            // integral-basis coordinates
            let coords: Vec<Q> = (0..d)
                .map(|j| {
                    (0..d)
                        .map(|k| &v[k] * &basis_inv[k][j])
                        .fold(Q::zero(), |a, b| a + b)
                })
                .collect();
            rows_q.push(coords);
        }
    }
    let den = common_denominator(rows_q.iter().flatten());
    let rows: Vec<Vec<BigInt>> = rows_q
        .iter()
        .map(|r| {
            r.iter()
                .map(|c| (c * BigRational::from(den.clone())).to_integer())
                .collect()
        })
        .collect();
    let b_mat = hnf(rows, d);
    let det_b: BigInt = (0..d).map(|i| b_mat[i][i].clone()).product();
    // gcd with q·O  (𝔟 + q·O where 𝔟 = den·𝔞)
    let mut g_rows = b_mat.clone();
    for i in 0..d {
        let mut r = vec![BigInt::zero(); d];
        r[i] = den.clone();
        g_rows.push(r);
    }
    let g_mat = hnf(g_rows, d);
    let det_g: BigInt = (0..d).map(|i| g_mat[i][i].clone()).product();

    let den_pow = num_traits::pow::pow(den.clone(), d);
    let numerator_norm = (&det_b / &det_g).magnitude().clone();
    let denominator_norm = (&den_pow / &det_g).magnitude().clone();
    let norm = BigRational::new(det_b.clone(), den_pow.clone());
    Ok(IdealNorms {
        norm,
        denominator_norm,
        numerator_norm,
    })
}

fn pad(v: &[Q], d: usize) -> Vec<Q> {
    let mut out = v.to_vec();
    out.resize(d, Q::zero());
    out
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
    fn hnf_determinant() {
        let rows = vec![
            vec![BigInt::from(2), BigInt::from(1)],
            vec![BigInt::from(0), BigInt::from(3)],
            vec![BigInt::from(4), BigInt::from(5)],
        ];
        let h = hnf(rows, 2);
        let det: BigInt = (0..2).map(|i| h[i][i].clone()).product();
        assert_eq!(det, BigInt::from(6)); // lattice index of span{(2,1),(0,3),(4,5)}
    }

    #[test]
    fn rational_ideal_norms() {
        let field = NumberField::rationals();
        // (3/2): numerator 3, denominator 2
        let n = generated_ideal_norms(&field, &[NfElem::Rat(qr(3, 2))]).unwrap();
        assert_eq!(n.numerator_norm, BigUint::from(3u32));
        assert_eq!(n.denominator_norm, BigUint::from(2u32));
        // (4, 6) = (2)
        let n = generated_ideal_norms(&field, &[nf_int(4), nf_int(6)]).unwrap();
        assert_eq!(n.numerator_norm, BigUint::from(2u32));
        assert_eq!(n.denominator_norm, BigUint::one());
    }

    #[test]
    fn gaussian_ideal_norm() {
        let k = NumberField::new(&qp(&[1, 0, 1])).unwrap();
        // (1+i) has norm 2
        let a = NfElem::from_coord_poly(&k, qp(&[1, 1]));
        let n = generated_ideal_norms(&k, &[a]).unwrap();
        assert_eq!(n.norm, q(2));
        assert_eq!(n.numerator_norm, BigUint::from(2u32));
    }
}
