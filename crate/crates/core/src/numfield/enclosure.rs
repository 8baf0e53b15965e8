//! Certified complex enclosures of polynomial roots: Aberth–Ehrlich in
//! doubles for the approximation, then disk certification against the exact
//! rational coefficients. Each returned box contains exactly one root and
//! the boxes are pairwise disjoint.

use crate::interval::{rational_to_interval, ComplexBox, RealInterval};
use crate::{Error, QPoly, Result};
use num_traits::ToPrimitive;

#[derive(Clone, Copy, Debug)]
struct C {
    re: f64,
    im: f64,
}

impl C {
    fn new(re: f64, im: f64) -> Self {
        C { re, im }
    }
    fn add(self, o: C) -> C {
        C::new(self.re + o.re, self.im + o.im)
    }
    fn sub(self, o: C) -> C {
        C::new(self.re - o.re, self.im - o.im)
    }
    fn mul(self, o: C) -> C {
        C::new(
            self.re * o.re - self.im * o.im,
            self.re * o.im + self.im * o.re,
        )
    }
    fn div(self, o: C) -> C {
        let d = o.re * o.re + o.im * o.im;
        C::new(
            (self.re * o.re + self.im * o.im) / d,
            (self.im * o.re - self.re * o.im) / d,
        )
    }
    fn abs(self) -> f64 {
        self.re.hypot(self.im)
    }
}

/// Interval evaluation of a rational polynomial on a complex box.
pub(super) fn eval_qpoly_box(p: &QPoly, z: ComplexBox) -> ComplexBox {
    let mut acc = ComplexBox::zero();
    for c in p.coeffs().iter().rev() {
        let cb = ComplexBox {
            re: rational_to_interval(c),
            im: RealInterval::zero(),
        };
        acc = acc.mul(z).add(cb);
    }
    acc
}

fn eval_f64(coeffs: &[f64], z: C) -> C {
    let mut acc = C::new(0.0, 0.0);
    for &c in coeffs.iter().rev() {
        acc = acc.mul(z).add(C::new(c, 0.0));
    }
    acc
}

/// Isolates all complex roots of a squarefree rational polynomial.
/// `target_radius` is best-effort: refinement stops at the f64 floor.
pub fn isolate_complex_roots(f: &QPoly, target_radius: f64) -> Result<Vec<ComplexBox>> {
    assert!(!f.is_zero() && !f.is_constant(), "no roots to isolate");
    let n = f.degree();
    if n == 1 {
        let root = -(f.coeff(0) / f.coeff(1));
        return Ok(vec![ComplexBox {
            re: rational_to_interval(&root),
            im: RealInterval::zero(),
        }]);
    }

    // scaled double-precision coefficients for the solver only
    let raw: Vec<f64> = f
        .coeffs()
        .iter()
        .map(|c| c.to_f64().unwrap_or(f64::NAN))
        .collect();
    let scale = raw
        .iter()
        .fold(0.0f64, |m, c| m.max(c.abs()));
    if !scale.is_finite() || scale == 0.0 {
        return Err(Error::Uncertified(
            "coefficients overflow double precision".into(),
        ));
    }
    let coeffs: Vec<f64> = raw.iter().map(|c| c / scale).collect();
    if coeffs.iter().any(|c| !c.is_finite()) {
        return Err(Error::Uncertified(
            "coefficients overflow double precision".into(),
        ));
    }
    let dcoeffs: Vec<f64> = coeffs
        .iter()
        .enumerate()
        .skip(1)
        .map(|(k, c)| c * k as f64)
        .collect();

    // Cauchy-style inclusion radius
    let lead = coeffs[n].abs();
    let radius = 1.0
        + coeffs[..n]
            .iter()
            .fold(0.0f64, |m, c| m.max(c.abs() / lead));

    let mut z: Vec<C> = (0..n)
        .map(|k| {
            let th = 2.0 * std::f64::consts::PI * (k as f64 + 0.354) / n as f64;
            C::new(0.7 * radius * th.cos(), 0.7 * radius * th.sin() + 0.1)
        })
        .collect();

    for round in 0..8 {
        // Aberth–Ehrlich simultaneous iteration
        for _ in 0..200 {
            let mut max_step = 0.0f64;
            for i in 0..n {
                let pv = eval_f64(&coeffs, z[i]);
                let dv = eval_f64(&dcoeffs, z[i]);
                if dv.abs() == 0.0 {
                    z[i] = z[i].add(C::new(1e-4 * radius, 1.3e-4 * radius));
                    max_step = f64::INFINITY;
                    continue;
                }
                let w = pv.div(dv);
                let mut s = C::new(0.0, 0.0);
                for j in 0..n {
                    if j != i {
                        s = s.add(C::new(1.0, 0.0).div(z[i].sub(z[j])));
                    }
                }
                let denom = C::new(1.0, 0.0).sub(w.mul(s));
                let step = if denom.abs() < 1e-300 { w } else { w.div(denom) };
                z[i] = z[i].sub(step);
                max_step = max_step.max(step.abs());
            }
            if max_step < 1e-15 * radius {
                break;
            }
        }
        // a few plain Newton polish steps per root
        for zi in z.iter_mut() {
            for _ in 0..4 {
                let pv = eval_f64(&coeffs, *zi);
                let dv = eval_f64(&dcoeffs, *zi);
                if dv.abs() > 0.0 {
                    *zi = zi.sub(pv.div(dv));
                }
            }
        }
        if let Some(boxes) = certify(f, &z, target_radius) {
            return Ok(boxes);
        }
        // perturb and retry
        for (k, zi) in z.iter_mut().enumerate() {
            let th = 0.77 * (k as f64 + 1.0) * (round as f64 + 1.0);
            *zi = zi.add(C::new(1e-6 * radius * th.cos(), 1e-6 * radius * th.sin()));
        }
    }
    Err(Error::Uncertified(
        "complex root isolation failed to certify disjoint disks".into(),
    ))
}

/// Certification: every approximation carries a disk of radius
/// `n·|p(z)|/|p'(z)|` (interval-evaluated against the exact coefficients)
/// containing at least one root; disjointness plus counting makes each disk
/// contain exactly one.
fn certify(f: &QPoly, z: &[C], _target: f64) -> Option<Vec<ComplexBox>> {
    let n = f.degree();
    let fd = f.derivative();
    let mut centers = Vec::with_capacity(n);
    let mut radii = Vec::with_capacity(n);
    for zi in z {
        if !zi.re.is_finite() || !zi.im.is_finite() {
            return None;
        }
        let zb = ComplexBox::exact(zi.re, zi.im);
        let pv = eval_qpoly_box(f, zb).abs();
        let dv = eval_qpoly_box(&fd, zb).abs();
        if dv.lo <= 0.0 {
            return None;
        }
        let rho = (n as f64) * pv.hi / dv.lo;
        if !rho.is_finite() {
            return None;
        }
        centers.push(*zi);
        radii.push(rho * 1.000000001 + 1e-300);
    }
    for i in 0..n {
        for j in i + 1..n {
            let dist = centers[i].sub(centers[j]).abs();
            if dist * 0.999999 <= radii[i] + radii[j] {
                return None;
            }
        }
    }
    let mut boxes: Vec<ComplexBox> = centers
        .iter()
        .zip(&radii)
        .map(|(c, &r)| ComplexBox {
            re: RealInterval::new(c.re - r, c.re + r),
            im: RealInterval::new(c.im - r, c.im + r),
        })
        .collect();
    boxes.sort_by(|a, b| {
        let ka = (a.re.midpoint(), a.im.midpoint());
        let kb = (b.re.midpoint(), b.im.midpoint());
        ka.partial_cmp(&kb).unwrap()
    });
    Some(boxes)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Poly1;
    use crate::util::q;

    fn qp(coeffs: &[i64]) -> QPoly {
        Poly1::new(coeffs.iter().map(|&c| q(c)).collect())
    }

    #[test]
    fn sqrt2_roots() {
        let boxes = isolate_complex_roots(&qp(&[-2, 0, 1]), 1e-12).unwrap();
        assert_eq!(boxes.len(), 2);
        let r = 2f64.sqrt();
        assert!(boxes[0].re.contains(-r) || boxes[1].re.contains(-r));
        assert!(boxes.iter().all(|b| b.im.contains(0.0)));
    }

    #[test]
    fn gaussian_roots_are_imaginary() {
        let boxes = isolate_complex_roots(&qp(&[1, 0, 1]), 1e-12).unwrap();
        assert_eq!(boxes.len(), 2);
        for b in &boxes {
            assert!(b.re.contains(0.0));
            assert!(b.im.contains(1.0) || b.im.contains(-1.0));
        }
    }

    #[test]
    fn disjointness_of_close_roots() {
        // (x-1)(x-1.001...) style: x^2 - 2001/1000 x + 1001/1000
        let f = Poly1::new(vec![
            crate::util::qr(1001, 1000),
            crate::util::qr(-2001, 1000),
            q(1),
        ]);
        let boxes = isolate_complex_roots(&f, 1e-12).unwrap();
        assert_eq!(boxes.len(), 2);
        assert!(boxes[0].disjoint(boxes[1]));
    }

    #[test]
    fn degree_eight_cyclotomic_like() {
        // x^8 - 1 is not squarefree-irreducible but is squarefree
        let mut c = vec![q(0); 9];
        c[0] = q(-1);
        c[8] = q(1);
        let boxes = isolate_complex_roots(&Poly1::new(c), 1e-12).unwrap();
        assert_eq!(boxes.len(), 8);
        for b in &boxes {
            let m = b.abs();
            assert!(m.contains(1.0));
        }
    }
}
