//! Univariate factorization over ℚ: squarefree decomposition, Berlekamp /
//! Cantor–Zassenhaus over 𝔽_p, quadratic Hensel lifting, and Zassenhaus
//! subset recombination. Degrees are capped at desk scale.

use crate::poly::Poly1;
use crate::primes::{is_prime_u64, sieve};
use crate::util::{common_denominator, integer_content};
use crate::{Error, QPoly, Result, Q};
use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Hard cap on the degree the factorization engine accepts.
pub const FACTOR_DEGREE_CAP: usize = 24;

// ---------------------------------------------------------------------------
// integer polynomials
// ---------------------------------------------------------------------------

/// Dense integer polynomial, ascending coefficients, normalized tail.
#[derive(Clone, PartialEq, Debug)]
pub struct ZPoly {
    pub coeffs: Vec<BigInt>,
}

impl ZPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().map_or(false, Zero::is_zero) {
            coeffs.pop();
        }
        ZPoly { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> usize {
        assert!(!self.is_zero());
        self.coeffs.len() - 1
    }

    pub fn leading(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn content(&self) -> BigInt {
        integer_content(&self.coeffs)
    }

    /// Content-free with positive leading coefficient.
    pub fn primitive(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut c = self.content();
        if self.leading().is_negative() {
            c = -c;
        }
        ZPoly::new(self.coeffs.iter().map(|a| a / &c).collect())
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return ZPoly::new(vec![]);
        }
        let mut v = vec![BigInt::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in o.coeffs.iter().enumerate() {
                v[i + j] += a * b;
            }
        }
        ZPoly::new(v)
    }

    pub fn to_qpoly(&self) -> QPoly {
        Poly1::new(
            self.coeffs
                .iter()
                .map(|c| BigRational::from(c.clone()))
                .collect(),
        )
    }

    /// Clears denominators of a rational polynomial; returns the primitive
    /// integer polynomial (sign-normalized) alone.
    pub fn from_qpoly_primitive(f: &QPoly) -> Self {
        let den = common_denominator(f.coeffs().iter());
        ZPoly::new(
            f.coeffs()
                .iter()
                .map(|c| (c * BigRational::from(den.clone())).to_integer())
                .collect(),
        )
        .primitive()
    }

    pub fn max_abs_coeff(&self) -> BigUint {
        self.coeffs
            .iter()
            .map(|c| c.magnitude().clone())
            .max()
            .unwrap_or_else(BigUint::zero)
    }
}

// ---------------------------------------------------------------------------
// arithmetic over F_p
// ---------------------------------------------------------------------------

/// Polynomial over 𝔽_p, coefficients reduced, p an odd prime or 2.
#[derive(Clone, PartialEq, Debug)]
pub struct FpPoly {
    pub p: BigUint,
    pub coeffs: Vec<BigUint>,
}

impl FpPoly {
    pub fn new(p: &BigUint, mut coeffs: Vec<BigUint>) -> Self {
        for c in &mut coeffs {
            *c %= p;
        }
        while coeffs.last().map_or(false, Zero::is_zero) {
            coeffs.pop();
        }
        FpPoly {
            p: p.clone(),
            coeffs,
        }
    }

    pub fn from_zpoly(f: &ZPoly, p: &BigUint) -> Self {
        let pi = BigInt::from(p.clone());
        FpPoly::new(
            p,
            f.coeffs
                .iter()
                .map(|c| c.mod_floor(&pi).magnitude().clone())
                .collect(),
        )
    }

    pub fn zero(p: &BigUint) -> Self {
        FpPoly {
            p: p.clone(),
            coeffs: vec![],
        }
    }

    pub fn one(p: &BigUint) -> Self {
        FpPoly {
            p: p.clone(),
            coeffs: vec![BigUint::one()],
        }
    }

    pub fn x(p: &BigUint) -> Self {
        FpPoly {
            p: p.clone(),
            coeffs: vec![BigUint::zero(), BigUint::one()],
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> usize {
        assert!(!self.is_zero());
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, k: usize) -> BigUint {
        self.coeffs.get(k).cloned().unwrap_or_else(BigUint::zero)
    }

    pub fn leading(&self) -> BigUint {
        self.coeffs.last().cloned().unwrap_or_else(BigUint::zero)
    }

    fn addm(&self, a: &BigUint, b: &BigUint) -> BigUint {
        (a + b) % &self.p
    }

    fn subm(&self, a: &BigUint, b: &BigUint) -> BigUint {
        ((a + &self.p) - (b % &self.p)) % &self.p
    }

    fn mulm(&self, a: &BigUint, b: &BigUint) -> BigUint {
        (a * b) % &self.p
    }

    fn invm(&self, a: &BigUint) -> BigUint {
        // Fermat inverse
        a.modpow(&(&self.p - BigUint::from(2u32)), &self.p)
    }

    pub fn add(&self, o: &Self) -> Self {
        let n = self.coeffs.len().max(o.coeffs.len());
        FpPoly::new(
            &self.p,
            (0..n).map(|k| self.addm(&self.coeff(k), &o.coeff(k))).collect(),
        )
    }

    pub fn sub(&self, o: &Self) -> Self {
        let n = self.coeffs.len().max(o.coeffs.len());
        FpPoly::new(
            &self.p,
            (0..n).map(|k| self.subm(&self.coeff(k), &o.coeff(k))).collect(),
        )
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return FpPoly::zero(&self.p);
        }
        let mut v = vec![BigUint::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                v[i + j] = (&v[i + j] + a * b) % &self.p;
            }
        }
        FpPoly::new(&self.p, v)
    }

    pub fn scale(&self, c: &BigUint) -> Self {
        FpPoly::new(&self.p, self.coeffs.iter().map(|a| self.mulm(a, c)).collect())
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let inv = self.invm(&self.leading());
        self.scale(&inv)
    }

    pub fn divrem(&self, d: &Self) -> (Self, Self) {
        assert!(!d.is_zero());
        if self.is_zero() || self.degree() < d.degree() {
            return (FpPoly::zero(&self.p), self.clone());
        }
        let dlead_inv = self.invm(&d.leading());
        let dd = d.degree();
        let mut rem = self.coeffs.clone();
        let qd = self.degree() - dd;
        let mut q = vec![BigUint::zero(); qd + 1];
        for k in (0..=qd).rev() {
            let c = rem[k + dd].clone();
            if c.is_zero() {
                continue;
            }
            let f = self.mulm(&c, &dlead_inv);
            for (j, dc) in d.coeffs.iter().enumerate() {
                rem[k + j] = self.subm(&rem[k + j], &self.mulm(&f, dc));
            }
            q[k] = f;
        }
        (FpPoly::new(&self.p, q), FpPoly::new(&self.p, rem))
    }

    pub fn rem(&self, d: &Self) -> Self {
        self.divrem(d).1
    }

    pub fn gcd(&self, o: &Self) -> Self {
        let mut a = self.clone();
        let mut b = o.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        if a.is_zero() {
            a
        } else {
            a.monic()
        }
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return FpPoly::zero(&self.p);
        }
        let mut v = Vec::with_capacity(self.coeffs.len() - 1);
        for (k, c) in self.coeffs.iter().enumerate().skip(1) {
            v.push((c * BigUint::from(k)) % &self.p);
        }
        FpPoly::new(&self.p, v)
    }

    /// `self^e mod m`.
    pub fn powmod(&self, e: &BigUint, m: &Self) -> Self {
        let mut acc = FpPoly::one(&self.p);
        let mut base = self.rem(m);
        let bits = e.bits();
        for i in 0..bits {
            if e.bit(i) {
                acc = acc.mul(&base).rem(m);
            }
            if i + 1 < bits {
                base = base.mul(&base).rem(m);
            }
        }
        acc
    }

    pub fn eval(&self, x: &BigUint) -> BigUint {
        let mut acc = BigUint::zero();
        for c in self.coeffs.iter().rev() {
            acc = (acc * x + c) % &self.p;
        }
        acc
    }

    /// Lift to an integer polynomial with coefficients in `(-p/2, p/2]`.
    pub fn lift_symmetric(&self) -> ZPoly {
        let p = BigInt::from(self.p.clone());
        let half = &p / 2;
        ZPoly::new(
            self.coeffs
                .iter()
                .map(|c| {
                    let c = BigInt::from(c.clone());
                    if c > half {
                        c - &p
                    } else {
                        c
                    }
                })
                .collect(),
        )
    }
}

/// Distinct-degree then equal-degree splitting (Cantor–Zassenhaus). For p = 2
/// a trace-based splitter replaces the odd-characteristic exponentiation.
/// Input must be squarefree and monic; output is the list of monic
/// irreducible factors. Deterministic: the "random" probes walk a fixed
/// sequence of small polynomials.
pub fn factor_fp_squarefree(f: &FpPoly) -> Vec<FpPoly> {
    assert!(!f.is_zero());
    let f = f.monic();
    if f.degree() == 0 {
        return vec![];
    }
    let p = f.p.clone();
    let mut out = Vec::new();

    // distinct degree: h = x^(p^d) mod f accumulated
    let mut rest = f.clone();
    let mut h = FpPoly::x(&p);
    let mut d = 0usize;
    while !rest.is_zero() && rest.degree() >= 1 {
        d += 1;
        if 2 * d > rest.degree() {
            out.push(rest.clone());
            break;
        }
        h = h.powmod(&p, &rest);
        let diff = h.sub(&FpPoly::x(&p));
        let g = rest.gcd(&diff);
        if !g.is_zero() && g.degree() >= 1 {
            split_equal_degree(&g, d, &mut out);
            rest = rest.divrem(&g).0;
            h = h.rem(&rest);
        }
    }
    out.sort_by_key(|g| (g.degree(), g.coeffs.clone()));
    out
}

fn split_equal_degree(g: &FpPoly, d: usize, out: &mut Vec<FpPoly>) {
    if g.degree() == d {
        out.push(g.monic());
        return;
    }
    let p = g.p.clone();
    let two = BigUint::from(2u32);
    // deterministic probe sequence: x+c, then higher-degree probes
    let mut probe_idx = 0u64;
    loop {
        probe_idx += 1;
        let t = probe_poly(&p, probe_idx, 2 * d);
        let splitter = if p == two {
            // trace map T(t) = t + t^2 + t^4 + ... over F_2
            let mut tr = FpPoly::zero(&p);
            let mut cur = t.rem(g);
            for _ in 0..d {
                tr = tr.add(&cur);
                cur = cur.mul(&cur).rem(g);
            }
            tr
        } else {
            // t^((p^d-1)/2) - 1
            let e = (p.pow(d as u32) - BigUint::one()) / &two;
            t.powmod(&e, g).sub(&FpPoly::one(&p))
        };
        if splitter.is_zero() {
            continue;
        }
        let h = g.gcd(&splitter);
        if !h.is_zero() && h.degree() >= 1 && h.degree() < g.degree() {
            split_equal_degree(&h, d, out);
            split_equal_degree(&g.divrem(&h).0, d, out);
            return;
        }
    }
}

/// Full factorization over 𝔽_p with multiplicities (monic input of any
/// multiplicity structure; the unit is dropped).
pub fn factor_fp_full(f: &FpPoly) -> Vec<(FpPoly, u32)> {
    let f = f.monic();
    if f.is_zero() || f.degree() == 0 {
        return vec![];
    }
    let mut out: Vec<(FpPoly, u32)> = Vec::new();
    for (g, m) in fp_squarefree_decomposition(&f, 1) {
        for irr in factor_fp_squarefree(&g) {
            out.push((irr, m));
        }
    }
    out.sort_by_key(|(g, _)| (g.degree(), g.coeffs.clone()));
    out
}

/// Squarefree decomposition in characteristic p, handling the `f = g(x^p)`
/// collapse (where the Frobenius fixes 𝔽_p coefficients).
fn fp_squarefree_decomposition(f: &FpPoly, outer_mult: u32) -> Vec<(FpPoly, u32)> {
    let p = f.p.clone();
    let mut out = Vec::new();
    let df = f.derivative();
    if df.is_zero() {
        // f = g(x^p) with the same coefficients at stride p
        let pu = p.to_u64().expect("characteristic too large for collapse") as usize;
        let mut inner = Vec::new();
        for (k, c) in f.coeffs.iter().enumerate() {
            if k % pu == 0 {
                inner.push(c.clone());
            } else {
                debug_assert!(c.is_zero());
            }
        }
        let g = FpPoly::new(&p, inner);
        return fp_squarefree_decomposition(&g, outer_mult * pu as u32);
    }
    let c0 = f.gcd(&df);
    let mut w = f.divrem(&c0).0;
    let mut c = c0;
    let mut i = 1u32;
    while !w.is_zero() && w.degree() >= 1 {
        let y = w.gcd(&c);
        let z = w.divrem(&y).0;
        if !z.is_zero() && z.degree() >= 1 {
            out.push((z.monic(), i * outer_mult));
        }
        w = y;
        c = c.divrem(&w).0;
        i += 1;
    }
    if !c.is_zero() && c.degree() >= 1 {
        // leftover p-th power part
        out.extend(fp_squarefree_decomposition(&c, outer_mult));
    }
    out
}

fn probe_poly(p: &BigUint, idx: u64, max_deg: usize) -> FpPoly {
    // enumerate x + idx, then sparse quadratics/cubics as idx grows
    let small = idx % 1000;
    let deg = 1 + ((idx / 1000) as usize) % max_deg.max(1);
    let mut coeffs = vec![BigUint::zero(); deg + 1];
    coeffs[0] = BigUint::from(small) % p;
    coeffs[deg] = BigUint::one();
    if deg >= 2 && idx % 2 == 0 {
        coeffs[1] = BigUint::one();
    }
    FpPoly::new(p, coeffs)
}

// ---------------------------------------------------------------------------
// Hensel lifting
// ---------------------------------------------------------------------------

fn symmetric_mod(c: &BigInt, m: &BigInt) -> BigInt {
    let r = c.mod_floor(m);
    if &r * 2 > *m {
        r - m
    } else {
        r
    }
}

fn reduce_mod(z: &ZPoly, m: &BigInt) -> ZPoly {
    ZPoly::new(z.coeffs.iter().map(|c| symmetric_mod(c, m)).collect())
}

fn mul_mod(a: &ZPoly, b: &ZPoly, m: &BigInt) -> ZPoly {
    reduce_mod(&a.mul(b), m)
}

fn add_mod(a: &ZPoly, b: &ZPoly, m: &BigInt) -> ZPoly {
    let n = a.coeffs.len().max(b.coeffs.len());
    ZPoly::new(
        (0..n)
            .map(|k| symmetric_mod(&(a.coeff(k) + b.coeff(k)), m))
            .collect(),
    )
}

fn sub_mod(a: &ZPoly, b: &ZPoly, m: &BigInt) -> ZPoly {
    let n = a.coeffs.len().max(b.coeffs.len());
    ZPoly::new(
        (0..n)
            .map(|k| symmetric_mod(&(a.coeff(k) - b.coeff(k)), m))
            .collect(),
    )
}

/// Division by a monic divisor with coefficients mod `m`; exact because the
/// leading coefficient is 1.
fn divrem_monic_mod(a: &ZPoly, b: &ZPoly, m: &BigInt) -> (ZPoly, ZPoly) {
    debug_assert!(b.leading().is_one());
    let dd = b.degree();
    let mut rem = a.coeffs.clone();
    if rem.len() <= dd {
        return (ZPoly::new(vec![]), a.clone());
    }
    let qd = rem.len() - 1 - dd;
    let mut q = vec![BigInt::zero(); qd + 1];
    for k in (0..=qd).rev() {
        let c = symmetric_mod(&rem[k + dd], m);
        if !c.is_zero() {
            for (j, bc) in b.coeffs.iter().enumerate() {
                rem[k + j] = symmetric_mod(&(&rem[k + j] - &c * bc), m);
            }
        }
        q[k] = c;
    }
    (ZPoly::new(q), reduce_mod(&ZPoly::new(rem), m))
}

/// One quadratic Hensel step: from `f ≡ g·h (mod m)`, `s·g + t·h ≡ 1 (mod m)`
/// with `f, g, h` monic, to the same congruences mod `m²`.
fn hensel_step(
    m: &BigInt,
    f: &ZPoly,
    g: &ZPoly,
    h: &ZPoly,
    s: &ZPoly,
    t: &ZPoly,
) -> (ZPoly, ZPoly, ZPoly, ZPoly) {
    let m2 = m * m;
    let e = sub_mod(f, &g.mul(h), &m2);
    let (q, r) = divrem_monic_mod(&mul_mod(s, &e, &m2), h, &m2);
    let g_new = add_mod(&add_mod(g, &mul_mod(t, &e, &m2), &m2), &mul_mod(&q, g, &m2), &m2);
    let h_new = add_mod(h, &r, &m2);
    let one = ZPoly::new(vec![BigInt::one()]);
    let b = sub_mod(
        &add_mod(&mul_mod(s, &g_new, &m2), &mul_mod(t, &h_new, &m2), &m2),
        &one,
        &m2,
    );
    let (c, d) = divrem_monic_mod(&mul_mod(s, &b, &m2), &h_new, &m2);
    let s_new = sub_mod(s, &d, &m2);
    let t_new = sub_mod(
        t,
        &add_mod(&mul_mod(t, &b, &m2), &mul_mod(&c, &g_new, &m2), &m2),
        &m2,
    );
    (g_new, h_new, s_new, t_new)
}

/// Extended gcd over 𝔽_p for the initial Bezout data.
fn fp_extended_gcd(a: &FpPoly, b: &FpPoly) -> (FpPoly, FpPoly, FpPoly) {
    let p = a.p.clone();
    let mut r0 = a.clone();
    let mut r1 = b.clone();
    let mut s0 = FpPoly::one(&p);
    let mut s1 = FpPoly::zero(&p);
    let mut t0 = FpPoly::zero(&p);
    let mut t1 = FpPoly::one(&p);
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
    let inv = r0.invm(&r0.leading());
    (r0.scale(&inv), s0.scale(&inv), t0.scale(&inv))
}

/// Lifts the monic factorization `f ≡ Π factors (mod p)` (pairwise coprime,
/// monic, squarefree product) to factors mod `p^(2^k) ≥ bound` by recursive
/// two-way splitting. Returns the lifted factors and the modulus reached.
fn hensel_lift_monic(
    f: &ZPoly,
    p: &BigUint,
    factors: &[FpPoly],
    bound: &BigUint,
) -> (Vec<ZPoly>, BigUint) {
    let mut modulus = BigInt::from(p.clone());
    let target = BigInt::from(bound.clone());
    while modulus < target {
        modulus = &modulus * &modulus;
    }
    let mut out = Vec::with_capacity(factors.len());
    lift_split(f, p, factors, &modulus, &mut out);
    (out, modulus.magnitude().clone())
}

fn lift_split(f: &ZPoly, p: &BigUint, factors: &[FpPoly], target: &BigInt, out: &mut Vec<ZPoly>) {
    if factors.len() == 1 {
        out.push(reduce_mod(f, target));
        return;
    }
    let (left, right) = factors.split_at(factors.len() / 2);
    let mut gp = FpPoly::one(&factors[0].p);
    for l in left {
        gp = gp.mul(l);
    }
    let mut hp = FpPoly::one(&factors[0].p);
    for r in right {
        hp = hp.mul(r);
    }
    let (gcd, s, t) = fp_extended_gcd(&gp, &hp);
    assert_eq!(gcd.degree(), 0, "modular factors are not coprime");
    let mut g = gp.lift_symmetric();
    let mut h = hp.lift_symmetric();
    let mut s = s.lift_symmetric();
    let mut t = t.lift_symmetric();
    let mut m = BigInt::from(p.clone());
    while m < *target {
        let (g2, h2, s2, t2) = hensel_step(&m, &reduce_mod(f, &(&m * &m)), &g, &h, &s, &t);
        g = g2;
        h = h2;
        s = s2;
        t = t2;
        m = &m * &m;
    }
    // recurse with the lifted halves as the new targets
    lift_split(&g, p, left, target, out);
    lift_split(&h, p, right, target, out);
}

// ---------------------------------------------------------------------------
// Zassenhaus over Z / Q
// ---------------------------------------------------------------------------

/// Mignotte-style bound on the coefficients of any factor of `f` (times the
/// leading coefficient, as used by the recombination step).
fn factor_coeff_bound(f: &ZPoly) -> BigUint {
    let n = f.degree() as u32;
    let norm = f
        .coeffs
        .iter()
        .fold(BigUint::zero(), |acc, c| acc + c.magnitude());
    (BigUint::one() << (n + 1)) * norm * f.leading().magnitude()
}

/// Factors a squarefree primitive integer polynomial into irreducible
/// primitive integer polynomials (positive leading coefficients).
fn factor_squarefree_z(f: &ZPoly) -> Vec<ZPoly> {
    let n = f.degree();
    if n == 1 {
        return vec![f.primitive()];
    }
    let lc = f.leading();
    if !lc.is_one() {
        // monicize: F(x) = lc^(n-1)·f(x/lc) is monic with the same splitting
        let mut coeffs = Vec::with_capacity(n + 1);
        let mut scale = BigInt::one();
        for k in (0..=n).rev() {
            coeffs.push(f.coeff(k) * &scale);
            if k > 0 {
                scale *= &lc;
            }
        }
        coeffs.reverse();
        let monic = ZPoly::new(coeffs).primitive();
        let mut out = Vec::new();
        for g in factor_squarefree_z(&monic) {
            // map back: g(lc·x), primitive part
            let mut back = Vec::with_capacity(g.coeffs.len());
            let mut sc = BigInt::one();
            for c in &g.coeffs {
                back.push(c * &sc);
                sc *= &lc;
            }
            out.push(ZPoly::new(back).primitive());
        }
        out.sort_by_key(|g| {
            (
                g.degree(),
                g.coeffs
                    .iter()
                    .map(|c| c.magnitude().clone())
                    .collect::<Vec<_>>(),
            )
        });
        return out;
    }

    // choose the prime giving the fewest modular factors among candidates
    let mut best: Option<(BigUint, Vec<FpPoly>)> = None;
    let mut tried = 0;
    for p in sieve(10_000).into_iter().skip(1) {
        let pb = BigUint::from(p);
        let fp = FpPoly::from_zpoly(f, &pb);
        if fp.is_zero() || fp.degree() != n {
            continue;
        }
        if fp.gcd(&fp.derivative()).degree() != 0 {
            continue; // not squarefree mod p
        }
        let factors = factor_fp_squarefree(&fp);
        match &best {
            Some((_, bf)) if bf.len() <= factors.len() => {}
            _ => best = Some((pb, factors)),
        }
        tried += 1;
        if tried >= 4 || best.as_ref().map_or(false, |(_, v)| v.len() == 1) {
            break;
        }
    }
    let (p, fp_factors) = best.expect("no usable prime found for factorization");
    if fp_factors.len() == 1 {
        return vec![f.primitive()];
    }

    let bound = factor_coeff_bound(f) * 2u32;
    let (lifted, modulus) = hensel_lift_monic(f, &p, &fp_factors, &bound);

    // subset recombination (f monic, so candidates are monic too)
    let m_int = BigInt::from(modulus.clone());
    let mut remaining: Vec<ZPoly> = lifted;
    let mut rest = f.clone();
    let mut out = Vec::new();
    let mut size = 1usize;
    while 2 * size <= remaining.len() {
        let mut advanced = false;
        let idxs: Vec<usize> = (0..remaining.len()).collect();
        for combo in combinations(&idxs, size) {
            let mut cand = ZPoly::new(vec![BigInt::one()]);
            for &i in &combo {
                cand = reduce_mod(&cand.mul(&remaining[i]), &m_int);
            }
            if cand.is_zero() || cand.degree() == 0 {
                continue;
            }
            if let Some(quot) = exact_div_z(&rest, &cand) {
                out.push(cand.primitive());
                rest = quot;
                let keep: Vec<ZPoly> = remaining
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| !combo.contains(i))
                    .map(|(_, g)| g.clone())
                    .collect();
                remaining = keep;
                advanced = true;
                break;
            }
        }
        if !advanced {
            size += 1;
        }
    }
    if !rest.is_zero() && rest.degree() >= 1 {
        out.push(rest.primitive());
    }
    out.sort_by_key(|g| {
        (
            g.degree(),
            g.coeffs
                .iter()
                .map(|c| c.magnitude().clone())
                .collect::<Vec<_>>(),
        )
    });
    out
}

fn exact_div_z(f: &ZPoly, d: &ZPoly) -> Option<ZPoly> {
    if f.is_zero() || d.is_zero() || f.degree() < d.degree() {
        return None;
    }
    let mut rem = f.coeffs.clone();
    let dd = d.degree();
    let qd = f.degree() - dd;
    let mut q = vec![BigInt::zero(); qd + 1];
    let dlead = d.leading();
    for k in (0..=qd).rev() {
        let c = &rem[k + dd];
        if c.is_zero() {
            q[k] = BigInt::zero();
            continue;
        }
        let (quo, r) = c.div_rem(&dlead);
        if !r.is_zero() {
            return None;
        }
        for (j, dc) in d.coeffs.iter().enumerate() {
            rem[k + j] = &rem[k + j] - &quo * dc;
        }
        q[k] = quo;
    }
    if rem.iter().all(Zero::is_zero) {
        Some(ZPoly::new(q))
    } else {
        None
    }
}

fn combinations(items: &[usize], k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut idx: Vec<usize> = (0..k).collect();
    if k == 0 || k > items.len() {
        return out;
    }
    loop {
        out.push(idx.iter().map(|&i| items[i]).collect());
        // advance
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if idx[i] != i + items.len() - k {
                break;
            }
            if i == 0 {
                return out;
            }
        }
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// Squarefree decomposition over ℚ by Yun's algorithm: returns
/// `(g_i, multiplicity)` with `f = c · Π g_i^{m_i}`, `g_i` monic squarefree
/// pairwise coprime.
pub fn squarefree_decomposition(f: &QPoly) -> Vec<(QPoly, u32)> {
    assert!(!f.is_zero());
    let f = f.monic();
    if f.degree() == 0 {
        return vec![];
    }
    let fp = f.derivative();
    let a0 = f.gcd(&fp);
    if a0.is_constant() {
        return vec![(f, 1)];
    }
    let mut out = Vec::new();
    let mut b = f.divrem(&a0).0;
    let mut c = fp.divrem(&a0).0;
    let mut i = 1u32;
    loop {
        let d = c.sub(&b.derivative());
        if d.is_zero() {
            if b.degree() >= 1 {
                out.push((b.monic(), i));
            }
            break;
        }
        let g = b.gcd(&d);
        if g.degree() >= 1 {
            out.push((g.clone(), i));
        }
        b = b.divrem(&g).0;
        c = d.divrem(&g).0;
        i += 1;
        if b.is_constant() {
            break;
        }
    }
    out
}

/// A factor of a rational polynomial with its multiplicity. Factors are
/// irreducible over ℚ, primitive with positive leading integer coefficient.
pub type RationalFactors = Vec<(QPoly, u32)>;

/// Full factorization over ℚ. Constants give the empty list.
pub fn factor_rational_poly(f: &QPoly) -> Result<RationalFactors> {
    if f.is_zero() {
        return Err(Error::Invalid("factorization of zero".into()));
    }
    if f.is_constant() {
        return Ok(vec![]);
    }
    if f.degree() > FACTOR_DEGREE_CAP {
        return Err(Error::Invalid(format!(
            "degree {} exceeds factorization cap {}",
            f.degree(),
            FACTOR_DEGREE_CAP
        )));
    }
    let mut out: RationalFactors = Vec::new();
    for (g, mult) in squarefree_decomposition(f) {
        let gz = ZPoly::from_qpoly_primitive(&g);
        for irr in factor_squarefree_z(&gz) {
            out.push((irr.to_qpoly(), mult));
        }
    }
    out.sort_by(|a, b| {
        let da = a.0.degree();
        let db = b.0.degree();
        da.cmp(&db).then_with(|| format!("{:?}", a.0).cmp(&format!("{:?}", b.0)))
    });
    Ok(out)
}

/// True when `f` (degree ≥ 1) is irreducible over ℚ.
pub fn is_irreducible(f: &QPoly) -> Result<bool> {
    if f.is_zero() || f.is_constant() {
        return Ok(false);
    }
    let fs = factor_rational_poly(f)?;
    Ok(fs.len() == 1 && fs[0].1 == 1)
}

/// Leading rational constant c with `f = c · Π factors^mult`.
pub fn factorization_unit(f: &QPoly, factors: &RationalFactors) -> Q {
    let mut prod = QPoly::one();
    for (g, m) in factors {
        prod = prod.mul(&g.pow(*m as usize));
    }
    if prod.is_zero() || f.is_zero() {
        return Q::one();
    }
    f.leading() / prod.leading()
}

/// Convenience: primitive integer minimal polynomial of a monic rational
/// polynomial after rescaling the variable by `d` (`x -> x/d` clearing
/// denominators): returns `(g, d)` with `g(d·θ) = 0` monic integral whenever
/// `f(θ) = 0`.
pub fn integral_rescale(f: &QPoly) -> (ZPoly, BigInt) {
    assert!(!f.is_zero());
    let f = f.monic();
    let n = f.degree();
    // smallest d with d^k · coeff(n-k) integral for all k: per prime p in
    // the denominators, the exponent is max over k of ceil(v_p(den)/k)
    let mut d = BigInt::one();
    let mut den_primes: std::collections::BTreeMap<BigUint, u32> = std::collections::BTreeMap::new();
    for k in 1..=n {
        let c = f.coeff(n - k);
        if c.is_zero() {
            continue;
        }
        let den = c.denom().magnitude().clone();
        if den.is_one() {
            continue;
        }
        let fs = crate::primes::factor_big(&den).expect("denominator factors at desk scale");
        for (prime, v) in fs {
            let need = v.div_ceil(k as u32);
            let e = den_primes.entry(prime).or_insert(0);
            *e = (*e).max(need);
        }
    }
    for (prime, e) in den_primes {
        d *= BigInt::from(prime).pow(e);
    }
    let mut coeffs = Vec::with_capacity(n + 1);
    let dq = BigRational::from(d.clone());
    let mut dk = BigRational::one();
    for k in 0..=n {
        // coefficient of x^(n-k) scaled by d^k
        let c = f.coeff(n - k) * &dk;
        coeffs.push(c.to_integer());
        dk *= &dq;
    }
    coeffs.reverse();
    (ZPoly::new(coeffs), d)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::util::q;

    fn qp(coeffs: &[i64]) -> QPoly {
        Poly1::new(coeffs.iter().map(|&c| q(c)).collect())
    }

    #[test]
    fn factor_difference_of_squares() {
        let f = qp(&[-1, 0, 1]);
        let fs = factor_rational_poly(&f).unwrap();
        assert_eq!(fs.len(), 2);
        assert_eq!(fs[0].0, qp(&[-1, 1]));
        assert_eq!(fs[1].0, qp(&[1, 1]));
    }

    #[test]
    fn factor_quartic_fixture() {
        // Y^4 + 10Y^2 + 9 = (Y^2+1)(Y^2+9)
        let f = qp(&[9, 0, 10, 0, 1]);
        let fs = factor_rational_poly(&f).unwrap();
        assert_eq!(fs.len(), 2);
        assert_eq!(fs[0].0, qp(&[1, 0, 1]));
        assert_eq!(fs[1].0, qp(&[9, 0, 1]));
        assert!(fs.iter().all(|(_, m)| *m == 1));
    }

    #[test]
    fn factor_with_multiplicity() {
        // (X-1)^2 (X+2) = X^3 - 3X + 2
        let f = qp(&[2, -3, 0, 1]);
        let fs = factor_rational_poly(&f).unwrap();
        assert_eq!(fs.len(), 2);
        let m: Vec<_> = fs.iter().map(|(g, m)| (g.clone(), *m)).collect();
        assert!(m.contains(&(qp(&[-1, 1]), 2)));
        assert!(m.contains(&(qp(&[2, 1]), 1)));
    }

    #[test]
    fn factor_irreducible_stays_whole() {
        let f = qp(&[-2, 0, 1]); // x^2-2
        let fs = factor_rational_poly(&f).unwrap();
        assert_eq!(fs.len(), 1);
        assert!(is_irreducible(&f).unwrap());
        assert!(!is_irreducible(&qp(&[-1, 0, 1])).unwrap());
    }

    #[test]
    fn factor_roundtrip_product() {
        let f = qp(&[6, -5, -2, 1]).mul(&qp(&[1, 2])); // mixed content
        let fs = factor_rational_poly(&f).unwrap();
        let unit = factorization_unit(&f, &fs);
        let mut prod = QPoly::constant(unit);
        for (g, m) in &fs {
            prod = prod.mul(&g.pow(*m as usize));
        }
        assert_eq!(prod, f);
    }

    #[test]
    fn fp_factor_splits() {
        let p = BigUint::from(13u32);
        // x^2 - 1 mod 13
        let f = FpPoly::new(&p, vec![BigUint::from(12u32), BigUint::zero(), BigUint::one()]);
        let fs = factor_fp_squarefree(&f);
        assert_eq!(fs.len(), 2);
    }

    #[test]
    fn integral_rescale_clears_denominators() {
        // x^2 - 1/4 -> (2x)^2 - 1 => g = x^2 - 1, d = 2
        let f = Poly1::new(vec![crate::util::qr(-1, 4), q(0), q(1)]);
        let (g, d) = integral_rescale(&f);
        assert_eq!(d, BigInt::from(2));
        assert_eq!(g.coeffs, vec![BigInt::from(-1), BigInt::from(0), BigInt::from(1)]);
    }
}
