//! Pure evaluators for every named bound: the main quantities Ω, Ω̃, Υ, Ξ,
//! the covering-theorem bounds, minimal-model bounds, discriminant bounds,
//! growth-envelope aggregates, bad-place set bounds, and the height
//! inequalities for resultants, products, translates and determinants.
//!
//! Every numeric constant is kept in [`consts`], named by its role.

use crate::interval::{ln_2, RealInterval};
use crate::{Error, Result};

/// The verbatim numeric constants appearing in the bound formulas.
pub mod consts {
    /// Factor in the per-model main quantity `Ω = 200·m·n³·log n·(h+2m+2n)`.
    pub const MAIN_QUANTITY: f64 = 200.0;
    /// Factor in the total bad-place bound `150·m·n³·log n·(h+2m+2n)`.
    pub const TSET_TOTAL: f64 = 150.0;
    /// Prime-count estimate `#{p ≤ x} ≤ 1.26·x/log x`.
    pub const PRIME_COUNT: f64 = 1.26;
    /// Chebyshev-type estimate `Σ_{p≤x} log p ≤ 1.02·x`.
    pub const PRIME_LOG_SUM: f64 = 1.02;
    /// Mertens-type estimate `Σ_{p≤x} log p/(p-1) ≤ 2·log x`.
    pub const MERTENS: f64 = 2.0;
    /// Small-prime bad places: `h(T₁) ≤ 1.02·n`.
    pub const T1: f64 = PRIME_LOG_SUM;
    /// Leading-coefficient places: factor in `(2n-1)(h + m·log 2 + log 2n²)`.
    pub const T3_LOG_ARG: f64 = 2.0;
    /// Separant places: `h(T₄) ≤ 16·m·n²(h+2m+2·log n)`.
    pub const T4: f64 = 16.0;
    /// Growth-envelope places: `h(T₅) ≤ 16·m·n²(h+2m+2n)`.
    pub const T5: f64 = 16.0;
    /// Coefficient-field ramification places: `40·m·n³(h+2m+2n)`.
    pub const T6: f64 = 40.0;
    /// Essential-coefficient places: `18·m·n³·log n·(h+2m+2n)`.
    pub const T7: f64 = 18.0;
    /// Envelope log-sum: `Σ log A_v ≤ (2n-1)h + 6n² + 2n·log m`.
    pub const ENVELOPE_A_SQ: f64 = 6.0;
    /// Non-integral envelope places: `(2n-1)h + n(2·log m + 3·log n + 5)`.
    pub const ENVELOPE_NONINT: f64 = 5.0;
    /// Envelope support: `(4n-1)h + 13n² + 4n·log m`.
    pub const ENVELOPE_SUPPORT_SQ: f64 = 13.0;
    /// Coefficient-field discriminant: `(μ+uν)(12n² + 4n·log m)` term.
    pub const FIELD_DISC_SQ: f64 = 12.0;
    /// Minimal-model exponent factor in `((g̃+1)ñ)^(25(g̃+1)ñ)`.
    pub const MINIMAL_MODEL_EXP: u64 = 25;
    /// Plane-model exponent `10·g·n + 12·n` in `(2(g+1)n²)^(...)`.
    pub const PLANE_MODEL_EXP_G: u64 = 10;
    pub const PLANE_MODEL_EXP_N: u64 = 12;
    /// Dedekind–Hensel error term `1.26·ν`.
    pub const DEDEKIND_HENSEL: f64 = PRIME_COUNT;
    /// Root-discriminant sum: `2(N-1)h_p(F) + 3N·log N`.
    pub const ROOT_DISC_SUM: f64 = 3.0;
}

fn ln_usize(n: usize) -> RealInterval {
    RealInterval::exact(n as f64).ln()
}

/// Numeric inputs for the theorem-level bounds.
#[derive(Clone, Debug)]
pub struct BoundInputs {
    pub m: usize,
    pub n: usize,
    pub m_tilde: usize,
    pub n_tilde: usize,
    pub h_f: RealInterval,
    pub h_f_tilde: RealInterval,
    pub h_s: RealInterval,
}

/// The four assembled quantities.
#[derive(Clone, Debug)]
pub struct MainQuantities {
    pub omega: RealInterval,
    pub omega_tilde: RealInterval,
    pub upsilon: RealInterval,
    pub xi: RealInterval,
}

/// Per-model main quantity `200·m·n³·log n·(h + 2m + 2n)`.
pub fn omega(m: usize, n: usize, h: RealInterval) -> Result<RealInterval> {
    if n < 2 {
        return Err(Error::DegreeTooSmallForBound);
    }
    let factor = consts::MAIN_QUANTITY * (m as f64) * (n as f64).powi(3);
    Ok(ln_usize(n)
        .scale(factor)
        .mul(h.add(RealInterval::exact((2 * m + 2 * n) as f64))))
}

/// Cross term `Υ = 2·ñ(m̃·h_p(f) + m·h_p(f̃))`.
pub fn upsilon(inputs: &BoundInputs) -> RealInterval {
    inputs
        .h_f
        .scale(inputs.m_tilde as f64)
        .add(inputs.h_f_tilde.scale(inputs.m as f64))
        .scale(2.0 * inputs.n_tilde as f64)
}

/// Resultant-split term `Ξ = 2mñ(2m̃ + 3·log ñ) + (m+2m̃ñ)·log(m+2m̃ñ)`.
pub fn xi(m: usize, m_tilde: usize, n_tilde: usize) -> Result<RealInterval> {
    if n_tilde < 2 {
        return Err(Error::DegreeTooSmallForBound);
    }
    let main = RealInterval::exact(2.0 * m_tilde as f64)
        .add(ln_usize(n_tilde).scale(3.0))
        .scale(2.0 * (m * n_tilde) as f64);
    let s = m + 2 * m_tilde * n_tilde;
    Ok(main.add(ln_usize(s).scale(s as f64)))
}

pub fn main_quantities(inputs: &BoundInputs) -> Result<MainQuantities> {
    Ok(MainQuantities {
        omega: omega(inputs.m, inputs.n, inputs.h_f)?,
        omega_tilde: omega(inputs.m_tilde, inputs.n_tilde, inputs.h_f_tilde)?,
        upsilon: upsilon(inputs),
        xi: xi(inputs.m, inputs.m_tilde, inputs.n_tilde)?,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CoveringMode {
    Projective,
    Affine,
}

/// The covering-theorem bound: `2(Ω+Ω̃+Υ)` in projective mode,
/// `Ω+Ω̃+Υ+h(S)` in affine mode.
pub fn cw_bound(inputs: &BoundInputs, mode: CoveringMode) -> Result<RealInterval> {
    let q = main_quantities(inputs)?;
    let core = q.omega.add(q.omega_tilde).add(q.upsilon);
    Ok(match mode {
        CoveringMode::Projective => core.scale(2.0),
        CoveringMode::Affine => core.add(inputs.h_s),
    })
}

/// `base^exponent + additive`, kept symbolic against overflow.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymbolicPower {
    pub base: u64,
    pub exponent: u64,
    pub additive: u64,
}

impl SymbolicPower {
    /// Certified `log(base^exponent + additive)`.
    pub fn log_value(&self) -> RealInterval {
        let main = RealInterval::exact(self.base as f64)
            .ln()
            .scale(self.exponent as f64);
        if self.additive == 0 {
            return main;
        }
        // log(x + a) ≤ log x + a/x and a/x is far below one ulp here
        let correction = (self.additive as f64) * (self.base as f64).powi(-(self.exponent.min(500) as i32));
        RealInterval::new(main.lo, main.hi + correction.max(1e-300))
    }
}

impl std::fmt::Display for SymbolicPower {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.additive == 0 {
            write!(f, "{}^{}", self.base, self.exponent)
        } else {
            write!(f, "{}^{} + {}", self.base, self.exponent, self.additive)
        }
    }
}

/// `Λ = ((g̃+1)·ñ)^(25(g̃+1)ñ) + 2(δ-1)` for a covering of genus g̃ and
/// degree ñ ramified over a set of field degree δ.
pub fn lambda(g_tilde: u64, n_tilde: u64, delta: u64) -> Result<SymbolicPower> {
    if n_tilde < 2 {
        return Err(Error::DegreeTooSmallForBound);
    }
    assert!(delta >= 1);
    Ok(SymbolicPower {
        base: (g_tilde + 1) * n_tilde,
        exponent: consts::MINIMAL_MODEL_EXP * (g_tilde + 1) * n_tilde,
        additive: 2 * (delta - 1),
    })
}

/// `Λ' = (2(g+1)n²)^(10gn+12n)` controlling plane-model heights.
pub fn lambda_prime(g: u64, n: u64) -> Result<SymbolicPower> {
    if n < 2 {
        return Err(Error::DegreeTooSmallForBound);
    }
    Ok(SymbolicPower {
        base: 2 * (g + 1) * n * n,
        exponent: consts::PLANE_MODEL_EXP_G * g * n + consts::PLANE_MODEL_EXP_N * n,
        additive: 0,
    })
}

/// Equation-free bound data: Λ, Λ', and the final bound in log form.
#[derive(Clone, Debug)]
pub struct MinimalModelBounds {
    pub lambda: SymbolicPower,
    pub log_lambda: RealInterval,
    pub lambda_prime: SymbolicPower,
    pub log_lambda_prime: RealInterval,
    /// `log(Λ·(h(A)+1))` with `h(S)` folded in for affine mode.
    pub log_final_bound: RealInterval,
}

pub fn minimal_model_bounds(
    g_tilde: u64,
    n_tilde: u64,
    delta: u64,
    h_a: RealInterval,
    mode: CoveringMode,
    h_s: RealInterval,
) -> Result<MinimalModelBounds> {
    let lam = lambda(g_tilde, n_tilde, delta)?;
    let lamp = lambda_prime(g_tilde, n_tilde)?;
    let log_lambda = lam.log_value();
    let log_main = log_lambda.add(h_a.add(RealInterval::exact(1.0)).ln());
    let log_final_bound = match mode {
        CoveringMode::Projective => log_main,
        CoveringMode::Affine => {
            // log(h(S) + Λ(h+1)): the additive h(S) is negligible against Λ
            // but widen the upper end by its relative share
            let rel = h_s.hi.max(0.0) * (-log_main.lo).exp_m1().abs().min(1.0);
            RealInterval::new(log_main.lo, log_main.hi + rel.max(1e-300))
        }
    };
    Ok(MinimalModelBounds {
        log_lambda,
        lambda: lam,
        log_lambda_prime: lamp.log_value(),
        lambda_prime: lamp,
        log_final_bound,
    })
}

/// Right-hand sides of the discriminant estimates.
#[derive(Clone, Debug)]
pub enum DiscBound {
    /// `∂_{K(a)/K} ≤ 2(ν-1)·h_a(a) + log ν` for a point of degree ν.
    GeneratorHeight { nu: usize, h_a: RealInterval },
    /// `Σ_roots ∂ ≤ 2(N-1)·h_p(F) + 3N·log N` over the roots of F.
    RootSum { degree: usize, h_p: RealInterval },
    /// `∂_{L/K} ≤ (ν-1)/ν·h(ram) + 1.26ν`.
    RamifiedPlaces { nu: usize, h_ram: RealInterval },
    /// `h(ram(L/K)) ≤ ν·∂_{L/K}`.
    PlacesFromDisc { nu: usize, partial: RealInterval },
}

pub fn disc_bound(kind: &DiscBound) -> RealInterval {
    match kind {
        DiscBound::GeneratorHeight { nu, h_a } => h_a
            .scale(2.0 * (*nu as f64 - 1.0))
            .add(ln_usize(*nu)),
        DiscBound::RootSum { degree, h_p } => h_p
            .scale(2.0 * (*degree as f64 - 1.0))
            .add(ln_usize(*degree).scale(consts::ROOT_DISC_SUM * *degree as f64)),
        DiscBound::RamifiedPlaces { nu, h_ram } => h_ram
            .scale((*nu as f64 - 1.0) / *nu as f64)
            .add(RealInterval::exact(consts::DEDEKIND_HENSEL * *nu as f64)),
        DiscBound::PlacesFromDisc { nu, partial } => partial.scale(*nu as f64),
    }
}

/// Growth-envelope aggregates for one plane model at one center.
#[derive(Clone, Debug)]
pub struct EnvelopeBounds {
    /// `Σ d_v log A_v ≤ (2n-1)h + 6n² + 2n·log m`.
    pub log_a_sum: RealInterval,
    /// `Σ d_v log B_v ≤ h + log 2n`.
    pub log_b_sum: RealInterval,
    /// Height of places where `log A_v / log Nv` is non-integral.
    pub nonintegral_places: RealInterval,
    /// Support of the envelope: `(4n-1)h + 13n² + 4n·log m`.
    pub support: RealInterval,
    /// `Σ d_v log(1/σ_v) ≤ (2n-1)h + 2n·log((m+1)(n+1)√n)`.
    pub sigma_sum: RealInterval,
}

pub fn envelope_bounds(m: usize, n: usize, h: RealInterval) -> EnvelopeBounds {
    let log_m = ln_usize(m.max(1));
    let log_n = ln_usize(n);
    EnvelopeBounds {
        log_a_sum: h
            .scale(2.0 * n as f64 - 1.0)
            .add(RealInterval::exact(consts::ENVELOPE_A_SQ * (n * n) as f64))
            .add(log_m.scale(2.0 * n as f64)),
        log_b_sum: h.add(ln_usize(2 * n)),
        nonintegral_places: h.scale(2.0 * n as f64 - 1.0).add(
            log_m
                .scale(2.0)
                .add(log_n.scale(3.0))
                .add(RealInterval::exact(consts::ENVELOPE_NONINT))
                .scale(n as f64),
        ),
        support: h
            .scale(4.0 * n as f64 - 1.0)
            .add(RealInterval::exact(
                consts::ENVELOPE_SUPPORT_SQ * (n * n) as f64,
            ))
            .add(log_m.scale(4.0 * n as f64)),
        sigma_sum: h.scale(2.0 * n as f64 - 1.0).add(
            RealInterval::exact(((m + 1) * (n + 1)) as f64)
                .mul(RealInterval::exact(n as f64).sqrt())
                .ln()
                .scale(2.0 * n as f64),
        ),
    }
}

/// Coefficient-field and essential-coefficient aggregates.
#[derive(Clone, Debug)]
pub struct CoefficientFieldBounds {
    /// Per-series field discriminant bound.
    pub field_disc: RealInterval,
    /// Aggregate over all n series at the center.
    pub field_disc_total: RealInterval,
    /// Essential-coefficient height sum per series.
    pub essential_heights: RealInterval,
    /// Aggregate essential-coefficient bound over all series.
    pub essential_heights_total: RealInterval,
}

pub fn coefficient_field_bounds(
    m: usize,
    n: usize,
    h: RealInterval,
    u: usize,
    mu: usize,
    nu: usize,
    e: usize,
) -> CoefficientFieldBounds {
    let log_m = ln_usize(m.max(1));
    let sq = RealInterval::exact(consts::FIELD_DISC_SQ * (n * n) as f64)
        .add(log_m.scale(4.0 * n as f64));
    let field_disc = h
        .scale((4 * n * mu + 4 * n * u * nu + 2 * nu) as f64)
        .add(sq.scale((mu + u * nu) as f64))
        .add(ln_usize(2 * n).scale(3.0 * nu as f64));
    let field_disc_total = h
        .scale((4 * n * n * mu + 4 * n * n * n * u + 2 * n * n) as f64)
        .add(sq.scale((mu * n + u * n * n) as f64).scale(1.0))
        .add(ln_usize(2 * n).scale(3.0 * (n * n) as f64));
    let series_growth = h
        .scale(2.0 * n as f64)
        .add(RealInterval::exact(consts::ENVELOPE_A_SQ * (n * n) as f64))
        .add(log_m.scale(2.0 * n as f64));
    let log2_e = if e <= 1 {
        RealInterval::zero()
    } else {
        ln_usize(e).div(ln_2())
    };
    let essential_heights = log2_e
        .mul(RealInterval::exact(u as f64).add(RealInterval::exact(mu as f64 / nu as f64)))
        .mul(series_growth);
    let total_growth = h
        .scale(2.0 * (n * n) as f64)
        .add(RealInterval::exact(consts::ENVELOPE_A_SQ * (n * n * n) as f64))
        .add(log_m.scale(2.0 * (n * n) as f64));
    let log2_n = if n <= 1 {
        RealInterval::zero()
    } else {
        ln_usize(n).div(ln_2())
    };
    let essential_heights_total = total_growth
        .scale((u + mu) as f64)
        .mul(log2_n);
    CoefficientFieldBounds {
        field_disc,
        field_disc_total,
        essential_heights,
        essential_heights_total,
    }
}

/// Bound on the first essential index: `κ(q) ≤ e·μ/(ν(q-1)) - 1`.
pub fn essential_index_bound(e: usize, mu: usize, nu: usize, q: usize) -> f64 {
    (e * mu) as f64 / (nu * (q - 1)) as f64 - 1.0
}

/// Right-hand sides of the bad-place set bounds for one plane model.
#[derive(Clone, Debug)]
pub struct TsetBounds {
    pub t1: RealInterval,
    pub t2: RealInterval,
    pub t3: RealInterval,
    pub t4: RealInterval,
    pub t5: RealInterval,
    pub t6: RealInterval,
    pub t7: RealInterval,
    pub total: RealInterval,
}

pub fn tset_bounds(m: usize, n: usize, h: RealInterval) -> TsetBounds {
    let log_n = ln_usize(n);
    let hmn = h.add(RealInterval::exact((2 * m + 2 * n) as f64));
    TsetBounds {
        t1: RealInterval::exact(consts::T1 * n as f64),
        t2: h,
        t3: h
            .add(ln_2().scale(m as f64))
            .add(ln_usize(2 * n * n))
            .scale(2.0 * n as f64 - 1.0),
        t4: h
            .add(RealInterval::exact(2.0 * m as f64))
            .add(log_n.scale(2.0))
            .scale(consts::T4 * (m * n * n) as f64),
        t5: hmn.scale(consts::T5 * (m * n * n) as f64),
        t6: hmn.scale(consts::T6 * (m * n * n * n) as f64),
        t7: hmn
            .scale(consts::T7 * (m * n * n * n) as f64)
            .mul(log_n),
        total: hmn
            .scale(consts::TSET_TOTAL * (m * n * n * n) as f64)
            .mul(log_n),
    }
}

/// Resultant height bounds: affine and projective right-hand sides for the
/// Y-resultant of a model of bidegree (m, n).
pub fn resultant_height_affine_rhs(m: usize, n: usize, h_a: RealInterval) -> RealInterval {
    h_a.add(ln_usize(2 * n * n))
        .add(ln_2().scale(m as f64))
        .scale(2.0 * n as f64 - 1.0)
}

pub fn resultant_height_projective_rhs(m: usize, n: usize, h_p: RealInterval) -> RealInterval {
    h_p.add(
        RealInterval::exact(((m + 1) * (n + 1)) as f64)
            .mul(RealInterval::exact(n as f64).sqrt())
            .ln(),
    )
    .scale(2.0 * n as f64 - 1.0)
}

/// Univariate variant: `h_a(Res(F,F')) ≤ (2d-1)(h_a(F) + log(2d²))`.
pub fn resultant_height_univariate_rhs(d: usize, h_a: RealInterval) -> RealInterval {
    h_a.add(ln_usize(2 * d * d)).scale(2.0 * d as f64 - 1.0)
}

/// Product affine bound: `h_a(Πf_i) ≤ Σh_a(f_i) + log(r+1)·Σ_{i<s}deg f_i`.
pub fn product_affine_rhs(
    heights_sum: RealInterval,
    vars: usize,
    deg_sum_but_last: usize,
) -> RealInterval {
    heights_sum.add(ln_usize(vars + 1).scale(deg_sum_but_last as f64))
}

/// Product projective lower bound: `h_p(Π) ≥ Σh_p(f_i) − Σ deg f_i`.
pub fn gelfond_lower_rhs(heights_sum: RealInterval, total_deg_sum: usize) -> RealInterval {
    heights_sum.sub(RealInterval::exact(total_deg_sum as f64))
}

/// Composition bound: `h_a(g(f_1..f_s)) ≤ h_a(g) + (h + log(s+1) + N·log(r+1))·deg g`.
pub fn composition_rhs(
    h_g: RealInterval,
    h_inner: RealInterval,
    s: usize,
    inner_deg: usize,
    vars: usize,
    deg_g: usize,
) -> RealInterval {
    h_g.add(
        h_inner
            .add(ln_usize(s + 1))
            .add(ln_usize(vars + 1).scale(inner_deg as f64))
            .scale(deg_g as f64),
    )
}

/// Divisor projective bound: `h_p(f) ≤ h_p(g) + deg g` for `f | g`.
pub fn divisor_projective_rhs(h_p_g: RealInterval, deg_g: usize) -> RealInterval {
    h_p_g.add(RealInterval::exact(deg_g as f64))
}

/// Divisor affine bound: `h_a(f) ≤ h_p(g) + h_a(a) + deg g` for a nonzero
/// coefficient `a` of `f`.
pub fn divisor_affine_rhs(
    h_p_g: RealInterval,
    h_a_coeff: RealInterval,
    deg_g: usize,
) -> RealInterval {
    h_p_g.add(h_a_coeff).add(RealInterval::exact(deg_g as f64))
}

/// Translate bound: `h_a(f(X+α,Y)) ≤ h_a(f) + m·h_a(α) + 2m·log 2`.
pub fn translate_rhs(h_a_f: RealInterval, m: usize, h_a_alpha: RealInterval) -> RealInterval {
    h_a_f
        .add(h_a_alpha.scale(m as f64))
        .add(ln_2().scale(2.0 * m as f64))
}

/// Determinant bound: `h_a(det F_ij) ≤ s·h + s(log s + μ·log 2)`.
pub fn determinant_rhs(s: usize, entry_deg: usize, entry_height: RealInterval) -> RealInterval {
    entry_height
        .scale(s as f64)
        .add(ln_usize(s).add(ln_2().scale(entry_deg as f64)).scale(s as f64))
}

/// Mahler root-sum bound: `Σ h_a(roots) ≤ h_p(F) + log(ρ+1)`.
pub fn mahler_rhs(h_p: RealInterval, degree: usize) -> RealInterval {
    h_p.add(ln_usize(degree + 1))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn omega_fixture_values() {
        // m=1, n=2, h=0: Ω = 9600·log 2
        let w = omega(1, 2, RealInterval::zero()).unwrap();
        assert!(w.contains(9600.0 * 2f64.ln()), "{w:?}");
        // m̃=1, ñ=4, h=0: Ω̃ = 128000·log 4
        let w = omega(1, 4, RealInterval::zero()).unwrap();
        assert!(w.contains(128000.0 * 4f64.ln()));
        assert!(omega(1, 1, RealInterval::zero()).is_err());
    }

    #[test]
    fn affine_bound_fixture() {
        let inputs = BoundInputs {
            m: 1,
            n: 2,
            m_tilde: 1,
            n_tilde: 4,
            h_f: RealInterval::zero(),
            h_f_tilde: RealInterval::zero(),
            h_s: RealInterval::zero(),
        };
        let q = main_quantities(&inputs).unwrap();
        assert!(q.upsilon.hi == 0.0);
        let b = cw_bound(&inputs, CoveringMode::Affine).unwrap();
        let expect = 9600.0 * 2f64.ln() + 128000.0 * 4f64.ln();
        assert!((b.midpoint() - expect).abs() < 1e-6, "{b:?} vs {expect}");
        let p = cw_bound(&inputs, CoveringMode::Projective).unwrap();
        assert!(p.contains(2.0 * expect));
    }

    #[test]
    fn lambda_fixtures() {
        let l = lambda(1, 4, 1).unwrap();
        assert_eq!(
            l,
            SymbolicPower {
                base: 8,
                exponent: 200,
                additive: 0
            }
        );
        assert!(l.log_value().contains(200.0 * 8f64.ln()));
        let lp = lambda_prime(1, 2).unwrap();
        assert_eq!(
            lp,
            SymbolicPower {
                base: 16,
                exponent: 44,
                additive: 0
            }
        );
        // δ = 1 adds nothing
        assert_eq!(lambda(1, 4, 1).unwrap().additive, 0);
        assert_eq!(lambda(1, 4, 3).unwrap().additive, 4);
    }

    #[test]
    fn disc_bound_fixtures() {
        // generator √2: 2·log 2
        let b = disc_bound(&DiscBound::GeneratorHeight {
            nu: 2,
            h_a: RealInterval::exact(0.5 * 2f64.ln()),
        });
        assert!(b.contains(2f64.ln() + 2f64.ln()));
        // root sum for X²-2: 2·(1/2 log 2)... rhs = 2·1·(1/2 log2) + 6 log 2
        let b = disc_bound(&DiscBound::RootSum {
            degree: 2,
            h_p: RealInterval::exact(0.5 * 2f64.ln()),
        });
        assert!(b.contains(2f64.ln() + 6.0 * 2f64.ln()));
        let b = disc_bound(&DiscBound::RamifiedPlaces {
            nu: 2,
            h_ram: RealInterval::exact(2f64.ln()),
        });
        assert!(b.contains(0.5 * 2f64.ln() + 2.52));
    }

    #[test]
    fn envelope_fixture_values() {
        // m=1, n=2, h=0
        let e = envelope_bounds(1, 2, RealInterval::zero());
        assert!(e.log_a_sum.contains(24.0));
        assert!(e.log_b_sum.contains(4f64.ln()));
        assert!(e.nonintegral_places.contains(2.0 * (3.0 * 2f64.ln() + 5.0)));
        assert!(e.support.contains(52.0));
    }

    #[test]
    fn coefficient_field_fixture_values() {
        // u=0, μ=1, ν=1, n=2, m=1, h=0
        let c = coefficient_field_bounds(1, 2, RealInterval::zero(), 0, 1, 1, 2);
        assert!(c.field_disc.contains(48.0 + 3.0 * 4f64.ln()), "{c:?}");
        assert!(c.essential_heights.contains(24.0));
        assert!(c.essential_heights_total.contains(48.0));
        let k = essential_index_bound(2, 1, 1, 2);
        assert!((k - 1.0).abs() < 1e-12);
    }

    #[test]
    fn tset_bound_totals() {
        let t = tset_bounds(1, 2, RealInterval::zero());
        assert!(t.t1.contains(2.04));
        assert!(t.total.contains(150.0 * 8.0 * 2f64.ln() * 6.0));
    }

    #[test]
    fn resultant_rhs_fixture() {
        // f = Y²-X: rhs of the affine resultant bound = 3(log 8 + log 2)
        let r = resultant_height_affine_rhs(1, 2, RealInterval::zero());
        assert!(r.contains(3.0 * (8f64.ln() + 2f64.ln())));
    }
}
