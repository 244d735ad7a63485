//! Riemann and Hurwitz zeta machinery: exact even values through Euler's
//! formula and an independent Euler–Maclaurin reference evaluator that
//! covers the continuation to `s < 1` and the s-derivative.

mod euler_maclaurin;
mod gamma;

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::numkernel::{const_pi, ApproxReal, EvalContext, ExactRational};
use crate::ratseq::{bernoulli, factorial};

pub use euler_maclaurin::{hurwitz_with_plan, EulerMaclaurinPlan};
pub use gamma::gamma_rational;

pub(crate) use euler_maclaurin::power_of_rational;

/// `zeta(2n) = coeff * pi^(2n)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EvenZetaCoeff {
    pub n: u32,
    pub coeff: ExactRational,
}

/// Exact coefficient `(-1)^(n-1) 2^(2n-1) B_2n / (2n)!`.
pub fn zeta_even_coeff(n: u32) -> Result<EvenZetaCoeff> {
    if n == 0 {
        return Err(Error::usage("zeta_even_coeff needs n >= 1"));
    }
    let two_n = 2 * n as usize;
    let sign = if n % 2 == 1 { 1 } else { -1 };
    let coeff = ExactRational::from(sign) * ExactRational::from(BigInt::one() << (two_n - 1))
        * bernoulli(two_n)
        / ExactRational::from(factorial(two_n as u64));
    Ok(EvenZetaCoeff { n, coeff })
}

/// `zeta(2n)` from Euler's formula.
pub fn zeta_even(n: u32, ctx: &EvalContext) -> Result<ApproxReal> {
    let c = zeta_even_coeff(n)?;
    let wctx = ctx.with_extra_bits(16);
    let pi_sq = const_pi(&wctx).square();
    Ok(pi_sq.powi(n).mul_rational(&c.coeff).round_to(ctx.working_bits()))
}

/// How `zeta_ref` evaluates `zeta(s)` for `s > 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ZetaPath {
    /// Direct series when it needs fewer terms than Euler–Maclaurin.
    Auto,
    EulerMaclaurin,
    /// Partial sum of the defining series plus the integral tail bound.
    DirectSeries,
}

const DIRECT_SERIES_CAP: f64 = 1.0e6;

/// Reference value of `zeta(s)` for rational `s != 1`.
pub fn zeta_ref(s: &ExactRational, ctx: &EvalContext) -> Result<ApproxReal> {
    zeta_ref_via(s, ctx, ZetaPath::Auto)
}

pub fn zeta_ref_via(s: &ExactRational, ctx: &EvalContext, path: ZetaPath) -> Result<ApproxReal> {
    if *s == ExactRational::one() {
        return Err(Error::Pole);
    }
    let one = ExactRational::one();
    match path {
        ZetaPath::EulerMaclaurin => hurwitz_ref(s, &one, ctx),
        ZetaPath::DirectSeries => zeta_direct(s, ctx),
        ZetaPath::Auto => {
            if s > &one {
                let terms = direct_terms_needed(s, ctx);
                let em_terms = (ctx.working_bits() as f64 * 0.7).max(10.0);
                if terms <= em_terms {
                    return zeta_direct(s, ctx);
                }
            }
            hurwitz_ref(s, &one, ctx)
        }
    }
}

/// Terms K with `K^-s / 2 <= 2^-(bits+4)`, the width of the tail bracket.
fn direct_terms_needed(s: &ExactRational, ctx: &EvalContext) -> f64 {
    let need = ctx.working_bits() as f64 + 3.0;
    (need / s.to_f64()).exp2().ceil()
}

fn zeta_direct(s: &ExactRational, ctx: &EvalContext) -> Result<ApproxReal> {
    if s <= &ExactRational::one() {
        return Err(Error::domain("the defining series needs s > 1"));
    }
    let k_max = direct_terms_needed(s, ctx);
    if k_max > DIRECT_SERIES_CAP {
        return Err(Error::precision(format!(
            "direct zeta series would need {k_max:.0} terms at s = {s}"
        )));
    }
    let k_max = k_max as i64;
    let wctx = ctx.with_extra_bits(16 + (k_max as f64).log2().ceil() as u32);
    let neg_s = -s;
    let mut sum = ApproxReal::zero(wctx.working_bits());
    for k in 1..=k_max {
        sum = sum + power_of_rational(&ExactRational::from(k), &neg_s, &wctx)?;
    }
    // (K+1)^(1-s)/(s-1) <= sum_{k>K} k^-s <= K^(1-s)/(s-1)
    let sm1 = s - ExactRational::one();
    let upper = power_of_rational(&ExactRational::from(k_max), &(-&sm1), &wctx)?.div_rational(&sm1)?;
    let lower = power_of_rational(&ExactRational::from(k_max + 1), &(-&sm1), &wctx)?.div_rational(&sm1)?;
    let mid = (&upper + &lower).mul_pow2(-1);
    let half_width = (upper - lower).abs_upper().mul_pow2(-1);
    Ok((sum + mid).with_error(half_width).round_to(ctx.working_bits()))
}

/// Reference value of the Hurwitz zeta function `zeta(s, a)`.
pub fn hurwitz_ref(s: &ExactRational, a: &ExactRational, ctx: &EvalContext) -> Result<ApproxReal> {
    let plan = EulerMaclaurinPlan::choose(s, a, ctx)?;
    Ok(hurwitz_with_plan(s, a, plan, ctx, false)?.0)
}

/// `d/ds zeta(s, a)`, from the analytically differentiated expansion.
pub fn hurwitz_ds_ref(s: &ExactRational, a: &ExactRational, ctx: &EvalContext) -> Result<ApproxReal> {
    let plan = EulerMaclaurinPlan::choose(s, a, ctx)?;
    let (_, d) = hurwitz_with_plan(s, a, plan, ctx, true)?;
    Ok(d.expect("derivative requested"))
}
