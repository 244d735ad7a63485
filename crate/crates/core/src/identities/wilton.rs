use crate::error::{Error, Result};
use crate::numkernel::{const_pi, ln, ApproxReal, EvalContext, ExactRational};
use crate::zetacore::hurwitz_ds_ref;

use super::oracle::zeta_int;
use super::report::{IdentityReport, SeriesSummary};
use super::series::{SeriesOptions, ZetaSeries};

/// `sum zeta(2k)/(2k(2k+1)(2k+2)(2k+3)) = zeta(3)/(8 pi^2) + ln(2 pi)/12 - 11/72`.
pub fn eval_sum_a(ctx: &EvalContext, opts: &SeriesOptions) -> Result<IdentityReport> {
    let wctx = ctx.with_extra_bits(12);
    let series = ZetaSeries::sum_a().sum(opts, &wctx)?;
    let pi = const_pi(&wctx);
    let rhs = zeta_int(3, &wctx)?.div(&pi.square().mul_rational(&ExactRational::from(8)))?
        + ln(&pi.mul_pow2(1), &wctx)?.mul_rational(&ExactRational::new(1, 12))
        - ApproxReal::from_rational(&ExactRational::new(11, 72), wctx.working_bits());
    Ok(IdentityReport::build(
        "sum-a",
        vec![],
        series.enclosure().round_to(ctx.working_bits()),
        rhs.round_to(ctx.working_bits()),
        ctx,
        Some(SeriesSummary::from(&series)),
        vec![],
    ))
}

/// The same series weighted by `4^-k`:
/// `zeta(3)/(2 pi^2) + ln(pi)/12 - 11/72`.
pub fn eval_sum_b(ctx: &EvalContext, opts: &SeriesOptions) -> Result<IdentityReport> {
    let wctx = ctx.with_extra_bits(12);
    let series = ZetaSeries::sum_b().sum(opts, &wctx)?;
    let pi = const_pi(&wctx);
    let rhs = zeta_int(3, &wctx)?.div(&pi.square().mul_pow2(1))?
        + ln(&pi, &wctx)?.mul_rational(&ExactRational::new(1, 12))
        - ApproxReal::from_rational(&ExactRational::new(11, 72), wctx.working_bits());
    Ok(IdentityReport::build(
        "sum-b",
        vec![],
        series.enclosure().round_to(ctx.working_bits()),
        rhs.round_to(ctx.working_bits()),
        ctx,
        Some(SeriesSummary::from(&series)),
        vec![],
    ))
}

/// `sum zeta(2k) t^2k / (k(k+1)(2k+1)(2k+3))` against
/// `zeta(3)/(2 pi^2 t^2) + ln(2 pi)/3 - 11/18 + [zeta'(-3,1+t) - zeta'(-3,1-t)] / (3 t^3)`.
pub fn eval_param_sum(t: &ExactRational, ctx: &EvalContext, opts: &SeriesOptions) -> Result<IdentityReport> {
    if !t.is_positive() || *t >= ExactRational::one() {
        return Err(Error::domain(format!("t = {t} must lie strictly between 0 and 1")));
    }
    let t_inv_bits = t.recip().expect("t > 0").to_f64().log2().ceil().max(0.0) as u32;
    let wctx = ctx.with_extra_bits(12 + 3 * t_inv_bits);
    let prec = wctx.working_bits();
    let series = ZetaSeries::param(t)?.sum(opts, &wctx)?;
    let pi = const_pi(&wctx);
    let one = ExactRational::one();
    let minus_three = ExactRational::from(-3);
    let bracket = hurwitz_ds_ref(&minus_three, &(&one + t), &wctx)? - hurwitz_ds_ref(&minus_three, &(&one - t), &wctx)?;
    let t_sq_inv = (t * t).recip().expect("t > 0");
    let t_cube_inv = t.pow(-3);
    let rhs = zeta_int(3, &wctx)?.div(&pi.square().mul_pow2(1))?.mul_rational(&t_sq_inv)
        + ln(&pi.mul_pow2(1), &wctx)?.mul_rational(&ExactRational::new(1, 3))
        - ApproxReal::from_rational(&ExactRational::new(11, 18), prec)
        + bracket.mul_rational(&(t_cube_inv / ExactRational::from(3)));
    Ok(IdentityReport::build(
        "param-sum",
        vec![("t".to_string(), t.to_string())],
        series.enclosure().round_to(ctx.working_bits()),
        rhs.round_to(ctx.working_bits()),
        ctx,
        Some(SeriesSummary::from(&series)),
        vec![],
    ))
}
