use crate::error::{Error, Result};
use crate::numkernel::{atanh, const_ln2, const_pi, ApproxReal, EvalContext, ExactRational};
use crate::ratseq::factorial;

use super::forms::{milgram_matches_theorem3, theorem3_matches_theorem2};
use super::oracle::zeta_int;
use super::report::{CheckOutcome, IdentityReport, SeriesSummary};
use super::series::{upper_ball, SeriesOptions, SeriesResult, ZetaSeries};

fn sign(k: u32) -> ExactRational {
    if k.is_multiple_of(2) {
        ExactRational::one()
    } else {
        ExactRational::from(-1)
    }
}

/// Series summary with the tail carried through a multiplier.
fn summary_scaled(r: &SeriesResult, factor: &ApproxReal) -> SeriesSummary {
    let tail = upper_ball(&(&r.tail_bound * &factor.abs()));
    SeriesSummary { mode: r.mode, terms_used: r.terms_used, tail_bound: tail }
}

/// `sum (1 - 4^-n) zeta(2n) / (n (2n+1))`, which converges to `ln 2`.
pub fn eval_ln2(ctx: &EvalContext, opts: &SeriesOptions) -> Result<SeriesResult> {
    ZetaSeries::ln2().sum(opts, ctx)
}

/// `ln 2` oracle independent of the Machin-type constant: `2 atanh(1/3)`.
pub fn ln2_oracle(ctx: &EvalContext) -> Result<ApproxReal> {
    let third = ApproxReal::from_rational(&ExactRational::new(1, 3), ctx.working_bits() + 8);
    Ok(atanh(&third, ctx)?.mul_pow2(1))
}

/// Report for the `ln 2` series against `2 atanh(1/3)`.
pub fn ln2_report(ctx: &EvalContext, opts: &SeriesOptions) -> Result<IdentityReport> {
    let series = eval_ln2(ctx, opts)?;
    let rhs = ln2_oracle(ctx)?;
    let summary = SeriesSummary::from(&series);
    Ok(IdentityReport::build("ln2", vec![], series.enclosure(), rhs, ctx, Some(summary), vec![]))
}

/// `(2 pi^2/9) ln 2 - (8 pi^2/3) T` against `zeta(3)`, where `T = (pi^2/4) S`.
pub fn eval_zeta3(ctx: &EvalContext, opts: &SeriesOptions) -> Result<IdentityReport> {
    let wctx = ctx.with_extra_bits(12);
    let series = ZetaSeries::zeta3().sum(opts, &wctx)?;
    let pi_sq = const_pi(&wctx).square();
    let ln2 = const_ln2(&wctx);
    let factor = pi_sq.mul_rational(&ExactRational::new(8, 3));
    let lhs = (&pi_sq * &ln2).mul_rational(&ExactRational::new(2, 9)) - &factor * &series.enclosure();
    let rhs = zeta_int(3, &wctx)?;
    let summary = summary_scaled(&series, &factor);
    Ok(IdentityReport::build(
        "zeta3",
        vec![],
        lhs.round_to(ctx.working_bits()),
        rhs.round_to(ctx.working_bits()),
        ctx,
        Some(summary),
        vec![],
    ))
}

fn general_context(m: u32, ctx: &EvalContext) -> EvalContext {
    // pi^(2m) multiplies the series and the lower odd zeta values
    ctx.with_extra_bits(12 + (2.0 * m as f64 * std::f64::consts::PI.log2()).ceil() as u32)
}

struct OddZetaParts {
    pi_pow_2m: ApproxReal,
    series: SeriesResult,
    /// `sum_{j=1}^{m-1} (-1)^j pi^2j (4^(j-m) - 1) zeta(2m-2j+1) / (2j+1)!`
    lower: ApproxReal,
    ln2_term: ApproxReal,
}

fn odd_zeta_parts(m: u32, wctx: &EvalContext, opts: &SeriesOptions) -> Result<OddZetaParts> {
    let series = ZetaSeries::general(m)?.sum(opts, wctx)?;
    let prec = wctx.working_bits();
    let pi_sq = const_pi(wctx).square();
    let mut lower = ApproxReal::zero(prec);
    let mut pi_pow = ApproxReal::from_int(1, prec);
    for j in 1..m {
        pi_pow = &pi_pow * &pi_sq;
        let c = sign(j)
            * (ExactRational::from(4).pow(j as i32 - m as i32) - ExactRational::one())
            / ExactRational::from(factorial(2 * j as u64 + 1));
        lower = lower + (&pi_pow * &zeta_int(2 * m - 2 * j + 1, wctx)?).mul_rational(&c);
    }
    let pi_pow_2m = &pi_pow * &pi_sq;
    let ln2_term = (&pi_pow_2m * &const_ln2(wctx)).mul_rational(&(ExactRational::one() / ExactRational::from(factorial(2 * m as u64 + 1))));
    Ok(OddZetaParts { pi_pow_2m, series, lower, ln2_term })
}

/// `(1 - 4^-m) zeta(2m+1)` against its Euler-polynomial series expansion.
pub fn eval_general(m: u32, ctx: &EvalContext, opts: &SeriesOptions) -> Result<IdentityReport> {
    if m == 0 {
        return Err(Error::usage("general identity needs m >= 1"));
    }
    let wctx = general_context(m, ctx);
    let p = odd_zeta_parts(m, &wctx, opts)?;
    let s = sign(m);
    let rhs = &p.lower - p.ln2_term.mul_rational(&s) + (&p.pi_pow_2m * &p.series.enclosure()).mul_rational(&s);
    let lhs = zeta_int(2 * m + 1, &wctx)?
        .mul_rational(&(ExactRational::one() - ExactRational::from(4).pow(-(m as i32))));
    let mut checks = Vec::new();
    if m == 1 {
        checks.push(CheckOutcome {
            name: "m=1 coefficients times 4/3 equal the zeta(3) identity".to_string(),
            pass: theorem3_matches_theorem2(),
        });
    }
    let summary = summary_scaled(&p.series, &p.pi_pow_2m);
    Ok(IdentityReport::build(
        "general",
        vec![("m".to_string(), m.to_string())],
        lhs.round_to(ctx.working_bits()),
        rhs.round_to(ctx.working_bits()),
        ctx,
        Some(summary),
        checks,
    ))
}

/// `zeta(2m+1)` from the formula solved for it, plus the exact coefficient
/// check against the `(1 - 4^-m)`-scaled form.
pub fn eval_milgram(m: u32, ctx: &EvalContext, opts: &SeriesOptions) -> Result<IdentityReport> {
    if m == 0 {
        return Err(Error::usage("milgram identity needs m >= 1"));
    }
    let wctx = general_context(m, ctx);
    let p = odd_zeta_parts(m, &wctx, opts)?;
    let k_inv = (ExactRational::one() - ExactRational::from(4).pow(-(m as i32)))
        .recip()
        .expect("nonzero");
    let lead = sign(m) * &k_inv;
    let rhs = (&p.pi_pow_2m * &p.series.enclosure() - &p.ln2_term).mul_rational(&lead)
        + p.lower.mul_rational(&k_inv);
    let lhs = zeta_int(2 * m + 1, &wctx)?;
    let checks = vec![CheckOutcome {
        name: "coefficients times (1 - 4^-m) equal the odd-zeta identity".to_string(),
        pass: milgram_matches_theorem3(m)?,
    }];
    let summary = summary_scaled(&p.series, &p.pi_pow_2m.mul_rational(&k_inv));
    Ok(IdentityReport::build(
        "milgram",
        vec![("m".to_string(), m.to_string())],
        lhs.round_to(ctx.working_bits()),
        rhs.round_to(ctx.working_bits()),
        ctx,
        Some(summary),
        checks,
    ))
}
