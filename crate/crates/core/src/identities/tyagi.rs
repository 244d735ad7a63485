use crate::error::{Error, Result};
use crate::numkernel::{const_pi, pow_rational, sin, ApproxReal, EvalContext, ExactRational};
use crate::zetacore::{gamma_rational, zeta_ref};

use super::report::{IdentityReport, SeriesSummary};
use super::series::{upper_ball, SeriesMode, SeriesOptions};

/// Checks, for `1 < s < 2`,
///
/// ```text
/// zeta(s) (1 - 2^(1-s)) / (pi^(s-1) sin(pi s/2))
///     = sum_{n>=1} (2 - 2^(s-2n)) Gamma(2n-s+1)/Gamma(2n+2) zeta(2n-s+1)
/// ```
///
/// With `g_n = Gamma(2n+1-s)/Gamma(2n+2)` the right side splits into
/// `2 sum g_n - 2^s sum 4^-n g_n + sum (2 - 2^(s-2n)) g_n (zeta(2n+1-s) - 1)`.
/// `g_n = (h(2n) - h(2n+1))/s` with `h(x) = Gamma(x+1-s)/Gamma(x+1)`, and
/// `sum_x (-1)^x h(x) = Gamma(1-s) 2^(s-1)` by the binomial series, so
/// `sum g_n = Gamma(2-s)/s * ((2^(s-1) - 1)/(1-s) + 1)`.
pub fn eval_tyagi_holm(s: &ExactRational, ctx: &EvalContext, opts: &SeriesOptions) -> Result<IdentityReport> {
    let one = ExactRational::one();
    let two = ExactRational::from(2);
    if *s <= one || *s >= two {
        return Err(Error::domain(format!("s = {s} must lie strictly between 1 and 2")));
    }
    if opts.mode == SeriesMode::Direct {
        return Err(Error::usage("tyagi-holm is only summed in accelerated mode"));
    }
    let near = |d: ExactRational| d.recip().expect("nonzero").to_f64().log2().ceil().max(0.0) as u32;
    let wctx = ctx.with_extra_bits(16 + near(s - &one) + near(&two - s));
    let prec = wctx.working_bits();
    let bits = ctx.working_bits();
    let two_real = ApproxReal::from_int(2, prec);
    let pi = const_pi(&wctx);

    // left side
    let zeta_s = zeta_ref(s, &wctx)?;
    let factor = ApproxReal::from_int(1, prec) - pow_rational(&two_real, &(&one - s), &wctx)?;
    let denom = pow_rational(&pi, &(s - &one), &wctx)? * sin(&pi.mul_rational(&(s / &two)), &wctx)?;
    let lhs = (zeta_s * factor).div(&denom)?;

    // closed-form part
    let gamma3 = gamma_rational(&(ExactRational::from(3) - s), &wctx)?;
    let gamma2 = gamma3.div_rational(&(&two - s))?;
    let pow_sm1 = pow_rational(&two_real, &(s - &one), &wctx)?;
    let bracket = (pow_sm1 - ApproxReal::from_int(1, prec)).div_rational(&(&one - s))? + ApproxReal::from_int(1, prec);
    let sum_g = (gamma2 * bracket).div_rational(s)?;

    // geometric part and zeta remainder, g_n = Gamma(3-s) rho_n
    let two_s = pow_rational(&two_real, s, &wctx)?;
    let target = ExactRational::from(2).pow(-(bits as i32) - 4);
    let mut rho = ExactRational::new(1, 6);
    let mut geo = ExactRational::zero();
    let mut rem = ApproxReal::zero(prec);
    let mut n: i64 = 0;
    let tail = loop {
        n += 1;
        if n as u64 > opts.max_terms {
            return Err(Error::precision(format!("tyagi-holm remainder needs more than {} terms", opts.max_terms)));
        }
        let quarter = ExactRational::from(4).pow(-(n as i32));
        let x = ExactRational::from(2 * n + 1) - s;
        let zeta_minus_one = zeta_ref(&x, &wctx)? - ApproxReal::from_int(1, prec);
        let weight = ApproxReal::from_int(2, prec) - two_s.mul_rational(&quarter);
        rem = rem + (weight * zeta_minus_one).mul_rational(&rho);
        geo = geo + &quarter * &rho;
        let next = ExactRational::from(2 * n + 1) - s;
        let next2 = ExactRational::from(2 * n + 2) - s;
        rho = &rho * next * next2 / ExactRational::from((2 * n + 2) * (2 * n + 3));
        // rho is now rho_{n+1}; Gamma(3-s) <= 1 and 2^s <= 4
        let four_thirds = ExactRational::new(4, 3);
        let tail_geo = &rho * ExactRational::from(4).pow(-(n as i32)) * &four_thirds;
        let tail_rem = ExactRational::from(2) * &rho * (ExactRational::one() + ExactRational::new(1, n))
            * ExactRational::from(2).pow(-1 - 2 * n as i32)
            * &four_thirds;
        let tail = tail_geo + tail_rem;
        if tail <= target {
            break tail;
        }
    };
    let geo_real = ApproxReal::from_rational(&geo, prec);
    let rhs = sum_g.mul_pow2(1) - &two_s * &gamma3 * &geo_real + &gamma3 * &rem;
    let tail_bound = upper_ball(&ApproxReal::from_rational(&tail, 64));
    let rhs = rhs.with_error(tail_bound.abs_upper());
    let summary = SeriesSummary { mode: SeriesMode::Accelerated, terms_used: n as u64, tail_bound };
    Ok(IdentityReport::build(
        "tyagi-holm",
        vec![("s".to_string(), s.to_string())],
        lhs.round_to(bits),
        rhs.round_to(bits),
        ctx,
        Some(summary),
        vec![],
    ))
}
