use crate::error::{Error, Result};
use crate::numkernel::{const_pi, exp, ln, ApproxReal, EvalContext, ExactRational};
use crate::ratseq::bernoulli;

/// Gamma function at a positive rational argument.
///
/// Shifts the argument up to `w = z + N`, applies Stirling's series with
/// the first omitted term as the remainder bound (valid for real `w > 0`),
/// then divides out the exact product `z (z+1) ... (z+N-1)`.
pub fn gamma_rational(z: &ExactRational, ctx: &EvalContext) -> Result<ApproxReal> {
    if !z.is_positive() {
        return Err(Error::domain(format!("gamma argument {z} must be positive")));
    }
    let bits = ctx.working_bits();
    let wctx = ctx.with_extra_bits(32);
    let prec = wctx.working_bits();
    let min_w = (bits as f64 * 0.12).ceil() + 8.0;
    let shift = (min_w - z.to_f64()).ceil().max(0.0) as i64;
    let w = z + ExactRational::from(shift);
    let wf = w.to_f64();

    let w_real = ApproxReal::from_rational(&w, prec);
    let ln_w = ln(&w_real, &wctx)?;
    let two_pi = const_pi(&wctx).mul_pow2(1);
    let half_ln_2pi = ln(&two_pi, &wctx)?.mul_pow2(-1);
    let mut acc = ln_w.mul_rational(&(&w - ExactRational::new(1, 2))) - &w_real + half_ln_2pi;

    let target = -(prec as f64);
    let mut j: i64 = 1;
    loop {
        let b = bernoulli(2 * j as usize);
        let denom = ExactRational::from(2 * j * (2 * j - 1)) * w.pow((2 * j - 1) as i32);
        acc = acc + ApproxReal::from_rational(&(&b / &denom), prec);
        // first omitted term bounds the remainder
        let next = ExactRational::from(2 * (j + 1) * (2 * j + 1)) * w.pow((2 * j + 1) as i32);
        let bound = bernoulli(2 * (j + 1) as usize).abs() / next;
        let est = bound.to_f64().log2();
        if est < target || j > (std::f64::consts::PI * wf) as i64 + 4 {
            let rem = ApproxReal::from_rational(&bound, 64).abs_upper();
            acc = acc.with_error(rem);
            break;
        }
        j += 1;
    }

    let mut product = ExactRational::one();
    for k in 0..shift {
        product = product * (z + ExactRational::from(k));
    }
    let g = exp(&acc, &wctx)?;
    Ok(g.div_rational(&product)?.round_to(bits))
}
