//! Euler–Maclaurin evaluation of the Hurwitz zeta function and its
//! s-derivative for rational `s != 1` and rational `a > 0`.
//!
//! With `X = N + a` and `f(t) = (t + a)^(-s)`:
//!
//! ```text
//! zeta(s, a) = sum_{k<N} f(k) + X^(1-s)/(s-1) + X^(-s)/2
//!            + sum_{j=1}^{M} B_2j/(2j)! (s)_(2j-1) X^(-s-2j+1) + R
//! |R| <= |B_2M|/(2M)! |(s)_2M| X^(1-s-2M) / (s+2M-1)
//! ```
//!
//! The derivative differentiates every term in `s`; its remainder is bounded
//! the same way using `d/ds (s)_2M` and the `ln(t + a)` factor.


use crate::error::{Error, Result};
use crate::numkernel::{exp, ln, make_context, ApproxReal, ErrBound, EvalContext, ExactRational};
use crate::ratseq::{bernoulli, factorial};

/// Number of directly summed terms and of Bernoulli correction terms.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct EulerMaclaurinPlan {
    pub shift_n: u32,
    pub correction_m: u32,
}

impl EulerMaclaurinPlan {
    pub fn new(shift_n: u32, correction_m: u32) -> Self {
        EulerMaclaurinPlan { shift_n, correction_m }
    }

    /// Both counts doubled.
    pub fn doubled(&self) -> Self {
        EulerMaclaurinPlan { shift_n: 2 * self.shift_n, correction_m: 2 * self.correction_m }
    }

    /// Picks `N ~ 0.7 * working_bits` and the smallest `M` whose remainder
    /// bound (for the value and the derivative) is below `2^-(working_bits+4)`.
    pub fn choose(s: &ExactRational, a: &ExactRational, ctx: &EvalContext) -> Result<Self> {
        validate(s, a)?;
        let bits = ctx.working_bits();
        let shift_n = (bits as f64 * 0.7).ceil().max(10.0) as u32;
        let target = -(bits as f64) - 8.0;
        let x = (a + ExactRational::from(shift_n as i64)).to_f64();
        let sf = s.to_f64();
        let m_min = min_corrections(s);
        let cap = m_min + (std::f64::consts::PI * x).ceil() as u32 + 4;
        let mut m = m_min;
        loop {
            let est = remainder_log2_estimate(sf, x, m);
            if est < target {
                break;
            }
            m += 1;
            if m > cap {
                return Err(Error::precision(format!(
                    "Euler-Maclaurin correction cap reached for s = {s}, a = {a}"
                )));
            }
        }
        // confirm with the rigorous bound, growing M if the estimate was optimistic
        let limit = ErrBound::pow2(-(bits as i64) - 4);
        loop {
            let plan = EulerMaclaurinPlan::new(shift_n, m);
            let (rv, rd) = plan.remainder_bounds(s, a)?;
            if rv <= limit && rd <= limit {
                return Ok(plan);
            }
            m += 1;
            if m > cap {
                return Err(Error::precision(format!(
                    "Euler-Maclaurin correction cap reached for s = {s}, a = {a}"
                )));
            }
        }
    }

    /// Rigorous bounds on the truncation remainder of the value and of the
    /// s-derivative.
    pub fn remainder_bounds(&self, s: &ExactRational, a: &ExactRational) -> Result<(ErrBound, ErrBound)> {
        validate(s, a)?;
        let m = self.correction_m as i64;
        let c_minus_1 = s + ExactRational::from(2 * m - 1);
        if !c_minus_1.is_positive() {
            return Err(Error::precision(format!(
                "plan needs more than {} correction terms for s = {s}",
                self.correction_m
            )));
        }
        let (p, dp) = rising_with_derivative(s, 2 * m as u32);
        if p.is_zero() && dp.is_zero() {
            return Ok((ErrBound::ZERO, ErrBound::ZERO));
        }
        let ctx = make_context(20, 0).expect("valid context");
        let prec = ctx.working_bits();
        let x = a + ExactRational::from(self.shift_n as i64);
        let bern = bernoulli(2 * m as usize).abs()
            / ExactRational::from(factorial(2 * m as u64));
        let exponent = ExactRational::one() - s - ExactRational::from(2 * m);
        let x_pow = power_of_rational(&x, &exponent, &ctx)?;
        let scale = x_pow.mul_rational(&bern);
        let value = scale.mul_rational(&(p.abs() / &c_minus_1));
        let ln_x = ln(&ApproxReal::from_rational(&x, prec), &ctx)?.abs();
        let inv = ApproxReal::from_rational(&c_minus_1.recip().expect("positive"), prec);
        let inner = inv.mul_rational(&dp.abs())
            + (&ln_x * &inv + inv.square()).mul_rational(&p.abs());
        let deriv = &scale * &inner;
        Ok((value.abs_upper(), deriv.abs_upper()))
    }
}

fn validate(s: &ExactRational, a: &ExactRational) -> Result<()> {
    if *s == ExactRational::one() {
        return Err(Error::Pole);
    }
    if !a.is_positive() {
        return Err(Error::domain(format!("Hurwitz parameter a = {a} must be positive")));
    }
    Ok(())
}

/// Smallest M with s + 2M - 1 > 0, at least 1.
fn min_corrections(s: &ExactRational) -> u32 {
    let sf = s.to_f64();
    let mut m = 1u32;
    while sf + 2.0 * m as f64 - 1.0 <= 0.0 {
        m += 1;
    }
    m
}

fn remainder_log2_estimate(s: f64, x: f64, m: u32) -> f64 {
    let two_m = 2 * m;
    let mut log_poch = 0.0;
    for i in 0..two_m {
        let f = (s + i as f64).abs();
        if f == 0.0 {
            return f64::NEG_INFINITY;
        }
        log_poch += f.log2();
    }
    // |B_2M|/(2M)! = 2 zeta(2M)/(2 pi)^(2M) <= 4/(2 pi)^(2M)
    2.0 - two_m as f64 * (2.0 * std::f64::consts::PI).log2() + log_poch
        + (1.0 - s - two_m as f64) * x.log2()
        + (x.log2() + 2.0).log2().max(0.0)
        - (s + two_m as f64 - 1.0).min(1.0).log2()
}

/// `((s)_r, d/ds (s)_r)` for the rising factorial `s (s+1) ... (s+r-1)`.
pub(crate) fn rising_with_derivative(s: &ExactRational, r: u32) -> (ExactRational, ExactRational) {
    let mut p = ExactRational::one();
    let mut dp = ExactRational::zero();
    for i in 0..r {
        let f = s + ExactRational::from(i as i64);
        dp = &dp * &f + &p;
        p = &p * &f;
    }
    (p, dp)
}

/// `x^e` for rational `x > 0`; exact when `e` is an integer.
pub(crate) fn power_of_rational(x: &ExactRational, e: &ExactRational, ctx: &EvalContext) -> Result<ApproxReal> {
    let prec = ctx.working_bits();
    if let Some(k) = e.to_i64() {
        if k.unsigned_abs() < i32::MAX as u64 {
            return Ok(ApproxReal::from_rational(&x.pow(k as i32), prec));
        }
    }
    let lx = ln(&ApproxReal::from_rational(x, prec + 8), ctx)?;
    exp(&lx.mul_rational(e), ctx)
}

fn log2_ceil_f64(x: f64) -> u32 {
    if x <= 1.0 {
        0
    } else {
        x.log2().ceil() as u32
    }
}

/// Extra internal bits absorbing the cancellation in the direct sum and the
/// size of the pole term.
fn guard_bits(s: &ExactRational, a: &ExactRational, n: u32) -> u32 {
    let sf = s.to_f64();
    let x = a.to_f64() + n as f64 + 1.0;
    let mut extra = 24 + log2_ceil_f64(n as f64);
    if sf < 1.0 {
        extra += ((1.0 - sf) * x.log2()).ceil() as u32;
    }
    let dist = (sf - 1.0).abs();
    if dist < 1.0 {
        extra += log2_ceil_f64(2.0 / dist);
    }
    extra
}

/// Value and (optionally) s-derivative of the Hurwitz zeta function under
/// an explicit plan. Truncation remainders are folded into the error bounds.
pub fn hurwitz_with_plan(
    s: &ExactRational,
    a: &ExactRational,
    plan: EulerMaclaurinPlan,
    ctx: &EvalContext,
    want_derivative: bool,
) -> Result<(ApproxReal, Option<ApproxReal>)> {
    validate(s, a)?;
    let (rem_value, rem_deriv) = plan.remainder_bounds(s, a)?;
    let n = plan.shift_n;
    let wctx = ctx.with_extra_bits(guard_bits(s, a, n));
    let prec = wctx.working_bits();
    let neg_s = -s;

    let mut sum = ApproxReal::zero(prec);
    let mut dsum = ApproxReal::zero(prec);
    for k in 0..n {
        let x = a + ExactRational::from(k as i64);
        let term = power_of_rational(&x, &neg_s, &wctx)?;
        if want_derivative {
            let lx = ln(&ApproxReal::from_rational(&x, prec + 8), &wctx)?;
            dsum = dsum - &lx * &term;
        }
        sum = sum + term;
    }

    let x = a + ExactRational::from(n as i64);
    let s_minus_1 = s - ExactRational::one();
    let x_neg_s = power_of_rational(&x, &neg_s, &wctx)?;
    let x_one_minus_s = x_neg_s.mul_rational(&x);
    let integral = x_one_minus_s.div_rational(&s_minus_1)?;
    let half = x_neg_s.mul_pow2(-1);
    let ln_x = if want_derivative {
        Some(ln(&ApproxReal::from_rational(&x, prec + 8), &wctx)?)
    } else {
        None
    };
    if let Some(lx) = &ln_x {
        let pole_sq = x_one_minus_s.div_rational(&(&s_minus_1 * &s_minus_1))?;
        dsum = dsum - lx * &integral - pole_sq - lx * &half;
    }
    sum = sum + &integral + &half;

    // rising factorial (s)_r and its s-derivative, advanced two factors per j
    let mut poch = ExactRational::one();
    let mut dpoch = ExactRational::zero();
    let mut r = 0i64;
    let x_inv_sq = (&x * &x).recip().expect("x > 0");
    let mut x_shift = x.clone(); // X^(1-2j)
    for j in 1..=plan.correction_m as i64 {
        while r < 2 * j - 1 {
            let f = s + ExactRational::from(r);
            dpoch = &dpoch * &f + &poch;
            poch = &poch * &f;
            r += 1;
        }
        x_shift = &x_shift * &x_inv_sq;
        let coef = bernoulli(2 * j as usize) / ExactRational::from(factorial(2 * j as u64));
        let xp = x_neg_s.mul_rational(&x_shift);
        if !poch.is_zero() {
            sum = sum + xp.mul_rational(&(&coef * &poch));
        }
        if let Some(lx) = &ln_x {
            let d = xp.mul_rational(&(&coef * &dpoch)) - (lx * &xp).mul_rational(&(&coef * &poch));
            dsum = dsum + d;
        }
    }

    let value = sum.with_error(rem_value).round_to(ctx.working_bits());
    let deriv = ln_x.map(|_| dsum.with_error(rem_deriv).round_to(ctx.working_bits()));
    Ok((value, deriv))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> ExactRational {
        ExactRational::new(n, d)
    }

    #[test]
    fn rising_factorial_and_derivative() {
        // (s)_3 = s(s+1)(s+2); derivative 3s^2 + 6s + 2
        let (p, dp) = rising_with_derivative(&r(2, 1), 3);
        assert_eq!(p, r(24, 1));
        assert_eq!(dp, r(26, 1));
        let (p, dp) = rising_with_derivative(&r(-3, 1), 4);
        assert!(p.is_zero());
        // d/ds at s = -3: product of the other factors (-3)(-2)(-1) = -6
        assert_eq!(dp, r(-6, 1));
    }

    #[test]
    fn zeta_zero_is_half_minus_a() {
        let ctx = make_context(30, 10).unwrap();
        for a in [r(1, 1), r(1, 2), r(7, 3)] {
            let plan = EulerMaclaurinPlan::choose(&r(0, 1), &a, &ctx).unwrap();
            let (v, _) = hurwitz_with_plan(&r(0, 1), &a, plan, &ctx, false).unwrap();
            assert!(v.contains(&(r(1, 2) - &a)));
        }
    }

    #[test]
    fn plan_rejects_too_few_corrections() {
        let plan = EulerMaclaurinPlan::new(20, 1);
        assert!(plan.remainder_bounds(&r(-5, 1), &r(1, 1)).is_err());
    }

    #[test]
    fn pole_and_domain() {
        let ctx = make_context(10, 0).unwrap();
        assert!(matches!(EulerMaclaurinPlan::choose(&r(1, 1), &r(1, 1), &ctx), Err(Error::Pole)));
        assert!(matches!(
            EulerMaclaurinPlan::choose(&r(2, 1), &r(0, 1), &ctx),
            Err(Error::Domain(_))
        ));
    }
}
