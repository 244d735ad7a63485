use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::numkernel::constants::{fixed_to_real, ln2_fixed, pi_fixed, KERNEL_GUARD_BITS};
use crate::numkernel::{ApproxReal, ErrBound, EvalContext, ExactRational};

/// The elementary functions the identity evaluators need.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ElementaryKind {
    Ln,
    Atanh,
    Sin,
    Exp,
}

pub fn eval_elementary(kind: ElementaryKind, x: &ApproxReal, ctx: &EvalContext) -> Result<ApproxReal> {
    match kind {
        ElementaryKind::Ln => ln(x, ctx),
        ElementaryKind::Atanh => atanh(x, ctx),
        ElementaryKind::Sin => sin(x, ctx),
        ElementaryKind::Exp => exp(x, ctx),
    }
}

/// Stored value of `x` as a fixed-point integer at scale `2^q` (floor), with
/// the conversion error in ulps.
fn to_fixed(x: &ApproxReal, q: u32) -> (BigInt, f64) {
    let shift = x.exponent() + q as i64;
    if shift >= 0 {
        (x.mantissa() << shift as u64, 0.0)
    } else {
        (x.mantissa() >> (-shift) as u64, 1.0)
    }
}

/// Shift toward zero, so repeated products of a negative term reach zero.
fn shr_trunc(n: BigInt, q: u32) -> BigInt {
    if n.is_negative() {
        -((-n) >> q)
    } else {
        n >> q
    }
}

/// atanh of a fixed-point argument with `|x| <= 3/4`.
fn atanh_fixed(x: &BigInt, q: u32) -> (BigInt, f64) {
    let x_sq = (x * x) >> q;
    let mut term = x.clone();
    let mut sum = BigInt::zero();
    let mut j: u64 = 0;
    while !term.is_zero() {
        sum += &term / BigInt::from(2 * j + 1);
        term = shr_trunc(&term * &x_sq, q);
        j += 1;
    }
    // term errors stay below 5 ulps since x^2 <= 9/16; tail after the
    // vanishing term is below 14 ulps
    (sum, 6.0 * (j as f64 + 1.0) + 14.0)
}

fn propagated(bound: ErrBound, factor_log2: i64) -> ErrBound {
    bound.mul_pow2(factor_log2)
}

pub fn ln(x: &ApproxReal, ctx: &EvalContext) -> Result<ApproxReal> {
    if !x.mantissa().is_positive() {
        if x.is_certainly_negative() || (x.mantissa().is_zero() && x.is_exact()) {
            return Err(Error::domain("ln requires a positive argument"));
        }
        return Err(Error::precision("ln argument not bounded away from zero"));
    }
    let prec = ctx.working_bits();
    let q = prec + KERNEL_GUARD_BITS;
    let mant = x.mantissa();
    let b = mant.bits();
    // x = (mant / 2^c) * 2^(c + exp) with mant / 2^c in [1/sqrt2, sqrt2)
    let c = if mant * mant < BigInt::one() << (2 * b - 1) { b - 1 } else { b };
    let e = c as i64 + x.exponent();
    let pow_c = BigInt::one() << c;
    let t = ((mant - &pow_c) << q) / (mant + &pow_c);
    let (at, at_err) = atanh_fixed(&t, q);
    let (l2, l2_err) = ln2_fixed(q);
    let value = at * 2 + l2 * e;
    let err = 2.0 * (at_err + 1.1) + (e.unsigned_abs() as f64) * l2_err;
    let mut out = fixed_to_real(value, q, err, prec);
    if !x.is_exact() {
        // x > 2^lo and err(x) <= 2^(lo-1) give |ln X - ln x| <= 2 err(x) / 2^lo
        let lo = x.floor_log2().unwrap_or(0);
        if x.err_bound() > ErrBound::pow2(lo - 1) {
            return Err(Error::precision("ln argument not bounded away from zero"));
        }
        out = out.with_error(propagated(x.err_bound(), 1 - lo));
    }
    Ok(out)
}

pub fn exp(x: &ApproxReal, ctx: &EvalContext) -> Result<ApproxReal> {
    let xf = x.to_f64();
    if !xf.is_finite() || xf.abs() > 1.0e9 {
        return Err(Error::precision("exp argument too large"));
    }
    if x.err_bound() > ErrBound::pow2(-1) {
        return Err(Error::precision("exp argument too uncertain"));
    }
    let prec = ctx.working_bits();
    const HALVINGS: u32 = 12;
    let q = prec + KERNEL_GUARD_BITS + 2 * HALVINGS + 8;
    let k = (xf / std::f64::consts::LN_2).round() as i64;

    let (xq, x_err) = to_fixed(x, q);
    let (l2, l2_err) = ln2_fixed(q + 64);
    let k_ln2 = (l2 * k) >> 64u32;
    let r = xq - k_ln2;
    let r_err = x_err + 1.0 + (k.unsigned_abs() as f64) * l2_err / 2f64.powi(64) + 1.0;

    let s = &r >> HALVINGS;
    let s_err = r_err / 2f64.powi(HALVINGS as i32) + 1.0;
    let one = BigInt::one() << q;
    let mut sum = one.clone();
    let mut term = one;
    let mut i: u64 = 1;
    loop {
        term = shr_trunc(&term * &s, q) / BigInt::from(i);
        if term.is_zero() {
            break;
        }
        sum += &term;
        i += 1;
    }
    let mut err = 1.01 * s_err + 3.0 * (i as f64 + 1.0);
    let mut y = sum;
    for _ in 0..HALVINGS {
        y = (&y * &y) >> q;
        err = 2.9 * err + 2.0;
    }
    let out = ApproxReal::from_parts(
        y,
        k - q as i64,
        prec,
        ErrBound::from_f64(err, k - q as i64),
    );
    if x.is_exact() {
        return Ok(out);
    }
    // |e^X - e^x| <= e^x (e^d - 1) <= 2 d e^x for d <= 1/2
    let extra = (out.abs_upper() * x.err_bound()).mul_pow2(1);
    Ok(out.with_error(extra))
}

pub fn sin(x: &ApproxReal, ctx: &EvalContext) -> Result<ApproxReal> {
    let xf = x.to_f64();
    if !xf.is_finite() || xf.abs() > 1.0e12 {
        return Err(Error::precision("sin argument too large"));
    }
    let prec = ctx.working_bits();
    let q = prec + KERNEL_GUARD_BITS + 8;
    let k = (xf / (2.0 * std::f64::consts::PI)).round() as i64;
    let (xq, x_err) = to_fixed(x, q);
    let (pi, pi_err) = pi_fixed(q + 64);
    let two_k_pi = (pi * (2 * k)) >> 64u32;
    let r = xq - two_k_pi;
    let r_err = x_err + 1.0 + 2.0 * (k.unsigned_abs() as f64) * pi_err / 2f64.powi(64) + 1.0;

    let scale = 2f64.powi(q as i32);
    let r_mag = r.to_f64().unwrap_or(f64::INFINITY).abs() / scale * 1.0001 + 1e-30;
    let r_sq = (&r * &r) >> q;
    let r_sq_err = 2.0 * r_mag * r_err + 2.0;
    let r_sq_mag = r_mag * r_mag * 1.0001;

    let mut term = r;
    let mut term_err = r_err;
    let mut term_mag = r_mag;
    let mut sum = BigInt::zero();
    let mut total_err = 0.0;
    let mut i: u64 = 1;
    loop {
        if i % 4 == 1 {
            sum += &term;
        } else {
            sum -= &term;
        }
        total_err += term_err;
        let denom = ((i + 1) * (i + 2)) as f64;
        let next = shr_trunc(&term * &r_sq, q) / BigInt::from((i + 1) * (i + 2));
        term_err = (term_err * r_sq_mag + term_mag * r_sq_err) / denom + 2.0;
        term_mag = term_mag * r_sq_mag / denom;
        term = next;
        i += 2;
        if term.is_zero() && term_mag * scale < 1.0 {
            total_err += term_err + 2.0;
            break;
        }
    }
    let out = fixed_to_real(sum, q, total_err, prec);
    // sin is 1-Lipschitz
    Ok(out.with_error(x.err_bound()))
}

pub fn atanh(x: &ApproxReal, ctx: &EvalContext) -> Result<ApproxReal> {
    let one = ExactRational::one();
    let mid_abs = x.mid_rational().abs();
    if mid_abs >= one && x.abs_upper_rational() > one && (mid_abs.clone() - x.err_bound().to_rational()) >= one {
        return Err(Error::domain("atanh requires |x| < 1"));
    }
    if x.abs_upper_rational() >= one {
        if mid_abs >= one {
            return Err(Error::domain("atanh requires |x| < 1"));
        }
        return Err(Error::precision("atanh argument not bounded away from ±1"));
    }
    let half = ExactRational::new(1, 2);
    if x.abs_upper_rational() > half {
        // atanh x = (ln(1 + x) - ln(1 - x)) / 2
        let wide = ctx.with_extra_bits(16);
        let one = ApproxReal::from_int(1, wide.working_bits());
        let a = ln(&(&one + x), &wide)?;
        let b = ln(&(&one - x), &wide)?;
        return Ok((a - b).mul_pow2(-1).round_to(ctx.working_bits()));
    }
    let prec = ctx.working_bits();
    let q = prec + KERNEL_GUARD_BITS;
    let (xq, x_err) = to_fixed(x, q);
    let (v, err) = atanh_fixed(&xq, q);
    let out = fixed_to_real(v, q, err + 2.0 * x_err, prec);
    // derivative 1/(1 - x^2) <= 4/3 on |x| <= 1/2
    Ok(out.with_error(x.err_bound().mul_pow2(1)))
}

/// `x^s` for `x > 0`. Integer exponents use repeated multiplication.
pub fn pow_rational(x: &ApproxReal, s: &ExactRational, ctx: &EvalContext) -> Result<ApproxReal> {
    if let Some(n) = s.to_i64() {
        let p = x.powi(n.unsigned_abs() as u32);
        return if n >= 0 {
            Ok(p.round_to(ctx.working_bits()))
        } else {
            ApproxReal::from_int(1, ctx.working_bits()).div(&p)
        };
    }
    let l = ln(x, ctx)?;
    let sr = ApproxReal::from_rational(s, ctx.working_bits() + 8);
    exp(&(&l * &sr), ctx)
}
