//! Fixed-point kernels for the constants every identity is built on.
//!
//! A fixed-point number here is a `BigInt` `n` standing for `n / 2^q`. Each
//! kernel returns its result together with an error count in units of
//! `2^-q`.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::numkernel::{ApproxReal, ErrBound, EvalContext};

/// Internal bits carried beyond the requested precision.
pub(crate) const KERNEL_GUARD_BITS: u32 = 32;

/// `atanh(1/k)` or `atan(1/k)` for an integer `k >= 2`.
fn inverse_series_recip(k: u64, q: u32, alternating: bool) -> (BigInt, f64) {
    let k_sq = BigInt::from(k) * BigInt::from(k);
    let mut term = (BigInt::one() << q) / BigInt::from(k);
    let mut sum = BigInt::zero();
    let mut j: u64 = 0;
    while !term.is_zero() {
        let contrib = &term / BigInt::from(2 * j + 1);
        if alternating && j % 2 == 1 {
            sum -= contrib;
        } else {
            sum += contrib;
        }
        term /= &k_sq;
        j += 1;
    }
    // every step truncates at most once in `term` and once in the quotient;
    // the tail after `term` hits zero is below 2 ulps
    (sum, 3.0 * (j as f64 + 2.0))
}

pub(crate) fn atanh_recip_fixed(k: u64, q: u32) -> (BigInt, f64) {
    inverse_series_recip(k, q, false)
}

pub(crate) fn atan_recip_fixed(k: u64, q: u32) -> (BigInt, f64) {
    inverse_series_recip(k, q, true)
}

/// Machin: pi = 16 atan(1/5) - 4 atan(1/239).
pub(crate) fn pi_fixed(q: u32) -> (BigInt, f64) {
    let (a, ea) = atan_recip_fixed(5, q);
    let (b, eb) = atan_recip_fixed(239, q);
    (a * 16 - b * 4, 16.0 * ea + 4.0 * eb)
}

/// ln 2 = 18 atanh(1/26) - 2 atanh(1/4801) + 8 atanh(1/8749).
pub(crate) fn ln2_fixed(q: u32) -> (BigInt, f64) {
    let (a, ea) = atanh_recip_fixed(26, q);
    let (b, eb) = atanh_recip_fixed(4801, q);
    let (c, ec) = atanh_recip_fixed(8749, q);
    (a * 18 - b * 2 + c * 8, 18.0 * ea + 2.0 * eb + 8.0 * ec)
}

pub(crate) fn fixed_to_real(n: BigInt, q: u32, err_ulps: f64, prec: u32) -> ApproxReal {
    ApproxReal::from_parts(n, -(q as i64), prec, ErrBound::from_f64(err_ulps, -(q as i64)))
}

/// pi at the context's working precision.
pub fn const_pi(ctx: &EvalContext) -> ApproxReal {
    let prec = ctx.working_bits();
    let q = prec + KERNEL_GUARD_BITS;
    let (n, e) = pi_fixed(q);
    fixed_to_real(n, q, e, prec)
}

/// ln 2 at the context's working precision.
pub fn const_ln2(ctx: &EvalContext) -> ApproxReal {
    let prec = ctx.working_bits();
    let q = prec + KERNEL_GUARD_BITS;
    let (n, e) = ln2_fixed(q);
    fixed_to_real(n, q, e, prec)
}
