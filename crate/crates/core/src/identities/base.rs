use crate::error::{Error, Result};
use crate::numkernel::{atanh, const_ln2, ln, ApproxReal, EvalContext, ExactRational};

/// `sum_{k>=1} x^2k * sum_j c_j / (2k + r_j)` for rational `c_j` and
/// nonnegative integer offsets `r_j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BaseSumSpec {
    pub pole_offsets: Vec<(ExactRational, u32)>,
    pub x: ExactRational,
}

impl BaseSumSpec {
    pub fn new(pole_offsets: Vec<(ExactRational, u32)>, x: ExactRational) -> Self {
        BaseSumSpec { pole_offsets, x }
    }

    /// `x` must lie in `(0, 1]`; at `x = 1` the coefficients must cancel.
    pub fn validate(&self) -> Result<()> {
        if !self.x.is_positive() || self.x > ExactRational::one() {
            return Err(Error::domain(format!("base sum point x = {} outside (0, 1]", self.x)));
        }
        if self.x.is_one() {
            let total: ExactRational = self.pole_offsets.iter().map(|(c, _)| c.clone()).sum();
            if !total.is_zero() {
                return Err(Error::Divergence(format!(
                    "coefficients sum to {total} at x = 1, so the series diverges"
                )));
            }
        }
        Ok(())
    }
}

/// Partial fractions `1 / prod_j (u + r_j) = sum_j c_j / (u + r_j)`.
pub(crate) fn partial_fractions(offsets: &[u32]) -> Vec<(ExactRational, u32)> {
    offsets
        .iter()
        .map(|&r| {
            let prod: ExactRational = offsets
                .iter()
                .filter(|&&o| o != r)
                .fold(ExactRational::one(), |acc, &o| acc * ExactRational::from(o as i64 - r as i64));
            (prod.recip().expect("distinct offsets"), r)
        })
        .collect()
}

/// Closed form of a base series.
///
/// With `F_r(x) = sum_k x^2k / (2k + r)`:
///
/// ```text
/// F_2q(x)   = x^-2q     (-ln(1 - x^2)/2 - sum_{i=1}^{q} x^2i / 2i)
/// F_2q+1(x) = x^-(2q+1) (atanh(x)       - sum_{i=0}^{q} x^(2i+1) / (2i+1))
/// ```
///
/// Both logarithmic parts share the singular term `-ln(1 - x)/2`, which
/// cancels at `x = 1` when the coefficients sum to zero, leaving `-ln 2 / 2`
/// for even offsets and `+ln 2 / 2` for odd ones.
pub fn base_sum(spec: &BaseSumSpec, ctx: &EvalContext) -> Result<ApproxReal> {
    spec.validate()?;
    let x = &spec.x;
    let r_max = spec.pole_offsets.iter().map(|(_, r)| *r).max().unwrap_or(0);
    let amplification = if x.is_one() { 0.0 } else { r_max as f64 * x.recip().expect("x > 0").to_f64().log2() };
    let wctx = ctx.with_extra_bits(16 + amplification.ceil() as u32);
    let prec = wctx.working_bits();

    let x_sq = x * x;
    let mut a_even = ExactRational::zero();
    let mut a_odd = ExactRational::zero();
    let mut poly_part = ExactRational::zero();
    for (c, r) in &spec.pole_offsets {
        let coef = c * x.pow(-(*r as i32));
        let q = (*r / 2) as i64;
        let poly: ExactRational = if r % 2 == 0 {
            let mut p = ExactRational::zero();
            let mut xp = ExactRational::one();
            for i in 1..=q {
                xp = &xp * &x_sq;
                p = p + &xp / ExactRational::from(2 * i);
            }
            p
        } else {
            let mut p = ExactRational::zero();
            let mut xp = x.clone();
            for i in 0..=q {
                if i > 0 {
                    xp = &xp * &x_sq;
                }
                p = p + &xp / ExactRational::from(2 * i + 1);
            }
            p
        };
        poly_part = poly_part + &coef * poly;
        if r % 2 == 0 {
            a_even = a_even + coef;
        } else {
            a_odd = a_odd + coef;
        }
    }

    let value = if x.is_one() {
        -const_ln2(&wctx).mul_rational(&a_even) - ApproxReal::from_rational(&poly_part, prec)
    } else {
        let one_minus = ApproxReal::from_rational(&(ExactRational::one() - &x_sq), prec);
        let l_even = ln(&one_minus, &wctx)?.mul_pow2(-1);
        let l_odd = atanh(&ApproxReal::from_rational(x, prec), &wctx)?;
        l_odd.mul_rational(&a_odd) - l_even.mul_rational(&a_even) - ApproxReal::from_rational(&poly_part, prec)
    };
    Ok(value.round_to(ctx.working_bits()))
}
