use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numkernel::{const_pi, ApproxReal, ErrBound, EvalContext, ExactRational};
use crate::zetacore::zeta_even_coeff;

use super::base::{base_sum, partial_fractions, BaseSumSpec};

/// How a zeta-weighted series is summed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SeriesMode {
    /// Plain partial sum with an integral tail bound.
    Direct,
    /// `zeta(2n)` split into its first terms plus a geometric remainder.
    Accelerated,
}

impl fmt::Display for SeriesMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SeriesMode::Direct => "direct",
            SeriesMode::Accelerated => "accelerated",
        })
    }
}

impl FromStr for SeriesMode {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "direct" => Ok(SeriesMode::Direct),
            "accelerated" => Ok(SeriesMode::Accelerated),
            other => Err(Error::usage(format!("unknown mode '{other}'"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SeriesOptions {
    pub mode: SeriesMode,
    /// Number of terms in direct mode; cap on remainder terms when accelerated.
    pub max_terms: u64,
}

impl Default for SeriesOptions {
    fn default() -> Self {
        SeriesOptions { mode: SeriesMode::Accelerated, max_terms: 1_000_000 }
    }
}

impl SeriesOptions {
    pub fn direct(max_terms: u64) -> Self {
        SeriesOptions { mode: SeriesMode::Direct, max_terms }
    }

    pub fn accelerated() -> Self {
        SeriesOptions::default()
    }
}

/// A summed series: `value` omits the tail, `tail_bound` bounds it.
#[derive(Clone, Debug)]
pub struct SeriesResult {
    pub value: ApproxReal,
    pub terms_used: u64,
    pub tail_bound: ApproxReal,
    pub mode: SeriesMode,
}

impl SeriesResult {
    /// `value` with the tail bound folded into its error.
    pub fn enclosure(&self) -> ApproxReal {
        self.value.clone().with_error(self.tail_bound.abs_upper())
    }
}

/// Number of leading terms `1 + 2^-2n + ...` peeled off `zeta(2n)` in
/// accelerated mode.
pub const SPLIT_DEPTH: u32 = 2;

/// `scale * sum_{n>=1} zeta(2n) * (sum_i a_i x_i^(2n)) / prod_j (2n + r_j)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZetaSeries {
    weights: Vec<(ExactRational, ExactRational)>,
    offsets: Vec<u32>,
    scale: ExactRational,
}

impl ZetaSeries {
    /// `weights` are `(a_i, x_i)` with `0 < x_i <= 1`; `offsets` must be
    /// distinct and there must be at least two of them.
    pub fn new(weights: Vec<(ExactRational, ExactRational)>, offsets: Vec<u32>, scale: ExactRational) -> Result<Self> {
        if offsets.len() < 2 {
            return Err(Error::usage("a zeta series needs at least two denominator factors"));
        }
        let mut sorted = offsets.clone();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != offsets.len() {
            return Err(Error::usage("denominator offsets must be distinct"));
        }
        for (_, x) in &weights {
            if !x.is_positive() || *x > ExactRational::one() {
                return Err(Error::domain(format!("series point x = {x} outside (0, 1]")));
            }
        }
        Ok(ZetaSeries { weights, offsets, scale })
    }

    /// `ln 2 = sum (1 - 4^-n) zeta(2n) / (n (2n+1))`.
    pub fn ln2() -> Self {
        Self::halved_difference(vec![0, 1], ExactRational::from(2))
    }

    /// `T = sum (1 - 4^-n) zeta(2n) / (2n (2n+1) (2n+2) (2n+3))`.
    pub fn zeta3() -> Self {
        Self::halved_difference(vec![0, 1, 2, 3], ExactRational::one())
    }

    /// `sum zeta(2k) / (2k (2k+1) (2k+2) (2k+3))`.
    pub fn sum_a() -> Self {
        Self::single_point(ExactRational::one(), ExactRational::one())
    }

    /// `sum zeta(2k) / (2k (2k+1) (2k+2) (2k+3) 4^k)`.
    pub fn sum_b() -> Self {
        Self::single_point(ExactRational::new(1, 2), ExactRational::one())
    }

    /// `sum zeta(2k) t^2k / (k (k+1) (2k+1) (2k+3))`.
    pub fn param(t: &ExactRational) -> Result<Self> {
        ZetaSeries::new(vec![(ExactRational::one(), t.clone())], vec![0, 1, 2, 3], ExactRational::from(4))
    }

    /// `2 sum (1 - 4^-n) zeta(2n) (2n-1)! / (2n+2m+1)!`.
    pub fn general(m: u32) -> Result<Self> {
        if m == 0 {
            return Err(Error::usage("m must be at least 1"));
        }
        Ok(Self::halved_difference((0..=2 * m + 1).collect(), ExactRational::from(2)))
    }

    fn halved_difference(offsets: Vec<u32>, scale: ExactRational) -> Self {
        let weights = vec![
            (ExactRational::one(), ExactRational::one()),
            (ExactRational::from(-1), ExactRational::new(1, 2)),
        ];
        ZetaSeries::new(weights, offsets, scale).expect("valid built-in series")
    }

    fn single_point(x: ExactRational, scale: ExactRational) -> Self {
        ZetaSeries::new(vec![(ExactRational::one(), x)], vec![0, 1, 2, 3], scale).expect("valid built-in series")
    }

    pub fn offsets(&self) -> &[u32] {
        &self.offsets
    }

    pub fn weights(&self) -> &[(ExactRational, ExactRational)] {
        &self.weights
    }

    pub fn scale(&self) -> &ExactRational {
        &self.scale
    }

    fn denominator(&self, n: u64) -> BigInt {
        self.offsets.iter().map(|&r| BigInt::from(2 * n + r as u64)).product()
    }

    /// Exact coefficient of `zeta(2n)` in the series, scale included.
    pub fn term(&self, n: u64) -> ExactRational {
        let w: ExactRational = self
            .weights
            .iter()
            .map(|(a, x)| a * x.pow(2 * n as i32))
            .sum();
        &self.scale * w / ExactRational::from(self.denominator(n))
    }

    pub fn sum(&self, opts: &SeriesOptions, ctx: &EvalContext) -> Result<SeriesResult> {
        match opts.mode {
            SeriesMode::Direct => Ok(self.sum_direct(opts.max_terms.max(1), ctx)),
            SeriesMode::Accelerated => self.sum_accelerated(opts.max_terms.max(1), ctx),
        }
    }

    fn sum_direct(&self, terms: u64, ctx: &EvalContext) -> SeriesResult {
        let wctx = ctx.with_extra_bits(20 + 64 - terms.leading_zeros());
        let prec = wctx.working_bits();
        let pi_sq = const_pi(&wctx).square();
        // beyond this index zeta(2n) = 1 + O(4^-n) is below the working precision
        let euler_limit = (prec as u64 + 12) / 2;
        let x_sq: Vec<ExactRational> = self.weights.iter().map(|(_, x)| x * x).collect();
        let mut x_pow: Vec<ApproxReal> = self.weights.iter().map(|_| ApproxReal::from_int(1, prec)).collect();
        let mut pi_pow = ApproxReal::from_int(1, prec);
        let mut sum = ApproxReal::zero(prec);
        for n in 1..=terms {
            let zeta = if n <= euler_limit {
                pi_pow = &pi_pow * &pi_sq;
                let c = zeta_even_coeff(n as u32).expect("n >= 1").coeff;
                pi_pow.mul_rational(&c)
            } else {
                // 1 < zeta(2n) < 1 + 3 * 4^-n
                ApproxReal::from_int(1, prec).with_error(ErrBound::pow2(2 - 2 * n as i64))
            };
            let mut w = ApproxReal::zero(prec);
            for (i, (a, x)) in self.weights.iter().enumerate() {
                if !x.is_one() {
                    x_pow[i] = x_pow[i].mul_rational(&x_sq[i]);
                }
                w = w + x_pow[i].mul_rational(a);
            }
            let den = ExactRational::from(self.denominator(n));
            let term = (zeta * w).div_rational(&den).expect("nonzero denominator");
            sum = sum + term;
        }
        let value = sum.mul_rational(&self.scale).round_to(ctx.working_bits());
        let tail = self.direct_tail(terms, &x_pow, &x_sq);
        SeriesResult { value, terms_used: terms, tail_bound: tail, mode: SeriesMode::Direct }
    }

    /// `zeta(2) * W * |scale| / (2^d (d-1) M^(d-1))`, from `zeta(2n) <= zeta(2)`,
    /// `prod (2n + r_j) >= (2n)^d` and the integral test.
    fn direct_tail(&self, m: u64, x_pow: &[ApproxReal], x_sq: &[ExactRational]) -> ApproxReal {
        let d = self.offsets.len() as i32;
        let mut pos = ExactRational::zero();
        let mut neg = ExactRational::zero();
        for (i, (a, x)) in self.weights.iter().enumerate() {
            let next = if x.is_one() {
                ExactRational::one()
            } else {
                x_pow[i].mul_rational(&x_sq[i]).abs_upper_rational()
            };
            let contrib = a.abs() * next;
            if a.is_positive() {
                pos = pos + contrib;
            } else {
                neg = neg + contrib;
            }
        }
        let w = if pos > neg { pos } else { neg };
        let ctx = crate::numkernel::make_context(20, 0).expect("valid context");
        let zeta2 = const_pi(&ctx).square().div_rational(&ExactRational::from(6)).expect("nonzero");
        let denom = ExactRational::from(2).pow(d) * ExactRational::from(d as i64 - 1)
            * ExactRational::from(m as i64).pow(d - 1);
        let bound = zeta2.mul_rational(&(w * self.scale.abs() / denom));
        upper_ball(&bound)
    }

    fn sum_accelerated(&self, max_terms: u64, ctx: &EvalContext) -> Result<SeriesResult> {
        let bits = ctx.working_bits();
        let wctx = ctx.with_extra_bits(24);
        let prec = wctx.working_bits();
        let coeffs = partial_fractions(&self.offsets);

        let mut base = ApproxReal::zero(prec);
        for (a, x) in &self.weights {
            for j in 1..=SPLIT_DEPTH as i64 {
                let spec = BaseSumSpec::new(coeffs.clone(), x / ExactRational::from(j));
                base = base + base_sum(&spec, &wctx)?.mul_rational(a);
            }
        }

        let target = ExactRational::from(2).pow(-(bits as i32) - 2) / self.scale.abs();
        let split = ExactRational::from(SPLIT_DEPTH as i64 + 1);
        let w_total: ExactRational = self.weights.iter().map(|(a, _)| a.abs()).sum();
        let pi_sq = const_pi(&wctx).square();
        let mut pi_pow = ApproxReal::from_int(1, prec);
        let mut rem = ApproxReal::zero(prec);
        let mut n = 0u64;
        let tail = loop {
            n += 1;
            if n > max_terms {
                return Err(Error::precision(format!(
                    "accelerated summation did not reach 2^-{bits} within {max_terms} terms"
                )));
            }
            pi_pow = &pi_pow * &pi_sq;
            let zeta = pi_pow.mul_rational(&zeta_even_coeff(n as u32)?.coeff);
            let peeled: ExactRational = (1..=SPLIT_DEPTH as i64)
                .map(|j| ExactRational::from(j).pow(-2 * n as i32))
                .sum();
            let delta = zeta - ApproxReal::from_rational(&peeled, prec + 8);
            let weight = &self.term(n) / &self.scale;
            rem = rem + delta.mul_rational(&weight);

            // sum_{j>K} j^-2n <= (K+1)^-2n (1 + (K+1)/(2n-1)), then geometric in n
            let np = n as i64 + 1;
            let tail = &w_total
                * (ExactRational::one() + &split / ExactRational::from(2 * n as i64 + 1))
                * split.pow(-2 * np as i32)
                / (ExactRational::one() - split.pow(-2))
                / ExactRational::from(self.denominator(np as u64));
            if tail <= target {
                break tail * self.scale.abs();
            }
        };
        let value = (base + rem).mul_rational(&self.scale).round_to(bits);
        let tail_bound = upper_ball(&ApproxReal::from_rational(&tail, 64));
        Ok(SeriesResult { value, terms_used: n, tail_bound, mode: SeriesMode::Accelerated })
    }
}

/// Exact dyadic ball at the upper bound of `|x|`.
pub(crate) fn upper_ball(x: &ApproxReal) -> ApproxReal {
    ApproxReal::from_rational(&x.abs_upper().to_rational(), 64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numkernel::make_context;

    #[test]
    fn first_ln2_term_is_pi_squared_over_24() {
        let s = ZetaSeries::ln2();
        assert_eq!(s.term(1), ExactRational::new(1, 4));
        let ctx = make_context(20, 5).unwrap();
        let r = s.sum(&SeriesOptions::direct(1), &ctx).unwrap();
        let expect = const_pi(&ctx).square().div_rational(&ExactRational::from(24)).unwrap();
        assert!(r.value.agrees_with(&expect));
        assert_eq!(r.value.to_decimal(4), "0.4112");
    }

    #[test]
    fn rejects_bad_shapes() {
        let one = ExactRational::one();
        assert!(ZetaSeries::new(vec![(one.clone(), one.clone())], vec![0], one.clone()).is_err());
        assert!(ZetaSeries::new(vec![(one.clone(), one.clone())], vec![1, 1], one.clone()).is_err());
        assert!(ZetaSeries::new(vec![(one.clone(), ExactRational::from(2))], vec![0, 1], one).is_err());
        assert!(ZetaSeries::general(0).is_err());
    }

    #[test]
    fn mode_parsing() {
        assert_eq!("direct".parse::<SeriesMode>().unwrap(), SeriesMode::Direct);
        assert_eq!(SeriesMode::Accelerated.to_string(), "accelerated");
        assert!("fast".parse::<SeriesMode>().is_err());
    }
}
