use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::numkernel::ExactRational;

/// A nonnegative upper bound `m * 2^e` with a short mantissa.
///
/// All operations round upward, so a bound never shrinks below the quantity
/// it covers.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ErrBound {
    m: u64,
    e: i64,
}

const BOUND_MANT_BITS: u32 = 32;

impl ErrBound {
    pub const ZERO: ErrBound = ErrBound { m: 0, e: 0 };

    pub fn pow2(e: i64) -> Self {
        ErrBound { m: 1, e }
    }

    fn normalized(m: u64, e: i64) -> Self {
        if m == 0 {
            return Self::ZERO;
        }
        let bits = 64 - m.leading_zeros();
        if bits <= BOUND_MANT_BITS {
            return ErrBound { m, e };
        }
        let shift = bits - BOUND_MANT_BITS;
        let mut q = m >> shift;
        if q << shift != m {
            q += 1;
        }
        Self::normalized(q, e + shift as i64)
    }

    /// Upper bound for `|n| * 2^exp`.
    pub fn from_bigint(n: &BigInt, exp: i64) -> Self {
        let bits = n.bits();
        if bits == 0 {
            return Self::ZERO;
        }
        if bits <= 64 {
            let m = n.magnitude().to_u64().unwrap_or(u64::MAX);
            return Self::normalized(m, exp);
        }
        let shift = bits - BOUND_MANT_BITS as u64;
        let top = (n.magnitude() >> shift).to_u64().unwrap_or(u64::MAX) + 1;
        Self::normalized(top, exp + shift as i64)
    }

    /// Upper bound for `count * 2^exp` where `count` is a nonnegative float
    /// (typically a count of units in the last place).
    pub fn from_f64(count: f64, exp: i64) -> Self {
        assert!(count >= 0.0 && count.is_finite(), "error count must be finite");
        if count == 0.0 {
            return Self::ZERO;
        }
        let (m, e) = if count < 1.0e15 {
            ((count * (1.0 + 1e-12)).ceil() as u64, 0)
        } else {
            let shift = count.log2().ceil() as i64 - 50;
            let scaled = count / 2f64.powi(shift as i32);
            ((scaled * (1.0 + 1e-12)).ceil() as u64, shift)
        };
        Self::normalized(m, exp + e)
    }

    pub fn is_zero(&self) -> bool {
        self.m == 0
    }

    pub fn mul_pow2(self, k: i64) -> Self {
        if self.is_zero() {
            self
        } else {
            ErrBound { m: self.m, e: self.e + k }
        }
    }

    /// Smallest `k` with `self <= 2^k`; `None` for a zero bound.
    pub fn log2_ceil(&self) -> Option<i64> {
        if self.m == 0 {
            return None;
        }
        let bits = 64 - self.m.leading_zeros() as i64;
        let exact_pow = self.m.is_power_of_two();
        Some(self.e + if exact_pow { bits - 1 } else { bits })
    }

    /// `log10` of the bound; `None` for a zero bound.
    pub fn log10(&self) -> Option<f64> {
        if self.m == 0 {
            None
        } else {
            Some((self.m as f64).log10() + self.e as f64 * std::f64::consts::LOG10_2)
        }
    }

    pub fn to_f64(&self) -> f64 {
        self.m as f64 * 2f64.powi(self.e.clamp(-1070, 1023) as i32)
    }

    pub fn to_rational(&self) -> ExactRational {
        let two = ExactRational::from(2);
        ExactRational::from(self.m as i64) * two.pow(self.e as i32)
    }
}

impl Add for ErrBound {
    type Output = ErrBound;
    fn add(self, rhs: ErrBound) -> ErrBound {
        if self.is_zero() {
            return rhs;
        }
        if rhs.is_zero() {
            return self;
        }
        let (hi, lo) = if self.e >= rhs.e { (self, rhs) } else { (rhs, self) };
        let d = (hi.e - lo.e) as u64;
        // `lo` expressed in units of 2^(lo.e + d), rounded up
        let lo_m = if d >= 63 {
            1
        } else {
            let q = lo.m >> d;
            if q << d != lo.m {
                q + 1
            } else {
                q
            }
        };
        // rebase `hi` down when it helps keep resolution
        let spare = hi.m.leading_zeros().saturating_sub(1) as u64;
        let down = spare.min(d);
        if down > 0 {
            let hi_m = hi.m << down;
            let e = hi.e - down as i64;
            let dd = d - down;
            let lo_m = if dd >= 63 {
                1
            } else {
                let q = lo.m >> dd;
                if q << dd != lo.m {
                    q + 1
                } else {
                    q
                }
            };
            return Self::normalized(hi_m.saturating_add(lo_m), e);
        }
        Self::normalized(hi.m.saturating_add(lo_m), hi.e)
    }
}

impl Mul for ErrBound {
    type Output = ErrBound;
    fn mul(self, rhs: ErrBound) -> ErrBound {
        if self.is_zero() || rhs.is_zero() {
            return Self::ZERO;
        }
        Self::normalized(self.m * rhs.m, self.e + rhs.e)
    }
}

impl PartialOrd for ErrBound {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        match (self.m == 0, other.m == 0) {
            (true, true) => return Some(Ordering::Equal),
            (true, false) => return Some(Ordering::Less),
            (false, true) => return Some(Ordering::Greater),
            _ => {}
        }
        let top_a = self.e + 64 - self.m.leading_zeros() as i64;
        let top_b = other.e + 64 - other.m.leading_zeros() as i64;
        if top_a != top_b {
            return Some(top_a.cmp(&top_b));
        }
        // same leading bit position: align both mantissas at the smaller exponent
        let base = self.e.min(other.e);
        let a = (self.m as u128) << (self.e - base) as u32;
        let b = (other.m as u128) << (other.e - base) as u32;
        Some(a.cmp(&b))
    }
}

/// A binary floating value `mant * 2^exp` together with an absolute error
/// bound: the quantity it stands for lies within `err` of the stored value.
///
/// Every arithmetic operation rounds to nearest at the result precision and
/// folds the half-ulp into `err`.
#[derive(Clone, Debug)]
pub struct ApproxReal {
    mant: BigInt,
    exp: i64,
    prec: u32,
    err: ErrBound,
}

fn round_shift(mant: &BigInt, shift: u64) -> (BigInt, bool) {
    let mag = mant.magnitude();
    let half = num_bigint::BigUint::one() << (shift - 1);
    let rounded = BigInt::from((mag + &half) >> shift);
    let exact = mag.trailing_zeros().is_none_or(|tz| tz >= shift);
    (if mant.sign() == Sign::Minus { -rounded } else { rounded }, exact)
}

impl ApproxReal {
    pub(crate) fn from_parts(mant: BigInt, exp: i64, prec: u32, err: ErrBound) -> Self {
        let bits = mant.bits();
        if bits <= prec as u64 {
            return ApproxReal { mant, exp, prec, err };
        }
        let shift = bits - prec as u64;
        let (m, exact) = round_shift(&mant, shift);
        let new_exp = exp + shift as i64;
        let err = if exact { err } else { err + ErrBound::pow2(new_exp - 1) };
        ApproxReal { mant: m, exp: new_exp, prec, err }.tidy()
    }

    fn tidy(self) -> Self {
        // rounding may carry into one extra bit
        if self.mant.bits() > self.prec as u64 {
            let ApproxReal { mant, exp, prec, err } = self;
            ApproxReal::from_parts(mant, exp, prec, err)
        } else {
            self
        }
    }

    pub fn zero(prec: u32) -> Self {
        ApproxReal { mant: BigInt::zero(), exp: 0, prec, err: ErrBound::ZERO }
    }

    pub fn from_int(n: impl Into<BigInt>, prec: u32) -> Self {
        Self::from_parts(n.into(), 0, prec, ErrBound::ZERO)
    }

    /// Nearest binary value to `q` at `prec` bits.
    pub fn from_rational(q: &ExactRational, prec: u32) -> Self {
        let num = q.numer();
        let den = q.denom();
        if num.is_zero() {
            return Self::zero(prec);
        }
        if den.is_one() {
            return Self::from_int(num.clone(), prec);
        }
        let k = prec as i64 + den.bits() as i64 - num.bits() as i64 + 2;
        let k = k.max(0) as u64;
        let scaled = num << k;
        let (q0, r) = scaled.div_rem(den);
        // round half away from zero
        let twice = r.abs() * 2u32;
        let q1 = if &twice >= den {
            if num.is_negative() {
                q0 - 1
            } else {
                q0 + 1
            }
        } else {
            q0
        };
        let err = if r.is_zero() { ErrBound::ZERO } else { ErrBound::pow2(-(k as i64) - 1) };
        Self::from_parts(q1, -(k as i64), prec, err)
    }

    /// The value `m * 2^e` exactly.
    pub fn from_dyadic(m: impl Into<BigInt>, e: i64, prec: u32) -> Self {
        Self::from_parts(m.into(), e, prec, ErrBound::ZERO)
    }

    /// Value with an explicit error bound attached.
    pub fn with_error(mut self, extra: ErrBound) -> Self {
        self.err = self.err + extra;
        self
    }

    pub fn precision_bits(&self) -> u32 {
        self.prec
    }

    pub fn err_bound(&self) -> ErrBound {
        self.err
    }

    /// Exponent `k` such that the true value lies within `2^k` of the stored
    /// value.
    pub fn err_exp(&self) -> i64 {
        self.err
            .log2_ceil()
            .unwrap_or(self.exp.min(0) - self.prec as i64)
    }

    pub fn mantissa(&self) -> &BigInt {
        &self.mant
    }

    pub fn exponent(&self) -> i64 {
        self.exp
    }

    pub fn is_exact(&self) -> bool {
        self.err.is_zero()
    }

    pub fn to_f64(&self) -> f64 {
        if self.mant.is_zero() {
            return 0.0;
        }
        let bits = self.mant.bits() as i64;
        let shift = (bits - 60).max(0);
        let top = (&self.mant >> shift as u64).to_f64().unwrap_or(f64::NAN);
        top * 2f64.powi((self.exp + shift).clamp(-1100, 1100) as i32)
    }

    /// Exact dyadic value of the stored midpoint.
    pub fn mid_rational(&self) -> ExactRational {
        ExactRational::from(self.mant.clone()) * ExactRational::from(2).pow(self.exp as i32)
    }

    /// Upper bound on `|stored value|`.
    pub fn mag_bound(&self) -> ErrBound {
        ErrBound::from_bigint(&self.mant, self.exp)
    }

    /// Upper bound on `|true value|`.
    pub fn abs_upper(&self) -> ErrBound {
        self.mag_bound() + self.err
    }

    /// Exact upper bound on the magnitude of the true value.
    pub fn abs_upper_rational(&self) -> ExactRational {
        self.mid_rational().abs() + self.err.to_rational()
    }

    /// `floor(log2 |stored value|)`, or `None` if the stored value is zero.
    pub fn floor_log2(&self) -> Option<i64> {
        if self.mant.is_zero() {
            None
        } else {
            Some(self.exp + self.mant.bits() as i64 - 1)
        }
    }

    pub fn is_certainly_positive(&self) -> bool {
        self.mant.is_positive() && self.mid_rational() > self.err.to_rational()
    }

    pub fn is_certainly_negative(&self) -> bool {
        self.mant.is_negative() && -self.mid_rational() > self.err.to_rational()
    }

    /// True when the two balls overlap: `|a - b| <= err(a) + err(b)`.
    pub fn agrees_with(&self, other: &ApproxReal) -> bool {
        let diff = (self.mid_rational() - other.mid_rational()).abs();
        diff <= self.err.to_rational() + other.err.to_rational()
    }

    /// True when the ball around `self` contains `q`.
    pub fn contains(&self, q: &ExactRational) -> bool {
        (self.mid_rational() - q).abs() <= self.err.to_rational()
    }

    pub fn abs(&self) -> ApproxReal {
        ApproxReal { mant: self.mant.abs(), ..self.clone() }
    }

    /// Exact multiplication by `2^k`.
    pub fn mul_pow2(&self, k: i64) -> ApproxReal {
        ApproxReal {
            mant: self.mant.clone(),
            exp: self.exp + k,
            prec: self.prec,
            err: self.err.mul_pow2(k),
        }
    }

    /// Re-rounds to a (usually smaller) precision.
    pub fn round_to(&self, prec: u32) -> ApproxReal {
        ApproxReal::from_parts(self.mant.clone(), self.exp, prec, self.err)
    }

    pub fn square(&self) -> ApproxReal {
        self * self
    }

    pub fn powi(&self, n: u32) -> ApproxReal {
        let mut result = ApproxReal::from_int(1, self.prec);
        let mut base = self.clone();
        let mut k = n;
        while k > 0 {
            if k & 1 == 1 {
                result = &result * &base;
            }
            k >>= 1;
            if k > 0 {
                base = base.square();
            }
        }
        result
    }

    pub fn mul_rational(&self, q: &ExactRational) -> ApproxReal {
        if q.is_integer() {
            let n = ApproxReal::from_int(q.numer().clone(), self.prec.max(q.numer().bits() as u32));
            return self * &n;
        }
        (self * &ApproxReal::from_rational(q, self.prec + 8)).round_to(self.prec)
    }

    pub fn div_rational(&self, q: &ExactRational) -> Result<ApproxReal> {
        let inv = q
            .recip()
            .ok_or_else(|| Error::domain("division by exact zero"))?;
        Ok(self.mul_rational(&inv))
    }

    /// Ball division. Fails when the divisor's ball touches zero.
    pub fn div(&self, rhs: &ApproxReal) -> Result<ApproxReal> {
        let prec = self.prec.max(rhs.prec);
        let lb = rhs
            .floor_log2()
            .ok_or_else(|| Error::precision("division by a value indistinguishable from zero"))?;
        if !rhs.err.is_zero() && rhs.err > ErrBound::pow2(lb - 1) {
            return Err(Error::precision(
                "divisor is not bounded away from zero at this precision",
            ));
        }
        if self.mant.is_zero() {
            let err = if self.err.is_zero() {
                ErrBound::ZERO
            } else {
                self.err.mul_pow2(-(lb - 1))
            };
            return Ok(ApproxReal { mant: BigInt::zero(), exp: 0, prec, err });
        }
        let k = (prec as i64 + 2 + rhs.mant.bits() as i64 - self.mant.bits() as i64).max(0) as u64;
        let q = (&self.mant << k) / &rhs.mant;
        let exp = self.exp - rhs.exp - k as i64;
        // |A/B - a/b| <= err_a/|B| + |a| err_b / (|b||B|), with |B| >= 2^(lb-1)
        let mut err = ErrBound::pow2(exp);
        if !self.err.is_zero() {
            err = err + self.err.mul_pow2(-(lb - 1));
        }
        if !rhs.err.is_zero() {
            err = err + (self.mag_bound() * rhs.err).mul_pow2(-(2 * lb - 1));
        }
        Ok(ApproxReal::from_parts(q, exp, prec, err))
    }

    /// Decimal string with exactly `frac_digits` digits after the point,
    /// rounded to nearest from the stored value.
    pub fn to_decimal(&self, frac_digits: u32) -> String {
        let scaled = self.mid_rational() * ExactRational::from(10).pow(frac_digits as i32);
        let num = scaled.numer();
        let den = scaled.denom();
        let (q, r) = num.abs().div_rem(den);
        let q = if r * 2u32 >= *den { q + 1u32 } else { q };
        let digits = q.to_string();
        let neg = num.is_negative() && !q.is_zero();
        let sign = if neg { "-" } else { "" };
        if frac_digits == 0 {
            return format!("{sign}{digits}");
        }
        let fd = frac_digits as usize;
        let padded = if digits.len() <= fd {
            format!("{}{}", "0".repeat(fd + 1 - digits.len()), digits)
        } else {
            digits
        };
        let (int_part, frac_part) = padded.split_at(padded.len() - fd);
        format!("{sign}{int_part}.{frac_part}")
    }

    /// Number of fractional decimal digits certified by the error bound.
    pub fn certified_digits(&self) -> u32 {
        match self.err.log2_ceil() {
            None => self.prec.saturating_mul(30103) / 100_000,
            Some(e) if e >= 0 => 0,
            Some(e) => {
                let d = (-(e as f64)) * std::f64::consts::LOG10_2;
                (d.floor() as i64 - 1).max(0) as u32
            }
        }
    }

    /// Drops bits below `2^floor_exp`, folding the discarded part into the
    /// error. Keeps mantissas bounded when adding values of very different
    /// magnitude.
    fn truncated_below(&self, floor_exp: i64) -> ApproxReal {
        if self.exp >= floor_exp {
            return self.clone();
        }
        let shift = (floor_exp - self.exp) as u64;
        if shift > self.mant.bits() + 1 {
            let err = self.err + self.mag_bound();
            return ApproxReal { mant: BigInt::zero(), exp: floor_exp, prec: self.prec, err };
        }
        let (m, exact) = round_shift(&self.mant, shift);
        let err = if exact { self.err } else { self.err + ErrBound::pow2(floor_exp - 1) };
        ApproxReal { mant: m, exp: floor_exp, prec: self.prec, err }
    }

    fn add_impl(&self, rhs: &ApproxReal) -> ApproxReal {
        let prec = self.prec.max(rhs.prec);
        if rhs.mant.is_zero() {
            return ApproxReal::from_parts(self.mant.clone(), self.exp, prec, self.err + rhs.err);
        }
        if self.mant.is_zero() {
            return ApproxReal::from_parts(rhs.mant.clone(), rhs.exp, prec, self.err + rhs.err);
        }
        let top = (self.exp + self.mant.bits() as i64).max(rhs.exp + rhs.mant.bits() as i64);
        let floor_exp = top - prec as i64 - 64;
        let a = self.truncated_below(floor_exp);
        let b = rhs.truncated_below(floor_exp);
        let exp = a.exp.min(b.exp);
        let ma = &a.mant << (a.exp - exp) as u64;
        let mb = &b.mant << (b.exp - exp) as u64;
        ApproxReal::from_parts(ma + mb, exp, prec, a.err + b.err)
    }

    fn mul_impl(&self, rhs: &ApproxReal) -> ApproxReal {
        let prec = self.prec.max(rhs.prec);
        let mut err = ErrBound::ZERO;
        if !rhs.err.is_zero() {
            err = err + self.mag_bound() * rhs.err;
        }
        if !self.err.is_zero() {
            err = err + rhs.mag_bound() * self.err;
        }
        err = err + self.err * rhs.err;
        ApproxReal::from_parts(&self.mant * &rhs.mant, self.exp + rhs.exp, prec, err)
    }
}

impl fmt::Display for ApproxReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let digits = self.certified_digits().min(60);
        write!(f, "{} ± 2^{}", self.to_decimal(digits), self.err_exp())
    }
}

impl Neg for &ApproxReal {
    type Output = ApproxReal;
    fn neg(self) -> ApproxReal {
        ApproxReal { mant: -&self.mant, ..self.clone() }
    }
}

impl Neg for ApproxReal {
    type Output = ApproxReal;
    fn neg(self) -> ApproxReal {
        ApproxReal { mant: -self.mant, ..self }
    }
}

macro_rules! forward_real_binop {
    ($trait:ident, $method:ident, $body:expr) => {
        impl $trait<&ApproxReal> for &ApproxReal {
            type Output = ApproxReal;
            fn $method(self, rhs: &ApproxReal) -> ApproxReal {
                $body(self, rhs)
            }
        }
        impl $trait<ApproxReal> for ApproxReal {
            type Output = ApproxReal;
            fn $method(self, rhs: ApproxReal) -> ApproxReal {
                $body(&self, &rhs)
            }
        }
        impl $trait<&ApproxReal> for ApproxReal {
            type Output = ApproxReal;
            fn $method(self, rhs: &ApproxReal) -> ApproxReal {
                $body(&self, rhs)
            }
        }
        impl $trait<ApproxReal> for &ApproxReal {
            type Output = ApproxReal;
            fn $method(self, rhs: ApproxReal) -> ApproxReal {
                $body(self, &rhs)
            }
        }
    };
}

forward_real_binop!(Add, add, |a: &ApproxReal, b: &ApproxReal| a.add_impl(b));
forward_real_binop!(Sub, sub, |a: &ApproxReal, b: &ApproxReal| a.add_impl(&-b));
forward_real_binop!(Mul, mul, |a: &ApproxReal, b: &ApproxReal| a.mul_impl(b));
