use crate::error::{Error, Result};
use crate::numkernel::ExactRational;

/// Guard digits used when the caller does not ask for a specific amount.
pub const DEFAULT_GUARD_DIGITS: u32 = 10;

const MIN_WORKING_BITS: u32 = 64;

/// Precision policy for one evaluation: the decimal accuracy the caller wants,
/// extra guard digits, and the binary working precision derived from both.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct EvalContext {
    target_digits: u32,
    guard_digits: u32,
    working_bits: u32,
}

/// Builds a context whose working precision is
/// `max(64, ceil((target + guard) * log2(10)))` bits.
pub fn make_context(target_digits: u32, guard_digits: u32) -> Result<EvalContext> {
    if target_digits < 1 {
        return Err(Error::usage("target digits must be at least 1"));
    }
    let decimal = (target_digits + guard_digits) as f64;
    let bits = (decimal * std::f64::consts::LOG2_10).ceil() as u32;
    Ok(EvalContext {
        target_digits,
        guard_digits,
        working_bits: bits.max(MIN_WORKING_BITS),
    })
}

impl EvalContext {
    /// Context with the default guard digits.
    pub fn with_digits(target_digits: u32) -> Result<Self> {
        make_context(target_digits, DEFAULT_GUARD_DIGITS)
    }

    pub fn target_digits(&self) -> u32 {
        self.target_digits
    }

    pub fn guard_digits(&self) -> u32 {
        self.guard_digits
    }

    pub fn working_bits(&self) -> u32 {
        self.working_bits
    }

    /// Same targets, more internal bits. Used by evaluators that expect
    /// cancellation.
    pub fn with_extra_bits(&self, extra: u32) -> Self {
        Self {
            working_bits: self.working_bits + extra,
            ..*self
        }
    }

    /// The default acceptance tolerance `10^-target_digits`.
    pub fn tolerance(&self) -> ExactRational {
        ExactRational::from(10).pow(-(self.target_digits as i32))
    }
}
