//! Precision-tracked real arithmetic, constants and elementary functions.

mod constants;
mod context;
mod elementary;
mod rational;
mod real;

pub use constants::{const_ln2, const_pi};
pub use context::{make_context, EvalContext, DEFAULT_GUARD_DIGITS};
pub use elementary::{atanh, eval_elementary, exp, ln, pow_rational, sin, ElementaryKind};
pub use rational::ExactRational;
pub use real::{ApproxReal, ErrBound};
