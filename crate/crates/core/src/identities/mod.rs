//! Evaluators and certificates for the zeta-series identities.
//!
//! Every series here has the shape `sum zeta(2n) R(n)` with a rational
//! `R(n)` decaying only polynomially. Accelerated summation peels
//! `1 + 2^-2n` off `zeta(2n)`, sums those rational series in closed form
//! with [`base_sum`], and sums the geometrically decaying remainder.

mod base;
mod forms;
mod oracle;
mod report;
mod series;
mod terms;
mod theorems;
mod tyagi;
mod wilton;

pub use base::{base_sum, BaseSumSpec};
pub use forms::{
    milgram_form, milgram_matches_theorem3, theorem2_form, theorem3_form, theorem3_matches_theorem2, Constant,
    LinearForm, Symbol,
};
pub use report::{CheckOutcome, IdentityReport, SeriesSummary};
pub use series::{SeriesMode, SeriesOptions, SeriesResult, ZetaSeries, SPLIT_DEPTH};
pub use terms::{term_equiv_general, term_equiv_ln2, term_equiv_zeta3};
pub use theorems::{eval_general, eval_ln2, eval_milgram, eval_zeta3, ln2_oracle, ln2_report};
pub use tyagi::eval_tyagi_holm;
pub use wilton::{eval_param_sum, eval_sum_a, eval_sum_b};
