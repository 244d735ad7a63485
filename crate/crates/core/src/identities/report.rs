use crate::numkernel::{ApproxReal, EvalContext, ExactRational};

use super::series::{SeriesMode, SeriesResult};

#[derive(Clone, Debug)]
pub struct SeriesSummary {
    pub mode: SeriesMode,
    pub terms_used: u64,
    pub tail_bound: ApproxReal,
}

impl From<&SeriesResult> for SeriesSummary {
    fn from(r: &SeriesResult) -> Self {
        SeriesSummary { mode: r.mode, terms_used: r.terms_used, tail_bound: r.tail_bound.clone() }
    }
}

/// An exact side condition attached to a report.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckOutcome {
    pub name: String,
    pub pass: bool,
}

/// Both sides of an identity and how well they agree.
#[derive(Clone, Debug)]
pub struct IdentityReport {
    pub identity_name: String,
    pub params: Vec<(String, String)>,
    pub lhs: ApproxReal,
    pub rhs: ApproxReal,
    pub abs_residual: ApproxReal,
    pub digits_agreed: u32,
    pub target_digits: u32,
    pub tolerance: ExactRational,
    pub pass: bool,
    pub series: Option<SeriesSummary>,
    pub checks: Vec<CheckOutcome>,
}

impl IdentityReport {
    pub(crate) fn build(
        name: &str,
        params: Vec<(String, String)>,
        lhs: ApproxReal,
        rhs: ApproxReal,
        ctx: &EvalContext,
        series: Option<SeriesSummary>,
        checks: Vec<CheckOutcome>,
    ) -> Self {
        let abs_residual = (&lhs - &rhs).abs();
        let mut report = IdentityReport {
            identity_name: name.to_string(),
            params,
            lhs,
            rhs,
            abs_residual,
            digits_agreed: 0,
            target_digits: ctx.target_digits(),
            tolerance: ctx.tolerance(),
            pass: false,
            series,
            checks,
        };
        report.digits_agreed = report.compute_digits();
        report.pass = report.compute_pass();
        report
    }

    /// Rigorous upper bound on `|lhs - rhs|`.
    pub fn residual_upper(&self) -> ExactRational {
        self.abs_residual.abs_upper_rational()
    }

    /// Replaces the tolerance and re-derives `pass`.
    pub fn with_tolerance(mut self, tolerance: ExactRational) -> Self {
        self.tolerance = tolerance;
        self.pass = self.compute_pass();
        self
    }

    fn compute_digits(&self) -> u32 {
        match self.abs_residual.abs_upper().log10() {
            None => self.target_digits,
            Some(l) => (-l).floor().max(0.0) as u32,
        }
    }

    fn compute_pass(&self) -> bool {
        self.residual_upper() <= self.tolerance && self.checks.iter().all(|c| c.pass)
    }
}
