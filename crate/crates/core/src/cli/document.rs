use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::identities::{IdentityReport, SeriesMode};
use crate::numkernel::{ApproxReal, EvalContext, ExactRational};

pub const SCHEMA_VERSION: &str = "1";

/// Significant digits used for upper bounds in scientific notation.
const BOUND_DIGITS: u32 = 3;

/// A decimal string together with the number of fractional digits that the
/// underlying error bound certifies.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecimalValue {
    pub value: String,
    pub digits: u32,
}

impl DecimalValue {
    pub fn from_real(x: &ApproxReal, max_digits: u32) -> Self {
        let digits = x.certified_digits().min(max_digits);
        DecimalValue { value: x.to_decimal(digits), digits }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ContextEcho {
    pub target_digits: u32,
    pub guard_digits: u32,
    pub working_bits: u32,
}

impl From<&EvalContext> for ContextEcho {
    fn from(ctx: &EvalContext) -> Self {
        ContextEcho {
            target_digits: ctx.target_digits(),
            guard_digits: ctx.guard_digits(),
            working_bits: ctx.working_bits(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParamEntry {
    pub name: String,
    pub value: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeriesEntry {
    pub mode: SeriesMode,
    pub terms_used: u64,
    /// Upper bound on the omitted tail, scientific notation rounded up.
    pub tail_bound: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckEntry {
    pub name: String,
    pub pass: bool,
}

/// One serialized [`IdentityReport`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportEntry {
    pub identity: String,
    pub params: Vec<ParamEntry>,
    pub lhs: DecimalValue,
    pub rhs: DecimalValue,
    pub abs_residual: DecimalValue,
    /// Rigorous upper bound on `|lhs - rhs|`, rounded up.
    pub residual_upper: String,
    pub digits_agreed: u32,
    pub target_digits: u32,
    pub tolerance: String,
    pub pass: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub series: Option<SeriesEntry>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub checks: Vec<CheckEntry>,
}

impl ReportEntry {
    pub fn from_report(r: &IdentityReport, ctx: &EvalContext) -> Self {
        let max_digits = ctx.target_digits() + ctx.guard_digits();
        ReportEntry {
            identity: r.identity_name.clone(),
            params: r
                .params
                .iter()
                .map(|(name, value)| ParamEntry { name: name.clone(), value: value.clone() })
                .collect(),
            lhs: DecimalValue::from_real(&r.lhs, max_digits),
            rhs: DecimalValue::from_real(&r.rhs, max_digits),
            abs_residual: DecimalValue::from_real(&r.abs_residual, max_digits),
            residual_upper: sci_upper(&r.residual_upper()),
            digits_agreed: r.digits_agreed,
            target_digits: r.target_digits,
            tolerance: rational_label(&r.tolerance),
            pass: r.pass,
            series: r.series.as_ref().map(|s| SeriesEntry {
                mode: s.mode,
                terms_used: s.terms_used,
                tail_bound: sci_upper(&s.tail_bound.abs_upper_rational()),
            }),
            checks: r.checks.iter().map(|c| CheckEntry { name: c.name.clone(), pass: c.pass }).collect(),
        }
    }

    /// `name=value` pairs joined by `;`, or `-` when there are none.
    pub fn param_label(&self) -> String {
        if self.params.is_empty() {
            return "-".to_string();
        }
        self.params.iter().map(|p| format!("{}={}", p.name, p.value)).collect::<Vec<_>>().join(";")
    }
}

/// Output of `verify` and `table --format json`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub schema_version: String,
    pub context: ContextEcho,
    pub reports: Vec<ReportEntry>,
    pub elapsed_ms: u64,
}

impl ReportDocument {
    pub fn new(ctx: &EvalContext, reports: &[IdentityReport], elapsed_ms: u64) -> Self {
        ReportDocument {
            schema_version: SCHEMA_VERSION.to_string(),
            context: ContextEcho::from(ctx),
            reports: reports.iter().map(|r| ReportEntry::from_report(r, ctx)).collect(),
            elapsed_ms,
        }
    }

    pub fn all_pass(&self) -> bool {
        self.reports.iter().all(|r| r.pass)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("document serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let doc: ReportDocument = serde_json::from_str(text).map_err(|e| Error::Format(e.to_string()))?;
        if doc.schema_version != SCHEMA_VERSION {
            return Err(Error::Format(format!("unsupported schema version {}", doc.schema_version)));
        }
        Ok(doc)
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("identity,param,digits_agreed,residual,pass\n");
        for r in &self.reports {
            out.push_str(&format!(
                "{},{},{},{},{}\n",
                r.identity,
                r.param_label(),
                r.digits_agreed,
                r.residual_upper,
                r.pass
            ));
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BenchRow {
    pub mode: SeriesMode,
    pub digits: u32,
    pub terms_used: u64,
    pub digits_agreed: u32,
    pub residual_upper: String,
    pub pass: bool,
    pub elapsed_ms: u64,
}

/// Output of `bench`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BenchDocument {
    pub schema_version: String,
    pub identity: String,
    pub params: Vec<ParamEntry>,
    pub max_terms: u64,
    pub rows: Vec<BenchRow>,
}

impl BenchDocument {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("document serializes")
    }
}

/// `1e-N` for negative powers of ten, `p/q` otherwise.
pub fn rational_label(q: &ExactRational) -> String {
    if q.numer().is_one() {
        let s = q.denom().to_string();
        if s.starts_with('1') && s[1..].bytes().all(|b| b == b'0') {
            return format!("1e-{}", s.len() - 1);
        }
    }
    q.to_string()
}

/// Scientific notation with three significant digits, rounded away from
/// zero so that the printed number is never below `|q|`.
pub fn sci_upper(q: &ExactRational) -> String {
    let q = q.abs();
    if q.is_zero() {
        return "0".to_string();
    }
    let ten = BigInt::from(10);
    let lo = ten.pow(BOUND_DIGITS - 1);
    let hi = ten.pow(BOUND_DIGITS);
    let bits = q.numer().bits() as f64 - q.denom().bits() as f64;
    let mut e = (bits * std::f64::consts::LOG10_2).floor() as i32;
    loop {
        // m = ceil(q * 10^(digits - 1 - e))
        let scaled = &q * ExactRational::from(10).pow(BOUND_DIGITS as i32 - 1 - e);
        let (quot, rem) = (scaled.numer() / scaled.denom(), scaled.numer() % scaled.denom());
        let m = if rem.is_zero() { quot } else { quot + 1 };
        if m > hi {
            e += 1;
        } else if m == hi {
            return format_sci(&lo, e + 1);
        } else if m < lo {
            e -= 1;
        } else {
            return format_sci(&m, e);
        }
    }
}

fn format_sci(m: &BigInt, e: i32) -> String {
    debug_assert!(!m.is_negative());
    let s = m.to_string();
    let (head, tail) = s.split_at(1);
    let tail = tail.trim_end_matches('0');
    if tail.is_empty() {
        format!("{head}e{e}")
    } else {
        format!("{head}.{tail}e{e}")
    }
}
