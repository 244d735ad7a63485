use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use num_bigint::BigInt;
use num_traits::Signed;

use crate::error::{Error, Result};
use crate::numkernel::ExactRational;
use crate::ratseq::BernoulliTable;

pub const CACHE_HEADER: &str = "BERNOULLI-CACHE v1";

/// Entries re-checked against the recurrence on load.
const VERIFIED_ON_LOAD: usize = 10;

/// Writes `B_2, B_4, ..., B_max` one per line after the header.
pub fn cache_store(table: &BernoulliTable, path: &Path) -> Result<()> {
    let mut out = String::new();
    out.push_str(CACHE_HEADER);
    out.push('\n');
    for (index, b) in table.iter().skip(1) {
        writeln!(out, "{} {} {}", index, b.numer(), b.denom()).expect("write to string");
    }
    fs::write(path, out)?;
    Ok(())
}

pub fn cache_load(path: &Path) -> Result<BernoulliTable> {
    let text = fs::read_to_string(path)?;
    parse_cache(&text)
}

pub(crate) fn parse_cache(text: &str) -> Result<BernoulliTable> {
    let mut lines = text.lines();
    match lines.next() {
        Some(h) if h == CACHE_HEADER => {}
        Some(h) => return Err(Error::Format(format!("unsupported header `{h}`"))),
        None => return Err(Error::Format("empty file".into())),
    }
    let mut entries = vec![ExactRational::one()];
    for (lineno, line) in lines.enumerate() {
        let fields: Vec<&str> = line.split_whitespace().collect();
        let [idx, num, den] = fields[..] else {
            return Err(Error::Format(format!("line {}: expected 3 fields", lineno + 2)));
        };
        let idx: usize = idx
            .parse()
            .map_err(|_| Error::Format(format!("line {}: bad index", lineno + 2)))?;
        let expected = 2 * entries.len();
        if idx != expected {
            return Err(Error::Format(format!(
                "line {}: index {idx} out of order, expected {expected}",
                lineno + 2
            )));
        }
        let num: BigInt = num
            .parse()
            .map_err(|_| Error::Format(format!("line {}: bad numerator", lineno + 2)))?;
        let den: BigInt = den
            .parse()
            .map_err(|_| Error::Format(format!("line {}: bad denominator", lineno + 2)))?;
        if !den.is_positive() {
            return Err(Error::Format(format!("line {}: denominator must be positive", lineno + 2)));
        }
        let value = ExactRational::new(num.clone(), den.clone());
        if value.numer() != &num || value.denom() != &den {
            return Err(Error::Format(format!("line {}: entry not in lowest terms", lineno + 2)));
        }
        entries.push(value);
    }
    let table = BernoulliTable::from_entries(entries);
    table.verify_prefix(VERIFIED_ON_LOAD)?;
    table.verify_signs()?;
    Ok(table)
}
