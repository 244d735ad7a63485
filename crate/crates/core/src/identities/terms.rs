//! Exact term-by-term equalities between the Euler-polynomial series and
//! the zeta series they are rewritten into (`n = m + 1`).

use crate::error::Result;
use crate::numkernel::ExactRational;
use crate::ratseq::{euler_endpoint, factorial};
use crate::zetacore::zeta_even_coeff;

use super::series::ZetaSeries;

fn signed_endpoint(m: u32) -> ExactRational {
    let e = euler_endpoint(m as usize);
    if m.is_multiple_of(2) {
        e
    } else {
        -e
    }
}

fn zeta_side(series: &ZetaSeries, n: u32) -> ExactRational {
    let c = zeta_even_coeff(n).expect("n >= 1").coeff;
    series.term(n as u64) * c
}

/// Coefficients of `pi^(2m+2)` in the `ln 2` series: the Euler-polynomial
/// form `(1/2)(-1)^m E_{2m+1}(1)/(2m+3)!` and the zeta form
/// `(1 - 4^-(m+1)) c_{m+1} / ((m+1)(2m+3))`.
pub fn term_equiv_ln2(m: u32) -> (ExactRational, ExactRational) {
    let euler = signed_endpoint(m) / ExactRational::from(factorial(2 * m as u64 + 3)) * ExactRational::new(1, 2);
    (euler, zeta_side(&ZetaSeries::ln2(), m + 1))
}

/// Coefficients of `pi^(2m+2)` in `(pi^2/4) S` for the `zeta(3)` series.
pub fn term_equiv_zeta3(m: u32) -> (ExactRational, ExactRational) {
    let euler = signed_endpoint(m) / ExactRational::from(factorial(2 * m as u64 + 5)) * ExactRational::new(1, 4);
    (euler, zeta_side(&ZetaSeries::zeta3(), m + 1))
}

/// Coefficients of `pi^(2k+2)` in `(pi^2/2) S~` for the odd value `zeta(2m+1)`.
pub fn term_equiv_general(m: u32, k: u32) -> Result<(ExactRational, ExactRational)> {
    let series = ZetaSeries::general(m)?;
    let euler = signed_endpoint(k) / ExactRational::from(factorial(2 * k as u64 + 2 * m as u64 + 3))
        * ExactRational::new(1, 2);
    Ok((euler, zeta_side(&series, k + 1)))
}
