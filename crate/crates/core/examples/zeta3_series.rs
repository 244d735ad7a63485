//! Recovers zeta(3) from a rapidly convergent even-zeta series.

use zetaforge::identities::{eval_zeta3, SeriesOptions};
use zetaforge::numkernel::make_context;

fn main() -> zetaforge::Result<()> {
    for digits in [20, 50, 100] {
        let ctx = make_context(digits, 10)?;
        let r = eval_zeta3(&ctx, &SeriesOptions::accelerated())?;
        let terms = r.series.as_ref().map_or(0, |s| s.terms_used);
        println!("digits={digits:<4} terms={terms:<4} agreed={:<4} pass={}", r.digits_agreed, r.pass);
        println!("  {}", r.lhs.to_decimal(digits));
    }
    Ok(())
}
