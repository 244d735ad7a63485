//! Checks the Gamma-function closed form against the zeta series for a few s in (1, 2).

use zetaforge::identities::{eval_tyagi_holm, SeriesOptions};
use zetaforge::numkernel::{make_context, ExactRational};

fn main() -> zetaforge::Result<()> {
    let ctx = make_context(25, 10)?;
    for s in ["11/10", "3/2", "7/4", "19/10"] {
        let s: ExactRational = s.parse()?;
        let r = eval_tyagi_holm(&s, &ctx, &SeriesOptions::accelerated())?;
        println!("s={s:<6} value={} agreed={} pass={}", r.lhs.to_decimal(20), r.digits_agreed, r.pass);
    }
    let err = eval_tyagi_holm(&"3/2".parse()?, &ctx, &SeriesOptions::direct(1000)).unwrap_err();
    println!("direct mode: {err}");
    Ok(())
}
