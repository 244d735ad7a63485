//! Evaluates the two fixed even-zeta sums and the parametric family.

use zetaforge::identities::{eval_param_sum, eval_sum_a, eval_sum_b, SeriesOptions};
use zetaforge::numkernel::{make_context, ExactRational};

fn main() -> zetaforge::Result<()> {
    let ctx = make_context(30, 10)?;
    let opts = SeriesOptions::accelerated();
    for r in [eval_sum_a(&ctx, &opts)?, eval_sum_b(&ctx, &opts)?] {
        println!("{:<6} {} pass={}", r.identity_name, r.lhs.to_decimal(25), r.pass);
    }
    for t in ["1/4", "1/2", "3/4", "9/10"] {
        let t: ExactRational = t.parse()?;
        let r = eval_param_sum(&t, &ctx, &opts)?;
        println!("t={t:<4} {} agreed={} pass={}", r.lhs.to_decimal(25), r.digits_agreed, r.pass);
    }
    Ok(())
}
