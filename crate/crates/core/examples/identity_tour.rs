//! Evaluates every identity once at 30 digits and prints a summary line each.

use std::time::Instant;

use zetaforge::identities::{
    eval_general, eval_milgram, eval_param_sum, eval_sum_a, eval_sum_b, eval_tyagi_holm, eval_zeta3, ln2_report,
    IdentityReport, SeriesOptions,
};
use zetaforge::numkernel::{make_context, ExactRational};

fn show(r: &IdentityReport, started: Instant) {
    let params: Vec<String> = r.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
    let terms = r.series.as_ref().map(|s| s.terms_used).unwrap_or(0);
    println!(
        "{:<11} {:<8} digits={:<3} terms={:<4} pass={} ({} ms)",
        r.identity_name,
        params.join(","),
        r.digits_agreed,
        terms,
        r.pass,
        started.elapsed().as_millis()
    );
}

fn main() -> zetaforge::Result<()> {
    let ctx = make_context(30, 10)?;
    let opts = SeriesOptions::accelerated();
    let half: ExactRational = "1/2".parse()?;

    let t = Instant::now();
    show(&ln2_report(&ctx, &opts)?, t);
    let t = Instant::now();
    show(&eval_zeta3(&ctx, &opts)?, t);
    let t = Instant::now();
    show(&eval_sum_a(&ctx, &opts)?, t);
    let t = Instant::now();
    show(&eval_sum_b(&ctx, &opts)?, t);
    let t = Instant::now();
    show(&eval_param_sum(&half, &ctx, &opts)?, t);
    let t = Instant::now();
    show(&eval_tyagi_holm(&"3/2".parse()?, &ctx, &opts)?, t);
    for m in 1..=3 {
        let t = Instant::now();
        show(&eval_general(m, &ctx, &opts)?, t);
        let t = Instant::now();
        show(&eval_milgram(m, &ctx, &opts)?, t);
    }
    Ok(())
}
