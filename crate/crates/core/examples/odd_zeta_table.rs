//! Prints the linear forms for zeta(2m+1) and checks each numerically.

use zetaforge::identities::{eval_general, eval_milgram, milgram_matches_theorem3, theorem3_form, SeriesOptions};
use zetaforge::numkernel::make_context;

fn main() -> zetaforge::Result<()> {
    let ctx = make_context(30, 10)?;
    let opts = SeriesOptions::accelerated();
    for m in 1..=5 {
        println!("m={m}: {}", theorem3_form(m)?);
        let general = eval_general(m, &ctx, &opts)?;
        let milgram = eval_milgram(m, &ctx, &opts)?;
        println!(
            "  general agreed={} milgram agreed={} forms match={}",
            general.digits_agreed,
            milgram.digits_agreed,
            milgram_matches_theorem3(m)?
        );
    }
    Ok(())
}
