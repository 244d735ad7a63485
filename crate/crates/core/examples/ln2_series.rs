//! Sums the ln 2 series in both modes and compares against an independent value.

use zetaforge::identities::{eval_ln2, ln2_oracle, SeriesOptions};
use zetaforge::numkernel::make_context;

fn main() -> zetaforge::Result<()> {
    let ctx = make_context(40, 10)?;
    let oracle = ln2_oracle(&ctx)?;
    println!("oracle       {}", oracle.to_decimal(40));
    for opts in [SeriesOptions::accelerated(), SeriesOptions::direct(200_000)] {
        match eval_ln2(&ctx, &opts) {
            Ok(r) => {
                let v = r.enclosure();
                println!(
                    "{:<12} {} terms={} agrees={}",
                    r.mode,
                    v.to_decimal(v.certified_digits().min(40)),
                    r.terms_used,
                    v.agrees_with(&oracle)
                );
            }
            Err(e) => println!("{:<12} {e}", opts.mode),
        }
    }
    Ok(())
}
