//! Evaluates Hurwitz zeta and its s-derivative, including a check against ln(2 pi).

use zetaforge::numkernel::{const_pi, ln, make_context, ApproxReal, ExactRational};
use zetaforge::zetacore::{hurwitz_ds_ref, hurwitz_ref, zeta_ref};

fn main() -> zetaforge::Result<()> {
    let ctx = make_context(30, 10)?;
    let q = |s: &str| s.parse::<ExactRational>();

    for (s, a) in [("3", "1"), ("2", "1/2"), ("1/2", "1"), ("-3/2", "1/3")] {
        let v = hurwitz_ref(&q(s)?, &q(a)?, &ctx)?;
        let d = hurwitz_ds_ref(&q(s)?, &q(a)?, &ctx)?;
        println!("s={s:<5} a={a:<4} zeta={}  d/ds={}", v.to_decimal(20), d.to_decimal(20));
    }

    // zeta'(0) = -ln(2 pi) / 2
    let d0 = hurwitz_ds_ref(&q("0")?, &q("1")?, &ctx)?;
    let two_pi = const_pi(&ctx).mul_pow2(1);
    let expected = ln(&two_pi, &ctx)?.mul_pow2(-1);
    println!("zeta'(0) + ln(2 pi)/2 contains 0: {}", (&d0 + &expected).contains(&ExactRational::zero()));

    let z3 = zeta_ref(&q("3")?, &ctx)?;
    let direct: ApproxReal = hurwitz_ref(&q("3")?, &q("1")?, &ctx)?;
    println!("zeta(3) = hurwitz(3, 1): {}", z3.agrees_with(&direct));
    Ok(())
}
