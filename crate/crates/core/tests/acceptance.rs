//! Acceptance suite: one line per criterion, non-zero exit if any fails.
//!
//! Run with `cargo test --test acceptance`.

mod common;

use std::panic::{self, AssertUnwindSafe};
use std::time::Instant;

use common::{bernoulli_from_zeta, euler_polynomials, poly_eval, q};
use zetaforge::cli::{run, ReportDocument};
use zetaforge::identities::{
    eval_ln2, eval_milgram, eval_param_sum, eval_sum_a, eval_sum_b, eval_tyagi_holm, eval_zeta3, ln2_oracle,
    milgram_matches_theorem3, term_equiv_general, term_equiv_ln2, term_equiv_zeta3, IdentityReport, SeriesOptions,
};
use zetaforge::numkernel::{const_ln2, const_pi, make_context, pow_rational, ApproxReal, ExactRational};
use zetaforge::ratseq::{bernoulli, euler_endpoint};
use zetaforge::zetacore::{hurwitz_ds_ref, hurwitz_ref, hurwitz_with_plan, zeta_ref, EulerMaclaurinPlan};

type Outcome = std::result::Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn pow10(k: i32) -> ExactRational {
    ExactRational::from(10).pow(k)
}

fn f(q: &ExactRational) -> String {
    format!("{:.2e}", q.to_f64())
}

fn residual_below(r: &IdentityReport, digits: i32) -> std::result::Result<(), String> {
    let upper = r.residual_upper();
    ensure(upper < pow10(-digits), || format!("{} residual {} not below 1e-{digits}", r.identity_name, f(&upper)))
}

fn cli(args: &[&str]) -> (i32, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = run(std::iter::once("zetaforge").chain(args.iter().copied()), &mut out, &mut err);
    let mut text = String::from_utf8(out).unwrap();
    text.push_str(&String::from_utf8(err).unwrap());
    (code, text)
}

fn accel() -> SeriesOptions {
    SeriesOptions::accelerated()
}

fn ac01() -> Outcome {
    let start = Instant::now();
    let (code, text) = cli(&["verify", "ln2", "--digits", "40", "--mode", "accelerated", "--output", "json"]);
    let elapsed = start.elapsed().as_secs_f64();
    ensure(code == 0, || format!("exit {code}: {text}"))?;
    let doc = ReportDocument::from_json(&text).map_err(|e| e.to_string())?;
    let r = &doc.reports[0];
    let upper: ExactRational = r.residual_upper.parse().map_err(|e: zetaforge::Error| e.to_string())?;
    ensure(upper < pow10(-40), || format!("residual {}", r.residual_upper))?;
    let terms = r.series.as_ref().map_or(u64::MAX, |s| s.terms_used);
    ensure(terms <= 200, || format!("{terms} remainder terms"))?;
    ensure(elapsed < 5.0, || format!("{elapsed:.2} s"))?;
    Ok(format!("residual <= {}, {terms} terms, {:.0} ms", r.residual_upper, elapsed * 1e3))
}

fn ac02() -> Outcome {
    let c = make_context(20, 10).unwrap();
    let m = 100_000u64;
    let res = eval_ln2(&c, &SeriesOptions::direct(m)).map_err(|e| e.to_string())?;
    let ln2 = ln2_oracle(&c).map_err(|e| e.to_string())?;
    let residual = (&ln2 - &res.value).abs_upper_rational();
    let zeta2 = const_pi(&c).square().div_rational(&ExactRational::from(6)).unwrap();
    let claimed = zeta2.div_rational(&ExactRational::from(2 * m as i64)).unwrap();
    let tail = res.tail_bound.abs_upper_rational();
    ensure(res.terms_used == m, || format!("{} terms", res.terms_used))?;
    ensure(residual <= claimed.abs_upper_rational(), || format!("residual {} above zeta(2)/(2M)", f(&residual)))?;
    ensure(residual <= tail, || format!("residual {} above tail_bound {}", f(&residual), f(&tail)))?;
    ensure((tail.to_f64() - 8.2247e-6).abs() < 1e-9, || format!("tail_bound {}", f(&tail)))?;
    Ok(format!("residual {} <= tail_bound {}", f(&residual), f(&tail)))
}

fn ac03() -> Outcome {
    let c40 = make_context(40, 10).unwrap();
    let acc = eval_zeta3(&c40, &accel()).map_err(|e| e.to_string())?;
    residual_below(&acc, 40)?;
    let c20 = make_context(20, 10).unwrap();
    let d = eval_zeta3(&c20, &SeriesOptions::direct(2000)).map_err(|e| e.to_string())?;
    let s = d.series.clone().ok_or("no series summary")?;
    let tail = s.tail_bound.abs_upper_rational();
    // lhs carries the tail as a ball; compare midpoints for the bare partial sum
    let bare = (d.lhs.mid_rational() - d.rhs.mid_rational()).abs() + d.rhs.err_bound().to_rational();
    ensure(s.terms_used == 2000, || format!("{} terms", s.terms_used))?;
    ensure(bare <= tail, || format!("direct residual {} above tail {}", f(&bare), f(&tail)))?;
    ensure(tail > pow10(-11) && tail < pow10(-8), || format!("tail {}", f(&tail)))?;
    Ok(format!(
        "accelerated residual {}, direct(2000) residual {} <= tail {}",
        f(&acc.residual_upper()),
        f(&bare),
        f(&tail)
    ))
}

fn ac04() -> Outcome {
    let c = make_context(30, 10).unwrap();
    let r = eval_sum_a(&c, &accel()).map_err(|e| e.to_string())?;
    residual_below(&r, 30)?;
    Ok(format!("lhs {}, residual {}", r.lhs.to_decimal(12), f(&r.residual_upper())))
}

fn ac05() -> Outcome {
    let c = make_context(30, 10).unwrap();
    let a = eval_sum_a(&c, &accel()).map_err(|e| e.to_string())?;
    let b = eval_sum_b(&c, &accel()).map_err(|e| e.to_string())?;
    residual_below(&b, 30)?;
    let pi_sq = const_pi(&c).square();
    let z3 = zeta_ref(&q("3"), &c).map_err(|e| e.to_string())?;
    let combo = -z3.div(&pi_sq).unwrap().mul_rational(&q("3/8")) + const_ln2(&c).mul_rational(&q("1/12"));
    let gap = (&(&a.lhs - &b.lhs) - &combo).abs_upper_rational();
    ensure(gap < pow10(-30), || format!("subtraction gap {}", f(&gap)))?;
    Ok(format!("residual {}, member-to-member gap {}", f(&b.residual_upper()), f(&gap)))
}

fn ac06() -> Outcome {
    let c = make_context(20, 10).unwrap();
    let mut detail = Vec::new();
    for t in ["1/2", "1/4"] {
        let r = eval_param_sum(&q(t), &c, &accel()).map_err(|e| e.to_string())?;
        residual_below(&r, 20)?;
        detail.push(format!("t={t}: {}", f(&r.residual_upper())));
    }
    let m3 = q("-3");
    let mut last: Option<ExactRational> = None;
    for t in ["9/10", "99/100", "999/1000"] {
        let t = q(t);
        let up = hurwitz_ds_ref(&m3, &(ExactRational::one() + t.clone()), &c).map_err(|e| e.to_string())?;
        let down = hurwitz_ds_ref(&m3, &(ExactRational::one() - t.clone()), &c).map_err(|e| e.to_string())?;
        let width = (&up - &down).abs_upper_rational();
        if let Some(prev) = &last {
            ensure(width < *prev, || format!("bracket did not shrink at t = {t}"))?;
        }
        last = Some(width);
    }
    let final_width = last.unwrap();
    ensure(final_width < pow10(-2), || format!("bracket {} at t = 0.999", f(&final_width)))?;
    detail.push(format!("bracket at 0.999: {}", f(&final_width)));
    Ok(detail.join(", "))
}

fn ac07() -> Outcome {
    let start = Instant::now();
    let (code, text) =
        cli(&["table", "--identity", "general", "--m-range", "1..8", "--digits", "30", "--format", "json"]);
    let elapsed = start.elapsed().as_secs_f64();
    ensure(code == 0, || format!("exit {code}: {text}"))?;
    let doc = ReportDocument::from_json(&text).map_err(|e| e.to_string())?;
    ensure(doc.reports.len() == 8, || format!("{} rows", doc.reports.len()))?;
    let mut worst = ExactRational::zero();
    for r in &doc.reports {
        let upper: ExactRational = r.residual_upper.parse().map_err(|e: zetaforge::Error| e.to_string())?;
        ensure(upper < pow10(-30) && r.pass, || format!("{} residual {}", r.param_label(), r.residual_upper))?;
        if upper > worst {
            worst = upper;
        }
    }
    ensure(elapsed < 60.0, || format!("{elapsed:.1} s"))?;
    Ok(format!("8 rows, worst residual {}, {:.0} ms", f(&worst), elapsed * 1e3))
}

fn ac08() -> Outcome {
    let c = make_context(30, 10).unwrap();
    let mut worst = ExactRational::zero();
    for m in 1..=8 {
        let r = eval_milgram(m, &c, &accel()).map_err(|e| e.to_string())?;
        residual_below(&r, 30)?;
        ensure(r.checks.iter().all(|c| c.pass), || format!("coefficient check failed at m = {m}"))?;
        ensure(milgram_matches_theorem3(m).map_err(|e| e.to_string())?, || format!("forms differ at m = {m}"))?;
        if r.residual_upper() > worst {
            worst = r.residual_upper();
        }
    }
    Ok(format!("m = 1..8, worst residual {}, exact coefficient match", f(&worst)))
}

fn ac09() -> Outcome {
    let c = make_context(30, 10).unwrap();
    let r = eval_tyagi_holm(&q("3/2"), &c, &accel()).map_err(|e| e.to_string())?;
    residual_below(&r, 30)?;
    let c20 = make_context(20, 5).unwrap();
    let one = ApproxReal::from_int(1, 256);
    let ln2 = const_ln2(&c20);
    let eps = q("1/100000000");
    let mut worst = 0f64;
    for s in [ExactRational::one() + eps.clone(), ExactRational::one() - eps.clone()] {
        let sm1 = &s - &ExactRational::one();
        let residue = zeta_ref(&s, &c20).map_err(|e| e.to_string())?.mul_rational(&sm1);
        let p = pow_rational(&ApproxReal::from_int(2, 256), &(ExactRational::one() - s.clone()), &c20)
            .map_err(|e| e.to_string())?;
        let factor = (&one - &p).div_rational(&sm1).unwrap();
        let e1 = (&residue - &one).abs_upper().to_f64();
        let e2 = (&factor - &ln2).abs_upper().to_f64();
        ensure(e1 < 1e-7 && e2 < 1e-7, || format!("limits at s = {s}: {e1:.2e}, {e2:.2e}"))?;
        worst = worst.max(e1).max(e2);
    }
    Ok(format!("residual {}, limit factors within {worst:.2e}", f(&r.residual_upper())))
}

fn ac10() -> Outcome {
    for m in 0..=50 {
        let (a, b) = term_equiv_ln2(m);
        ensure(a == b, || format!("ln2 term map differs at m = {m}"))?;
        let (a, b) = term_equiv_zeta3(m);
        ensure(a == b, || format!("zeta(3) term map differs at m = {m}"))?;
    }
    for m in 1..=8 {
        for k in 0..=20 {
            let (a, b) = term_equiv_general(m, k).map_err(|e| e.to_string())?;
            ensure(a == b, || format!("general term map differs at m = {m}, k = {k}"))?;
        }
    }
    let polys = euler_polynomials(101);
    for m in 0..=50usize {
        let p = &polys[2 * m + 1];
        let at_one = poly_eval(p, &ExactRational::one());
        ensure(euler_endpoint(m) == at_one, || format!("E_{}(1) differs", 2 * m + 1))?;
        ensure(at_one == -poly_eval(p, &ExactRational::zero()), || format!("E_{}(1) != -E_{}(0)", 2 * m + 1, 2 * m + 1))?;
    }
    for n in 1..=50u32 {
        let ball = bernoulli_from_zeta(n, 30);
        ensure(ball.contains(&bernoulli(2 * n as usize)), || format!("B_{} outside the zeta inversion", 2 * n))?;
    }
    Ok("term maps (ln2, zeta(3), general m<=8), E_{2m+1}(1) for m<=50, B_{2n} for n<=50".to_string())
}

fn ac11() -> Outcome {
    let c = make_context(25, 5).unwrap();
    let mut cells = 0;
    for s in ["-3", "-1", "1/2", "3/2", "3"] {
        for a in ["1/2", "1", "3/2", "2"] {
            let (s, a) = (q(s), q(a));
            let plan = EulerMaclaurinPlan::choose(&s, &a, &c).map_err(|e| e.to_string())?;
            let (v1, d1) = hurwitz_with_plan(&s, &a, plan, &c, true).map_err(|e| e.to_string())?;
            let (v2, d2) = hurwitz_with_plan(&s, &a, plan.doubled(), &c, true).map_err(|e| e.to_string())?;
            ensure(v1.agrees_with(&v2), || format!("value unstable at s = {s}, a = {a}"))?;
            ensure(d1.unwrap().agrees_with(&d2.unwrap()), || format!("derivative unstable at s = {s}, a = {a}"))?;
            cells += 1;
        }
    }
    let c30 = make_context(30, 10).unwrap();
    let d1 = hurwitz_ds_ref(&q("-3"), &q("1"), &c30).map_err(|e| e.to_string())?;
    let d2 = hurwitz_ds_ref(&q("-3"), &q("2"), &c30).map_err(|e| e.to_string())?;
    ensure(d1.agrees_with(&d2), || "zeta'(-3,2) and zeta'(-3,1) disagree".to_string())?;

    let c40 = make_context(40, 10).unwrap();
    let a = q("3/2");
    let h = q("1/10000000000");
    let plus = hurwitz_ref(&(q("-3") + h.clone()), &a, &c40).map_err(|e| e.to_string())?;
    let minus = hurwitz_ref(&(q("-3") - h.clone()), &a, &c40).map_err(|e| e.to_string())?;
    let fd = (&plus - &minus).div_rational(&(h * q("2"))).unwrap();
    let an = hurwitz_ds_ref(&q("-3"), &a, &c40).map_err(|e| e.to_string())?;
    let gap = (&fd - &an).abs_upper().to_f64();
    ensure(gap < 1e-17, || format!("finite difference gap {gap:.2e}"))?;
    Ok(format!("{cells} grid cells stable, shift check ok, finite-difference gap {gap:.2e}"))
}

fn main() {
    let criteria: [Criterion; 11] = [
        ("ln2 accelerated at 40 digits", ac01),
        ("ln2 direct with 10^5 terms", ac02),
        ("zeta(3) series, accelerated and direct", ac03),
        ("weighted sum against zeta(3)/(8 pi^2) + ln(2 pi)/12 - 11/72", ac04),
        ("quarter-weighted sum and member-to-member subtraction", ac05),
        ("parameterized sum and Hurwitz-derivative bracket", ac06),
        ("general odd-zeta table for m = 1..8", ac07),
        ("Milgram form for m = 1..8", ac08),
        ("Tyagi-Holm at s = 3/2 and limits at s = 1", ac09),
        ("exact term maps and sequence oracles", ac10),
        ("Hurwitz evaluator soundness", ac11),
    ];
    panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for (i, (title, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = panic::catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|p| {
            let msg = p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        let ms = start.elapsed().as_millis();
        match outcome {
            Ok(detail) => println!("AC-{:02} PASS  {title}: {detail} [{ms} ms]", i + 1),
            Err(why) => {
                failed += 1;
                println!("AC-{:02} FAIL  {title}: {why} [{ms} ms]", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
