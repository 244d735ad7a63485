use proptest::prelude::*;
use zetaforge::numkernel::{const_pi, eval_elementary, make_context, ApproxReal, ElementaryKind, ExactRational};
use zetaforge::zetacore::{
    hurwitz_ds_ref, hurwitz_ref, hurwitz_with_plan, zeta_even_coeff, zeta_ref, zeta_ref_via,
    EulerMaclaurinPlan, ZetaPath,
};
use zetaforge::Error;

fn q(s: &str) -> ExactRational {
    s.parse().unwrap()
}

fn close(a: &ApproxReal, b: &ApproxReal, tol: f64) -> bool {
    (a - b).abs_upper().to_f64() <= tol
}

/// Dirichlet eta by Borwein's alternating-series acceleration, in f64:
/// `d_k = n sum_{i<=k} (n+i-1)! 4^i / ((n-i)! (2i)!)`.
fn eta_oracle(s: f64) -> f64 {
    let n = 40usize;
    let nf = n as f64;
    let mut d = Vec::with_capacity(n + 1);
    let mut term = 1.0 / nf;
    let mut sum = 0.0;
    for i in 0..=n {
        if i > 0 {
            let i_f = i as f64;
            term *= (nf + i_f - 1.0) * 4.0 * (nf - i_f + 1.0) / ((2.0 * i_f - 1.0) * 2.0 * i_f);
        }
        sum += nf * term;
        d.push(sum);
    }
    let dn = d[n];
    let acc: f64 = d[..n]
        .iter()
        .enumerate()
        .map(|(k, dk)| {
            let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
            sign * (dn - dk) / ((k + 1) as f64).powf(s)
        })
        .sum();
    acc / dn
}

#[test]
fn zeta_three_by_both_paths() {
    let ctx = make_context(30, 10).unwrap();
    let em = zeta_ref_via(&q("3"), &ctx, ZetaPath::EulerMaclaurin).unwrap();
    assert_eq!(em.to_decimal(15), "1.202056903159594");
    // partial sum of the defining series with the integral tail bracket
    let k = 100_000u64;
    let mut partial = 0.0f64;
    for i in (1..=k).rev() {
        partial += 1.0 / (i as f64).powi(3);
    }
    let tail = (1.0 / (k as f64).powi(2) + 1.0 / ((k + 1) as f64).powi(2)) / 4.0;
    assert!((partial + tail - em.to_f64()).abs() < 1e-14);
    // two plan sizes
    let plan = EulerMaclaurinPlan::choose(&q("3"), &q("1"), &ctx).unwrap();
    let (v2, _) = hurwitz_with_plan(&q("3"), &q("1"), plan.doubled(), &ctx, false).unwrap();
    assert!(v2.agrees_with(&em));
}

#[test]
fn direct_and_euler_maclaurin_paths_agree() {
    let ctx = make_context(10, 4).unwrap();
    for s in ["5", "17/3", "8", "25/2"] {
        let a = zeta_ref_via(&q(s), &ctx, ZetaPath::EulerMaclaurin).unwrap();
        let b = zeta_ref_via(&q(s), &ctx, ZetaPath::DirectSeries).unwrap();
        assert!(a.agrees_with(&b), "s = {s}");
    }
    assert!(zeta_ref_via(&q("1/2"), &ctx, ZetaPath::DirectSeries).is_err());
    assert!(matches!(
        zeta_ref_via(&q("1001/1000"), &make_context(40, 0).unwrap(), ZetaPath::DirectSeries),
        Err(Error::Precision(_))
    ));
}

#[test]
fn zeta_two_matches_euler() {
    let ctx = make_context(40, 10).unwrap();
    let z2 = zeta_ref(&q("2"), &ctx).unwrap();
    let c = zeta_even_coeff(1).unwrap().coeff;
    assert_eq!(c, q("1/6"));
    assert!(z2.agrees_with(&const_pi(&ctx).square().mul_rational(&c)));
}

#[test]
fn continuation_matches_eta_oracle() {
    let ctx = make_context(20, 5).unwrap();
    for (s, sf) in [("0", 0.0), ("1/2", 0.5), ("-1/2", -0.5), ("-1", -1.0), ("3/2", 1.5)] {
        let z = zeta_ref(&q(s), &ctx).unwrap().to_f64();
        let oracle = eta_oracle(sf) / (1.0 - 2f64.powf(1.0 - sf));
        assert!((z - oracle).abs() < 1e-11, "s = {s}: {z} vs {oracle}");
    }
    assert!(zeta_ref(&q("0"), &ctx).unwrap().contains(&q("-1/2")));
    assert!(zeta_ref(&q("-1"), &ctx).unwrap().contains(&q("-1/12")));
}

#[test]
fn pole_and_domain_errors() {
    let ctx = make_context(10, 0).unwrap();
    assert!(matches!(zeta_ref(&q("1"), &ctx), Err(Error::Pole)));
    assert!(matches!(hurwitz_ref(&q("1"), &q("1/2"), &ctx), Err(Error::Pole)));
    assert!(matches!(hurwitz_ref(&q("2"), &q("0"), &ctx), Err(Error::Domain(_))));
    assert!(matches!(hurwitz_ds_ref(&q("2"), &q("-1/2"), &ctx), Err(Error::Domain(_))));
}

#[test]
fn hurwitz_special_parameters() {
    let ctx = make_context(25, 10).unwrap();
    for s in ["-3", "-1/2", "1/2", "3/2", "3"] {
        let z = zeta_ref(&q(s), &ctx).unwrap();
        let h1 = hurwitz_ref(&q(s), &q("1"), &ctx).unwrap();
        assert!(h1.agrees_with(&z), "a = 1, s = {s}");
        let h2 = hurwitz_ref(&q(s), &q("2"), &ctx).unwrap();
        assert!(h2.agrees_with(&(&z - ApproxReal::from_int(1, 256))), "a = 2, s = {s}");
        // zeta(s, 1/2) = (2^s - 1) zeta(s)
        let hh = hurwitz_ref(&q(s), &q("1/2"), &ctx).unwrap();
        let two_s = zetaforge::numkernel::pow_rational(&ApproxReal::from_int(2, 256), &q(s), &ctx).unwrap();
        assert!(hh.agrees_with(&((two_s - ApproxReal::from_int(1, 256)) * &z)), "a = 1/2, s = {s}");
    }
    let h = hurwitz_ref(&q("2"), &q("1/2"), &ctx).unwrap();
    assert!(h.agrees_with(&const_pi(&ctx).square().mul_pow2(-1)));
}

#[test]
fn derivative_at_zero_is_lerch_value() {
    let ctx = make_context(30, 10).unwrap();
    let d = hurwitz_ds_ref(&q("0"), &q("1"), &ctx).unwrap();
    assert_eq!(d.to_decimal(16), "-0.9189385332046727");
    let two_pi = const_pi(&ctx).mul_pow2(1);
    let l = eval_elementary(ElementaryKind::Ln, &two_pi, &ctx).unwrap().mul_pow2(-1);
    assert!(d.agrees_with(&-l));
}

#[test]
fn derivative_shift_at_minus_three() {
    let ctx = make_context(30, 10).unwrap();
    let d1 = hurwitz_ds_ref(&q("-3"), &q("1"), &ctx).unwrap();
    let d2 = hurwitz_ds_ref(&q("-3"), &q("2"), &ctx).unwrap();
    assert!(d1.agrees_with(&d2));
}

#[test]
fn finite_difference_matches_analytic_derivative() {
    let ctx = make_context(40, 10).unwrap();
    let a = q("3/2");
    let h = q("1/10000000000");
    let plus = hurwitz_ref(&(q("-3") + &h), &a, &ctx).unwrap();
    let minus = hurwitz_ref(&(q("-3") - &h), &a, &ctx).unwrap();
    let fd = (plus - minus).div_rational(&(h.clone() * q("2"))).unwrap();
    let an = hurwitz_ds_ref(&q("-3"), &a, &ctx).unwrap();
    assert!(close(&fd, &an, 1e-17));
}

#[test]
fn pole_residue_and_lhospital_factor() {
    let ctx = make_context(20, 5).unwrap();
    let eps = q("1/100000000");
    let ln2 = zetaforge::numkernel::const_ln2(&ctx);
    for s in [q("1") + &eps, q("1") - &eps] {
        let z = zeta_ref(&s, &ctx).unwrap();
        let sm1 = &s - q("1");
        let residue = z.mul_rational(&sm1);
        assert!(close(&residue, &ApproxReal::from_int(1, 256), 1e-7));
        let p = zetaforge::numkernel::pow_rational(&ApproxReal::from_int(2, 256), &(q("1") - &s), &ctx).unwrap();
        let factor = (ApproxReal::from_int(1, 256) - p).div_rational(&sm1).unwrap();
        assert!(close(&factor, &ln2, 1e-7));
    }
}

#[test]
fn plan_doubling_is_stable_on_grid() {
    let ctx = make_context(25, 5).unwrap();
    for s in ["-3", "-1", "1/2", "3/2", "3"] {
        for a in ["1/2", "1", "3/2", "2"] {
            let (s, a) = (q(s), q(a));
            let plan = EulerMaclaurinPlan::choose(&s, &a, &ctx).unwrap();
            let (v1, d1) = hurwitz_with_plan(&s, &a, plan, &ctx, true).unwrap();
            let (v2, d2) = hurwitz_with_plan(&s, &a, plan.doubled(), &ctx, true).unwrap();
            assert!(v1.agrees_with(&v2), "value s = {s}, a = {a}");
            assert!(d1.unwrap().agrees_with(&d2.unwrap()), "derivative s = {s}, a = {a}");
        }
    }
}

#[test]
fn remainder_bound_decreases_with_shift() {
    for (s, a) in [("-3", "1"), ("1/2", "3/2"), ("3", "1/2")] {
        let (s, a) = (q(s), q(a));
        let mut last = None;
        for n in [10u32, 20, 40, 80] {
            let (rv, _) = EulerMaclaurinPlan::new(n, 4).remainder_bounds(&s, &a).unwrap();
            let v = rv.to_f64();
            assert!(v.is_finite());
            if let Some(prev) = last {
                assert!(v < prev || (v == 0.0 && prev == 0.0));
            }
            last = Some(v);
        }
    }
}

#[test]
fn even_values_match_euler_formula() {
    let ctx = make_context(30, 10).unwrap();
    let pi_sq = const_pi(&ctx).square();
    for n in 1..=50u32 {
        let c = zeta_even_coeff(n).unwrap().coeff;
        let euler = pi_sq.powi(n).mul_rational(&c);
        let z = zeta_ref(&ExactRational::from(2 * n as i64), &ctx).unwrap();
        assert!(z.agrees_with(&euler), "n = {n}");
    }
}

#[test]
fn symmetric_difference_vanishes_toward_one() {
    let ctx = make_context(25, 10).unwrap();
    let mut last = f64::INFINITY;
    for t in ["9/10", "99/100", "999/1000"] {
        let t = q(t);
        let plus = hurwitz_ds_ref(&q("-3"), &(q("1") + &t), &ctx).unwrap();
        let minus = hurwitz_ds_ref(&q("-3"), &(q("1") - &t), &ctx).unwrap();
        let mag = (plus - minus).abs_upper().to_f64();
        assert!(mag < last);
        last = mag;
    }
    assert!(last < 1e-2);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn hurwitz_recurrence(sn in -8i64..16, sd in 1i64..5, an in 1i64..20, ad in 1i64..6) {
        let s = ExactRational::new(sn, sd);
        prop_assume!(s != q("1"));
        let a = ExactRational::new(an, ad);
        let ctx = make_context(15, 5).unwrap();
        let h0 = hurwitz_ref(&s, &a, &ctx).unwrap();
        let h1 = hurwitz_ref(&s, &(&a + q("1")), &ctx).unwrap();
        let p = zetaforge::numkernel::pow_rational(&ApproxReal::from_rational(&a, 128), &(-&s), &ctx).unwrap();
        prop_assert!((h0 - h1).agrees_with(&p));
    }
}
