mod common;

use std::fs;
use std::thread;

use common::{bernoulli_from_zeta, euler_polynomials, poly_eval};
use num_bigint::BigInt;
use num_traits::One;
use zetaforge::numkernel::ExactRational;
use zetaforge::ratseq::{
    bernoulli, bernoulli_table, cache_load, cache_store, euler_endpoint, factorial, BernoulliTable,
    EulerEndpointTable, CACHE_HEADER,
};
use zetaforge::Error;

fn r(n: i64, d: i64) -> ExactRational {
    ExactRational::new(n, d)
}

/// Akiyama-Tanigawa algorithm; yields `B_n` with `B_1 = +1/2`.
fn akiyama_tanigawa(n: usize) -> ExactRational {
    let mut a: Vec<ExactRational> = Vec::with_capacity(n + 1);
    for m in 0..=n {
        a.push(r(1, m as i64 + 1));
        for j in (1..=m).rev() {
            a[j - 1] = ExactRational::from(j as i64) * (&a[j - 1] - &a[j]);
        }
    }
    a[0].clone()
}

#[test]
fn bernoulli_examples() {
    assert_eq!(bernoulli(2), r(1, 6));
    assert_eq!(bernoulli(4), r(-1, 30));
    assert_eq!(bernoulli(3), ExactRational::zero());
    assert_eq!(bernoulli(12), r(-691, 2730));
    assert_eq!(bernoulli(1), r(-1, 2));
}

#[test]
fn bernoulli_matches_akiyama_tanigawa() {
    for n in 2..=80 {
        assert_eq!(bernoulli(n), akiyama_tanigawa(n), "B_{n}");
    }
}

#[test]
fn bernoulli_matches_inverted_even_zeta() {
    for n in 1..=100u32 {
        let b = bernoulli(2 * n as usize);
        let ball = bernoulli_from_zeta(n, 30);
        assert!(ball.contains(&b), "B_{}", 2 * n);
        // relative width of the ball
        let rel = ball.err_bound().to_f64() / ball.to_f64().abs();
        assert!(rel < 1e-30 || !rel.is_finite(), "B_{} rel {rel}", 2 * n);
    }
}

#[test]
fn euler_polynomial_oracle_small_cases() {
    let polys = euler_polynomials(5);
    assert_eq!(polys[1], vec![r(-1, 2), r(1, 1)]);
    assert_eq!(polys[3], vec![r(1, 4), r(0, 1), r(-3, 2), r(1, 1)]);
    assert_eq!(euler_endpoint(0), r(1, 2));
    assert_eq!(euler_endpoint(1), r(-1, 4));
    assert_eq!(euler_endpoint(2), r(1, 2));
}

#[test]
fn euler_endpoint_matches_polynomial_oracle() {
    let polys = euler_polynomials(101);
    let one = ExactRational::one();
    let zero = ExactRational::zero();
    let table = EulerEndpointTable::build(50);
    for m in 0..=50usize {
        let p = &polys[2 * m + 1];
        let at_one = poly_eval(p, &one);
        assert_eq!(euler_endpoint(m), at_one, "E_{}(1)", 2 * m + 1);
        assert_eq!(at_one, -poly_eval(p, &zero));
        assert_eq!(table.get(2 * m + 1), Some(&at_one));
    }
}

#[test]
fn euler_endpoint_signs_alternate() {
    for m in 0..=60usize {
        let e = euler_endpoint(m);
        if m % 2 == 0 {
            assert!(e.is_positive(), "m = {m}");
        } else {
            assert!(e.is_negative(), "m = {m}");
        }
    }
}

#[test]
fn factorial_matches_iterative_product() {
    assert_eq!(factorial(0), BigInt::one());
    assert_eq!(factorial(5), BigInt::from(120));
    assert_eq!(factorial(12), BigInt::from(479_001_600u64));
    let mut acc = BigInt::one();
    for k in 1..=60u64 {
        acc *= k;
        assert_eq!(factorial(k), acc);
    }
}

#[test]
fn table_invariants() {
    let t = BernoulliTable::up_to(200);
    assert_eq!(t.max_index(), 200);
    assert_eq!(t.get(0), Some(&ExactRational::one()));
    assert_eq!(t.get(2), Some(&r(1, 6)));
    t.verify_signs().unwrap();
    t.verify_prefix(100).unwrap();
}

#[test]
fn cache_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("b.cache");
    let t = BernoulliTable::up_to(20);
    cache_store(&t, &path).unwrap();
    let text = fs::read_to_string(&path).unwrap();
    assert_eq!(text.lines().next(), Some(CACHE_HEADER));
    assert_eq!(text.lines().count(), 11);
    assert!(text.ends_with('\n'));
    assert!(text.contains("\n2 1 6\n"));
    let back = cache_load(&path).unwrap();
    assert_eq!(back, t);
    assert_eq!(back.iter().skip(1).count(), 10);
}

#[test]
fn cache_rejects_other_versions() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("b.cache");
    cache_store(&BernoulliTable::up_to(10), &path).unwrap();
    let text = fs::read_to_string(&path).unwrap().replace("v1", "v2");
    fs::write(&path, text).unwrap();
    assert!(matches!(cache_load(&path), Err(Error::Format(_))));
}

#[test]
fn cache_detects_corruption() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("b.cache");
    cache_store(&BernoulliTable::up_to(10), &path).unwrap();
    let text = fs::read_to_string(&path).unwrap().replace("\n2 1 6\n", "\n2 1 7\n");
    fs::write(&path, text).unwrap();
    assert!(matches!(cache_load(&path), Err(Error::Corruption(_))));
}

#[test]
fn cache_missing_file_is_io_error() {
    let dir = tempfile::tempdir().unwrap();
    assert!(matches!(cache_load(&dir.path().join("absent")), Err(Error::Io(_))));
}

#[test]
fn concurrent_readers_see_one_table() {
    let handles: Vec<_> = (0..8)
        .map(|i| thread::spawn(move || (0..=60).map(|n| bernoulli(2 * ((n + 7 * i) % 61))).collect::<Vec<_>>()))
        .collect();
    let results: Vec<Vec<ExactRational>> = handles.into_iter().map(|h| h.join().unwrap()).collect();
    let snapshot = bernoulli_table(120);
    for (i, row) in results.iter().enumerate() {
        for (n, b) in row.iter().enumerate() {
            assert_eq!(Some(b), snapshot.get(2 * ((n + 7 * i) % 61)));
        }
    }
}
