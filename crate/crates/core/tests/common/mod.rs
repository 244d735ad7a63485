//! Oracles shared by the integration test targets.
#![allow(dead_code)]

use zetaforge::numkernel::{const_pi, make_context, ApproxReal, ExactRational};
use zetaforge::ratseq::{binomial, factorial};
use zetaforge::zetacore::zeta_ref;

pub fn q(s: &str) -> ExactRational {
    s.parse().unwrap()
}

/// `B_{2n}` recovered from `zeta(2n) = (-1)^(n+1) B_{2n} (2 pi)^(2n) / (2 (2n)!)`.
pub fn bernoulli_from_zeta(n: u32, digits: u32) -> ApproxReal {
    let c = make_context(digits, 10).unwrap();
    let z = zeta_ref(&ExactRational::from(2 * n as i64), &c).unwrap();
    let two_pi_pow = const_pi(&c).mul_pow2(1).powi(2 * n);
    let fact = ExactRational::from(factorial(2 * n as u64));
    let sign = if n % 2 == 1 { ExactRational::one() } else { -ExactRational::one() };
    z.mul_rational(&(fact * ExactRational::from(2) * sign)).div(&two_pi_pow).unwrap()
}

pub type Poly = Vec<ExactRational>;

pub fn poly_eval(p: &Poly, x: &ExactRational) -> ExactRational {
    p.iter().rev().fold(ExactRational::zero(), |acc, c| acc * x.clone() + c.clone())
}

/// Euler polynomials from `E_n(x) + E_n(x+1) = 2 x^n`, which for an Appell
/// sequence reads `E_n(x) = x^n - 1/2 sum_{k<n} C(n,k) E_k(x)`.
pub fn euler_polynomials(max_degree: usize) -> Vec<Poly> {
    let half = ExactRational::new(1, 2);
    let mut polys: Vec<Poly> = Vec::new();
    for n in 0..=max_degree {
        let mut p = vec![ExactRational::zero(); n + 1];
        p[n] = ExactRational::one();
        for (k, ek) in polys.iter().enumerate() {
            let c = ExactRational::from(binomial(n as u64, k as u64)) * half.clone();
            for (i, coeff) in ek.iter().enumerate() {
                p[i] = &p[i] - &(&c * coeff);
            }
        }
        polys.push(p);
    }
    polys
}
