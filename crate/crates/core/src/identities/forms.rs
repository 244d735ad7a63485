//! Exact linear forms over `pi^k * {1, ln 2, S~, zeta(j)}` used to compare
//! rearranged statements of the odd-zeta identities coefficient by coefficient.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::numkernel::ExactRational;
use crate::ratseq::factorial;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Constant {
    One,
    Ln2,
    /// The Euler-polynomial series `S~` (equal to `S` when `m = 1`).
    STilde,
    Zeta(u32),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Symbol {
    pub pi_power: u32,
    pub constant: Constant,
}

/// `sum coeff * pi^pi_power * constant`, kept with no zero coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LinearForm(BTreeMap<Symbol, ExactRational>);

impl LinearForm {
    pub fn new() -> Self {
        LinearForm::default()
    }

    pub fn add(&mut self, pi_power: u32, constant: Constant, coeff: ExactRational) {
        let key = Symbol { pi_power, constant };
        let entry = self.0.entry(key).or_insert_with(ExactRational::zero);
        *entry = &*entry + coeff;
        if entry.is_zero() {
            self.0.remove(&key);
        }
    }

    pub fn scaled(&self, q: &ExactRational) -> LinearForm {
        let mut out = LinearForm::new();
        for (k, v) in &self.0 {
            out.add(k.pi_power, k.constant, v * q);
        }
        out
    }

    pub fn coefficient(&self, pi_power: u32, constant: Constant) -> ExactRational {
        self.0.get(&Symbol { pi_power, constant }).cloned().unwrap_or_else(ExactRational::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Symbol, &ExactRational)> {
        self.0.iter()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl fmt::Display for LinearForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("0");
        }
        for (i, (k, v)) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            let c = match k.constant {
                Constant::One => "1".to_string(),
                Constant::Ln2 => "ln2".to_string(),
                Constant::STilde => "S~".to_string(),
                Constant::Zeta(j) => format!("zeta({j})"),
            };
            write!(f, "({v})*pi^{}*{c}", k.pi_power)?;
        }
        Ok(())
    }
}

fn sign(k: u32) -> ExactRational {
    if k.is_multiple_of(2) {
        ExactRational::one()
    } else {
        ExactRational::from(-1)
    }
}

fn fact(k: u32) -> ExactRational {
    ExactRational::from(factorial(k as u64))
}

fn one_minus_quarter_pow(m: u32) -> ExactRational {
    ExactRational::one() - ExactRational::from(4).pow(-(m as i32))
}

/// `rhs - lhs` of the `zeta(3)` identity
/// `(pi^2/9) ln 4 - (2 pi^4/3) S = zeta(3)`.
pub fn theorem2_form() -> LinearForm {
    let mut f = LinearForm::new();
    f.add(2, Constant::Ln2, ExactRational::new(2, 9));
    f.add(4, Constant::STilde, ExactRational::new(-2, 3));
    f.add(0, Constant::Zeta(3), ExactRational::from(-1));
    f
}

/// `rhs - lhs` of the odd-zeta identity for `(1 - 4^-m) zeta(2m+1)`.
pub fn theorem3_form(m: u32) -> Result<LinearForm> {
    if m == 0 {
        return Err(Error::usage("m must be at least 1"));
    }
    let mut f = LinearForm::new();
    for j in 1..m {
        let c = sign(j) * (ExactRational::from(4).pow(j as i32 - m as i32) - ExactRational::one()) / fact(2 * j + 1);
        f.add(2 * j, Constant::Zeta(2 * m - 2 * j + 1), c);
    }
    f.add(2 * m, Constant::Ln2, -sign(m) / fact(2 * m + 1));
    f.add(2 * m + 2, Constant::STilde, sign(m) * ExactRational::new(1, 2));
    f.add(0, Constant::Zeta(2 * m + 1), -one_minus_quarter_pow(m));
    Ok(f)
}

/// `rhs - lhs` of the odd-zeta formula solved for `zeta(2m+1)`, before
/// multiplying through by `1 - 4^-m`.
pub fn milgram_form(m: u32) -> Result<LinearForm> {
    if m == 0 {
        return Err(Error::usage("m must be at least 1"));
    }
    let k = one_minus_quarter_pow(m);
    let lead = sign(m) / &k;
    let mut f = LinearForm::new();
    f.add(2 * m, Constant::Ln2, -(&lead / fact(2 * m + 1)));
    f.add(2 * m + 2, Constant::STilde, &lead * ExactRational::new(1, 2));
    for n in 1..m {
        let c = (ExactRational::from(4).pow(n as i32 - m as i32) - ExactRational::one()) * sign(n)
            / fact(2 * n + 1)
            / &k;
        f.add(2 * n, Constant::Zeta(2 * m - 2 * n + 1), c);
    }
    f.add(0, Constant::Zeta(2 * m + 1), ExactRational::from(-1));
    Ok(f)
}

/// Whether `milgram_form(m) * (1 - 4^-m)` equals `theorem3_form(m)`.
pub fn milgram_matches_theorem3(m: u32) -> Result<bool> {
    Ok(milgram_form(m)?.scaled(&one_minus_quarter_pow(m)) == theorem3_form(m)?)
}

/// Whether `theorem3_form(1) * 4/3` equals `theorem2_form()`.
pub fn theorem3_matches_theorem2() -> bool {
    theorem3_form(1).expect("m = 1").scaled(&ExactRational::new(4, 3)) == theorem2_form()
}
