use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

use super::{exact_clique_number, Graph, SearchLimits};
use crate::fractional::fractional_chromatic;
use crate::{Rational, Result};

/// The quantities the colouring guarantee is stated in.
///
/// `t' = chi_f + sqrt(omega)/3` is irrational in general, so it is not stored;
/// comparisons against it are done exactly via [`Bounds::within_t_prime`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bounds {
    pub omega: usize,
    pub chi_f: Rational,
    /// `floor(chi_f + 3 sqrt(chi_f))`.
    pub t: usize,
}

impl Bounds {
    pub fn new(omega: usize, chi_f: Rational) -> Self {
        let t = target_palette(&chi_f);
        Bounds { omega, chi_f, t }
    }

    /// Computes `omega` and `chi_f` exactly.
    pub fn compute(g: &Graph, limits: &SearchLimits) -> Result<Self> {
        let omega = exact_clique_number(g, limits)?;
        let fc = fractional_chromatic(g, limits)?;
        Ok(Bounds::new(omega, fc.total().clone()))
    }

    /// Exact test of `x <= chi_f + sqrt(omega)/3`.
    pub fn within_t_prime(&self, x: &Rational) -> bool {
        within_sqrt_margin(
            x,
            &self.chi_f,
            &Rational::from_integer(BigInt::from(self.omega)),
            &Rational::new(BigInt::from(1), BigInt::from(3)),
        )
    }

    /// Exact test of `x <= chi_f + sqrt(chi_f)/3`, the weaker form of `t'`.
    pub fn within_t_prime_chi_form(&self, x: &Rational) -> bool {
        within_sqrt_margin(
            x,
            &self.chi_f,
            &self.chi_f,
            &Rational::new(BigInt::from(1), BigInt::from(3)),
        )
    }

    pub fn t_prime_f64(&self) -> f64 {
        self.chi_f.to_f64().unwrap_or(f64::NAN) + (self.omega as f64).sqrt() / 3.0
    }
}

/// `floor(chi_f + 3 sqrt(chi_f))`.
pub fn target_palette(chi_f: &Rational) -> usize {
    floor_plus_sqrt(chi_f, &Rational::from_integer(BigInt::from(3)))
        .to_usize()
        .expect("chi_f is nonnegative")
}

/// `floor(q + coef * sqrt(q))` for nonnegative `q` and `coef`, computed exactly.
pub fn floor_plus_sqrt(q: &Rational, coef: &Rational) -> BigInt {
    assert!(!q.is_negative() && !coef.is_negative());
    let holds = |m: &BigInt| within_sqrt_margin(&Rational::from_integer(m.clone()), q, q, coef);
    let approx = q.to_f64().unwrap_or(0.0) + coef.to_f64().unwrap_or(0.0) * q.to_f64().unwrap_or(0.0).sqrt();
    let mut m = BigInt::from(approx.floor() as i64);
    while !holds(&m) {
        m -= 1;
    }
    loop {
        let next = &m + 1;
        if holds(&next) {
            m = next;
        } else {
            return m;
        }
    }
}

/// Exact test of `x <= base + coef * sqrt(radicand)` with nonnegative
/// `coef` and `radicand`.
pub fn within_sqrt_margin(x: &Rational, base: &Rational, radicand: &Rational, coef: &Rational) -> bool {
    let d = x - base;
    if d <= Rational::zero() {
        return true;
    }
    &d * &d <= coef * coef * radicand
}

/// `ceil(q)` as an integer.
pub fn ceil(q: &Rational) -> BigInt {
    let (d, r) = q.numer().div_mod_floor(q.denom());
    if r.is_zero() {
        d
    } else {
        d + 1
    }
}
