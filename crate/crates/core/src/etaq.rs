//! Dedekind eta quotients `∏ η(dτ)^e` as exact `q`-series.
//!
//! `η(dτ)^e = q^{de/24} ∏ₙ (1 − q^{dn})^e`. Only quotients whose total
//! `q`-power `Σ de/24` is a nonnegative integer are expanded.

use std::fmt;

use num_traits::Zero;

use crate::error::EtaError;
use crate::scalar::{int, Rational};
use crate::series::Series;

/// Factors `(d, e)` standing for `η(dτ)^e`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EtaQuotient {
    factors: Vec<(u32, i64)>,
}

impl EtaQuotient {
    pub fn new(factors: Vec<(u32, i64)>) -> Result<Self, EtaError> {
        if factors.iter().any(|&(d, _)| d == 0) {
            return Err(EtaError::Dilation);
        }
        Ok(EtaQuotient { factors })
    }

    pub fn factors(&self) -> &[(u32, i64)] {
        &self.factors
    }

    /// `Σ d·e / 24`.
    pub fn prefactor_power(&self) -> Rational {
        let s: i64 = self.factors.iter().map(|&(d, e)| d as i64 * e).sum();
        Rational::new(s.into(), 24.into())
    }

    /// `Σ e / 2`.
    pub fn weight(&self) -> Rational {
        let s: i64 = self.factors.iter().map(|&(_, e)| e).sum();
        Rational::new(s.into(), 2.into())
    }

    /// Concatenate factor lists; the expansion is multiplicative.
    pub fn times(&self, other: &Self) -> Self {
        EtaQuotient { factors: self.factors.iter().chain(&other.factors).copied().collect() }
    }

    /// Expand to `O(q^order)` through the logarithm:
    /// `log ∏ₙ (1 − xⁿ) = −Σₘ σ(m)/m·xᵐ`.
    pub fn expand(&self, order: i64) -> Result<Series<Rational>, EtaError> {
        let p = self.prefactor_power();
        if !p.is_integer() || p < Rational::zero() {
            return Err(EtaError::FractionalPrefactor(p.to_string()));
        }
        let shift: i64 = p.to_integer().try_into().expect("prefactor fits in i64");
        let len = (order - shift).max(0);
        let mut log = vec![Rational::zero(); len.max(1) as usize];
        for &(d, e) in &self.factors {
            let d = d as i64;
            let mut j = 1;
            while d * j < len {
                let sigma: i64 = (1..=j).filter(|k| j % k == 0).sum();
                log[(d * j) as usize] -= Rational::new((e * sigma).into(), j.into());
                j += 1;
            }
        }
        let body = Series::from_coeffs(0, log, len).exp().expect("log series has no constant term");
        Ok(body.shift(shift))
    }
}

impl fmt::Display for EtaQuotient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.factors.iter().map(|(d, e)| format!("eta({d}tau)^{e}")).collect();
        f.write_str(&parts.join(" "))
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct EtaMismatch {
    pub exponent: i64,
    pub eta_value: Rational,
    pub target_value: Rational,
}

/// Compare the expansion with `target` below their common order.
/// Returns the checked order or the first disagreement.
pub fn crosscheck(eq: &EtaQuotient, target: &Series<Rational>) -> Result<Result<i64, EtaMismatch>, EtaError> {
    let e = eq.expand(target.order())?;
    Ok(match e.first_mismatch(target) {
        None => Ok(e.order().min(target.order())),
        Some(k) => Err(EtaMismatch { exponent: k, eta_value: e.coeff(k), target_value: target.coeff(k) }),
    })
}

/// `η(τ)⁴η(6τ)⁸ / (η(2τ)⁸η(3τ)⁴)`: expands to the Hauptmodul of the six-level example.
pub fn hauptmodul_candidate() -> EtaQuotient {
    EtaQuotient { factors: vec![(1, 4), (6, 8), (2, -8), (3, -4)] }
}

/// `η(2τ)⁶η(3τ) / (η(τ)³η(6τ)²)`: expands to its weight-one form.
pub fn weight_one_candidate() -> EtaQuotient {
    EtaQuotient { factors: vec![(1, -3), (2, 6), (3, 1), (6, -2)] }
}

/// `η(τ)³η(6τ)⁹ / (η(2τ)³η(3τ)⁹)`, an alternative sometimes given for the same
/// Hauptmodul. It has the right weight and `q`-power but disagrees at `q²`.
pub fn alternate_hauptmodul() -> EtaQuotient {
    EtaQuotient { factors: vec![(1, 3), (6, 9), (2, -3), (3, -9)] }
}

/// `η(2τ)η(3τ)⁶ / (η(τ)²η(6τ)³)`, the matching alternative for the weight-one form.
pub fn alternate_weight_one() -> EtaQuotient {
    EtaQuotient { factors: vec![(2, 1), (3, 6), (1, -2), (6, -3)] }
}

/// Coefficients of `∏(1 − qⁿ)^e` by direct multiplication, for testing.
pub fn naive_product(factors: &[(u32, i64)], order: i64) -> Series<Rational> {
    let mut acc = Series::one(order);
    for &(d, e) in factors {
        let mut n = 1i64;
        while (d as i64) * n < order {
            let base = Series::from_coeffs(0, vec![int(1)], order) - Series::monomial(int(1), d as i64 * n, order);
            let f = if e >= 0 { base.pow(e) } else { base.inv().and_then(|b| b.pow(-e)) };
            acc = &acc * &f.expect("unit constant term");
            n += 1;
        }
    }
    acc
}
