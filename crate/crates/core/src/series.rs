//! Truncated formal Laurent series over a [`Scalar`] ring.
//!
//! A [`Series`] stores the coefficients of `t^val … t^(order-1)` densely and
//! remembers that everything from `t^order` on is unknown. Every operation
//! derives the result's order from the orders of its inputs, so a result
//! never claims coefficients that were not actually determined.
//!
//! Canonical form: the first stored coefficient is nonzero, and the zero
//! series has `val == order` with no stored coefficients.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::SeriesError;
use crate::scalar::{int, Jet, Rational, Scalar};

#[derive(Clone, PartialEq, Debug)]
pub struct Series<S> {
    val: i64,
    coeffs: Vec<S>,
    order: i64,
}

impl<S: Scalar> Series<S> {
    /// `O(t^order)`.
    pub fn zero(order: i64) -> Self {
        Series { val: order, coeffs: Vec::new(), order }
    }

    pub fn one(order: i64) -> Self {
        Self::monomial(S::one(), 0, order)
    }

    pub fn constant(c: S, order: i64) -> Self {
        Self::monomial(c, 0, order)
    }

    /// `c·t^exp + O(t^order)`.
    pub fn monomial(c: S, exp: i64, order: i64) -> Self {
        Self::from_coeffs(exp, vec![c], order)
    }

    /// Series whose coefficient at `t^(val+k)` is `coeffs[k]`, truncated at `order`.
    /// Coefficients past the end of `coeffs` (and below `order`) are zero.
    pub fn from_coeffs(val: i64, mut coeffs: Vec<S>, order: i64) -> Self {
        if order <= val {
            return Self::zero(order);
        }
        let len = (order - val) as usize;
        coeffs.truncate(len);
        coeffs.resize(len, S::zero());
        let mut s = Series { val, coeffs, order };
        s.normalize();
        s
    }

    fn normalize(&mut self) {
        let lead = self.coeffs.iter().position(|c| !c.is_zero());
        match lead {
            Some(0) => {}
            Some(k) => {
                self.coeffs.drain(..k);
                self.val += k as i64;
            }
            None => {
                self.coeffs.clear();
                self.val = self.order;
            }
        }
    }

    /// Lowest exponent with a nonzero coefficient (`order` for the zero series).
    pub fn valuation(&self) -> i64 {
        self.val
    }

    /// Coefficients are known for exponents `< order`.
    pub fn order(&self) -> i64 {
        self.order
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading(&self) -> Option<&S> {
        self.coeffs.first()
    }

    /// Coefficient of `t^n`.
    ///
    /// Panics if `n >= order`: that coefficient is not determined.
    pub fn coeff(&self, n: i64) -> S {
        assert!(n < self.order, "coefficient t^{n} is beyond the truncation order {}", self.order);
        if n < self.val {
            S::zero()
        } else {
            self.coeffs[(n - self.val) as usize].clone()
        }
    }

    /// `(exponent, coefficient)` pairs for the stored nonzero coefficients.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &S)> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(k, c)| (self.val + k as i64, c))
    }

    /// Coefficients of `t^from … t^(to-1)`; `to` must not exceed the order.
    pub fn coeff_range(&self, from: i64, to: i64) -> Vec<S> {
        (from..to).map(|n| self.coeff(n)).collect()
    }

    /// Drop precision down to `order` (no-op if already lower).
    pub fn truncate(&self, order: i64) -> Self {
        if order >= self.order {
            return self.clone();
        }
        let coeffs = if order > self.val { self.coeffs[..(order - self.val) as usize].to_vec() } else { Vec::new() };
        Self::from_coeffs(self.val, coeffs, order)
    }

    pub fn map<T: Scalar>(&self, f: impl Fn(&S) -> T) -> Series<T> {
        Series::from_coeffs(self.val, self.coeffs.iter().map(f).collect(), self.order)
    }

    /// Multiply by `t^k`.
    pub fn shift(&self, k: i64) -> Self {
        Series { val: self.val + k, coeffs: self.coeffs.clone(), order: self.order + k }
    }

    pub fn mul_scalar(&self, c: &S) -> Self {
        Self::from_coeffs(self.val, self.coeffs.iter().map(|x| x.clone() * c).collect(), self.order)
    }

    pub fn scale(&self, r: &Rational) -> Self {
        Self::from_coeffs(self.val, self.coeffs.iter().map(|x| x.scale(r)).collect(), self.order)
    }

    fn combine(&self, other: &Self, f: impl Fn(S, &S) -> S) -> Self {
        let order = self.order.min(other.order);
        let val = self.val.min(other.val).min(order);
        let coeffs = (val..order)
            .map(|n| {
                let a = if n >= self.val { self.coeffs[(n - self.val) as usize].clone() } else { S::zero() };
                let zero = S::zero();
                let b = if n >= other.val { &other.coeffs[(n - other.val) as usize] } else { &zero };
                f(a, b)
            })
            .collect();
        Self::from_coeffs(val, coeffs, order)
    }

    fn product(&self, other: &Self) -> Self {
        let order = (self.val + other.order).min(other.val + self.order);
        let val = self.val + other.val;
        if self.is_zero() || other.is_zero() || order <= val {
            return Self::zero(order);
        }
        let len = (order - val) as usize;
        let mut out = vec![S::zero(); len];
        for (i, a) in self.coeffs.iter().enumerate().take(len) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(len - i) {
                out[i + j] = out[i + j].clone() + &(a.clone() * b);
            }
        }
        Self::from_coeffs(val, out, order)
    }

    /// Integer power; negative exponents go through the inverse.
    pub fn pow(&self, e: i64) -> Result<Self, SeriesError> {
        if e < 0 {
            return self.inv()?.pow(-e);
        }
        if e == 0 {
            let rel = if self.is_zero() { 1 } else { (self.order - self.val).max(1) };
            return Ok(Self::one(rel));
        }
        let mut base = self.clone();
        let mut e = e as u64;
        let mut acc: Option<Self> = None;
        loop {
            if e & 1 == 1 {
                acc = Some(match acc {
                    None => base.clone(),
                    Some(a) => &a * &base,
                });
            }
            e >>= 1;
            if e == 0 {
                break;
            }
            base = &base * &base;
        }
        Ok(acc.expect("positive exponent"))
    }

    /// `1/self`.
    pub fn inv(&self) -> Result<Self, SeriesError> {
        let rel = (self.order - self.val).max(1);
        Self::one(rel).checked_div(self)
    }

    /// `self / other`.
    pub fn checked_div(&self, other: &Self) -> Result<Self, SeriesError> {
        let lead = other.leading().ok_or(SeriesError::DivisionByZero)?;
        let inv = lead.try_inv().ok_or_else(|| SeriesError::NotInvertible(lead.to_string()))?;
        let rel = other.order - other.val;
        let val = self.val - other.val;
        let order = (self.order - other.val).min(self.val - other.val + rel);
        let cap = order.abs().max(1);
        if val < -cap {
            return Err(SeriesError::PoleTooDeep { valuation: val, cap });
        }
        if self.is_zero() || order <= val {
            return Ok(Self::zero(order));
        }
        let len = (order - val) as usize;
        let mut out: Vec<S> = Vec::with_capacity(len);
        for k in 0..len {
            let mut acc = if k < self.coeffs.len() { self.coeffs[k].clone() } else { S::zero() };
            for j in 1..=k.min(other.coeffs.len().saturating_sub(1)) {
                acc = acc - &(other.coeffs[j].clone() * &out[k - j]);
            }
            out.push(acc * &inv);
        }
        Ok(Self::from_coeffs(val, out, order))
    }

    /// `outer(inner)`: substitute `inner` (valuation ≥ 1) for the variable of `self`.
    pub fn compose(&self, inner: &Self) -> Result<Self, SeriesError> {
        let v = inner.valuation();
        if v < 1 {
            return Err(SeriesError::InnerValuation(v));
        }
        if self.val < 0 {
            return Err(SeriesError::OuterValuation(self.val));
        }
        // outer = c0 + t(c1 + t(c2 + … t(c_{N-1} + O(t))))
        let cap = inner.order.max(v.saturating_mul(self.order)).max(1);
        let mut acc = Self::zero(0);
        for k in (0..self.order).rev() {
            acc = &acc * inner;
            let c = self.coeff(k);
            if !c.is_zero() {
                acc = &acc + &Self::constant(c, cap);
            }
        }
        Ok(acc)
    }

    /// Compositional inverse of a series with valuation exactly 1 (Lagrange inversion).
    pub fn reverse(&self) -> Result<Self, SeriesError> {
        if self.val != 1 {
            return Err(SeriesError::ReverseValuation(self.val));
        }
        let n_max = self.order;
        // w = t / s(t); [t^n] r = (1/n) [t^(n-1)] w^n
        let w = self.shift(-1).inv()?;
        let mut coeffs = Vec::with_capacity(n_max as usize);
        let mut power = w.clone();
        for n in 1..n_max {
            coeffs.push(power.coeff(n - 1).scale(&Rational::new(1.into(), n.into())));
            if n + 1 < n_max {
                power = &power * &w;
            }
        }
        Ok(Self::from_coeffs(1, coeffs, n_max))
    }

    /// `exp(self)` for a series without constant term, from `E' = s'E`.
    pub fn exp(&self) -> Result<Self, SeriesError> {
        if self.val < 1 {
            return Err(SeriesError::ExpDomain);
        }
        let order = self.order;
        let mut e: Vec<S> = Vec::with_capacity(order.max(0) as usize);
        if order <= 0 {
            return Ok(Self::zero(order));
        }
        e.push(S::one());
        for n in 1..order {
            let mut acc = S::zero();
            for k in self.val..=n {
                let sk = self.coeff(k);
                if !sk.is_zero() {
                    acc = acc + &(sk.scale(&int(k)) * &e[(n - k) as usize]);
                }
            }
            e.push(acc.scale(&Rational::new(1.into(), n.into())));
        }
        Ok(Self::from_coeffs(0, e, order))
    }

    /// `log(self)` for a series with constant term 1, as `∫ s'/s`.
    pub fn log(&self) -> Result<Self, SeriesError> {
        if self.is_zero() || self.val != 0 || self.coeffs[0] != S::one() {
            return Err(SeriesError::LogDomain);
        }
        self.derivative().checked_div(self)?.integral()
    }

    /// `t·d/dt`.
    pub fn theta(&self) -> Self {
        let coeffs = self.coeffs.iter().enumerate().map(|(k, c)| c.scale(&int(self.val + k as i64))).collect();
        Self::from_coeffs(self.val, coeffs, self.order)
    }

    /// `d/dt`.
    pub fn derivative(&self) -> Self {
        let coeffs = self.coeffs.iter().enumerate().map(|(k, c)| c.scale(&int(self.val + k as i64))).collect();
        Self::from_coeffs(self.val - 1, coeffs, self.order - 1)
    }

    /// Antiderivative with zero constant of integration.
    pub fn integral(&self) -> Result<Self, SeriesError> {
        if self.val <= -1 && self.order > -1 && !self.coeff(-1).is_zero() {
            return Err(SeriesError::Residue);
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(k, c)| {
                let n = self.val + k as i64 + 1;
                if n == 0 {
                    S::zero()
                } else {
                    c.scale(&Rational::new(1.into(), n.into()))
                }
            })
            .collect();
        Ok(Self::from_coeffs(self.val + 1, coeffs, self.order + 1))
    }

    /// Divide the coefficient of `t^m` by `m³`: the three-fold `θ`-antiderivative.
    pub fn eichler(&self) -> Result<Self, SeriesError> {
        if self.val < 1 {
            return Err(SeriesError::EichlerDomain(self.val));
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(k, c)| {
                let m = self.val + k as i64;
                c.scale(&Rational::new(1.into(), (m * m * m).into()))
            })
            .collect();
        Ok(Self::from_coeffs(self.val, coeffs, self.order))
    }

    /// First exponent below the common order where the two series differ.
    pub fn first_mismatch(&self, other: &Self) -> Option<i64> {
        let d = self - other;
        if d.is_zero() {
            None
        } else {
            Some(d.val)
        }
    }

    /// `self == other` on every exponent below `order`, and both are known that far.
    pub fn agrees_to(&self, other: &Self, order: i64) -> bool {
        let d = self - other;
        d.order >= order && (d.is_zero() || d.val >= order)
    }

    /// Render with a chosen variable name, e.g. `1 + 3q + 3q^2 + O(q^3)`.
    pub fn display_in(&self, var: &str) -> String {
        let mut parts: Vec<String> = Vec::new();
        for (n, c) in self.terms() {
            let c = c.to_string();
            let mono = match n {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{n}"),
            };
            let term = if mono.is_empty() {
                c
            } else if c == "1" {
                mono
            } else if c == "-1" {
                format!("-{mono}")
            } else if c.contains(' ') || c.contains('/') {
                format!("({c}){mono}")
            } else {
                format!("{c}{mono}")
            };
            parts.push(term);
        }
        parts.push(format!("O({var}^{})", self.order));
        parts.join(" + ").replace("+ -", "- ")
    }
}

impl<S: Scalar> fmt::Display for Series<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_in("t"))
    }
}

impl<'a, S: Scalar> Add<&'a Series<S>> for &'a Series<S> {
    type Output = Series<S>;
    fn add(self, rhs: &'a Series<S>) -> Series<S> {
        self.combine(rhs, |a, b| a + b)
    }
}

impl<'a, S: Scalar> Sub<&'a Series<S>> for &'a Series<S> {
    type Output = Series<S>;
    fn sub(self, rhs: &'a Series<S>) -> Series<S> {
        self.combine(rhs, |a, b| a - b)
    }
}

impl<'a, S: Scalar> Mul<&'a Series<S>> for &'a Series<S> {
    type Output = Series<S>;
    fn mul(self, rhs: &'a Series<S>) -> Series<S> {
        self.product(rhs)
    }
}

impl<S: Scalar> Neg for &Series<S> {
    type Output = Series<S>;
    fn neg(self) -> Series<S> {
        Series::from_coeffs(self.val, self.coeffs.iter().map(|c| -c.clone()).collect(), self.order)
    }
}

macro_rules! owned_binop {
    ($tr:ident, $m:ident) => {
        impl<S: Scalar> $tr for Series<S> {
            type Output = Series<S>;
            fn $m(self, rhs: Series<S>) -> Series<S> {
                (&self).$m(&rhs)
            }
        }
    };
}
owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);

impl Series<Rational> {
    /// Build from integer/rational literals starting at `val`.
    pub fn from_rationals(val: i64, coeffs: &[Rational], order: i64) -> Self {
        Self::from_coeffs(val, coeffs.to_vec(), order)
    }

    /// Lift into jets with all derivative slots zero.
    pub fn lift(&self) -> Series<Jet> {
        self.map(|c| Jet::constant(c.clone()))
    }
}

impl Series<Jet> {
    /// The value part of every coefficient.
    pub fn base_part(&self) -> Series<Rational> {
        self.map(|c| c.value().clone())
    }

    /// The `εᵢ` part of every coefficient: the exact `∂/∂ρᵢ` of the series.
    pub fn eps_part(&self, i: usize) -> Series<Rational> {
        self.map(|c| c.eps(i))
    }
}

/// Exact polynomial with coefficients from degree 0 upward.
#[derive(Clone, PartialEq, Debug)]
pub struct Poly<S> {
    coeffs: Vec<S>,
}

impl<S: Scalar> Poly<S> {
    pub fn new(mut coeffs: Vec<S>) -> Self {
        while coeffs.last().is_some_and(Scalar::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    /// `∏ (t - r)` over the given roots.
    pub fn from_roots(roots: &[S]) -> Self {
        roots.iter().fold(Poly::new(vec![S::one()]), |p, r| p.mul(&Poly::new(vec![-r.clone(), S::one()])))
    }

    pub fn coeffs(&self) -> &[S] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> S {
        self.coeffs.get(k).cloned().unwrap_or_else(S::zero)
    }

    /// Degree, with the zero polynomial reported as `None`.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval(&self, x: &S) -> S {
        self.coeffs.iter().rev().fold(S::zero(), |acc, c| acc * x + c)
    }

    pub fn derivative(&self) -> Self {
        Poly::new(self.coeffs.iter().enumerate().skip(1).map(|(k, c)| c.scale(&int(k as i64))).collect())
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Poly::new((0..n).map(|k| self.coeff(k) + &other.coeff(k)).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.coeffs.is_empty() || other.coeffs.is_empty() {
            return Poly::new(Vec::new());
        }
        let mut out = vec![S::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + &(a.clone() * b);
            }
        }
        Poly::new(out)
    }

    pub fn scale(&self, r: &Rational) -> Self {
        Poly::new(self.coeffs.iter().map(|c| c.scale(r)).collect())
    }

    /// `t^k · self`.
    pub fn shift(&self, k: usize) -> Self {
        let mut coeffs = vec![S::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Poly::new(coeffs)
    }

    /// Exact product with a series: precision is inherited from the series alone.
    pub fn mul_series(&self, s: &Series<S>) -> Series<S> {
        let low = self.coeffs.iter().position(|c| !c.is_zero());
        let Some(low) = low else {
            return Series::zero(s.order());
        };
        let low = low as i64;
        let order = s.order() + low;
        let as_series = Series::from_coeffs(0, self.coeffs.clone(), order - s.valuation());
        let prod = &as_series * s;
        debug_assert!(prod.order() >= order);
        prod.truncate(order)
    }

    /// `self(inner)` for an inner series of valuation ≥ 1.
    pub fn compose(&self, inner: &Series<S>) -> Result<Series<S>, SeriesError> {
        let deg = self.coeffs.len() as i64;
        let order = inner.order().max(deg).max(1);
        Series::from_coeffs(0, self.coeffs.clone(), order).compose(inner)
    }

    pub fn to_series(&self, order: i64) -> Series<S> {
        Series::from_coeffs(0, self.coeffs.clone(), order)
    }
}

impl<S: Scalar> fmt::Display for Poly<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        let shown = self.to_series(self.coeffs.len() as i64).display_in("t");
        f.write_str(shown.rsplit_once(" + O(").map_or(shown.as_str(), |(body, _)| body))
    }
}

/// `plain(t) + log(t)·log_part(t)`: the shape of the logarithmic Frobenius solution.
#[derive(Clone, PartialEq, Debug)]
pub struct LogSeries<S> {
    pub plain: Series<S>,
    pub log_part: Series<S>,
}

impl<S: Scalar> LogSeries<S> {
    pub fn new(plain: Series<S>, log_part: Series<S>) -> Self {
        LogSeries { plain, log_part }
    }

    /// A log-free series.
    pub fn holomorphic(plain: Series<S>) -> Self {
        let order = plain.order();
        LogSeries { plain, log_part: Series::zero(order) }
    }

    /// `(A + B log t)' = (A' + B/t) + B' log t`.
    pub fn derivative(&self) -> Self {
        LogSeries {
            plain: &self.plain.derivative() + &self.log_part.shift(-1),
            log_part: self.log_part.derivative(),
        }
    }

    pub fn mul_poly(&self, p: &Poly<S>) -> Self {
        LogSeries { plain: p.mul_series(&self.plain), log_part: p.mul_series(&self.log_part) }
    }

    pub fn mul_series(&self, s: &Series<S>) -> Self {
        LogSeries { plain: &self.plain * s, log_part: &self.log_part * s }
    }

    pub fn add(&self, other: &Self) -> Self {
        LogSeries { plain: &self.plain + &other.plain, log_part: &self.log_part + &other.log_part }
    }

    pub fn shift(&self, k: i64) -> Self {
        LogSeries { plain: self.plain.shift(k), log_part: self.log_part.shift(k) }
    }

    pub fn is_zero(&self) -> bool {
        self.plain.is_zero() && self.log_part.is_zero()
    }

    pub fn order(&self) -> i64 {
        self.plain.order().min(self.log_part.order())
    }

    /// Lowest exponent where either part is nonzero.
    pub fn first_nonzero(&self) -> Option<i64> {
        [&self.plain, &self.log_part].iter().filter(|s| !s.is_zero()).map(|s| s.valuation()).min()
    }
}

impl LogSeries<Jet> {
    pub fn eps_part(&self, i: usize) -> LogSeries<Rational> {
        LogSeries { plain: self.plain.eps_part(i), log_part: self.log_part.eps_part(i) }
    }

    pub fn base_part(&self) -> LogSeries<Rational> {
        LogSeries { plain: self.plain.base_part(), log_part: self.log_part.base_part() }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;

    fn s(val: i64, c: &[i64], order: i64) -> Series<Rational> {
        Series::from_coeffs(val, c.iter().map(|&x| int(x)).collect(), order)
    }

    #[test]
    fn binomial_square() {
        let a = s(0, &[1, 3], 3);
        assert_eq!(&a * &a, s(0, &[1, 6, 9], 3));
    }

    #[test]
    fn square_of_weight_one_expansion() {
        let f = s(0, &[1, 3, 3, 3], 4);
        assert_eq!(&f * &f, s(0, &[1, 6, 15, 24], 4));
    }

    #[test]
    fn divide_out_monomial() {
        let a = s(1, &[1, -2], 3);
        let q = s(1, &[1], 10);
        let r = a.checked_div(&q).unwrap();
        assert_eq!(r, s(0, &[1, -2], 2));
        assert_eq!(r.valuation(), 0);
    }

    #[test]
    fn division_errors() {
        let a = s(0, &[1, 1], 5);
        assert_eq!(a.checked_div(&Series::zero(5)), Err(SeriesError::DivisionByZero));
        let j = Series::from_coeffs(0, vec![Jet::variable(int(0), 0)], 5);
        assert!(matches!(a.lift().checked_div(&j), Err(SeriesError::NotInvertible(_))));
    }

    #[test]
    fn canonical_zero_and_order_tracking() {
        let a = s(0, &[1, 2, 3], 3);
        let z = &a - &a;
        assert!(z.is_zero());
        assert_eq!(z.valuation(), z.order());
        // t·O(t^3) = O(t^4) on the right, and (1+..)(t + O(t^5)) is only known to t^3
        let b = s(1, &[1], 5);
        assert_eq!((&a * &b).order(), 4);
    }

    #[test]
    fn compose_examples() {
        let outer = s(0, &[1, 3, 15, 93], 4);
        let inner = s(1, &[1, -4, 10], 4);
        assert_eq!(outer.compose(&inner).unwrap(), s(0, &[1, 3, 3, 3], 4));

        let x = s(0, &[2, 0, 5, 7], 4);
        let id = s(1, &[1], 4);
        assert_eq!(x.compose(&id).unwrap(), x);

        let sq = s(2, &[1], 10);
        let inner = s(1, &[1, -4], 3);
        assert_eq!(sq.compose(&inner).unwrap(), s(2, &[1, -8], 4));
    }

    #[test]
    fn compose_rejects_constant_inner() {
        let outer = s(0, &[1, 1], 4);
        let inner = s(0, &[1, 1], 4);
        assert_eq!(outer.compose(&inner), Err(SeriesError::InnerValuation(0)));
    }

    #[test]
    fn reverse_examples() {
        let q = s(1, &[1, 4, 22, 140], 5);
        assert_eq!(q.reverse().unwrap(), s(1, &[1, -4, 10, -20], 5));
        let id = s(1, &[1], 6);
        assert_eq!(id.reverse().unwrap(), id);
        let f = s(1, &[1, 0, 5], 9);
        assert_eq!(f.reverse().unwrap().reverse().unwrap(), f);
        assert_eq!(s(2, &[1], 4).reverse(), Err(SeriesError::ReverseValuation(2)));
    }

    #[test]
    fn exp_examples() {
        assert_eq!(Series::<Rational>::zero(5).exp().unwrap(), Series::one(5));
        let arg = Series::from_coeffs(1, vec![int(4), int(14), rat(220, 3)], 4);
        assert_eq!(arg.exp().unwrap(), s(0, &[1, 4, 22, 140], 4));
        assert_eq!(s(0, &[1, 1], 3).exp(), Err(SeriesError::ExpDomain));
    }

    #[test]
    fn log_mercator() {
        let l = s(0, &[1, 1], 6).log().unwrap();
        let expect = Series::from_coeffs(1, vec![int(1), rat(-1, 2), rat(1, 3), rat(-1, 4), rat(1, 5)], 6);
        assert_eq!(l, expect);
        assert_eq!(s(0, &[2, 1], 3).log(), Err(SeriesError::LogDomain));
    }

    #[test]
    fn theta_examples() {
        assert_eq!(s(1, &[1, -4, 10], 4).theta(), s(1, &[1, -8, 30], 4));
        assert!(Series::<Rational>::one(4).theta().is_zero());
        let x = s(0, &[5, 1, 2, 3], 4);
        let t3 = x.theta().theta().theta();
        for n in 0..4 {
            assert_eq!(t3.coeff(n), x.coeff(n) * int(n * n * n));
        }
    }

    #[test]
    fn eichler_examples() {
        let h = s(1, &[1, -2, -3, 4], 5);
        let e = Series::from_coeffs(1, vec![int(1), rat(-1, 4), rat(-1, 9), rat(1, 16)], 5);
        assert_eq!(h.eichler().unwrap(), e);
        assert_eq!(s(1, &[1], 2).eichler().unwrap(), s(1, &[1], 2));
        let x = s(2, &[5, 7], 4);
        assert_eq!(x.eichler().unwrap().theta().theta().theta(), x);
        assert_eq!(s(0, &[1, 1], 3).eichler(), Err(SeriesError::EichlerDomain(0)));
    }

    #[test]
    fn laurent_derivative_and_integral() {
        // d/dt log-free: (1/t + 1 + t)' = -1/t^2 + 1
        let x = s(-1, &[1, 1, 1], 3);
        assert_eq!(x.derivative(), s(-2, &[-1, 0, 1], 2));
        assert_eq!(x.integral(), Err(SeriesError::Residue));
        let y = s(0, &[1, 2], 4);
        assert_eq!(y.integral().unwrap(), s(1, &[1, 1], 5));
    }

    #[test]
    fn log_series_derivative() {
        // (t log t)' = 1 + log t
        let l = LogSeries::new(Series::zero(5), s(1, &[1], 5));
        let d = l.derivative();
        assert_eq!(d.plain, s(0, &[1], 4));
        assert_eq!(d.log_part, s(0, &[1], 4));
    }

    #[test]
    fn poly_from_roots() {
        let p = Poly::from_roots(&[int(0), int(1), rat(1, 9)]);
        assert_eq!(p.coeffs(), &[int(0), rat(1, 9), rat(-10, 9), int(1)]);
        assert_eq!(p.eval(&int(1)), int(0));
        assert_eq!(p.derivative().coeff(0), rat(1, 9));
    }

    #[test]
    fn poly_times_series_is_exact() {
        let p = Poly::new(vec![int(0), int(1), int(1)]);
        let x = s(0, &[1, 1], 4);
        let r = p.mul_series(&x);
        assert_eq!(r.order(), 5);
        assert_eq!(r, s(1, &[1, 2, 1], 5));
    }

    #[test]
    fn pow_examples() {
        let x = s(0, &[1, 1], 5);
        assert_eq!(x.pow(2).unwrap(), s(0, &[1, 2, 1], 5));
        assert_eq!(x.pow(0).unwrap(), Series::one(5));
        let inv = x.pow(-1).unwrap();
        assert_eq!(inv, s(0, &[1, -1, 1, -1, 1], 5));
    }

    #[test]
    fn display_form() {
        let x = Series::from_coeffs(0, vec![int(1), int(-3), rat(1, 2)], 3);
        assert_eq!(x.display_in("q"), "1 - 3q + (1/2)q^2 + O(q^3)");
    }
}
