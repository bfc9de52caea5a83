//! The uniformizing operator of a punctured sphere and its Frobenius basis at `t = 0`.
//!
//! The sphere is `P¹ ∖ {0, ∞, α₁, …, α_{n-2}}`. With `P(t) = t·∏(t − αⱼ)` and
//! `P₁(t) = Σ ρᵢ tⁱ` (top coefficient fixed to `(1 − n/2)²`), the operator is
//!
//! ```text
//! L(y) = (P y')' + P₁ y
//! ```
//!
//! `t = 0` is regular singular with a double indicial root, so the local
//! solutions are `y = 1 + a₁t + …` and `ŷ = y·log t + b` with `b(0) = 0`.
//! Coefficients come from a recurrence expanded directly from `L`; nothing
//! is transcribed by hand.

use std::fmt;

use num_traits::{One, Zero};

use crate::error::FrobeniusError;
use crate::scalar::{int, Jet, Rational, Scalar};
use crate::series::{LogSeries, Poly, Series};

/// Punctures and accessory values of an `n`-punctured sphere.
#[derive(Clone, Debug, PartialEq)]
pub struct SurfaceConfig {
    punctures: Vec<Rational>,
    accessory: Vec<Rational>,
    order: i64,
    fuchsian_value: Option<Vec<Rational>>,
}

impl SurfaceConfig {
    /// `punctures` lists the `n − 2` nonzero finite punctures; `accessory` the
    /// `n − 3` free values `ρ₀ … ρ_{n-4}`.
    pub fn new(punctures: Vec<Rational>, accessory: Vec<Rational>, order: i64) -> Result<Self, FrobeniusError> {
        if punctures.is_empty() {
            return Err(FrobeniusError::TooFewPunctures);
        }
        for (k, a) in punctures.iter().enumerate() {
            if Zero::is_zero(a) {
                return Err(FrobeniusError::ZeroPuncture);
            }
            if punctures[..k].contains(a) {
                return Err(FrobeniusError::RepeatedPuncture(a.to_string()));
            }
        }
        let expected = punctures.len() - 1;
        if accessory.len() != expected {
            return Err(FrobeniusError::AccessoryCount { expected, got: accessory.len() });
        }
        if order < 1 {
            return Err(FrobeniusError::Order);
        }
        Ok(SurfaceConfig { punctures, accessory, order, fuchsian_value: None })
    }

    /// Declare the Fuchsian value of the accessory parameters for this sphere.
    /// The value is taken on trust; nothing here can certify it.
    pub fn with_fuchsian_value(mut self, value: Vec<Rational>) -> Result<Self, FrobeniusError> {
        if value.len() != self.accessory.len() {
            return Err(FrobeniusError::AccessoryCount { expected: self.accessory.len(), got: value.len() });
        }
        self.fuchsian_value = Some(value);
        Ok(self)
    }

    /// Same punctures and order, different accessory values.
    pub fn with_accessory(&self, accessory: Vec<Rational>) -> Result<Self, FrobeniusError> {
        let mut cfg = SurfaceConfig::new(self.punctures.clone(), accessory, self.order)?;
        cfg.fuchsian_value = self.fuchsian_value.clone();
        Ok(cfg)
    }

    pub fn with_order(&self, order: i64) -> Result<Self, FrobeniusError> {
        if order < 1 {
            return Err(FrobeniusError::Order);
        }
        Ok(SurfaceConfig { order, ..self.clone() })
    }

    /// Number of punctures including `0` and `∞`.
    pub fn n(&self) -> usize {
        self.punctures.len() + 2
    }

    /// Number of free accessory parameters, `n − 3`.
    pub fn free_parameters(&self) -> usize {
        self.accessory.len()
    }

    pub fn punctures(&self) -> &[Rational] {
        &self.punctures
    }

    pub fn accessory(&self) -> &[Rational] {
        &self.accessory
    }

    pub fn order(&self) -> i64 {
        self.order
    }

    pub fn fuchsian_value(&self) -> Option<&[Rational]> {
        self.fuchsian_value.as_deref()
    }

    pub fn is_at_fuchsian_value(&self) -> bool {
        self.fuchsian_value.as_deref() == Some(&self.accessory[..])
    }

    /// `κ = (−1)^{n−2} ∏ αⱼ = P'(0)`.
    pub fn kappa(&self) -> Rational {
        let prod = self.punctures.iter().fold(<Rational as One>::one(), |acc, a| acc * a);
        if self.punctures.len() % 2 == 0 {
            prod
        } else {
            -prod
        }
    }

    /// The fixed top accessory coefficient `(1 − n/2)²`.
    pub fn top_accessory(&self) -> Rational {
        let h = Rational::new((2 - self.n() as i64).into(), 2.into());
        &h * &h
    }
}

/// A linear differential operator `Σ c_k(t)·dᵏ/dtᵏ` with polynomial coefficients.
#[derive(Clone, Debug, PartialEq)]
pub struct DiffOperator<S> {
    coeffs: Vec<Poly<S>>,
}

impl<S: Scalar> DiffOperator<S> {
    /// `coeffs[k]` multiplies the `k`-th derivative.
    pub fn new(coeffs: Vec<Poly<S>>) -> Self {
        DiffOperator { coeffs }
    }

    pub fn coeffs(&self) -> &[Poly<S>] {
        &self.coeffs
    }

    pub fn differential_order(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    /// Apply to a (possibly logarithmic) series.
    pub fn apply(&self, v: &LogSeries<S>) -> LogSeries<S> {
        let mut deriv = v.clone();
        let mut acc: Option<LogSeries<S>> = None;
        for (k, c) in self.coeffs.iter().enumerate() {
            if k > 0 {
                deriv = deriv.derivative();
            }
            if c.degree().is_none() {
                continue;
            }
            let term = deriv.mul_poly(c);
            acc = Some(match acc {
                None => term,
                Some(a) => a.add(&term),
            });
        }
        acc.unwrap_or_else(|| LogSeries::holomorphic(Series::zero(v.order())))
    }

    pub fn apply_series(&self, v: &Series<S>) -> LogSeries<S> {
        self.apply(&LogSeries::holomorphic(v.clone()))
    }

    /// `self ∘ inner`, expanded with the Leibniz rule.
    pub fn compose(&self, inner: &DiffOperator<S>) -> DiffOperator<S> {
        let top = self.differential_order() + inner.differential_order();
        let mut out = vec![Poly::new(Vec::new()); top + 1];
        for (k, a) in self.coeffs.iter().enumerate() {
            for (j, b) in inner.coeffs.iter().enumerate() {
                // a·Dᵏ(b·Dʲ) = a·Σ_r C(k,r) b^{(r)} D^{j+k−r}
                let mut b_r = b.clone();
                let mut binom: i64 = 1;
                for r in 0..=k {
                    let slot = j + k - r;
                    out[slot] = out[slot].add(&a.mul(&b_r).scale(&int(binom)));
                    b_r = b_r.derivative();
                    binom = binom * (k - r) as i64 / (r + 1) as i64;
                }
            }
        }
        DiffOperator::new(out)
    }
}

/// The operator `L` of a configuration, over a coefficient ring `S`.
#[derive(Clone, Debug, PartialEq)]
pub struct FuchsianOperator<S> {
    n: usize,
    p: Poly<S>,
    p1: Poly<S>,
    kappa: Rational,
}

/// `L` with rational accessory values.
pub fn build_operator(cfg: &SurfaceConfig) -> FuchsianOperator<Rational> {
    FuchsianOperator::build(cfg, |_, r| r.clone())
}

/// `L` with `ε_i` seeded on each free accessory parameter `ρ_i`.
pub fn build_jet_operator(cfg: &SurfaceConfig) -> FuchsianOperator<Jet> {
    FuchsianOperator::build(cfg, |i, r| Jet::variable(r.clone(), i))
}

impl<S: Scalar> FuchsianOperator<S> {
    /// `seed(i, ρᵢ)` turns each free accessory value into a scalar.
    pub fn build(cfg: &SurfaceConfig, seed: impl Fn(usize, &Rational) -> S) -> Self {
        let mut roots: Vec<S> = vec![S::zero()];
        roots.extend(cfg.punctures().iter().map(|a| S::from_rational(a.clone())));
        let p = Poly::from_roots(&roots);
        let mut p1: Vec<S> = cfg.accessory().iter().enumerate().map(|(i, r)| seed(i, r)).collect();
        p1.push(S::from_rational(cfg.top_accessory()));
        FuchsianOperator { n: cfg.n(), p, p1: Poly::new(p1), kappa: cfg.kappa() }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `P(t) = t ∏ (t − αⱼ)`, monic of degree `n − 1`.
    pub fn p(&self) -> &Poly<S> {
        &self.p
    }

    /// `P₁(t) = Σ ρᵢ tⁱ`.
    pub fn p1(&self) -> &Poly<S> {
        &self.p1
    }

    pub fn kappa(&self) -> &Rational {
        &self.kappa
    }

    /// `L` as a differential operator: `P·D² + P'·D + P₁`.
    pub fn as_diff_operator(&self) -> DiffOperator<S> {
        DiffOperator::new(vec![self.p1.clone(), self.p.derivative(), self.p.clone()])
    }

    pub fn apply(&self, v: &LogSeries<S>) -> LogSeries<S> {
        self.as_diff_operator().apply(v)
    }

    pub fn recurrence(&self) -> Recurrence<S> {
        derive_recurrence(self)
    }

    /// `Lᵢ = t²P·D² + t(tP' − 2iP)·D + (i(i+1)P − i·tP' + t²P₁)`, which
    /// annihilates `tⁱ·u` for every solution `u` of `L`.
    pub fn build_li(&self, i: usize) -> DiffOperator<S> {
        let i_r = int(i as i64);
        let dp = self.p.derivative();
        let t_dp = dp.shift(1);
        let c2 = self.p.shift(2);
        let c1 = t_dp.shift(1).add(&self.p.shift(1).scale(&(-int(2) * &i_r)));
        let c0 = self
            .p
            .scale(&(&i_r * (&i_r + int(1))))
            .add(&t_dp.scale(&-i_r.clone()))
            .add(&self.p1.shift(2));
        DiffOperator::new(vec![c0, c1, c2])
    }

    /// `Mᵢ = Lᵢ ∘ L`, fourth order.
    pub fn compose_mi(&self, i: usize) -> DiffOperator<S> {
        self.build_li(i).compose(&self.as_diff_operator())
    }
}

impl<S: Scalar> fmt::Display for FuchsianOperator<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "L = (P y')' + P1 y,  P = {},  P1 = {},  kappa = {}", self.p, self.p1, self.kappa)
    }
}

/// The coefficient recurrence of `L` at `t = 0`:
///
/// ```text
/// κ(m+1)²·v_{m+1} = g_m + Σ_{j=0}^{n−3} c_j(m)·v_{m−j},
/// c_j(m) = −(p_{j+2}·(m+1)(m−j) + ρ_j)
/// ```
///
/// where `g` is the right-hand side of `L(v) = g` and `p_k` are the
/// coefficients of `P`.
#[derive(Clone, Debug)]
pub struct Recurrence<S> {
    kappa: Rational,
    p: Poly<S>,
    p1: Poly<S>,
    width: usize,
}

/// Expand `L` coefficientwise into its recurrence.
pub fn derive_recurrence<S: Scalar>(op: &FuchsianOperator<S>) -> Recurrence<S> {
    Recurrence { kappa: op.kappa.clone(), p: op.p.clone(), p1: op.p1.clone(), width: op.n - 2 }
}

impl<S: Scalar> Recurrence<S> {
    /// Factor in front of `v_{m+1}`: `κ(m+1)²`.
    pub fn lead(&self, m: i64) -> Rational {
        &self.kappa * int((m + 1) * (m + 1))
    }

    /// Coefficient of `v_{m−j}` on the right, `0 ≤ j ≤ n − 3`.
    pub fn coefficient(&self, j: usize, m: i64) -> S {
        let pk = self.p.coeff(j + 2);
        let rho = self.p1.coeff(j);
        -(pk.scale(&int((m + 1) * (m - j as i64))) + &rho)
    }

    /// Number of terms including the leading one (`n − 1`).
    pub fn terms(&self) -> usize {
        self.width + 1
    }

    /// Solve `L(v) = rhs` with `v(0) = v0`. The result is known to one order
    /// past the right-hand side.
    pub fn solve(&self, rhs: &Series<S>, v0: S, order: i64) -> Series<S> {
        let order = order.min(rhs.order() + 1);
        let mut v: Vec<S> = Vec::with_capacity(order.max(0) as usize);
        if order <= 0 {
            return Series::zero(order);
        }
        v.push(v0);
        for m in 0..order - 1 {
            let mut acc = rhs.coeff(m);
            for j in 0..self.width {
                let idx = m - j as i64;
                if idx < 0 {
                    break;
                }
                acc = acc + &(self.coefficient(j, m) * &v[idx as usize]);
            }
            v.push(acc.scale(&self.lead(m).recip()));
        }
        Series::from_coeffs(0, v, order)
    }
}

/// `{y, ŷ = y·log t + b}` normalized by `y(0) = 1`, `b(0) = 0`.
#[derive(Clone, Debug, PartialEq)]
pub struct FrobeniusBasis<S> {
    pub y: Series<S>,
    pub b: Series<S>,
}

impl<S: Scalar> FrobeniusBasis<S> {
    /// The logarithmic solution as `b + y·log t`.
    pub fn y_hat(&self) -> LogSeries<S> {
        LogSeries::new(self.b.clone(), self.y.clone())
    }

    pub fn order(&self) -> i64 {
        self.y.order().min(self.b.order())
    }
}

impl FrobeniusBasis<Jet> {
    pub fn base_part(&self) -> FrobeniusBasis<Rational> {
        FrobeniusBasis { y: self.y.base_part(), b: self.b.base_part() }
    }

    /// `(∂y/∂ρᵢ, ∂b/∂ρᵢ)`.
    pub fn eps_part(&self, i: usize) -> FrobeniusBasis<Rational> {
        FrobeniusBasis { y: self.y.eps_part(i), b: self.b.eps_part(i) }
    }
}

/// Forcing term of the log ansatz: `L(y log t + b) = 0` iff `L(b) = −(P y'/t + (P y/t)')`.
fn log_forcing<S: Scalar>(op: &FuchsianOperator<S>, y: &Series<S>) -> Series<S> {
    let p_over_t = Poly::new(op.p.coeffs()[1..].to_vec());
    let a = p_over_t.mul_series(&y.derivative());
    let c = p_over_t.mul_series(y).derivative();
    -&(&a + &c)
}

/// Frobenius basis to order `order`, followed by the mandatory residual check.
pub fn frobenius_basis<S: Scalar>(op: &FuchsianOperator<S>, order: i64) -> Result<FrobeniusBasis<S>, FrobeniusError> {
    if order < 1 {
        return Err(FrobeniusError::Order);
    }
    let rec = op.recurrence();
    let y = rec.solve(&Series::zero(order), S::one(), order);
    // the forcing term loses one order; ask y for one more
    let y_ext = rec.solve(&Series::zero(order + 1), S::one(), order + 1);
    let rhs = log_forcing(op, &y_ext);
    let b = rec.solve(&rhs, S::zero(), order);
    let basis = FrobeniusBasis { y, b };
    check_residuals(op, &basis)?;
    Ok(basis)
}

/// `L(y)` and `L(ŷ)` must vanish to their full computed order.
pub fn check_residuals<S: Scalar>(op: &FuchsianOperator<S>, basis: &FrobeniusBasis<S>) -> Result<i64, FrobeniusError> {
    let ry = op.apply(&LogSeries::holomorphic(basis.y.clone()));
    let rh = op.apply(&basis.y_hat());
    for (name, r) in [("L(y)", &ry), ("L(y_hat)", &rh)] {
        if let Some(e) = r.first_nonzero() {
            return Err(FrobeniusError::Mismatch { identity: name.into(), exponent: e });
        }
    }
    Ok(ry.order().min(rh.order()))
}

/// Check `y·ŷ' − ŷ·y' = κ/P` as a Laurent identity; returns the verified order.
pub fn wronskian_check<S: Scalar>(basis: &FrobeniusBasis<S>, op: &FuchsianOperator<S>) -> Result<i64, FrobeniusError> {
    let dyh = basis.y_hat().derivative();
    let y_prime = basis.y.derivative();
    let lhs_plain = &(&basis.y * &dyh.plain) - &(&basis.b * &y_prime);
    let lhs_log = &(&basis.y * &dyh.log_part) - &(&basis.y * &y_prime);
    if !lhs_log.is_zero() {
        return Err(FrobeniusError::Mismatch { identity: "wronskian log part".into(), exponent: lhs_log.valuation() });
    }
    let p_series = op.p.to_series(lhs_plain.order() + 2);
    let rhs = Series::constant(S::from_rational(op.kappa.clone()), lhs_plain.order() + 2).checked_div(&p_series)?;
    let d = &lhs_plain - &rhs;
    if !d.is_zero() {
        return Err(FrobeniusError::Mismatch { identity: "wronskian".into(), exponent: d.valuation() });
    }
    Ok(d.order())
}

/// Solve `L(v) = rhs` for the unique `v` with `v(0) = 0`.
pub fn solve_inhomogeneous<S: Scalar>(op: &FuchsianOperator<S>, rhs: &Series<S>) -> Result<Series<S>, FrobeniusError> {
    if !rhs.is_zero() && rhs.valuation() < 0 {
        return Err(FrobeniusError::RhsValuation(rhs.valuation()));
    }
    Ok(op.recurrence().solve(rhs, S::zero(), rhs.order() + 1))
}

/// `∂y/∂ρᵢ` as the solution of `L(v) = −tⁱ·y` with `v(0) = 0`.
///
/// Differentiating `L(y) = 0` in `ρᵢ` gives `L(∂y) + tⁱ y = 0`.
pub fn derivative_by_recurrence<S: Scalar>(
    op: &FuchsianOperator<S>,
    basis: &FrobeniusBasis<S>,
    i: usize,
) -> Result<Series<S>, FrobeniusError> {
    check_index(op, i)?;
    solve_inhomogeneous(op, &-&basis.y.shift(i as i64))
}

/// `∂y/∂ρᵢ = −y·∫₀ᵗ (∫₀^{t₁} t₂ⁱ y² dt₂) / (y² P) dt₁`, purely by series integration.
pub fn variation_by_integrals<S: Scalar>(
    basis: &FrobeniusBasis<S>,
    op: &FuchsianOperator<S>,
    i: usize,
) -> Result<Series<S>, FrobeniusError> {
    check_index(op, i)?;
    let y2 = &basis.y * &basis.y;
    let inner = y2.shift(i as i64).integral()?;
    let quotient = inner.checked_div(&op.p.mul_series(&y2))?;
    let outer = quotient.integral()?;
    Ok(-&(&basis.y * &outer))
}

fn check_index<S: Scalar>(op: &FuchsianOperator<S>, i: usize) -> Result<(), FrobeniusError> {
    // i = n − 3 is not a free parameter but the formulas still make sense there
    let count = op.n - 2;
    if i >= count {
        return Err(FrobeniusError::Index { index: i, count });
    }
    Ok(())
}

/// `∂ŷ/∂ρᵢ` from the jet basis, as a log series.
pub fn jet_log_derivative(basis: &FrobeniusBasis<Jet>, i: usize) -> LogSeries<Rational> {
    basis.y_hat().eps_part(i)
}

/// `L(v) == 0` for a log series, reporting the first nonzero exponent.
pub fn annihilates<S: Scalar>(op: &DiffOperator<S>, v: &LogSeries<S>) -> Result<i64, i64> {
    let r = op.apply(v);
    match r.first_nonzero() {
        None => Ok(r.order()),
        Some(e) => Err(e),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;

    fn gamma16(rho0: Rational) -> SurfaceConfig {
        SurfaceConfig::new(vec![int(1), rat(1, 9)], vec![rho0], 12).unwrap()
    }

    #[test]
    fn operator_for_gamma16() {
        let op = build_operator(&gamma16(rat(-1, 3)));
        assert_eq!(op.p().coeffs(), &[int(0), rat(1, 9), rat(-10, 9), int(1)]);
        assert_eq!(op.kappa(), &rat(1, 9));
        assert_eq!(op.p1().coeff(1), int(1));
        assert_eq!(op.p().derivative().coeff(0), *op.kappa());
    }

    #[test]
    fn operator_for_five_punctures() {
        let cfg = SurfaceConfig::new(vec![int(1), int(-1), int(2)], vec![rat(1, 2), rat(-1, 3)], 10).unwrap();
        let op = build_operator(&cfg);
        assert_eq!(op.kappa(), &int(2));
        assert_eq!(op.p1().coeff(2), rat(9, 4));
        assert_eq!(op.p().degree(), Some(4));
    }

    #[test]
    fn config_errors() {
        assert_eq!(
            SurfaceConfig::new(vec![int(1), int(1)], vec![int(0)], 10),
            Err(FrobeniusError::RepeatedPuncture("1".into()))
        );
        assert_eq!(SurfaceConfig::new(vec![int(0), int(1)], vec![int(0)], 10), Err(FrobeniusError::ZeroPuncture));
        assert_eq!(
            SurfaceConfig::new(vec![int(2), int(1)], vec![], 10),
            Err(FrobeniusError::AccessoryCount { expected: 1, got: 0 })
        );
        assert!(SurfaceConfig::new(vec![int(2)], vec![], 10).is_ok());
    }

    #[test]
    fn gamma16_recurrence_rows() {
        // (m+1)² a_{m+1} = (10(m²+m) − 9ρ₀) a_m − 9m² a_{m−1}, scaled by κ = 1/9
        let rho0 = rat(5, 7);
        let rec = build_operator(&gamma16(rho0.clone())).recurrence();
        assert_eq!(rec.terms(), 3);
        for m in 0..6i64 {
            let nine = int(9);
            assert_eq!(rec.lead(m) * &nine, int((m + 1) * (m + 1)));
            assert_eq!(rec.coefficient(0, m) * &nine, int(10 * (m * m + m)) - &nine * &rho0);
            assert_eq!(rec.coefficient(1, m) * &nine, int(-9 * m * m));
        }
    }

    #[test]
    fn gamma16_basis_values() {
        let op = build_operator(&gamma16(rat(-1, 3)));
        let basis = frobenius_basis(&op, 4).unwrap();
        assert_eq!(basis.y.coeff_range(0, 4), vec![int(1), int(3), int(15), int(93)]);
        assert_eq!(basis.b.coeff_range(0, 4), vec![int(0), int(4), int(26), rat(526, 3)]);
    }

    #[test]
    fn log_forcing_for_gamma16() {
        let op = build_operator(&gamma16(rat(-1, 3)));
        let y = op.recurrence().solve(&Series::zero(5), int(1), 5);
        let g = log_forcing(&op, &y);
        assert_eq!(g.coeff_range(0, 3), vec![rat(4, 9), rat(4, 3), rat(28, 3)]);
    }

    #[test]
    fn first_row_balance() {
        for rho0 in [rat(-1, 3), rat(5, 7), int(2)] {
            let op = build_operator(&gamma16(rho0.clone()));
            let basis = frobenius_basis(&op, 3).unwrap();
            assert_eq!(basis.y.coeff(1) * op.kappa() + &rho0, int(0));
        }
    }

    #[test]
    fn wronskian_and_sensitivity() {
        let op = build_operator(&gamma16(rat(-1, 3)));
        let basis = frobenius_basis(&op, 12).unwrap();
        assert!(wronskian_check(&basis, &op).unwrap() >= 10);
        let mut bad = basis.clone();
        bad.b = &bad.b + &Series::monomial(int(1), 1, bad.b.order());
        assert_eq!(
            wronskian_check(&bad, &op),
            Err(FrobeniusError::Mismatch { identity: "wronskian".into(), exponent: 0 })
        );
    }

    #[test]
    fn inhomogeneous_zero_rhs() {
        let op = build_operator(&gamma16(rat(-1, 3)));
        assert!(solve_inhomogeneous(&op, &Series::zero(8)).unwrap().is_zero());
        let bad = Series::monomial(int(1), -1, 5);
        assert_eq!(solve_inhomogeneous(&op, &bad), Err(FrobeniusError::RhsValuation(-1)));
    }

    #[test]
    fn derivative_leading_coefficient() {
        let op = build_operator(&gamma16(rat(-1, 3)));
        let basis = frobenius_basis(&op, 8).unwrap();
        let v = derivative_by_recurrence(&op, &basis, 0).unwrap();
        assert_eq!(v.valuation(), 1);
        assert_eq!(v.coeff(1), int(-9));
        let w = variation_by_integrals(&basis, &op, 0).unwrap();
        assert!(v.agrees_to(&w, 8));
    }

    #[test]
    fn li_annihilates_shifted_solutions() {
        let op = build_operator(&gamma16(rat(-1, 3)));
        let basis = frobenius_basis(&op, 10).unwrap();
        for i in 0..2 {
            let li = op.build_li(i);
            assert!(annihilates(&li, &LogSeries::holomorphic(basis.y.shift(i as i64))).is_ok());
            assert!(annihilates(&li, &basis.y_hat().shift(i as i64)).is_ok());
        }
    }

    #[test]
    fn mi_matches_hand_expansion() {
        // Mᵢ = Lᵢ∘L with L = P D² + P' D + P₁ and Lᵢ = A D² + B D + C
        let op = build_operator(&gamma16(rat(5, 7)));
        let i = 0;
        let li = op.build_li(i);
        let (c, b, a) = (&li.coeffs()[0], &li.coeffs()[1], &li.coeffs()[2]);
        let p = op.p();
        let (p1d, p2d, p3d) = (p.derivative(), p.derivative().derivative(), p.derivative().derivative().derivative());
        let r = op.p1();
        let (r1, r2) = (r.derivative(), r.derivative().derivative());
        let m = op.compose_mi(i);
        assert_eq!(m.coeffs()[4], a.mul(p));
        assert_eq!(m.coeffs()[3], a.mul(&p1d).scale(&int(3)).add(&b.mul(p)));
        assert_eq!(
            m.coeffs()[2],
            a.mul(&p2d.scale(&int(3)).add(r)).add(&b.mul(&p1d).scale(&int(2))).add(&c.mul(p))
        );
        assert_eq!(m.coeffs()[1], a.mul(&p3d.add(&r1.scale(&int(2)))).add(&b.mul(&p2d.add(r))).add(&c.mul(&p1d)));
        assert_eq!(m.coeffs()[0], a.mul(&r2).add(&b.mul(&r1)).add(&c.mul(r)));
    }

    #[test]
    fn thrice_punctured_sphere() {
        let cfg = SurfaceConfig::new(vec![int(1)], vec![], 10).unwrap();
        let op = build_operator(&cfg);
        assert_eq!(op.p1().coeff(0), rat(1, 4));
        let basis = frobenius_basis(&op, 10).unwrap();
        assert!(wronskian_check(&basis, &op).is_ok());
    }
}
