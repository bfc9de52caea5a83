//! Mirror map, uniformizing series and their accessory-parameter derivatives.
//!
//! From the Frobenius basis: `Q = t·exp(b/y)` (so `Q = exp(ŷ/y)` with the log
//! peeled off), `T` its compositional inverse, `F = y∘T`, and
//! `Hᵢ = F⁴·P(T)·Tⁱ` with Eichler integrals `H̃ᵢ`. Everything is computed once
//! in jet arithmetic; the two kinds of accessory derivative are read off as
//! `ε` parts:
//!
//! * `∂_{i,Q}` differentiates with `Q` held fixed: the `εᵢ` part of the fully
//!   jetted composite.
//! * `∂_{i,T}` differentiates with `T` held fixed: compose the jetted `t`-series
//!   with the base `T`.

use std::fmt;

use crate::error::DeformError;
use crate::frobenius::{build_jet_operator, frobenius_basis, FrobeniusBasis, FuchsianOperator, SurfaceConfig};
use crate::scalar::{int, Jet, Rational};
use crate::series::{Poly, Series};

/// Extra coefficients computed beyond the requested order before comparing.
pub const MARGIN: i64 = 2;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    /// `T` frozen.
    T,
    /// `Q` frozen.
    Q,
}

/// Everything the deformation identities need, in jet arithmetic.
#[derive(Clone, Debug)]
pub struct DeformationPack {
    pub config: SurfaceConfig,
    pub operator: FuchsianOperator<Jet>,
    pub basis: FrobeniusBasis<Jet>,
    pub q: Series<Jet>,
    pub t: Series<Jet>,
    pub f: Series<Jet>,
    pub h: Vec<Series<Jet>>,
    pub h_tilde: Vec<Series<Jet>>,
    /// `Q⁻¹∂ᵢQ` re-expanded in `Q`.
    pub u: Vec<Series<Rational>>,
}

/// Build the pack with `εᵢ` seeded on every free `ρᵢ`, to `cfg.order() + MARGIN`.
pub fn compute_pack(cfg: &SurfaceConfig) -> Result<DeformationPack, DeformError> {
    compute_pack_from(cfg, |_| {})
}

/// As [`compute_pack`], letting the caller tamper with the basis first.
/// Only useful for sensitivity tests.
pub fn compute_pack_from(
    cfg: &SurfaceConfig,
    tamper: impl FnOnce(&mut FrobeniusBasis<Jet>),
) -> Result<DeformationPack, DeformError> {
    let work = cfg.order() + MARGIN;
    let op = build_jet_operator(cfg);
    let mut basis = frobenius_basis(&op, work)?;
    tamper(&mut basis);
    let q = basis.b.checked_div(&basis.y)?.exp()?.shift(1);
    let t = q.reverse()?;
    let f = basis.y.compose(&t)?;
    let p_of_t = op.p().compose(&t)?;
    let f2 = &f * &f;
    let f4p = &(&f2 * &f2) * &p_of_t;
    let mut h = Vec::new();
    let mut h_tilde = Vec::new();
    let mut t_pow = Series::one(t.order());
    for _ in 0..cfg.free_parameters() {
        let hi = &f4p * &t_pow;
        h_tilde.push(hi.eichler()?);
        h.push(hi);
        t_pow = &t_pow * &t;
    }
    let base_q = q.base_part();
    let base_t = t.base_part();
    let mut u = Vec::new();
    for i in 0..cfg.free_parameters() {
        u.push(q.eps_part(i).checked_div(&base_q)?.compose(&base_t)?);
    }
    Ok(DeformationPack { config: cfg.clone(), operator: op, basis, q, t, f, h, h_tilde, u })
}

impl DeformationPack {
    pub fn order(&self) -> i64 {
        self.config.order()
    }

    pub fn kappa(&self) -> &Rational {
        self.operator.kappa()
    }

    pub fn base_q(&self) -> Series<Rational> {
        self.q.base_part()
    }

    pub fn base_t(&self) -> Series<Rational> {
        self.t.base_part()
    }

    pub fn base_f(&self) -> Series<Rational> {
        self.f.base_part()
    }

    pub fn base_p(&self) -> Poly<Rational> {
        Poly::new(self.operator.p().coeffs().iter().map(|c| c.value().clone()).collect())
    }

    pub fn base_p1(&self) -> Poly<Rational> {
        Poly::new(self.operator.p1().coeffs().iter().map(|c| c.value().clone()).collect())
    }

    pub fn h_tilde_base(&self, i: usize) -> Series<Rational> {
        self.h_tilde[i].base_part()
    }

    fn check_index(&self, i: usize) -> Result<(), DeformError> {
        let seeded = self.config.free_parameters();
        if i >= seeded {
            return Err(DeformError::Unseeded { index: i, seeded });
        }
        Ok(())
    }

    /// `∂ᵢ` of `W = w∘T` where `w` is a jetted series in `t`.
    pub fn partial_of(&self, w: &Series<Jet>, i: usize, mode: Mode) -> Result<Series<Rational>, DeformError> {
        self.check_index(i)?;
        let inner = match mode {
            Mode::Q => self.t.clone(),
            Mode::T => self.t.base_part().lift(),
        };
        Ok(w.compose(&inner)?.eps_part(i))
    }

    /// `∂ᵢT` with `Q` fixed.
    pub fn partial_t(&self, i: usize) -> Result<Series<Rational>, DeformError> {
        self.check_index(i)?;
        Ok(self.t.eps_part(i))
    }

    /// Relation `∂_{i,Q}W − ∂_{i,T}W = ∂ᵢT·(w'∘T)`; returns the verified order.
    pub fn check_relation(&self, w: &Series<Jet>, i: usize) -> Result<i64, DeformError> {
        let dq = self.partial_of(w, i, Mode::Q)?;
        let dt = self.partial_of(w, i, Mode::T)?;
        let w_prime = w.base_part().derivative().compose(&self.base_t())?;
        let rhs = &self.partial_t(i)? * &w_prime;
        compare(&(&dq - &dt), &rhs, self.order(), "relation")
    }

    /// Round trips `T∘Q = t` and `F∘Q = y` on the base parts.
    pub fn check_round_trips(&self) -> Result<i64, DeformError> {
        let q = self.base_q();
        let id = Series::monomial(int(1), 1, q.order());
        let a = compare(&self.base_t().compose(&q)?, &id, self.order(), "T(Q(t)) = t")?;
        let b = compare(&self.base_f().compose(&q)?, &self.basis.y.base_part(), self.order(), "F(Q(t)) = y")?;
        Ok(a.min(b))
    }
}

/// `∂ᵢF` in either mode.
pub fn partial(pack: &DeformationPack, i: usize, mode: Mode) -> Result<Series<Rational>, DeformError> {
    pack.partial_of(&pack.basis.y, i, mode)
}

/// `Hᵢ` at the configured accessory values.
pub fn specialize_h(pack: &DeformationPack) -> Vec<Series<Rational>> {
    pack.h.iter().map(Series::base_part).collect()
}

/// `a == b` below `order`; the error names the identity and the first bad exponent.
pub(crate) fn compare(a: &Series<Rational>, b: &Series<Rational>, order: i64, name: &str) -> Result<i64, DeformError> {
    if a.order().min(b.order()) < order {
        return Err(DeformError::Precision { identity: name.into(), needed: order, got: a.order().min(b.order()) });
    }
    match a.first_mismatch(b) {
        Some(e) if e < order => Err(DeformError::Identity { identity: name.into(), exponent: e }),
        _ => Ok(order),
    }
}

/// Outcome of one calibrated identity.
#[derive(Clone, Debug, PartialEq)]
pub struct IdentityResult {
    pub name: String,
    pub index: usize,
    /// Verified order, or the first failing exponent.
    pub outcome: Result<i64, i64>,
}

impl IdentityResult {
    pub fn passed(&self) -> bool {
        self.outcome.is_ok()
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct CalibrationReport {
    pub c: Rational,
    pub expected_c: Rational,
    pub identity_orders: Vec<IdentityResult>,
    pub per_i_constancy: bool,
}

impl CalibrationReport {
    pub fn passed(&self) -> bool {
        self.per_i_constancy && self.c == self.expected_c
    }
}

impl fmt::Display for CalibrationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "c = {} (expected {})", self.c, self.expected_c)?;
        for r in &self.identity_orders {
            match r.outcome {
                Ok(o) => writeln!(f, "PASS  {} [i={}] to order {}", r.name, r.index, o)?,
                Err(e) => writeln!(f, "FAIL  {} [i={}] at exponent {}", r.name, r.index, e)?,
            }
        }
        Ok(())
    }
}

/// The four identity families, as `(name, lhs, rhs without c)` for direction `i`.
fn identity_families(pack: &DeformationPack, i: usize) -> Result<Vec<(&'static str, Series<Rational>, Series<Rational>)>, DeformError> {
    let f = pack.base_f();
    let t = pack.base_t();
    let ht = pack.h_tilde_base(i);
    let f_theta_ht = &f * &ht.theta();
    let two = int(2);
    Ok(vec![
        ("d_T F = c F theta(Ht)", partial(pack, i, Mode::T)?, f_theta_ht.clone()),
        ("d_Q F = c (F theta(Ht) + 2 theta(F) Ht)", partial(pack, i, Mode::Q)?, &f_theta_ht + &(&f.theta() * &ht).scale(&two)),
        ("d T = 2c theta(T) Ht", pack.partial_t(i)?, (&t.theta() * &ht).scale(&two)),
        ("u = -2c Ht", pack.u[i].clone(), ht.scale(&-two)),
    ])
}

/// Measure `c` from the first identity at `i = 0`, then demand that the same
/// `c` works for all four families, every `i`, every coefficient below the order.
pub fn calibrate_and_verify(pack: &DeformationPack) -> Result<CalibrationReport, DeformError> {
    let m = pack.config.free_parameters();
    if m == 0 {
        return Err(DeformError::Unseeded { index: 0, seeded: 0 });
    }
    let order = pack.order();
    let first = identity_families(pack, 0)?;
    let (_, lhs, rhs) = &first[0];
    let v = rhs.valuation();
    let c = lhs.coeff(v) / rhs.coeff(v);
    let mut results = Vec::new();
    for i in 0..m {
        for (name, lhs, rhs) in identity_families(pack, i)? {
            let outcome = match compare(&lhs, &rhs.scale(&c), order, name) {
                Ok(o) => Ok(o),
                Err(DeformError::Identity { exponent, .. }) => Err(exponent),
                Err(e) => return Err(e),
            };
            results.push(IdentityResult { name: name.into(), index: i, outcome });
        }
    }
    let kappa = pack.kappa();
    let expected_c = -(kappa * kappa).recip();
    let per_i_constancy = results.iter().all(IdentityResult::passed);
    Ok(CalibrationReport { c, expected_c, identity_orders: results, per_i_constancy })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;

    fn gamma16(rho0: Rational, order: i64) -> SurfaceConfig {
        SurfaceConfig::new(vec![int(1), rat(1, 9)], vec![rho0], order).unwrap()
    }

    fn ints(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn gamma16_mirror_map() {
        let pack = compute_pack(&gamma16(rat(-1, 3), 8)).unwrap();
        assert_eq!(pack.base_q().coeff_range(1, 5), ints(&[1, 4, 22, 140]));
        assert_eq!(pack.base_t().coeff_range(1, 8), ints(&[1, -4, 10, -20, 39, -76, 140]));
        assert_eq!(pack.base_f().coeff_range(0, 8), ints(&[1, 3, 3, 3, 3, 0, 3, 6]));
        assert!(pack.check_round_trips().is_ok());
    }

    #[test]
    fn cusp_form_at_base_point() {
        let pack = compute_pack(&gamma16(rat(-1, 3), 9)).unwrap();
        let h0 = specialize_h(&pack).remove(0).scale(&int(9));
        assert_eq!(h0.coeff_range(1, 9), ints(&[1, -2, -3, 4, 6, 6, -16, -8]));
        let e = h0.eichler().unwrap();
        assert_eq!(e.coeff_range(1, 6), vec![int(1), rat(-1, 4), rat(-1, 9), rat(1, 16), rat(6, 125)]);
        assert_eq!(e.theta().theta().theta(), h0);
    }

    #[test]
    fn derivative_tables() {
        let pack = compute_pack(&gamma16(rat(-1, 3), 8)).unwrap();
        let dt = partial(&pack, 0, Mode::T).unwrap();
        assert_eq!(
            dt.coeff_range(1, 7),
            vec![int(-9), rat(-45, 2), rat(-21, 2), rat(-27, 4), rat(-1341, 100), rat(777, 100)]
        );
        let dq = partial(&pack, 0, Mode::Q).unwrap();
        assert_eq!(dq.coeff_range(1, 5), vec![int(-9), rat(-153, 2), int(-105), rat(-543, 4)]);
        assert_eq!(
            pack.u[0].coeff_range(1, 9),
            vec![int(18), rat(-9, 2), int(-2), rat(9, 8), rat(108, 125), rat(1, 2), rat(-288, 343), rat(-9, 32)]
        );
    }

    #[test]
    fn relation_for_several_functions() {
        let pack = compute_pack(&gamma16(rat(5, 7), 12)).unwrap();
        let y = &pack.basis.y;
        let t = Series::monomial(Jet::constant(int(1)), 1, y.order());
        for w in [y.clone(), y * y, y * &t] {
            assert!(pack.check_relation(&w, 0).is_ok());
        }
    }

    #[test]
    fn calibration_gamma16() {
        let report = calibrate_and_verify(&compute_pack(&gamma16(rat(-1, 3), 12)).unwrap()).unwrap();
        assert_eq!(report.c, int(-81));
        assert!(report.passed(), "{report}");
    }

    #[test]
    fn calibration_five_punctures() {
        let cfg = SurfaceConfig::new(vec![int(1), int(-1), int(2)], vec![rat(1, 2), rat(-1, 3)], 10).unwrap();
        let report = calibrate_and_verify(&compute_pack(&cfg).unwrap()).unwrap();
        assert_eq!(report.c, rat(-1, 4));
        assert_eq!(report.identity_orders.len(), 8);
        assert!(report.passed(), "{report}");
    }

    #[test]
    fn unseeded_direction() {
        let pack = compute_pack(&gamma16(rat(-1, 3), 8)).unwrap();
        assert_eq!(partial(&pack, 1, Mode::Q), Err(DeformError::Unseeded { index: 1, seeded: 1 }));
    }

    #[test]
    fn tampered_basis_breaks_calibration() {
        let cfg = gamma16(rat(-1, 3), 10);
        let pack = compute_pack_from(&cfg, |b| {
            b.b = &b.b + &Series::monomial(Jet::constant(int(1)), 2, b.b.order());
        })
        .unwrap();
        let report = calibrate_and_verify(&pack).unwrap();
        assert!(!report.passed());
    }
}
