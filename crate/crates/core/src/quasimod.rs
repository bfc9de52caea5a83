//! Quasimodular forms built from `f₀ = F²`, the Hauptmodul `t = T` and
//! `φ = D f₀ / (2f₀)`, where `D = q·d/dq`.
//!
//! An element of weight `k` is stored as `Σⱼ f₀^{(k−2j)/2}·Rⱼ(t)·φʲ` with
//! `deg Rⱼ ≤ (k−2j)(n−2)/2`. On this representation
//!
//! ```text
//! W g = k·g,   δ(Σ gⱼ φʲ) = Σ j·gⱼ φ^{j−1}
//! D t = f₀ P(t)/κ,   D f₀ = 2 f₀ φ,   D φ = φ² − f₀² P₁(t) P(t)/κ²
//! ```
//!
//! The last three follow from the operator and the Wronskian; they are
//! checked against plain `q`-differentiation in the tests.

use std::fmt;

use num_traits::Zero;

use crate::deform::{compare, DeformationPack};
use crate::error::DeformError;
use crate::scalar::{int, Jet, Rational, Scalar};
use crate::series::{Poly, Series};

/// `κ`, `P`, `P₁` at the configured accessory values.
#[derive(Clone, Debug, PartialEq)]
pub struct DerivationData {
    pub kappa: Rational,
    pub p: Poly<Rational>,
    pub p1: Poly<Rational>,
}

impl DerivationData {
    pub fn from_pack(pack: &DeformationPack) -> Self {
        DerivationData { kappa: pack.kappa().clone(), p: pack.base_p(), p1: pack.base_p1() }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct QuasimodularElement {
    weight: i64,
    n: usize,
    parts: Vec<Poly<Rational>>,
}

impl QuasimodularElement {
    /// `parts[j]` is `Rⱼ`, the polynomial multiplying `f₀^{(k−2j)/2}·φʲ`.
    pub fn new(weight: i64, n: usize, parts: Vec<Poly<Rational>>) -> Result<Self, DeformError> {
        if weight < 0 || weight % 2 != 0 {
            return Err(DeformError::Weight(weight));
        }
        for (j, r) in parts.iter().enumerate() {
            let room = weight - 2 * j as i64;
            let fits = match r.degree() {
                None => true,
                Some(d) => room >= 0 && d as i64 <= room * (n as i64 - 2) / 2,
            };
            if !fits {
                return Err(DeformError::Shape { weight, n });
            }
        }
        let mut g = QuasimodularElement { weight, n, parts };
        g.trim();
        Ok(g)
    }

    fn trim(&mut self) {
        while self.parts.last().is_some_and(|p| p.degree().is_none()) {
            self.parts.pop();
        }
    }

    pub fn zero(weight: i64, n: usize) -> Self {
        QuasimodularElement { weight, n, parts: Vec::new() }
    }

    /// `c·f₀^a·tˢ·φʲ`.
    pub fn monomial(n: usize, c: Rational, a: i64, s: usize, j: usize) -> Result<Self, DeformError> {
        let mut parts = vec![Poly::new(Vec::new()); j + 1];
        let mut r = vec![<Rational as Zero>::zero(); s + 1];
        r[s] = c;
        parts[j] = Poly::new(r);
        Self::new(2 * a + 2 * j as i64, n, parts)
    }

    pub fn f0(n: usize) -> Self {
        Self::monomial(n, int(1), 1, 0, 0).expect("f0 is well formed")
    }

    pub fn phi(n: usize) -> Self {
        Self::monomial(n, int(1), 0, 0, 1).expect("phi is well formed")
    }

    pub fn weight(&self) -> i64 {
        self.weight
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn parts(&self) -> &[Poly<Rational>] {
        &self.parts
    }

    /// Highest power of `φ` present (0 for modular forms).
    pub fn depth(&self) -> usize {
        self.parts.len().saturating_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.parts.is_empty()
    }

    fn part(&self, j: usize) -> Poly<Rational> {
        self.parts.get(j).cloned().unwrap_or_else(|| Poly::new(Vec::new()))
    }

    pub fn add(&self, other: &Self) -> Result<Self, DeformError> {
        if self.is_zero() {
            return Ok(other.clone());
        }
        if other.is_zero() {
            return Ok(self.clone());
        }
        if self.weight != other.weight {
            return Err(DeformError::Weight(other.weight));
        }
        let len = self.parts.len().max(other.parts.len());
        let parts = (0..len).map(|j| self.part(j).add(&other.part(j))).collect();
        Self::new(self.weight, self.n, parts)
    }

    pub fn scale(&self, r: &Rational) -> Self {
        let mut g = QuasimodularElement {
            weight: self.weight,
            n: self.n,
            parts: self.parts.iter().map(|p| p.scale(r)).collect(),
        };
        g.trim();
        g
    }

    pub fn sub(&self, other: &Self) -> Result<Self, DeformError> {
        self.add(&other.scale(&int(-1)))
    }

    pub fn mul(&self, other: &Self) -> Self {
        let weight = self.weight + other.weight;
        if self.is_zero() || other.is_zero() {
            return Self::zero(weight, self.n);
        }
        let mut parts = vec![Poly::new(Vec::new()); self.parts.len() + other.parts.len() - 1];
        for (j, a) in self.parts.iter().enumerate() {
            for (l, b) in other.parts.iter().enumerate() {
                parts[j + l] = parts[j + l].add(&a.mul(b));
            }
        }
        let mut g = QuasimodularElement { weight, n: self.n, parts };
        g.trim();
        g
    }

    /// `W g = k·g`.
    pub fn w(&self) -> Self {
        self.scale(&int(self.weight))
    }

    /// Lowers depth: `δφ = 1`, `δ(modular) = 0`.
    pub fn delta(&self) -> Self {
        let parts = self.parts.iter().enumerate().skip(1).map(|(j, p)| p.scale(&int(j as i64))).collect();
        let mut g = QuasimodularElement { weight: self.weight - 2, n: self.n, parts };
        g.trim();
        g
    }

    /// `D g` on the representation, weight `k + 2`.
    pub fn d(&self, data: &DerivationData) -> Self {
        let weight = self.weight + 2;
        let mut parts = vec![Poly::new(Vec::new()); self.parts.len() + 1];
        let inv_k = data.kappa.recip();
        let p1p = data.p1.mul(&data.p);
        for (j, r) in self.parts.iter().enumerate() {
            let a = (self.weight - 2 * j as i64) / 2;
            parts[j + 1] = parts[j + 1].add(&r.scale(&int(2 * a + j as i64)));
            parts[j] = parts[j].add(&r.derivative().mul(&data.p).scale(&inv_k));
            if j > 0 {
                let c = -(int(j as i64) * &inv_k * &inv_k);
                parts[j - 1] = parts[j - 1].add(&r.mul(&p1p).scale(&c));
            }
        }
        let mut g = QuasimodularElement { weight, n: self.n, parts };
        g.trim();
        g
    }

    /// Substitute `q`-series for `f₀`, `t`, `φ`.
    pub fn evaluate<S: Scalar>(&self, gens: &Generators<S>) -> Result<Series<S>, DeformError> {
        let order = gens.order();
        let mut acc = Series::zero(order);
        let mut phi_pow = Series::one(order);
        for (j, r) in self.parts.iter().enumerate() {
            if j > 0 {
                phi_pow = &phi_pow * &gens.phi;
            }
            if r.degree().is_none() {
                continue;
            }
            let a = (self.weight - 2 * j as i64) / 2;
            let rs = Poly::new(r.coeffs().iter().map(|c| S::from_rational(c.clone())).collect()).compose(&gens.t)?;
            let term = &(&gens.f0.pow(a)? * &rs) * &phi_pow;
            acc = &acc + &term;
        }
        Ok(acc.truncate(order))
    }
}

impl fmt::Display for QuasimodularElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0 [weight {}]", self.weight);
        }
        let mut first = true;
        for (j, r) in self.parts.iter().enumerate() {
            if r.degree().is_none() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            let a = (self.weight - 2 * j as i64) / 2;
            write!(f, "({r})")?;
            if a > 0 {
                write!(f, "·f0^{a}")?;
            }
            if j > 0 {
                write!(f, "·phi^{j}")?;
            }
        }
        write!(f, " [weight {}]", self.weight)
    }
}

/// `q`-expansions of `f₀`, `t` and `φ`.
#[derive(Clone, Debug, PartialEq)]
pub struct Generators<S> {
    pub f0: Series<S>,
    pub t: Series<S>,
    pub phi: Series<S>,
}

impl<S: Scalar> Generators<S> {
    pub fn new(f: &Series<S>, t: &Series<S>) -> Result<Self, DeformError> {
        let f0 = f * f;
        let phi = f0.theta().checked_div(&f0.scale(&int(2)))?;
        Ok(Generators { f0, t: t.clone(), phi })
    }

    pub fn order(&self) -> i64 {
        self.f0.order().min(self.t.order()).min(self.phi.order())
    }
}

pub fn base_generators(pack: &DeformationPack) -> Result<Generators<Rational>, DeformError> {
    Generators::new(&pack.base_f(), &pack.base_t())
}

/// Generators carrying `∂/∂ρᵢ` with `Q` fixed.
pub fn jet_generators(pack: &DeformationPack) -> Result<Generators<Jet>, DeformError> {
    Generators::new(&pack.f, &pack.t)
}

/// `φ = θ(f₀)/(2f₀)`.
pub fn phi_series(pack: &DeformationPack) -> Result<Series<Rational>, DeformError> {
    Ok(base_generators(pack)?.phi)
}

/// `(y²·P·y')∘T / φ`. Comes out as `κ·F`, not a constant.
pub fn phi_display_ratio(pack: &DeformationPack) -> Result<Series<Rational>, DeformError> {
    let y = pack.basis.y.base_part();
    let display = pack.base_p().mul_series(&(&(&y * &y) * &y.derivative()));
    Ok(display.compose(&pack.base_t())?.checked_div(&phi_series(pack)?)?)
}

/// First Rankin–Cohen bracket of `g` (weight `k`) with `h̃` (weight −2):
/// `k·g·θ(h̃) + 2·h̃·θ(g)`.
pub fn rc_bracket1(g: &Series<Rational>, k: i64, h_tilde: &Series<Rational>) -> Series<Rational> {
    &(g * &h_tilde.theta()).scale(&int(k)) + &(h_tilde * &g.theta()).scale(&int(2))
}

/// `∂_{i,Q} g` at the Fuchsian value.
pub fn partial_q_quasimodular(g: &QuasimodularElement, pack: &DeformationPack, i: usize) -> Result<Series<Rational>, DeformError> {
    require_fuchsian(pack)?;
    let seeded = pack.config.free_parameters();
    if i >= seeded {
        return Err(DeformError::Unseeded { index: i, seeded });
    }
    Ok(g.evaluate(&jet_generators(pack)?)?.eps_part(i))
}

fn require_fuchsian(pack: &DeformationPack) -> Result<(), DeformError> {
    match pack.config.fuchsian_value() {
        None => Err(DeformError::NoFuchsianValue),
        Some(_) if !pack.config.is_at_fuchsian_value() => Err(DeformError::NotFuchsian),
        Some(_) => Ok(()),
    }
}

/// `hᵢ = −κ⁻²·Hᵢ` at the Fuchsian value, its Eichler integral and two `θ`-derivatives.
#[derive(Clone, Debug, PartialEq)]
pub struct EichlerWeightFour {
    pub h: Series<Rational>,
    pub h_tilde: Series<Rational>,
    pub h_tilde1: Series<Rational>,
    pub h_tilde2: Series<Rational>,
}

impl EichlerWeightFour {
    pub fn from_pack(pack: &DeformationPack, i: usize) -> Result<Self, DeformError> {
        let seeded = pack.config.free_parameters();
        if i >= seeded {
            return Err(DeformError::Unseeded { index: i, seeded });
        }
        let k = pack.kappa();
        let h = pack.h[i].base_part().scale(&-(k * k).recip());
        let h_tilde = h.eichler()?;
        let h_tilde1 = h_tilde.theta();
        let h_tilde2 = h_tilde1.theta();
        Ok(EichlerWeightFour { h, h_tilde, h_tilde1, h_tilde2 })
    }
}

/// `{f₀, f₀t, f₀t², φ, f₀φ, φ², D f₀}`.
pub fn standard_test_set(data: &DerivationData, n: usize) -> Vec<(String, QuasimodularElement)> {
    let one = int(1);
    let f0 = QuasimodularElement::f0(n);
    let phi = QuasimodularElement::phi(n);
    let mono = |s| QuasimodularElement::monomial(n, one.clone(), 1, s, 0).expect("fits for n >= 4");
    vec![
        ("f0".to_string(), f0.clone()),
        ("f0*t".to_string(), mono(1)),
        ("f0*t^2".to_string(), mono(2)),
        ("phi".to_string(), phi.clone()),
        ("f0*phi".to_string(), f0.mul(&phi)),
        ("phi^2".to_string(), phi.mul(&phi)),
        ("theta(f0)".to_string(), f0.d(data)),
    ]
}

#[derive(Clone, Debug, PartialEq)]
pub struct CheckResult {
    pub name: String,
    /// Verified order, or the first failing exponent.
    pub outcome: Result<i64, i64>,
}

impl CheckResult {
    fn from(name: String, r: Result<i64, DeformError>) -> Result<Self, DeformError> {
        let outcome = match r {
            Ok(o) => Ok(o),
            Err(DeformError::Identity { exponent, .. }) => Err(exponent),
            Err(e) => return Err(e),
        };
        Ok(CheckResult { name, outcome })
    }

    pub fn passed(&self) -> bool {
        self.outcome.is_ok()
    }
}

/// `∂_{i,Q} g = 2h̃ᵢ·Dg + h̃ᵢ'·Wg + h̃ᵢ''·δg` for each element of the test set.
/// With `with_delta = false` the last term is dropped (sensitivity witness).
pub fn verify_main_theorem(
    pack: &DeformationPack,
    test_set: &[(String, QuasimodularElement)],
    with_delta: bool,
) -> Result<Vec<CheckResult>, DeformError> {
    require_fuchsian(pack)?;
    let gens = base_generators(pack)?;
    let order = pack.order();
    let mut out = Vec::new();
    for i in 0..pack.config.free_parameters() {
        let e = EichlerWeightFour::from_pack(pack, i)?;
        for (name, g) in test_set {
            let lhs = partial_q_quasimodular(g, pack, i)?;
            let dg = g.evaluate(&gens)?.theta();
            let mut rhs = &(&e.h_tilde * &dg).scale(&int(2)) + &(&e.h_tilde1 * &g.w().evaluate(&gens)?);
            if with_delta {
                rhs = &rhs + &(&e.h_tilde2 * &g.delta().evaluate(&gens)?);
            }
            let label = format!("{name} [i={i}]");
            out.push(CheckResult::from(label.clone(), compare(&lhs, &rhs, order, &label))?);
        }
    }
    Ok(out)
}

/// `[W,D] = 2D`, `[W,δ] = −2δ` and `[δ,D] = W`, each applied to every test
/// element and compared as `q`-series.
pub fn sl2_checks(
    pack: &DeformationPack,
    data: &DerivationData,
    test_set: &[(String, QuasimodularElement)],
) -> Result<Vec<CheckResult>, DeformError> {
    commutator_checks(pack, data, test_set, false)
}

/// `[D,δ] = W` taken literally. Since `δ D f₀ = 2f₀` while `D δ f₀ = 0`, this
/// comes out as `−W` and fails on every element of nonzero weight.
pub fn d_delta_literal(
    pack: &DeformationPack,
    data: &DerivationData,
    test_set: &[(String, QuasimodularElement)],
) -> Result<Vec<CheckResult>, DeformError> {
    commutator_checks(pack, data, test_set, true)
}

fn commutator_checks(
    pack: &DeformationPack,
    data: &DerivationData,
    test_set: &[(String, QuasimodularElement)],
    literal: bool,
) -> Result<Vec<CheckResult>, DeformError> {
    let gens = base_generators(pack)?;
    let order = pack.order();
    let mut out = Vec::new();
    for (name, g) in test_set {
        let ddel = g.delta().d(data).sub(&g.d(data).delta())?;
        let cases = if literal {
            vec![("[D,delta] = W", ddel, g.w())]
        } else {
            vec![
                ("[W,D] = 2D", g.d(data).w().sub(&g.w().d(data))?, g.d(data).scale(&int(2))),
                ("[W,delta] = -2 delta", g.delta().w().sub(&g.w().delta())?, g.delta().scale(&int(-2))),
                ("[delta,D] = W", ddel.scale(&int(-1)), g.w()),
            ]
        };
        for (id, lhs, rhs) in cases {
            let label = format!("{id} on {name}");
            let r = compare(&lhs.evaluate(&gens)?, &rhs.evaluate(&gens)?, order, &label);
            out.push(CheckResult::from(label, r)?);
        }
    }
    Ok(out)
}

/// Rank of the `q`-expansion matrix of `{F^w·Tⁱ : 0 ≤ i ≤ (w/2)(n−2)}`, with the expected rank.
pub fn basis_independence(pack: &DeformationPack, weight: i64) -> Result<(usize, usize), DeformError> {
    if weight < 0 || weight % 2 != 0 {
        return Err(DeformError::Weight(weight));
    }
    let k = (weight / 2) as usize;
    let expected = k * (pack.config.n() - 2) + 1;
    let f = pack.base_f();
    let t = pack.base_t();
    let fw = f.pow(weight)?;
    let order = pack.order();
    let mut rows = Vec::new();
    let mut t_pow = Series::one(t.order());
    for _ in 0..expected {
        rows.push((&fw * &t_pow).coeff_range(0, order));
        t_pow = &t_pow * &t;
    }
    Ok((rank(rows), expected))
}

/// Row rank over the rationals by Gaussian elimination.
pub fn rank(mut rows: Vec<Vec<Rational>>) -> usize {
    let cols = rows.iter().map(Vec::len).max().unwrap_or(0);
    let mut r = 0;
    for c in 0..cols {
        let Some(pivot) = (r..rows.len()).find(|&i| !Zero::is_zero(&rows[i][c])) else {
            continue;
        };
        rows.swap(r, pivot);
        let inv = rows[r][c].recip();
        for i in r + 1..rows.len() {
            if Zero::is_zero(&rows[i][c]) {
                continue;
            }
            let factor = &rows[i][c] * &inv;
            for j in c..cols {
                let sub = &factor * &rows[r][j];
                rows[i][j] -= sub;
            }
        }
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    r
}
