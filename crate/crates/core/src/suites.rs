//! Named verification suites over a configuration.
//!
//! Each suite returns a flat list of [`Check`]s. A check either passes to an
//! order, fails at an exponent, or is an informational note that never counts
//! as a failure.

use std::fmt;
use std::str::FromStr;

use num_traits::Zero;
use serde::Serialize;

use crate::deform::{calibrate_and_verify, compare, compute_pack_from, DeformationPack};
use crate::error::{DeformError, FrobeniusError};
use crate::etaq::{alternate_hauptmodul, alternate_weight_one, crosscheck, hauptmodul_candidate, weight_one_candidate};
use crate::frobenius::{
    build_jet_operator, build_operator, derivative_by_recurrence, frobenius_basis, jet_log_derivative,
    variation_by_integrals, wronskian_check, FrobeniusBasis, SurfaceConfig,
};
use crate::gamma16;
use crate::quasimod::{
    base_generators, basis_independence, partial_q_quasimodular, phi_display_ratio, sl2_checks, standard_test_set,
    verify_main_theorem, DerivationData,
};
use crate::scalar::{int, Jet, Rational};
use crate::series::{LogSeries, Series};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Frobenius,
    Deform,
    Fuchsian,
    Theorem,
    Eta,
}

impl Suite {
    pub const ALL: [Suite; 5] = [Suite::Frobenius, Suite::Deform, Suite::Fuchsian, Suite::Theorem, Suite::Eta];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Frobenius => "frobenius",
            Suite::Deform => "deform",
            Suite::Fuchsian => "fuchsian",
            Suite::Theorem => "theorem",
            Suite::Eta => "eta",
        }
    }

    /// Why the suite cannot run on `cfg`, if it cannot.
    pub fn unsupported(self, cfg: &SurfaceConfig) -> Option<&'static str> {
        match self {
            Suite::Frobenius => None,
            Suite::Deform if cfg.free_parameters() == 0 => Some("needs at least one free accessory parameter"),
            Suite::Deform => None,
            Suite::Fuchsian | Suite::Theorem => {
                if cfg.free_parameters() == 0 {
                    Some("needs at least one free accessory parameter")
                } else if cfg.fuchsian_value().is_none() {
                    Some("needs a declared Fuchsian value (fuchsian=)")
                } else if !cfg.is_at_fuchsian_value() {
                    Some("rho is not the declared Fuchsian value")
                } else {
                    None
                }
            }
            Suite::Eta => {
                let same = cfg.punctures() == gamma16::punctures().as_slice()
                    && cfg.accessory() == [gamma16::fuchsian_rho()].as_slice();
                (!same).then_some("eta quotients are only known for the built-in example")
            }
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A parsed `--suites` list. `all` and `formal` expand later, against a config.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SuiteSelection {
    All,
    Explicit(Vec<Suite>),
}

impl SuiteSelection {
    /// Suites to run; explicitly naming an unsupported suite is an error.
    pub fn resolve(&self, cfg: &SurfaceConfig) -> Result<Vec<Suite>, String> {
        match self {
            SuiteSelection::All => Ok(Suite::ALL.into_iter().filter(|s| s.unsupported(cfg).is_none()).collect()),
            SuiteSelection::Explicit(list) => {
                for s in list {
                    if let Some(why) = s.unsupported(cfg) {
                        return Err(format!("suite {s}: {why}"));
                    }
                }
                Ok(list.clone())
            }
        }
    }
}

impl FromStr for SuiteSelection {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let mut out: Vec<Suite> = Vec::new();
        for item in s.split(',').map(str::trim).filter(|x| !x.is_empty()) {
            let add: &[Suite] = match item {
                "all" => return Ok(SuiteSelection::All),
                "formal" => &[Suite::Frobenius, Suite::Deform],
                "frobenius" => &[Suite::Frobenius],
                "deform" => &[Suite::Deform],
                "fuchsian" => &[Suite::Fuchsian],
                "theorem" => &[Suite::Theorem],
                "eta" => &[Suite::Eta],
                other => return Err(format!("unknown suite '{other}'")),
            };
            for s in add {
                if !out.contains(s) {
                    out.push(*s);
                }
            }
        }
        if out.is_empty() {
            return Err("empty suite list".into());
        }
        out.sort();
        Ok(SuiteSelection::Explicit(out))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "UPPERCASE")]
pub enum Status {
    Pass { order: i64 },
    Fail { exponent: i64 },
    Note { detail: String },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub suite: Suite,
    pub name: String,
    #[serde(flatten)]
    pub status: Status,
}

impl Check {
    pub fn failed(&self) -> bool {
        matches!(self.status, Status::Fail { .. })
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.status {
            Status::Pass { order } => write!(f, "PASS\t{}\t{}\torder {}", self.suite, self.name, order),
            Status::Fail { exponent } => write!(f, "FAIL\t{}\t{}\texponent {}", self.suite, self.name, exponent),
            Status::Note { detail } => write!(f, "NOTE\t{}\t{}\t{}", self.suite, self.name, detail),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RunOptions {
    /// Add 1 to `b₁` before anything is checked.
    pub inject_typo: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerifyReport {
    pub label: String,
    pub order: i64,
    pub suites: Vec<Suite>,
    /// Measured calibration constant, when the deform suite ran.
    #[serde(serialize_with = "ser_opt_rational")]
    pub c: Option<Rational>,
    pub checks: Vec<Check>,
}

fn ser_opt_rational<S: serde::Serializer>(v: &Option<Rational>, s: S) -> Result<S::Ok, S::Error> {
    match v {
        Some(r) => s.serialize_some(&r.to_string()),
        None => s.serialize_none(),
    }
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        !self.checks.iter().any(Check::failed)
    }
}

/// Build-time failures worth reporting as a failed check rather than an abort.
fn outcome_of(r: Result<i64, DeformError>) -> Result<Status, DeformError> {
    match r {
        Ok(order) => Ok(Status::Pass { order }),
        Err(DeformError::Identity { exponent, .. }) => Ok(Status::Fail { exponent }),
        Err(DeformError::Frobenius(FrobeniusError::Mismatch { exponent, .. })) => Ok(Status::Fail { exponent }),
        Err(e) => Err(e),
    }
}

fn status_of(r: Result<i64, i64>) -> Status {
    match r {
        Ok(order) => Status::Pass { order },
        Err(exponent) => Status::Fail { exponent },
    }
}

struct Collector {
    suite: Suite,
    checks: Vec<Check>,
}

impl Collector {
    fn push(&mut self, name: impl Into<String>, status: Status) {
        self.checks.push(Check { suite: self.suite, name: name.into(), status });
    }

    fn compare(&mut self, name: &str, a: &Series<Rational>, b: &Series<Rational>, order: i64) -> Result<(), DeformError> {
        let st = outcome_of(compare(a, b, order, name))?;
        self.push(name, st);
        Ok(())
    }

    /// A residual that must vanish below `order`.
    fn vanishes(&mut self, name: &str, r: &LogSeries<Rational>, order: i64) {
        let st = match r.first_nonzero() {
            Some(e) if e < order => Status::Fail { exponent: e },
            _ if r.order() < order => Status::Fail { exponent: r.order() },
            _ => Status::Pass { order },
        };
        self.push(name, st);
    }
}

fn typo<S: crate::scalar::Scalar>(basis: &mut FrobeniusBasis<S>) {
    let bump = Series::monomial(S::one(), 1, basis.b.order());
    basis.b = &basis.b + &bump;
}

/// Run `suites` on `cfg` at `cfg.order()`.
pub fn run(cfg: &SurfaceConfig, label: &str, suites: &[Suite], opts: &RunOptions) -> Result<VerifyReport, DeformError> {
    let mut checks = Vec::new();
    let mut c = None;
    let needs_pack = suites.iter().any(|s| *s != Suite::Frobenius);
    let pack = if needs_pack && cfg.free_parameters() > 0 {
        Some(compute_pack_from(cfg, |b| {
            if opts.inject_typo {
                typo(b)
            }
        })?)
    } else {
        None
    };
    for &suite in suites {
        let mut col = Collector { suite, checks: Vec::new() };
        match suite {
            Suite::Frobenius => frobenius_suite(cfg, opts, &mut col)?,
            Suite::Deform => c = Some(deform_suite(pack.as_ref().expect("deform needs parameters"), &mut col)?),
            Suite::Fuchsian => fuchsian_suite(pack.as_ref().expect("checked by resolve"), &mut col)?,
            Suite::Theorem => theorem_suite(pack.as_ref().expect("checked by resolve"), &mut col)?,
            Suite::Eta => eta_suite(pack.as_ref().expect("checked by resolve"), &mut col)?,
        }
        checks.extend(col.checks);
    }
    Ok(VerifyReport { label: label.to_string(), order: cfg.order(), suites: suites.to_vec(), c, checks })
}

const MARGIN: i64 = crate::deform::MARGIN;

fn frobenius_suite(cfg: &SurfaceConfig, opts: &RunOptions, col: &mut Collector) -> Result<(), DeformError> {
    let n_ord = cfg.order();
    let work = n_ord + MARGIN;
    let op = build_operator(cfg);
    let mut basis = frobenius_basis(&op, work)?;
    if opts.inject_typo {
        typo(&mut basis);
    }
    let l = op.as_diff_operator();
    col.vanishes("L(y) = 0", &l.apply_series(&basis.y), n_ord);
    col.vanishes("L(y_hat) = 0", &l.apply(&basis.y_hat()), n_ord);
    let w = match wronskian_check(&basis, &op) {
        Ok(o) if o >= n_ord => Status::Pass { order: n_ord },
        Ok(o) => Status::Fail { exponent: o },
        Err(FrobeniusError::Mismatch { exponent, .. }) => Status::Fail { exponent },
        Err(e) => return Err(e.into()),
    };
    col.push("wronskian y*y_hat' - y_hat*y' = kappa/P", w);
    if cfg.free_parameters() == 0 {
        return Ok(());
    }
    let balance = basis.y.coeff(1) * op.kappa() + &cfg.accessory()[0];
    col.push(
        "kappa*a1 + rho0 = 0",
        if balance.is_zero() { Status::Pass { order: 2 } } else { Status::Fail { exponent: 1 } },
    );
    let jop = build_jet_operator(cfg);
    let jbasis = frobenius_basis(&jop, work)?;
    for i in 0..cfg.free_parameters() {
        let li = op.build_li(i);
        let mi = op.compose_mi(i);
        let shift = i as i64;
        col.vanishes(&format!("L_{i}(t^{i} y) = 0"), &li.apply_series(&basis.y.shift(shift)), n_ord);
        col.vanishes(&format!("L_{i}(t^{i} y_hat) = 0"), &li.apply(&basis.y_hat().shift(shift)), n_ord);
        let dy = jbasis.y.eps_part(i);
        let dyh = jet_log_derivative(&jbasis, i);
        let four = [
            ("y", LogSeries::holomorphic(basis.y.clone())),
            ("y_hat", basis.y_hat()),
            ("dy", LogSeries::holomorphic(dy.clone())),
            ("dy_hat", dyh),
        ];
        for (name, v) in &four {
            col.vanishes(&format!("M_{i}({name}) = 0"), &mi.apply(v), n_ord);
        }
        let by_rec = derivative_by_recurrence(&op, &basis, i)?;
        let by_int = variation_by_integrals(&basis, &op, i)?;
        col.compare(&format!("dy/drho{i}: jet = recurrence"), &dy, &by_rec, n_ord)?;
        col.compare(&format!("dy/drho{i}: jet = double integral"), &dy, &by_int, n_ord)?;
    }
    Ok(())
}

fn deform_suite(pack: &DeformationPack, col: &mut Collector) -> Result<Rational, DeformError> {
    let n_ord = pack.order();
    let st = outcome_of(pack.check_round_trips())?;
    col.push("T(Q(t)) = t, F(Q(t)) = y", st);
    let y = &pack.basis.y;
    let t = Series::monomial(Jet::constant(int(1)), 1, y.order());
    let ws = [("F", y.clone()), ("F^2", y * y), ("F*T", y * &t)];
    for i in 0..pack.config.free_parameters() {
        for (name, w) in &ws {
            let st = outcome_of(pack.check_relation(w, i))?;
            col.push(format!("d_{i},Q {name} - d_{i},T {name} = d_{i}T * (w' o T)"), st);
        }
        let h = pack.h[i].base_part();
        col.compare(&format!("theta^3(Ht_{i}) = H_{i}"), &pack.h_tilde_base(i).theta().theta().theta(), &h, n_ord)?;
    }
    let report = calibrate_and_verify(pack)?;
    for r in &report.identity_orders {
        col.push(format!("{} [i={}]", r.name, r.index), status_of(r.outcome));
    }
    col.push(
        format!("c = -kappa^-2 = {}", report.expected_c),
        if report.c == report.expected_c { Status::Pass { order: n_ord } } else { Status::Fail { exponent: 0 } },
    );
    Ok(report.c)
}

fn fuchsian_suite(pack: &DeformationPack, col: &mut Collector) -> Result<(), DeformError> {
    let n_ord = pack.order();
    let k = pack.kappa().clone();
    let f = pack.base_f();
    let t = pack.base_t();
    let f2 = &f * &f;
    let h0 = pack.h[0].base_part();
    col.compare("H_0 = kappa F^2 theta(T)", &h0, &(&f2 * &t.theta()).scale(&k), n_ord)?;
    let two_over_k2 = int(2) / (&k * &k);
    for i in 0..pack.config.free_parameters() {
        let lhs = pack.u[i].theta().theta().theta();
        col.compare(&format!("theta^3(u_{i}) = 2 kappa^-2 H_{i}"), &lhs, &pack.h[i].base_part().scale(&two_over_k2), n_ord)?;
    }
    let gens = base_generators(pack)?;
    col.compare("2 f0 phi = theta(f0)", &(&gens.f0 * &gens.phi).scale(&int(2)), &gens.f0.theta(), n_ord)?;
    col.compare("(y^2 P y') o T / phi = kappa F", &phi_display_ratio(pack)?, &f.scale(&k), n_ord)?;
    for w in [0, 2, 4] {
        let (rank, expected) = basis_independence(pack, w)?;
        let st = if rank == expected { Status::Pass { order: n_ord } } else { Status::Fail { exponent: rank as i64 } };
        col.push(format!("weight {w} basis rank {expected}"), st);
    }
    let data = DerivationData::from_pack(pack);
    let set = standard_test_set(&data, pack.config.n());
    for i in 0..pack.config.free_parameters() {
        let mut worst = Ok(n_ord);
        for (_, a) in &set {
            for (_, b) in &set {
                let lhs = partial_q_quasimodular(&a.mul(b), pack, i)?;
                let da = partial_q_quasimodular(a, pack, i)?;
                let db = partial_q_quasimodular(b, pack, i)?;
                let rhs = &(&da * &b.evaluate(&gens)?) + &(&a.evaluate(&gens)? * &db);
                if let Err(DeformError::Identity { exponent, .. }) = compare(&lhs, &rhs, n_ord, "leibniz") {
                    worst = Err(exponent);
                }
            }
        }
        col.push(format!("d_{i},Q Leibniz on test-set products"), status_of(worst));
    }
    Ok(())
}

fn theorem_suite(pack: &DeformationPack, col: &mut Collector) -> Result<(), DeformError> {
    let data = DerivationData::from_pack(pack);
    let set = standard_test_set(&data, pack.config.n());
    for r in verify_main_theorem(pack, &set, true)? {
        col.push(format!("d_Q g = 2 ht Dg + ht' Wg + ht'' delta g, g = {}", r.name), status_of(r.outcome));
    }
    let cut = verify_main_theorem(pack, &set, false)?;
    let m = pack.config.free_parameters();
    let mut witness = Status::Pass { order: pack.order() };
    for (k, r) in cut.iter().enumerate() {
        let g = &set[k % set.len()].1;
        if r.passed() != (g.depth() == 0) {
            witness = Status::Fail { exponent: k as i64 };
        }
    }
    debug_assert_eq!(cut.len(), m * set.len());
    col.push("without delta term: exactly the depth >= 1 elements fail", witness);
    for r in sl2_checks(pack, &data, &set)? {
        col.push(r.name, status_of(r.outcome));
    }
    let mut derivation = Status::Pass { order: pack.order() };
    for (_, a) in &set {
        for (_, b) in &set {
            let rhs = a.delta().mul(b).add(&a.mul(&b.delta()))?;
            if a.mul(b).delta() != rhs {
                derivation = Status::Fail { exponent: 0 };
            }
        }
    }
    col.push("delta(gh) = delta(g) h + g delta(h)", derivation);
    Ok(())
}

fn eta_suite(pack: &DeformationPack, col: &mut Collector) -> Result<(), DeformError> {
    let n_ord = pack.order();
    let t = pack.base_t().truncate(n_ord);
    let f = pack.base_f().truncate(n_ord);
    let eta = |r: Result<Result<i64, crate::etaq::EtaMismatch>, crate::error::EtaError>| match r {
        Ok(Ok(order)) => Status::Pass { order },
        Ok(Err(m)) => Status::Fail { exponent: m.exponent },
        Err(e) => Status::Note { detail: e.to_string() },
    };
    col.push(format!("T = {}", hauptmodul_candidate()), eta(crosscheck(&hauptmodul_candidate(), &t)));
    col.push(format!("F = {}", weight_one_candidate()), eta(crosscheck(&weight_one_candidate(), &f)));
    for (what, q, target) in [("T", alternate_hauptmodul(), &t), ("F", alternate_weight_one(), &f)] {
        let detail = match crosscheck(&q, target) {
            Ok(Ok(o)) => format!("agrees to order {o}"),
            Ok(Err(m)) => format!(
                "PAPER-DISCREPANCY at q^{}: eta gives {}, {} has {}",
                m.exponent, m.eta_value, what, m.target_value
            ),
            Err(e) => e.to_string(),
        };
        col.push(format!("{what} vs {q}"), Status::Note { detail });
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_list_parsing() {
        assert_eq!("all".parse::<SuiteSelection>(), Ok(SuiteSelection::All));
        assert_eq!(
            "deform, frobenius".parse::<SuiteSelection>(),
            Ok(SuiteSelection::Explicit(vec![Suite::Frobenius, Suite::Deform]))
        );
        assert_eq!("formal".parse::<SuiteSelection>(), "frobenius,deform".parse());
        assert!("bogus".parse::<SuiteSelection>().is_err());
    }

    #[test]
    fn applicability() {
        let g = gamma16::config(8);
        assert_eq!(SuiteSelection::All.resolve(&g).unwrap(), Suite::ALL.to_vec());
        let plain = SurfaceConfig::new(vec![int(1), int(-1), int(2)], vec![int(1), int(2)], 8).unwrap();
        assert_eq!(SuiteSelection::All.resolve(&plain).unwrap(), vec![Suite::Frobenius, Suite::Deform]);
        assert!(SuiteSelection::Explicit(vec![Suite::Eta]).resolve(&plain).is_err());
    }

    #[test]
    fn gamma16_all_pass_small() {
        let cfg = gamma16::config(10);
        let suites = SuiteSelection::All.resolve(&cfg).unwrap();
        let report = run(&cfg, "g", &suites, &RunOptions::default()).unwrap();
        let bad: Vec<String> = report.checks.iter().filter(|c| c.failed()).map(|c| c.to_string()).collect();
        assert!(bad.is_empty(), "{bad:#?}");
        assert_eq!(report.c, Some(int(-81)));
    }

    #[test]
    fn typo_breaks_wronskian_at_zero() {
        let cfg = gamma16::config(10);
        let report = run(&cfg, "g", &[Suite::Frobenius], &RunOptions { inject_typo: true }).unwrap();
        let w = report.checks.iter().find(|c| c.name.starts_with("wronskian")).unwrap();
        assert_eq!(w.status, Status::Fail { exponent: 0 });
        assert!(!report.passed());
    }
}
