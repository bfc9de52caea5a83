//! The built-in example: `P¹ ∖ {0, 1, 1/9, ∞}`, uniformized by `Γ₁(6)`.
//!
//! Its reference tables are quoted in the `ρ̂ = −ρ₀` parameterization, so every
//! derivative table carries a factor `−1` relative to `∂/∂ρ₀`. A few entries are
//! known to be wrong in the quoted source and are flagged instead of matched.

use crate::deform::{partial, DeformationPack, Mode};
use crate::error::{DeformError, EtaError};
use crate::etaq::alternate_hauptmodul;
use crate::frobenius::SurfaceConfig;
use crate::scalar::{int, rat, Rational};
use crate::series::Series;

pub const LABEL: &str = "gamma1_6";

/// Fuchsian value of `ρ₀`.
pub fn fuchsian_rho() -> Rational {
    rat(-1, 3)
}

pub fn punctures() -> Vec<Rational> {
    vec![int(1), rat(1, 9)]
}

/// The configuration at its Fuchsian value, with that value declared.
pub fn config(order: i64) -> SurfaceConfig {
    SurfaceConfig::new(punctures(), vec![fuchsian_rho()], order)
        .and_then(|c| c.with_fuchsian_value(vec![fuchsian_rho()]))
        .expect("built-in configuration is valid")
}

/// A quoted coefficient table.
#[derive(Clone, Debug, PartialEq)]
pub struct ReferenceTable {
    pub name: &'static str,
    pub first_exponent: i64,
    pub values: Vec<Rational>,
    /// Factor turning our `∂/∂ρ₀` value into the quoted convention.
    pub sign: i64,
    /// Exponents where the quoted value is known to be wrong.
    pub flagged: Vec<i64>,
}

impl ReferenceTable {
    pub fn get(&self, exponent: i64) -> Option<&Rational> {
        let k = exponent - self.first_exponent;
        if k < 0 {
            return None;
        }
        self.values.get(k as usize)
    }
}

fn r(pairs: &[(i64, i64)]) -> Vec<Rational> {
    pairs.iter().map(|&(p, q)| rat(p, q)).collect()
}

pub fn reference_tables() -> Vec<ReferenceTable> {
    vec![
        ReferenceTable {
            name: "T",
            first_exponent: 1,
            values: r(&[(1, 1), (-4, 1), (10, 1), (-20, 1)]),
            sign: 1,
            flagged: vec![],
        },
        ReferenceTable {
            name: "F",
            first_exponent: 0,
            values: r(&[(1, 1), (3, 1), (3, 1), (3, 1), (3, 1)]),
            sign: 1,
            flagged: vec![],
        },
        ReferenceTable {
            name: "dF_T",
            first_exponent: 1,
            values: r(&[
                (9, 1),
                (45, 2),
                (21, 2),
                (27, 4),
                (1341, 100),
                (-777, 100),
                (160677, 4900),
                (473229, 9800),
                (-90271, 9800),
                (-34509, 9800),
                (16670883, 1185800),
                (327249, 24200),
            ]),
            sign: -1,
            // right magnitude, wrong sign
            flagged: vec![11],
        },
        ReferenceTable {
            name: "dF_Q",
            first_exponent: 1,
            values: r(&[(9, 1), (153, 2), (105, 1), (543, 4), (36057, 200), (-17607, 250)]),
            sign: -1,
            flagged: vec![],
        },
        ReferenceTable {
            name: "u",
            first_exponent: 1,
            values: r(&[(8, 1), (9, 2), (2, 1), (-9, 8), (-108, 125), (-1, 2), (288, 343), (9, 32)]),
            sign: -1,
            flagged: vec![1],
        },
        ReferenceTable {
            name: "cusp",
            first_exponent: 1,
            values: r(&[(1, 1), (-2, 1), (-3, 1), (4, 1), (6, 1), (6, 1), (-16, 1), (-8, 1)]),
            sign: 1,
            flagged: vec![],
        },
    ]
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RowStatus {
    Match,
    Mismatch,
    /// The reference is known to be wrong here and the computed value differs from it.
    Discrepancy,
    NoReference,
}

impl RowStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            RowStatus::Match => "match",
            RowStatus::Mismatch => "MISMATCH",
            RowStatus::Discrepancy => "PAPER-DISCREPANCY",
            RowStatus::NoReference => "-",
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct TableRow {
    pub table: &'static str,
    pub exponent: i64,
    /// In the `∂/∂ρ₀` convention.
    pub computed: Rational,
    /// `computed` mapped into the quoted convention.
    pub mapped: Rational,
    pub reference: Option<Rational>,
    pub status: RowStatus,
}

fn status(mapped: &Rational, reference: Option<&Rational>, flagged: bool) -> RowStatus {
    match reference {
        None => RowStatus::NoReference,
        Some(v) if v == mapped => RowStatus::Match,
        Some(_) if flagged => RowStatus::Discrepancy,
        Some(_) => RowStatus::Mismatch,
    }
}

/// All computed series shown in the reproduction, keyed like [`reference_tables`].
/// `summand2` is `u·θ(F)`, the part of `∂_T F` coming from the moving `Q`.
pub fn computed_series(pack: &DeformationPack) -> Result<Vec<(&'static str, Series<Rational>)>, DeformError> {
    let f = pack.base_f();
    let t = pack.base_t();
    Ok(vec![
        ("T", t.clone()),
        ("F", f.clone()),
        ("dF_T", partial(pack, 0, Mode::T)?),
        ("dF_Q", partial(pack, 0, Mode::Q)?),
        ("summand2", &pack.u[0] * &f.theta()),
        ("u", pack.u[0].clone()),
        ("cusp", &(&f * &f) * &t.theta()),
    ])
}

/// Side-by-side rows for exponents up to and including `max_exponent`.
pub fn reproduce(pack: &DeformationPack, max_exponent: i64) -> Result<Vec<TableRow>, DeformError> {
    let refs = reference_tables();
    let mut rows = Vec::new();
    for (name, s) in computed_series(pack)? {
        let table = refs.iter().find(|t| t.name == name);
        let first = table.map_or(1, |t| t.first_exponent);
        let sign = int(table.map_or(1, |t| t.sign));
        for e in first..=max_exponent.min(s.order() - 1) {
            let computed = s.coeff(e);
            let mapped = &computed * &sign;
            let reference = table.and_then(|t| t.get(e)).cloned();
            let flagged = table.is_some_and(|t| t.flagged.contains(&e));
            let st = status(&mapped, reference.as_ref(), flagged);
            rows.push(TableRow { table: name, exponent: e, computed, mapped, reference, status: st });
        }
    }
    Ok(rows)
}

/// The alternate eta quotient against the computed Hauptmodul, up to and flagged at
/// its first disagreement. Past that point the two are simply different series.
pub fn eta_rows(pack: &DeformationPack, max_exponent: i64) -> Result<Vec<TableRow>, EtaError> {
    let t = pack.base_t();
    let alt = alternate_hauptmodul().expand(t.order())?;
    let first_bad = alt.first_mismatch(&t);
    let last = first_bad.unwrap_or(i64::MAX).min(max_exponent).min(t.order() - 1);
    Ok((1..=last)
        .map(|e| {
            let computed = t.coeff(e);
            let reference = alt.coeff(e);
            let st = status(&computed, Some(&reference), first_bad == Some(e));
            TableRow { table: "T_eta_alt", exponent: e, mapped: computed.clone(), computed, reference: Some(reference), status: st }
        })
        .collect())
}
