//! Oracles shared by the integration tests.
//!
//! Every coefficient of `y`, `b`, `Q`, `T`, `F` is a polynomial in the accessory
//! parameters (the recurrence divides only by `κ(m+1)²`, and every series with a
//! unit leading term inverts polynomially). So an exact derivative is available by
//! Lagrange interpolation in one `ρᵢ`, using no jets at all.

#![allow(dead_code)]

use uniformize::frobenius::{build_operator, frobenius_basis, SurfaceConfig};
use uniformize::{int, Rational, Series};

/// `Q`, `T`, `F` computed in plain rationals.
pub struct Plain {
    pub y: Series<Rational>,
    pub b: Series<Rational>,
    pub q: Series<Rational>,
    pub t: Series<Rational>,
    pub f: Series<Rational>,
}

pub fn plain(cfg: &SurfaceConfig, order: i64) -> Plain {
    let op = build_operator(cfg);
    let basis = frobenius_basis(&op, order).unwrap();
    let q = basis.b.checked_div(&basis.y).unwrap().exp().unwrap().shift(1);
    let t = q.reverse().unwrap();
    let f = basis.y.compose(&t).unwrap();
    Plain { y: basis.y, b: basis.b, q, t, f }
}

/// Weights `w_j` with `p'(x0) = Σ w_j p(x_j)` for every polynomial of degree < nodes.len().
fn derivative_weights(x0: &Rational, nodes: &[Rational]) -> Vec<Rational> {
    let k = nodes.len();
    (0..k)
        .map(|j| {
            let mut total = int(0);
            for m in (0..k).filter(|&m| m != j) {
                let mut term = (&nodes[j] - &nodes[m]).recip();
                for l in (0..k).filter(|&l| l != j && l != m) {
                    term *= (x0 - &nodes[l]) / (&nodes[j] - &nodes[l]);
                }
                total += term;
            }
            total
        })
        .collect()
}

/// `∂/∂ρᵢ` of `series(cfg)` at `cfg`, exact for coefficients of degree < points in `ρᵢ`.
pub fn interpolated_derivative(
    cfg: &SurfaceConfig,
    i: usize,
    points: usize,
    series: impl Fn(&SurfaceConfig) -> Series<Rational>,
) -> Series<Rational> {
    let x0 = cfg.accessory()[i].clone();
    let half = (points / 2) as i64;
    let nodes: Vec<Rational> = (0..points as i64).map(|j| &x0 + int(j - half)).collect();
    let w = derivative_weights(&x0, &nodes);
    let mut acc: Option<Series<Rational>> = None;
    for (node, wj) in nodes.iter().zip(&w) {
        let mut rho = cfg.accessory().to_vec();
        rho[i] = node.clone();
        let s = series(&cfg.with_accessory(rho).unwrap()).scale(wj);
        acc = Some(match acc {
            None => s,
            Some(a) => &a + &s,
        });
    }
    acc.unwrap()
}

pub fn gamma16_at(rho0: Rational, order: i64) -> SurfaceConfig {
    SurfaceConfig::new(vec![int(1), uniformize::rat(1, 9)], vec![rho0], order).unwrap()
}

pub fn five_punctures(order: i64) -> SurfaceConfig {
    SurfaceConfig::new(
        vec![int(1), int(-1), int(2)],
        vec![uniformize::rat(1, 2), uniformize::rat(-1, 3)],
        order,
    )
    .unwrap()
}
