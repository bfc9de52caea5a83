mod common;

use proptest::prelude::*;

use uniformize::cli::RunConfig;
use uniformize::etaq::{naive_product, EtaQuotient};
use uniformize::frobenius::{build_jet_operator, build_operator, frobenius_basis, wronskian_check, SurfaceConfig};
use uniformize::quasimod::{DerivationData, QuasimodularElement};
use uniformize::{int, rat, Rational, Series};

const N: i64 = 10;

fn small_rational() -> impl Strategy<Value = Rational> {
    (-6i64..=6, 1i64..=4).prop_map(|(p, q)| rat(p, q))
}

/// A power series with valuation `val` to `O(t^N)`.
fn series_from(val: i64) -> impl Strategy<Value = Series<Rational>> {
    prop::collection::vec(small_rational(), (N - val) as usize).prop_map(move |c| Series::from_coeffs(val, c, N))
}

fn unit_series() -> impl Strategy<Value = Series<Rational>> {
    (1i64..=3, series_from(1)).prop_map(|(c0, s)| &s + &Series::constant(int(c0), N))
}

/// `t + O(t²)`: invertible under composition.
fn tangent_series() -> impl Strategy<Value = Series<Rational>> {
    series_from(2).prop_map(|s| &s + &Series::monomial(int(1), 1, N))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn ring_axioms(a in series_from(0), b in series_from(0), c in series_from(0)) {
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
    }

    #[test]
    fn inverse_is_two_sided(a in unit_series()) {
        let inv = a.inv().unwrap();
        prop_assert_eq!(&a * &inv, Series::one(N));
    }

    #[test]
    fn reversion_round_trips(s in tangent_series()) {
        let r = s.reverse().unwrap();
        let x = Series::monomial(int(1), 1, N);
        prop_assert_eq!(s.compose(&r).unwrap(), x.clone());
        prop_assert_eq!(r.compose(&s).unwrap(), x);
    }

    #[test]
    fn composition_is_associative(a in series_from(0), b in tangent_series(), c in tangent_series()) {
        let left = a.compose(&b).unwrap().compose(&c).unwrap();
        let right = a.compose(&b.compose(&c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn exp_and_log_are_inverse(x in series_from(1)) {
        prop_assert_eq!(x.exp().unwrap().log().unwrap(), x.clone());
        let one_plus = &Series::one(N) + &x;
        prop_assert_eq!(one_plus.log().unwrap().exp().unwrap(), one_plus);
    }

    #[test]
    fn exp_is_a_homomorphism(x in series_from(1), y in series_from(1)) {
        prop_assert_eq!((&x + &y).exp().unwrap(), &x.exp().unwrap() * &y.exp().unwrap());
    }

    #[test]
    fn eichler_inverts_theta_cubed(s in series_from(1)) {
        prop_assert_eq!(s.eichler().unwrap().theta().theta().theta(), s.clone());
        prop_assert_eq!(s.theta().theta().theta().eichler().unwrap(), s);
    }

    #[test]
    fn theta_is_a_derivation(a in series_from(0), b in series_from(0)) {
        prop_assert_eq!((&a * &b).theta(), &(&a.theta() * &b) + &(&a * &b.theta()));
    }
}

/// Append `η(τ)^r` so the total `q`-power is a nonnegative integer.
fn integral_quotient(mut factors: Vec<(u32, i64)>) -> EtaQuotient {
    let s: i64 = factors.iter().map(|&(d, e)| d as i64 * e).sum();
    let r = if s >= 0 { (24 - s % 24) % 24 } else { -s };
    factors.push((1, r));
    EtaQuotient::new(factors).unwrap()
}

fn eta_factors() -> impl Strategy<Value = Vec<(u32, i64)>> {
    prop::collection::vec((prop::sample::select(vec![1u32, 2, 3, 6]), -6i64..=6), 1..4)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn eta_expansion_is_multiplicative(a in eta_factors(), b in eta_factors()) {
        let (a, b) = (integral_quotient(a), integral_quotient(b));
        let order = 16;
        let prod = a.times(&b).expand(order).unwrap();
        prop_assert_eq!(prod, (&a.expand(order).unwrap() * &b.expand(order).unwrap()).truncate(order));
    }

    #[test]
    fn eta_log_route_matches_the_product(a in eta_factors()) {
        let q = integral_quotient(a);
        let shift: i64 = q.prefactor_power().to_integer().try_into().unwrap();
        let order = 16;
        let naive = naive_product(q.factors(), order - shift).shift(shift);
        prop_assert_eq!(q.expand(order).unwrap(), naive);
    }
}

fn distinct_punctures(k: usize) -> impl Strategy<Value = Vec<Rational>> {
    prop::collection::vec(small_rational(), k).prop_filter("distinct and nonzero", |v| {
        v.iter().all(|a| *a != int(0)) && (0..v.len()).all(|i| (i + 1..v.len()).all(|j| v[i] != v[j]))
    })
}

fn surface() -> impl Strategy<Value = SurfaceConfig> {
    (2usize..=3)
        .prop_flat_map(|k| (distinct_punctures(k), prop::collection::vec(small_rational(), k - 1)))
        .prop_map(|(p, r)| SurfaceConfig::new(p, r, 8).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn wronskian_and_first_coefficient(cfg in surface()) {
        let op = build_operator(&cfg);
        let basis = frobenius_basis(&op, 8).unwrap();
        prop_assert!(wronskian_check(&basis, &op).is_ok());
        prop_assert_eq!(basis.y.coeff(1) * cfg.kappa() + &cfg.accessory()[0], int(0));
    }

    #[test]
    fn jets_match_exact_interpolation(rho0 in small_rational(), i in 0usize..2) {
        let cfg = common::five_punctures(6);
        let mut rho = cfg.accessory().to_vec();
        rho[0] = rho0;
        let cfg = cfg.with_accessory(rho).unwrap();
        let jets = frobenius_basis(&build_jet_operator(&cfg), 6).unwrap();
        let by_interp = common::interpolated_derivative(&cfg, i, 9, |c| common::plain(c, 6).q);
        let jet_q = common::plain(&cfg, 6).q;
        // Q = t exp(b/y) built from jets, then differentiated
        let jq = jets.b.checked_div(&jets.y).unwrap().exp().unwrap().shift(1);
        prop_assert_eq!(jq.base_part(), jet_q);
        prop_assert_eq!(jq.eps_part(i).truncate(6), by_interp.truncate(6));
    }

    #[test]
    fn config_text_round_trips(cfg in surface(), fuchsian in any::<bool>()) {
        let rc = RunConfig {
            label: "prop".into(),
            punctures: cfg.punctures().to_vec(),
            rho: cfg.accessory().to_vec(),
            order: cfg.order(),
            fuchsian: fuchsian.then(|| cfg.accessory().to_vec()),
            suites: None,
        };
        let text = rc.serialize();
        let back = RunConfig::parse(&text).unwrap();
        prop_assert_eq!(&back, &rc);
        prop_assert_eq!(back.serialize(), text);
    }
}

fn element() -> impl Strategy<Value = QuasimodularElement> {
    (small_rational(), 0i64..=2, 0usize..=2, 0usize..=2)
        .prop_filter_map("fits its weight", |(c, a, s, j)| QuasimodularElement::monomial(4, c, a, s, j).ok())
}

fn gamma16_data() -> DerivationData {
    let op = build_operator(&uniformize::gamma16::config(4));
    DerivationData { kappa: op.kappa().clone(), p: op.p().clone(), p1: op.p1().clone() }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn derivations_obey_leibniz(g in element(), h in element()) {
        let data = gamma16_data();
        let gh = g.mul(&h);
        prop_assert_eq!(gh.delta(), g.delta().mul(&h).add(&g.mul(&h.delta())).unwrap());
        prop_assert_eq!(gh.d(&data), g.d(&data).mul(&h).add(&g.mul(&h.d(&data))).unwrap());
    }

    #[test]
    fn sl2_relations(g in element()) {
        let data = gamma16_data();
        let wd = g.d(&data).w().sub(&g.w().d(&data)).unwrap();
        prop_assert_eq!(wd, g.d(&data).scale(&int(2)));
        let wdel = g.delta().w().sub(&g.w().delta()).unwrap();
        prop_assert_eq!(wdel, g.delta().scale(&int(-2)));
        let del_d = g.d(&data).delta().sub(&g.delta().d(&data)).unwrap();
        prop_assert_eq!(del_d, g.w());
    }
}
