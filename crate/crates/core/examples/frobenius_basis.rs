//! Frobenius basis of the built-in example and three routes to dy/drho0.
use uniformize::frobenius::{
    build_jet_operator, build_operator, derivative_by_recurrence, frobenius_basis, variation_by_integrals,
    wronskian_check,
};
use uniformize::gamma16;

fn main() {
    let cfg = gamma16::config(10);
    let op = build_operator(&cfg);
    let basis = frobenius_basis(&op, cfg.order()).unwrap();
    println!("y = {}", basis.y.display_in("t"));
    println!("b = {}", basis.b.display_in("t"));
    println!("wronskian y*y_hat' - y_hat*y' = kappa/P verified to {}", wronskian_check(&basis, &op).unwrap());

    let jets = frobenius_basis(&build_jet_operator(&cfg), cfg.order()).unwrap();
    let by_jet = jets.y.eps_part(0);
    let by_rec = derivative_by_recurrence(&op, &basis, 0).unwrap();
    let by_int = variation_by_integrals(&basis, &op, 0).unwrap();
    println!("dy/drho0 = {}", by_jet.display_in("t"));
    println!("recurrence agrees: {}", by_jet.agrees_to(&by_rec, cfg.order()));
    println!("double integral agrees: {}", by_jet.agrees_to(&by_int, cfg.order()));
}
