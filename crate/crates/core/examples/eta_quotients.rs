//! Eta-quotient expansions checked against the computed Hauptmodul and weight-one form.
use uniformize::deform::compute_pack;
use uniformize::etaq::{alternate_hauptmodul, alternate_weight_one, crosscheck, hauptmodul_candidate, weight_one_candidate};
use uniformize::gamma16;

fn main() {
    let pack = compute_pack(&gamma16::config(20)).unwrap();
    let t = pack.base_t().truncate(20);
    let f = pack.base_f().truncate(20);
    for (eq, target, what) in [
        (hauptmodul_candidate(), &t, "T"),
        (weight_one_candidate(), &f, "F"),
        (alternate_hauptmodul(), &t, "T"),
        (alternate_weight_one(), &f, "F"),
    ] {
        println!("{eq} (weight {})", eq.weight());
        println!("  = {}", eq.expand(8).unwrap().display_in("q"));
        match crosscheck(&eq, target).unwrap() {
            Ok(order) => println!("  matches {what} to order {order}"),
            Err(m) => println!("  differs from {what} at q^{}: {} vs {}", m.exponent, m.eta_value, m.target_value),
        }
    }
}
