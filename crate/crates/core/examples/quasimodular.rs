//! The deformation derivative on quasimodular forms for the built-in example.
use uniformize::deform::compute_pack;
use uniformize::gamma16;
use uniformize::quasimod::{sl2_checks, standard_test_set, verify_main_theorem, DerivationData};

fn main() {
    let pack = compute_pack(&gamma16::config(16)).unwrap();
    let data = DerivationData::from_pack(&pack);
    let set = standard_test_set(&data, 4);
    for (with_delta, label) in [(true, "full"), (false, "no delta term")] {
        println!("-- {label}");
        for r in verify_main_theorem(&pack, &set, with_delta).unwrap() {
            println!("{:<20} {:?}", r.name, r.outcome);
        }
    }
    println!("-- sl2");
    for r in sl2_checks(&pack, &data, &set).unwrap() {
        println!("{:<32} {:?}", r.name, r.outcome);
    }
}
