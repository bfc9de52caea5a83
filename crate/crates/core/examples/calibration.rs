//! Deformation series and the calibration constant on a five-punctured sphere.
use uniformize::deform::{calibrate_and_verify, compute_pack, partial, Mode};
use uniformize::frobenius::SurfaceConfig;
use uniformize::{int, rat};

fn main() {
    let cfg = SurfaceConfig::new(vec![int(1), int(-1), int(2)], vec![rat(1, 2), rat(-1, 3)], 12).unwrap();
    let pack = compute_pack(&cfg).unwrap();
    println!("T = {}", pack.base_t().truncate(6).display_in("q"));
    println!("F = {}", pack.base_f().truncate(6).display_in("q"));
    for i in 0..cfg.free_parameters() {
        println!("d_{i},T F = {}", partial(&pack, i, Mode::T).unwrap().truncate(5).display_in("q"));
        println!("d_{i},Q F = {}", partial(&pack, i, Mode::Q).unwrap().truncate(5).display_in("q"));
    }
    print!("{}", calibrate_and_verify(&pack).unwrap());
}
