//! Truncated series: reversion, exp/log, Eichler integrals.
use uniformize::{int, rat, Series};

fn main() {
    let n = 8;
    // t / (1 - t)^2 and its compositional inverse
    let q = Series::monomial(int(1), 1, n).checked_div(&Series::from_rationals(0, &[int(1), int(-2), int(1)], n)).unwrap();
    let t = q.reverse().unwrap();
    println!("q(t)    = {}", q.display_in("t"));
    println!("t(q)    = {}", t.display_in("q"));
    println!("q(t(q)) = {}", q.compose(&t).unwrap().display_in("q"));

    let x = Series::from_rationals(1, &[int(1), rat(1, 2)], n);
    println!("exp(x)  = {}", x.exp().unwrap().display_in("t"));
    println!("log exp = {}", x.exp().unwrap().log().unwrap().display_in("t"));

    let cusp = Series::from_rationals(1, &[int(1), int(-2), int(-3), int(4)], n);
    let e = cusp.eichler().unwrap();
    println!("eichler = {}", e.display_in("q"));
    println!("theta^3 = {}", e.theta().theta().theta().display_in("q"));
}
