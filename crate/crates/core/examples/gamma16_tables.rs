//! Side-by-side reproduction of the reference tables for the built-in example.
use uniformize::deform::compute_pack;
use uniformize::gamma16::{self, RowStatus};

fn main() {
    let pack = compute_pack(&gamma16::config(14)).unwrap();
    for row in gamma16::reproduce(&pack, 12).unwrap() {
        if row.status == RowStatus::NoReference {
            continue;
        }
        let reference = row.reference.map(|r| r.to_string()).unwrap_or_default();
        println!("{:<5} q^{:<3} {:>20} {:>20}  {}", row.table, row.exponent, row.mapped, reference, row.status.as_str());
    }
}
