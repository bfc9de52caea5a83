//! Running verification suites from code instead of the command line.
use uniformize::gamma16;
use uniformize::suites::{run, RunOptions, SuiteSelection};

fn main() {
    let cfg = gamma16::config(12);
    let suites = SuiteSelection::All.resolve(&cfg).unwrap();
    let report = run(&cfg, gamma16::LABEL, &suites, &RunOptions::default()).unwrap();
    for check in &report.checks {
        println!("{check}");
    }
    println!("c = {:?}, passed = {}", report.c.as_ref().map(|c| c.to_string()), report.passed());
}
