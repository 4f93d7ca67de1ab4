//! Acceptance suite: one line per criterion, non-zero exit on any failure.

use std::process::ExitCode;

use sytq::par;
use sytq::verify::{self, CheckReport};

fn main() -> ExitCode {
    type Run = Box<dyn Fn() -> Vec<CheckReport>>;
    let criteria: Vec<(u8, &str, Run)> = vec![
        (
            1,
            "hook product = enumeration, n <= 12, single thread, < 120 s",
            Box::new(|| vec![par::with_threads(1, || verify::check_stanley(12))]),
        ),
        (
            2,
            "type A support and rectangle internal zeros, n <= 12",
            Box::new(|| vec![verify::check_type_a_support(12)]),
        ),
        (3, "phi total off E(λ) with maj + 1, n <= 9", Box::new(|| vec![verify::check_phi(9)])),
        (
            4,
            "weak and strong posets graded, unique extremes, weak within strong, 16 nodes for (3,2,1), n <= 8",
            Box::new(|| vec![verify::check_posets(8)]),
        ),
        (
            5,
            "des interval n <= 12, maj - des gap-free n <= 10",
            Box::new(|| vec![verify::check_des(12, 10)]),
        ),
        (6, "worked examples reproduced exactly", Box::new(|| vec![verify::check_examples()])),
        (
            7,
            "deformed multinomial forms agree, p product = words, symmetric unimodal, n <= 8, m <= 6",
            Box::new(|| vec![verify::check_deformed(8, 6)]),
        ),
        (
            8,
            "G(m,d,n) fake degree = canonical orbit tableaux and support, n <= 6, m <= 4",
            Box::new(|| vec![verify::check_gmdn(6, 4)]),
        ),
        (
            9,
            "type B and type D product formulas on bipartitions, n <= 6",
            Box::new(|| vec![verify::check_closed_forms(6)]),
        ),
        (
            10,
            "size 200 expansion < 10 s, value at 1 = hook count",
            Box::new(|| vec![verify::check_large_expansion(200)]),
        ),
        (
            11,
            "parity-unimodal, n <= 20, < 5 min",
            Box::new(|| vec![verify::check_parity_unimodal(20)]),
        ),
    ];

    let mut all = true;
    for (id, what, run) in &criteria {
        let reports = run();
        let ok = reports.iter().all(CheckReport::passed);
        all &= ok;
        println!(
            "criterion {id:>2}: {} - {what}",
            if ok { "PASS" } else { "FAIL" }
        );
        for r in &reports {
            println!("    {}", r.summary());
            if !r.passed() {
                for f in r.failures.iter().skip(1) {
                    println!("      {f}");
                }
            }
        }
    }
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
