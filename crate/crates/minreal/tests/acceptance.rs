//! The ten acceptance criteria, run with their exact parameters. Prints one
//! PASS/FAIL line per criterion and exits non-zero if any fails.

use std::process::ExitCode;
use std::time::Instant;

use minreal::config::DEFAULT_SEED;
use minreal::report::SuiteReport;
use minreal::suites;

type Criterion = (&'static str, fn() -> SuiteReport);

const CRITERIA: [Criterion; 10] = [
    (
        "coordinate functions and rho_0 are homomorphisms, n = 1, 2, 3",
        || suites::tilde_homomorphism(&[1, 2, 3]),
    ),
    (
        "Weyl multiplicativity to degree 5 and closed form, n <= 2",
        || suites::weyl_multiplicativity(&[1, 2], 5, 3, 3),
    ),
    (
        "star associativity and Jacobi on 100 seeded triples of degree <= 5",
        || suites::star_algebra(2, DEFAULT_SEED, 100, 5),
    ),
    ("rho_a recovers rho^lambda, n <= 3, m = 0..3", || {
        suites::bridge(&[1, 2, 3], &[0, 1, 2, 3])
    }),
    ("dim H1 = 1: n = 1 at d = 3..6, n = 2 at d = 3, 4", || {
        suites::h1(&[(1, 3, 6), (2, 3, 4)])
    }),
    (
        "Phi_a deformations to order 5, derived deformations to order 4",
        || suites::deformation(&[1, 2], 5, 4),
    ),
    (
        "Gram tables for lambda in {2, 3, 7/2}, n <= 2, pmax = 5",
        || suites::gram(&[1, 2], &["2", "3", "7/2"], 5),
    ),
    (
        "invariant P_m(a) for m(a) = 0..4 and absence for 1/2, 5/3, i",
        || suites::invariant_subspace(&[1, 2], &[0, 1, 2, 3, 4], &["1/2", "5/3", "i"], 6),
    ),
    ("SU(2) modules P_m, m = 0..5", || suites::su2(5)),
    ("Heisenberg subalgebra, n = 2, 3", || {
        suites::heisenberg(&[2, 3])
    }),
];

fn main() -> ExitCode {
    let results: Vec<(SuiteReport, f64)> = std::thread::scope(|s| {
        let handles: Vec<_> = CRITERIA
            .iter()
            .map(|(_, f)| {
                s.spawn(move || {
                    let t = Instant::now();
                    let r = f();
                    (r, t.elapsed().as_secs_f64())
                })
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("criterion panicked"))
            .collect()
    });

    let mut failed = 0;
    for (k, ((desc, _), (report, secs))) in CRITERIA.iter().zip(&results).enumerate() {
        let status = if report.passed { "PASS" } else { "FAIL" };
        println!(
            "{status} criterion {:>2}: {desc} [{} checks, {secs:.1}s]",
            k + 1,
            report.checks.len()
        );
        for c in report.failures() {
            println!("        {}: {}", c.name, c.detail);
        }
        failed += usize::from(!report.passed);
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        CRITERIA.len() - failed
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
