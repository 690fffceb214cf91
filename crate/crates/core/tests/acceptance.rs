//! Runs the ten acceptance criteria and prints one line per criterion.
//! Criterion 10 is informational and never fails the run.

use std::process::ExitCode;
use std::time::Instant;

use jack_laurent::conjectures::{run_all, Verdict};
use jack_laurent::par::Exec;
use jack_laurent::verify::{verify, Suite, VerifyReport};

fn summarize(reports: &[VerifyReport]) -> (bool, String) {
    let passed = reports.iter().all(|r| r.passed);
    let cases: usize = reports.iter().flat_map(|r| &r.checks).map(|c| c.cases).sum();
    let failed: Vec<String> = reports
        .iter()
        .flat_map(|r| r.failures())
        .map(|c| {
            format!(
                "{}/{}: {}",
                c.suite,
                c.check,
                c.failures.first().cloned().unwrap_or_default()
            )
        })
        .collect();
    let detail = if failed.is_empty() {
        format!("{cases} cases")
    } else {
        failed.join("; ")
    };
    (passed, detail)
}

fn main() -> ExitCode {
    let criteria: [(&str, &[(Suite, usize)]); 9] = [
        ("explicit P_{1,1} and P_{11,1}", &[(Suite::Examples, 0)]),
        ("eigenfunction property, r <= 3, size <= 4", &[(Suite::Eigen, 4)]),
        ("operator identities on bidegree <= (3,3)", &[(Suite::Commute, 3)]),
        (
            "Pieri identity size <= 3, diagram forms size <= 4",
            &[(Suite::Pieri, 3)],
        ),
        (
            "evaluation formula size <= 4, Stanley identities",
            &[(Suite::Evaluation, 4)],
        ),
        ("finite-N compatibility N <= 4, size <= 4", &[(Suite::FiniteN, 4)]),
        ("torus norms and orthogonality, N = 4", &[(Suite::Norms, 3)]),
        (
            "star involution, separation, theta-duality",
            &[(Suite::Involutions, 4), (Suite::Duality, 3)],
        ),
        (
            "Schur-Laurent limit equals Jacobi-Trudy, size <= 4",
            &[(Suite::Schur, 4)],
        ),
    ];
    let mut all = true;
    for (i, (title, runs)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let reports: Vec<VerifyReport> = runs.iter().map(|&(s, n)| verify(s, n, Exec::Parallel)).collect();
        let (passed, detail) = summarize(&reports);
        all &= passed;
        println!(
            "criterion {:>2}: {} {title} ({detail}, {:.1?})",
            i + 1,
            if passed { "PASS" } else { "FAIL" },
            t.elapsed()
        );
    }
    let t = Instant::now();
    match run_all(3, Exec::Parallel) {
        Ok(report) => {
            let parts: Vec<String> = report
                .reports
                .iter()
                .map(|r| format!("{} {}/{} hold", r.name, r.count(Verdict::Holds), r.instances.len()))
                .collect();
            println!(
                "criterion 10: REPORT {} ({:.1?}, non-gating)",
                parts.join(", "),
                t.elapsed()
            );
        }
        Err(e) => println!("criterion 10: REPORT harness error {e} (non-gating)"),
    }
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
