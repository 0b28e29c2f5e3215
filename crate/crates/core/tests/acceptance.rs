//! Acceptance criteria, one sweep each. Prints a PASS/FAIL line per
//! criterion and exits non-zero if any fails.

use std::process::ExitCode;
use std::time::Duration;

use omegaseq::verify::{run, Suite, SweepConfig};

struct Criterion {
    id: u32,
    title: &'static str,
    suite: Suite,
    budget: Duration,
}

const CRITERIA: [Criterion; 10] = [
    Criterion {
        id: 1,
        title: "product identity, n in [2, 200]",
        suite: Suite::Products,
        budget: Duration::from_secs(30),
    },
    Criterion {
        id: 2,
        title: "discriminant formulas for w, W, v",
        suite: Suite::Discs,
        budget: Duration::from_secs(60),
    },
    Criterion {
        id: 3,
        title: "condition C vs unit-group scan, N in [3, 20000]",
        suite: Suite::ConditionC,
        budget: Duration::from_secs(60),
    },
    Criterion {
        id: 4,
        title: "field discriminant formula vs disc(psi_N), N in [3, 200]",
        suite: Suite::FieldDisc,
        budget: Duration::from_secs(30),
    },
    Criterion {
        id: 5,
        title: "monogenicity of Omega_d by two routes, odd d in [3, 105]",
        suite: Suite::Dedekind,
        budget: Duration::from_secs(30),
    },
    Criterion {
        id: 6,
        title: "example corpus",
        suite: Suite::Corpus,
        budget: Duration::from_secs(5),
    },
    Criterion {
        id: 7,
        title: "Eisenstein at p = 2n - 1 <= 500",
        suite: Suite::Eisenstein,
        budget: Duration::from_secs(10),
    },
    Criterion {
        id: 8,
        title: "primitive divisors, n in [2, 100]",
        suite: Suite::Primitive,
        budget: Duration::from_secs(60),
    },
    Criterion {
        id: 9,
        title: "distinct field discriminants, n <= 200",
        suite: Suite::Distinctness,
        budget: Duration::from_secs(10),
    },
    Criterion {
        id: 10,
        title: "resultant and F_p factorization cross-checks",
        suite: Suite::Kernel,
        budget: Duration::from_secs(30),
    },
];

fn main() -> ExitCode {
    // single-threaded, matching the stated budgets
    let cfg = SweepConfig::default();
    let mut failed = 0;
    for c in &CRITERIA {
        let report = run(c.suite, &cfg);
        let elapsed = Duration::from_millis(report.wall_time_ms);
        let in_budget = elapsed <= c.budget;
        let ok = report.passed() && in_budget;
        println!(
            "{} criterion {:>2}: {} [{}; {} cases, {} failures; {:.2}s of {}s]",
            if ok { "PASS" } else { "FAIL" },
            c.id,
            c.title,
            report.suite,
            report.cases,
            report.failures.len(),
            elapsed.as_secs_f64(),
            c.budget.as_secs(),
        );
        for f in report.failures.iter().take(5) {
            println!(
                "       {}: expected {}, got {}",
                f.case, f.expected, f.actual
            );
        }
        for n in &report.notes {
            println!("       note: {n}");
        }
        if !in_budget {
            println!("       over time budget");
        }
        if report.cases == 0 {
            println!("       no cases ran");
            failed += 1;
        } else if !ok {
            failed += 1;
        }
    }
    println!(
        "{} of {} criteria passed",
        CRITERIA.len() - failed,
        CRITERIA.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
