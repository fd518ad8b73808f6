//! Acceptance suite: one line per criterion, nonzero exit if any fails.

use std::process::ExitCode;

use e6grad::gradings::Models;
use e6grad::report::*;

fn main() -> ExitCode {
    let models = Models::new();
    let gradings = named_grading_reports(&models).expect("named gradings");
    let runs: Vec<Box<dyn Fn() -> e6grad::Result<Criterion>>> = vec![
        Box::new(criterion_1),
        Box::new(criterion_2),
        Box::new(|| criterion_3(&models)),
        Box::new(|| criterion_4(&models)),
        Box::new(|| criterion_5(&models)),
        Box::new(|| Ok(criterion_6(&gradings))),
        Box::new(|| Ok(criterion_7(&gradings))),
        Box::new(criterion_8),
        Box::new(|| criterion_9(&models)),
        Box::new(|| criterion_10(&models)),
        Box::new(|| criterion_11().map(|(c, _)| c)),
    ];
    let mut failed = 0;
    for (k, run) in runs.iter().enumerate() {
        match run() {
            Ok(c) => {
                println!("{}", c.summary_line());
                for ch in c.checks.iter().filter(|ch| !ch.passed) {
                    println!("      {}: measured {} expected {}", ch.id, ch.measured, ch.expected);
                }
                if !c.passed {
                    failed += 1;
                }
            }
            Err(e) => {
                println!("criterion {:>2} FAIL  error: {e}", k + 1);
                failed += 1;
            }
        }
    }
    println!("acceptance: {} of {} criteria passed", runs.len() - failed, runs.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
