//! Runs every acceptance criterion and prints one line per criterion.
//! Built without the libtest harness so the lines always reach stdout.

use std::process::ExitCode;
use std::time::Instant;

use tornheim::suites::{tally, Outcome, Suite};
use tornheim::EvalOptions;

const SEED: u64 = 7;

fn main() -> ExitCode {
    let opts = EvalOptions::default();
    let mut all_ok = true;
    for (i, suite) in Suite::ALL.into_iter().enumerate() {
        let start = Instant::now();
        let checks = suite.run(SEED, None, &opts);
        let (passed, total) = tally(&checks);
        let skipped = checks.len() - total;
        let ok = total > 0 && passed == total;
        all_ok &= ok;
        let note = if skipped > 0 { format!(", {skipped} not admissible") } else { String::new() };
        println!(
            "criterion {:>2} {:<24} {} ({passed}/{total}{note}) in {:.1}s",
            i + 1,
            suite.name(),
            if ok { "PASS" } else { "FAIL" },
            start.elapsed().as_secs_f64()
        );
        for c in checks.iter().filter(|c| !c.passed()) {
            let why = match &c.outcome {
                Outcome::Fail(d) => d.clone(),
                Outcome::Refused(e) => format!("{}: {e}", e.kind()),
                _ => String::new(),
            };
            println!("    {} {:?}: {why}", c.target, c.inputs);
        }
    }
    if all_ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
