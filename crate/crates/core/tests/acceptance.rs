//! The eight acceptance criteria at full size, each printing one status line.

use std::time::Duration;

use newton_roots::verify::{self, SuiteReport, DEFAULT_CASES};

const SEED: u64 = 0x5eed_2024;

// Goes to file descriptor 2 directly so the line shows without --nocapture.
#[cfg(unix)]
fn report_line(line: &str) {
    use std::io::Write;
    use std::mem::ManuallyDrop;
    use std::os::fd::FromRawFd;
    // SAFETY: fd 2 stays open for the life of the process and is never closed here.
    let mut err = ManuallyDrop::new(unsafe { std::fs::File::from_raw_fd(2) });
    let _ = writeln!(err, "{line}");
}

#[cfg(not(unix))]
fn report_line(line: &str) {
    eprintln!("{line}");
}

fn check(criterion: usize, report: SuiteReport, limit: Option<Duration>) {
    let in_time = limit.is_none_or(|l| report.elapsed < l);
    let pass = report.ok() && in_time;
    let mut line = format!(
        "criterion {criterion} [{}] {}: {}/{} cases, {} resampled, {:.2?}{}",
        if pass { "PASS" } else { "FAIL" },
        report.name,
        report.passed,
        report.cases,
        report.resampled,
        report.elapsed,
        limit.map_or(String::new(), |l| format!(" (limit {l:?})")),
    );
    for f in report.failures.iter().take(10) {
        line.push_str(&format!("\n    {f}"));
    }
    report_line(&line);
    assert!(report.ok(), "criterion {criterion} failed: {:?}", report.failures);
    assert!(in_time, "criterion {criterion} exceeded {limit:?}: {:?}", report.elapsed);
}

#[test]
fn criterion_1_square_system() {
    check(1, verify::suite_square(), Some(Duration::from_secs(1)));
}

#[test]
fn criterion_2_univariate_vieta() {
    check(2, verify::suite_univariate(SEED, DEFAULT_CASES[1]), Some(Duration::from_secs(10)));
}

#[test]
fn criterion_3_binomial() {
    check(3, verify::suite_binomial(SEED, DEFAULT_CASES[2]), Some(Duration::from_secs(30)));
}

#[test]
fn criterion_4_mixed_volume() {
    check(4, verify::suite_mixed_volume(SEED, DEFAULT_CASES[3]), Some(Duration::from_secs(60)));
}

#[test]
fn criterion_5_symbol_properties() {
    check(5, verify::suite_symbol(SEED, DEFAULT_CASES[4]), None);
}

#[test]
fn criterion_6_residue_properties() {
    check(6, verify::suite_residue(SEED, DEFAULT_CASES[5]), None);
}

#[test]
fn criterion_7_degree_equivalence() {
    check(7, verify::suite_degree(SEED, DEFAULT_CASES[6]), None);
}

#[test]
fn criterion_8_numeric_end_to_end() {
    check(8, verify::suite_numeric(SEED, DEFAULT_CASES[7]), Some(Duration::from_secs(60)));
}
