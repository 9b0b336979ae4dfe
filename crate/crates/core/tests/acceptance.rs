//! Acceptance suite: one line per criterion, non-zero exit if any fails.

use std::collections::BTreeMap;
use std::process::ExitCode;
use std::time::Instant;

const CRITERIA: [(u8, &str); 8] = [
    (1, "Z2 generator relations hold exactly"),
    (2, "A15 = t1^4 t3 + t2 t3^3 - 4 t1^2 t3^2 at V=(6)"),
    (3, "trivial-group ring equals truncated Z[t1,t2]"),
    (4, "pi(P^G) equals the usual Poincare series"),
    (5, "pi'(P^G) equals the fixed-part series"),
    (
        6,
        "P^G is independent of stratum order and zero-Euler strata",
    ),
    (7, "ring axioms and geometric inverses on random inputs"),
    (8, "canonical form decides orbit isomorphism"),
];

fn main() -> ExitCode {
    let filter = std::env::args().skip(1).find(|a| !a.starts_with('-'));
    let start = Instant::now();
    let results = grsets::selftest::run(None);
    let mut by_criterion: BTreeMap<u8, Vec<&grsets::selftest::CheckResult>> = BTreeMap::new();
    for r in &results {
        by_criterion.entry(r.criterion).or_default().push(r);
    }
    let mut all_ok = true;
    for (n, title) in CRITERIA {
        let label = format!("criterion {n}");
        if filter
            .as_deref()
            .is_some_and(|f| !label.contains(f) && !title.contains(f))
        {
            continue;
        }
        let checks = by_criterion.get(&n).map(Vec::as_slice).unwrap_or(&[]);
        let ok = !checks.is_empty() && checks.iter().all(|c| c.passed);
        all_ok &= ok;
        println!(
            "{} {label}: {title} ({} checks)",
            if ok { "PASS" } else { "FAIL" },
            checks.len()
        );
        for c in checks.iter().filter(|c| !c.passed) {
            println!("    {}: {}", c.name, c.detail);
        }
    }
    println!("acceptance finished in {:.1?}", start.elapsed());
    if all_ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
