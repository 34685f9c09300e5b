//! Produces the versioned JSON experiment report for a saturated
//! construction, as `fsk construct --saturate` does, and lists its checks.

use fsk::commands::{cmd_construct, ConstructArgs};
use fsk::construction::Alpha;

fn main() {
    let dir = std::env::temp_dir().join("fsk-report-example");
    let args = ConstructArgs { n: 40, s: 2, k: 2, alpha: Alpha::half(), saturate: true };
    let report = cmd_construct(args, Some(&dir)).expect("construct runs");
    println!("{} v{} ({})", report.schema, report.schema_version, report.command);
    for c in &report.checks {
        let kind = if c.gating { "check" } else { "note" };
        println!("  {kind} {}: {}", c.name, if c.passed { "pass" } else { "fail" });
    }
    println!("counts: {:?}", report.counts);
    println!("artifacts in {}: {:?}", dir.display(), report.artifacts.keys().collect::<Vec<_>>());
    println!("all gating checks passed: {}", report.all_passed());
}
