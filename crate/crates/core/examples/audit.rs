//! Check every charge bound of the argument on a ledger and attribute each
//! failure to a structural predicate that fails too.
//!
//!     cargo run --example audit

use dpcolor::discharging::{audit_claims, discharge, meta_audit};
use dpcolor::fixtures;
use dpcolor::labelling::LabelledGraph;

pub fn main() -> Result<(), Box<dyn std::error::Error>> {
    for (name, g) in [
        ("H", fixtures::special_h()),
        ("light pentagon", fixtures::light_pentagon().graph),
        ("bad path", fixtures::bad_path().graph),
    ] {
        let lg = LabelledGraph::identity(g, 3)?;
        let led = discharge(&lg)?;
        let report = audit_claims(&lg, &led)?;
        println!("{name}: {} checks, {} violated", report.checks.len(), report.violations().count());
        for c in report.violations().take(3) {
            println!("  {:?} at {}: {} {} {}", c.bound, c.subject, c.lhs, c.relation, c.rhs);
        }
        println!("  unexplained: {}", report.unexplained().len());
        match meta_audit(&lg, None) {
            Ok(v) => {
                let failed: Vec<&str> = v.failed.iter().map(|p| p.name()).collect();
                println!("  failed predicates {failed:?}, total final {}", v.total_final);
            }
            Err(e) => println!("  meta-audit not applicable: {e}"),
        }
    }
    Ok(())
}
