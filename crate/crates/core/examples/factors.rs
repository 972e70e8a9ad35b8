//! Both block codes onto `X`, verified exhaustively.

use negbeta::factors::{factor_for_beta, verify_factor, ClaimStatus};
use negbeta::numeric::{expand, Beta, UnitPoint};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for (beta, depth) in [(Beta::rational(2, 1)?, 12), (Beta::rational(13, 10)?, 10)] {
        let (code, spec) = factor_for_beta(&beta, 60)?;
        let d = expand(&beta, &UnitPoint::one(), 40)?.digits;
        let report = verify_factor(&code, &spec, depth, &d);
        println!(
            "beta = {beta}, window {}, {:?}",
            code.window, report.provenance
        );
        for c in &report.claims {
            let ex = c.counterexample.as_deref().unwrap_or("");
            println!("  {:<24} {:?} {ex}", c.claim, c.status);
        }
        for n in &report.notes {
            println!("  note: {n}");
        }
        assert_eq!(report.status(), ClaimStatus::Pass);
    }
    Ok(())
}
