//! Uniform measures on periodic points, entropy and Gibbs diagnostics.

use negbeta::decomposition::in_g;
use negbeta::graph::build_graph;
use negbeta::language::ShiftSpec;
use negbeta::measures::{
    gibbs_check, htop_estimate, measure_entropy_estimate, mu_n, weakstar_diagnostic,
};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let golden = ShiftSpec::golden();
    let h = htop_estimate(&golden, 18, 16)?;
    println!(
        "h estimate {:.4} (log golden ratio {:.4})",
        h.value,
        ((1.0 + 5f64.sqrt()) / 2.0).ln()
    );

    let mu = mu_n(&golden, 16, 5)?;
    println!(
        "#Per(16) = {}, normalized {}, consistent {}",
        mu.per_count,
        mu.is_normalized(),
        mu.is_consistent()
    );
    println!(
        "entropy of mu_16 at m = 5: {:.4}",
        measure_entropy_estimate(&mu, 5)
    );

    let g = build_graph(&golden, 12)?;
    let mut good = Vec::new();
    for len in 1..=5 {
        for w in golden.enumerate_words(len)? {
            if in_g(&g, 2, &w)? {
                good.push(w);
            }
        }
    }
    let report = gibbs_check(&mu, &good, h.value);
    println!(
        "Gibbs: max ratio {:.3}, min ratio {:?}, K {:?}",
        report.max_ratio, report.min_ratio, report.implied_k
    );

    let table = weakstar_diagnostic(&golden, &[8, 10, 12, 14, 16], 3)?;
    println!("weak* deviations {:?}", table.deviations);
    Ok(())
}
