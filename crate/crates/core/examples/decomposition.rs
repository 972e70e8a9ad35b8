//! Good words and low-entropy suffixes: profiles, count bounds, splitting
//! and gluing into periodic points.

use negbeta::decomposition::{bound_check, c_entropy_profile, glue, split, CountMatrix};
use negbeta::graph::{build_graph, GapScan};
use negbeta::language::ShiftSpec;
use negbeta::numeric::Beta;
use negbeta::order::Word;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let golden = ShiftSpec::golden();
    let g = build_graph(&golden, 24)?;
    let profile = c_entropy_profile(&g, 8, 12, 0.3)?;
    println!("golden L̂(0.3) = {:?}", profile.l_hat);
    print!(
        "{}",
        profile
            .to_csv()
            .lines()
            .take(6)
            .collect::<Vec<_>>()
            .join("\n")
    );
    println!();

    let s = split(&g, 2, &"1122111".parse::<Word>()?)?;
    println!("split 1122111 at L = 2: u = {}, v = {}", s.u, s.v);

    let words: Vec<Word> = vec!["2".parse()?, "112".parse()?];
    let r = glue(&g, &golden, 2, 4, &words)?;
    println!(
        "glued block {} via {:?}, admissible {}",
        r.block, r.route, r.admissible
    );

    let spec = ShiftSpec::from_beta(&Beta::rational(23, 10)?, 90)?;
    let g = build_graph(&spec, 60)?;
    let GapScan::Found { l } = g.gap_scan(4) else {
        return Err("no gap in slice".into());
    };
    let counts = CountMatrix::build(&g, l, 14)?;
    let report = bound_check(&counts, 4, g.alphabet(), 3);
    for row in &report.rows {
        println!(
            "q = {}: a_1^({}) = {:?} ≤ {}",
            row.q, row.length, row.a1, row.bound
        );
    }
    println!(
        "structure {:?}, back edges {}",
        report.structure, report.back_edges
    );
    Ok(())
}
