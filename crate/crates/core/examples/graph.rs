//! The graph presentation: slices, walks, counts, paths home and gaps.

use negbeta::graph::{build_graph, follower_equiv_check, parse_b_sequence, to_dot};
use negbeta::language::ShiftSpec;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let spec = ShiftSpec::from_bound(parse_b_sequence("# bound sequence\n|3,2,3,2,1,3,3")?)?;
    let g = build_graph(&spec, 5)?;
    print!("{}", to_dot(&g));
    for w in [&[3, 2, 3, 2][..], &[1, 3, 2, 3], &[3, 3]] {
        println!("walk {w:?}: {:?}", g.walk(w)?);
    }
    let g = build_graph(&spec, 20)?;
    for i in 0..6 {
        let p = g.shortest_path_to_v0(i)?;
        println!("V_{i} -> V_0: length {} labels {}", p.len, p.labels);
    }
    for n in 1..=8 {
        println!(
            "paths of length {n}: {} words: {}",
            g.path_count(n, 0)?,
            spec.word_counts(n)?[n]
        );
    }
    println!("gap scan N = 4: {:?}", g.gap_scan(4));

    let golden = ShiftSpec::golden();
    let r = follower_equiv_check(&golden, &[2], &[1, 2], 6)?;
    println!("followers of 2 and 12 at depth 6 equal: {}", r.equal);
    Ok(())
}
