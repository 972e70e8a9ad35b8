//! Membership, word and periodic point counts, entropy and mixing.

use negbeta::language::{entropy_profile, ShiftSpec};
use negbeta::numeric::Beta;
use negbeta::order::Word;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let golden = ShiftSpec::golden();
    for w in ["2111", "22", "212", "2112"] {
        let w: Word = w.parse()?;
        println!("golden admits {w}: {:?}", golden.is_admissible(&w));
    }
    let table = golden.count_words(14, 12)?;
    print!("{}", table.to_csv());
    let last = entropy_profile(&table).pop().expect("nonempty");
    println!("entropy at n = {}: {:.4}", last.n, last.lang);

    let two = ShiftSpec::from_beta(&Beta::rational(2, 1)?, 50)?;
    println!(
        "beta = 2: lower bound {:?}",
        two.lower().map(|s| s.to_string())
    );
    for w in ["13", "3331", "1233"] {
        let w: Word = w.parse()?;
        println!("  admits {w}: {:?}", two.is_admissible(&w));
    }
    println!(
        "  Per(1..6): {:?}",
        (1..=6)
            .map(|n| two.per_count(n))
            .collect::<Result<Vec<_>, _>>()?
    );
    println!(
        "golden mixing 2 -> 2: {:?}",
        golden.mixing_witness(&[2], &[2], 10)?
    );
    println!(
        "beta = 2 mixing 3 -> 1: {:?}",
        two.mixing_witness(&[3], &[1], 10)?
    );
    Ok(())
}
