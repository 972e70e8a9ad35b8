//! The alternating order and alternately shift maximal sequences.

use negbeta::order::{alt_cmp, alt_cmp_seq, is_alt_shift_maximal, EvPeriodicSeq};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    println!("22 vs 21: {:?}", alt_cmp(&[2, 2], &[2, 1])?);
    println!("12 vs 21: {:?}", alt_cmp(&[1, 2], &[2, 1])?);
    let three: EvPeriodicSeq = "|3".parse()?;
    let three_two: EvPeriodicSeq = "|32".parse()?;
    println!("3^∞ vs (32)^∞: {:?}", alt_cmp_seq(&three, &three_two));
    for s in ["2|1", "|3", "1|2", "|3232133"] {
        let seq: EvPeriodicSeq = s.parse()?;
        println!("{seq}: {:?}", is_alt_shift_maximal(&seq));
    }
    Ok(())
}
