//! Digits of the expansion of 1, exact and certified by intervals.

use negbeta::numeric::{
    classify_d1, expand, expand_at_precision, golden_test, leo_witness, orbit_of_one, psi_prefix,
    Beta, Real, Span, UnitPoint,
};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for text in ["13/10", "golden", "2", "5/2", "1.7"] {
        let beta: Beta = text.parse()?;
        let d = expand(&beta, &UnitPoint::one(), 24)?;
        println!("beta = {beta}: d = {} ({:?})", d.digits, d.status);
        println!(
            "  class {:?}, golden side {:?}",
            classify_d1(&beta, 200)?,
            golden_test(&beta, 200)?
        );
        if let Some(seq) = orbit_of_one(&beta, 200)?.sequence() {
            println!("  exact orbit {seq}");
        }
    }

    let beta = Beta::rational(13, 10)?;
    let exact = expand(&beta, &UnitPoint::one(), 30)?;
    let boxed = expand_at_precision(&beta, &UnitPoint::one(), 30, 128)?;
    assert_eq!(exact.digits, boxed.digits);
    let psi = psi_prefix(&beta, &exact.digits)?;
    println!(
        "psi of 30 digits brackets 1: {:?}",
        psi.contains(&Real::integer(1))
    );

    let golden = Beta::golden();
    let third = Real::rational(1, 3);
    let half = Real::rational(1, 2);
    println!(
        "T^n(1/3, 1/2) for golden: {:?}",
        leo_witness(&golden, &Span::open(third, half), 100)?
    );
    Ok(())
}
