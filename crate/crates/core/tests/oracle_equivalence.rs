use negbeta::decomposition::{in_c, in_g};
use negbeta::graph::{build_graph, k_of};
use negbeta::language::{Admissibility, ShiftSpec};
use negbeta::numeric::{expand, leo_witness, Beta, LeoOutcome, Real, Span, UnitPoint};
use negbeta::order::{EvPeriodicSeq, Word};
use negbeta_oracle::{
    extension_witness, naive_admissible, naive_edges, naive_expand, naive_in_c, naive_in_g,
    naive_k, naive_leo, naive_per, naive_words, OracleConfig, OracleSpec, Verdict,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn specs() -> Vec<(ShiftSpec, OracleSpec)> {
    let fig = [3, 2, 3, 2, 1, 3, 3];
    let five_halves = expand(&Beta::rational(5, 2).unwrap(), &UnitPoint::one(), 40)
        .unwrap()
        .digits;
    vec![
        (ShiftSpec::golden(), OracleSpec::golden()),
        (
            ShiftSpec::one_sided(EvPeriodicSeq::periodic(&fig).unwrap()).unwrap(),
            OracleSpec::periodic(&[], &fig),
        ),
        (
            ShiftSpec::one_sided_prefix(five_halves.clone()).unwrap(),
            OracleSpec::prefix(&five_halves),
        ),
        (
            ShiftSpec::two_sided(&Word::from(&[3][..])).unwrap(),
            OracleSpec::two_sided(&[3]),
        ),
    ]
}

fn verdict(a: Admissibility) -> Verdict {
    match a {
        Admissibility::Yes => Verdict::Yes,
        Admissibility::No => Verdict::No,
        Admissibility::Undetermined => Verdict::Undetermined,
    }
}

#[test]
fn word_sets_match_full_scan() {
    for (spec, oracle) in specs() {
        for n in 1..=9 {
            let fast: Vec<Vec<u8>> = spec
                .enumerate_words(n)
                .unwrap()
                .into_iter()
                .map(Word::into_digits)
                .collect();
            assert_eq!(
                Some(fast),
                naive_words(&oracle, n),
                "{} n={n}",
                spec.upper()
            );
        }
    }
}

#[test]
fn membership_matches_on_random_words() {
    let cfg = OracleConfig::default();
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    for (spec, oracle) in specs() {
        for _ in 0..2000 {
            let len = rng.gen_range(1..=16);
            let w: Vec<u8> = (0..len)
                .map(|_| rng.gen_range(1..=spec.alphabet()))
                .collect();
            assert_eq!(
                verdict(spec.is_admissible(&w)),
                naive_admissible(&oracle, &w),
                "{w:?}"
            );
        }
    }
}

#[test]
fn periodic_points_match_full_scan() {
    for (spec, oracle) in specs() {
        for n in 1..=8 {
            let fast: Vec<Vec<u8>> = spec
                .per_points(n)
                .unwrap()
                .into_iter()
                .map(Word::into_digits)
                .collect();
            assert_eq!(Some(fast), naive_per(&oracle, n), "{} n={n}", spec.upper());
        }
    }
}

#[test]
fn graph_edges_match_definition() {
    for (spec, oracle) in specs().into_iter().take(3) {
        let g = build_graph(&spec, 20).unwrap();
        let mut fast: Vec<(usize, usize, u8)> =
            g.edges().map(|e| (e.src, e.dst, e.label)).collect();
        let mut slow = naive_edges(&oracle, 20);
        fast.sort();
        slow.sort();
        assert_eq!(fast, slow, "{}", spec.upper());
    }
}

#[test]
fn k_matches_quadratic_scan() {
    let cfg = OracleConfig::default();
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed + 1);
    let b: Vec<u8> = [3, 2, 3, 2, 1, 3, 3]
        .iter()
        .copied()
        .cycle()
        .take(40)
        .collect();
    for _ in 0..2000 {
        let len = rng.gen_range(0..30);
        let w: Vec<u8> = (0..len).map(|_| rng.gen_range(1..=3)).collect();
        assert_eq!(k_of(&b, &w).unwrap(), naive_k(&b, &w));
    }
}

#[test]
fn decomposition_membership_matches() {
    let spec = ShiftSpec::golden();
    let oracle = OracleSpec::golden();
    let g = build_graph(&spec, 20).unwrap();
    for n in 1..=8 {
        for w in spec.enumerate_words(n).unwrap() {
            for l in 1..=4 {
                assert_eq!(
                    in_g(&g, l, &w).unwrap(),
                    naive_in_g(&oracle, l, &w),
                    "{w} L={l}"
                );
                assert_eq!(
                    in_c(&g, l, &w).unwrap(),
                    naive_in_c(&oracle, l, &w),
                    "{w} L={l}"
                );
            }
        }
    }
}

#[test]
fn expansions_match_integer_arithmetic() {
    for (p, q) in [(13, 10), (5, 2), (17, 10), (2, 1), (23, 10), (7, 3)] {
        let fast = expand(&Beta::rational(p, q).unwrap(), &UnitPoint::one(), 25)
            .unwrap()
            .digits;
        assert_eq!(
            Some(fast.into_digits()),
            naive_expand(p as i128, q as i128, 1, 1, 25)
        );
        let x = expand(
            &Beta::rational(p, q).unwrap(),
            &UnitPoint::rational(3, 7).unwrap(),
            20,
        )
        .unwrap()
        .digits;
        assert_eq!(
            Some(x.into_digits()),
            naive_expand(p as i128, q as i128, 3, 7, 20)
        );
    }
}

#[test]
fn leo_matches_float_propagation() {
    let cases = [
        ((2, 1), (2, 5), (3, 5)),
        ((17, 10), (1, 100), (2, 100)),
        ((5, 2), (1, 3), (2, 5)),
    ];
    for ((p, q), (a, b), (c, d)) in cases {
        let beta = Beta::rational(p, q).unwrap();
        let exact = leo_witness(
            &beta,
            &Span::open(Real::rational(a, b), Real::rational(c, d)),
            100,
        )
        .unwrap();
        let float = naive_leo(
            p as f64 / q as f64,
            a as f64 / b as f64,
            c as f64 / d as f64,
            100,
            1e-9,
        );
        let LeoOutcome::Onto { steps } = exact else {
            panic!("{p}/{q}: {exact:?}");
        };
        assert_eq!(Some(steps), float, "{p}/{q}");
    }
}

/// Finite two-sided admissibility against existence of long extensions.
#[test]
fn two_sided_words_extend() {
    let spec = ShiftSpec::two_sided(&Word::from(&[3][..])).unwrap();
    let oracle = OracleSpec::two_sided(&[3]);
    let mut discrepancies = Vec::new();
    for n in 1..=10 {
        for w in spec.enumerate_words(n).unwrap() {
            if extension_witness(&oracle, &w, 20).is_none() {
                discrepancies.push(w.to_string());
            }
        }
    }
    assert!(
        discrepancies.is_empty(),
        "not extendable: {discrepancies:?}"
    );
}
