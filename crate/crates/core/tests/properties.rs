use std::cmp::Ordering;

use negbeta::decomposition::{glue, in_c, in_g, in_gm, split, GlueRoute};
use negbeta::factors::{apply_code, factor_for_beta, TargetShiftX};
use negbeta::graph::{build_graph, follower_equiv_check, k_of, GraphSlice, Walk};
use negbeta::language::{Admissibility, Language, ShiftSpec};
use negbeta::measures::{htop_estimate, measure_entropy_estimate, mu_n};
use negbeta::numeric::{expand, expand_at_precision, psi_prefix, Beta, Real, UnitPoint};
use negbeta::order::{alt_cmp, alt_cmp_seq, is_alt_shift_maximal, EvPeriodicSeq, Maximality, Word};
use proptest::prelude::*;

fn fig() -> ShiftSpec {
    ShiftSpec::one_sided(EvPeriodicSeq::periodic(&[3, 2, 3, 2, 1, 3, 3]).unwrap()).unwrap()
}

fn word(alphabet: u8, len: std::ops::RangeInclusive<usize>) -> impl Strategy<Value = Vec<u8>> {
    prop::collection::vec(1..=alphabet, len)
}

/// Random admissible word, built by appending admissible digits.
fn admissible(spec: &ShiftSpec, choices: &[u8]) -> Vec<u8> {
    let mut w = Vec::new();
    for &c in choices {
        let opts: Vec<u8> = (1..=spec.alphabet())
            .filter(|&a| {
                let mut x = w.clone();
                x.push(a);
                spec.is_admissible(&x) == Admissibility::Yes
            })
            .collect();
        if opts.is_empty() {
            break;
        }
        w.push(opts[c as usize % opts.len()]);
    }
    w
}

fn end_vertex(g: &GraphSlice, w: &[u8]) -> usize {
    match g.walk(w).unwrap() {
        Walk::Path(p) => *p.last().unwrap(),
        Walk::Reject { at } => panic!("rejected at {at}"),
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn order_is_total_and_antisymmetric(x in word(3, 6..=6), y in word(3, 6..=6)) {
        let a = alt_cmp(&x, &y).unwrap();
        let b = alt_cmp(&y, &x).unwrap();
        prop_assert_eq!(a, b.reverse());
        prop_assert_eq!(a == Ordering::Equal, x == y);
    }

    #[test]
    fn order_is_transitive(x in word(3, 5..=5), y in word(3, 5..=5), z in word(3, 5..=5)) {
        let mut v = [x, y, z];
        v.sort_by(|a, b| alt_cmp(a, b).unwrap());
        prop_assert_ne!(alt_cmp(&v[0], &v[2]).unwrap(), Ordering::Greater);
    }

    #[test]
    fn sequence_order_agrees_with_truncations(
        p1 in word(3, 0..=3), q1 in word(3, 1..=3), p2 in word(3, 0..=3), q2 in word(3, 1..=3),
    ) {
        let s = EvPeriodicSeq::new(&p1, &q1).unwrap();
        let t = EvPeriodicSeq::new(&p2, &q2).unwrap();
        let full = alt_cmp_seq(&s, &t);
        let horizon = 3 + 3 + 9;
        let cut = alt_cmp(&s.prefix(horizon), &t.prefix(horizon)).unwrap();
        prop_assert_eq!(full, cut);
    }

    #[test]
    fn accepted_bounds_are_maximal(p in word(3, 1..=3), q in word(3, 1..=4)) {
        let s = EvPeriodicSeq::new(&p, &q).unwrap();
        if let Ok(spec) = ShiftSpec::one_sided(s.clone()) {
            prop_assert_eq!(is_alt_shift_maximal(&s), Maximality::Yes);
            prop_assert_eq!(spec.alphabet(), s.max_digit());
        }
    }

    #[test]
    fn languages_are_factorial(choices in word(3, 1..=14), cut in 0usize..14) {
        for spec in [ShiftSpec::golden(), fig(), ShiftSpec::two_sided(&Word::from(&[3][..])).unwrap()] {
            let w = admissible(&spec, &choices);
            let c = cut.min(w.len());
            prop_assert_eq!(spec.is_admissible(&w[..c]), Admissibility::Yes);
            prop_assert_eq!(spec.is_admissible(&w[c..]), Admissibility::Yes);
        }
    }

    #[test]
    fn walks_end_at_k(choices in word(3, 1..=14)) {
        let spec = fig();
        let g = build_graph(&spec, 30).unwrap();
        let w = admissible(&spec, &choices);
        prop_assert_eq!(end_vertex(&g, &w), k_of(g.b(), &w).unwrap());
    }

    #[test]
    fn equal_states_have_equal_followers(c1 in word(2, 1..=8), c2 in word(2, 1..=8)) {
        let spec = ShiftSpec::golden();
        let b: Vec<u8> = spec.upper().prefix(20).unwrap().into_digits();
        let (w1, w2) = (admissible(&spec, &c1), admissible(&spec, &c2));
        if k_of(&b, &w1).unwrap() == k_of(&b, &w2).unwrap() {
            let r = follower_equiv_check(&spec, &w1, &w2, 6).unwrap();
            prop_assert!(r.equal, "{:?}", r.counterexample);
        }
    }

    #[test]
    fn splits_are_sound(choices in word(2, 1..=12), l in 1usize..=5) {
        let spec = ShiftSpec::golden();
        let g = build_graph(&spec, 20).unwrap();
        let w = admissible(&spec, &choices);
        let s = split(&g, l, &w).unwrap();
        prop_assert_eq!(s.u.concat(&s.v), Word::from(&w[..]));
        prop_assert!(in_g(&g, l, &s.u).unwrap());
        prop_assert!(s.v.is_empty() || in_c(&g, l, &s.v).unwrap());
    }

    #[test]
    fn glued_blocks_are_periodic_points(seeds in prop::collection::vec(word(3, 1..=6), 1..=3)) {
        let beta = Beta::rational(5, 2).unwrap();
        let d = expand(&beta, &UnitPoint::one(), 60).unwrap().digits;
        let spec = ShiftSpec::one_sided_prefix(d).unwrap();
        let g = build_graph(&spec, 40).unwrap();
        let (l, m) = (2, 3);
        let words: Vec<Word> = seeds.iter().map(|c| Word::from(&admissible(&spec, c)[..])).collect();
        if words.iter().all(|w| in_gm(&g, l, m, w).unwrap()) {
            let r = glue(&g, &spec, l, m, &words).unwrap();
            prop_assert!(r.admissible);
            prop_assert_eq!(r.route, GlueRoute::ShortestPathPadding);
            prop_assert!(r.connectors.iter().all(|c| c.len() == r.t));
            prop_assert!(r.block.starts_with(&words[0]));
        }
    }

    #[test]
    fn interval_digits_match_exact(p in 1i64..60, q in 1i64..60, bp in 11i64..40) {
        prop_assume!(p <= q);
        let beta = Beta::rational(bp, 10).unwrap();
        let x = UnitPoint::rational(p, q).unwrap();
        let exact = expand(&beta, &x, 20).unwrap();
        let boxed = expand_at_precision(&beta, &x, 20, 192).unwrap();
        prop_assert_eq!(&boxed.digits[..boxed.certified], &exact.digits[..boxed.certified]);
        let psi = psi_prefix(&beta, &exact.digits).unwrap();
        prop_assert_eq!(psi.contains(&Real::rational(p, q)), Some(true));
    }

    #[test]
    fn codes_map_into_x(choices in word(3, 3..=20)) {
        for (p, q) in [(2, 1), (13, 10)] {
            let (code, spec) = factor_for_beta(&Beta::rational(p, q).unwrap(), 40).unwrap();
            let w = admissible(&spec, &choices);
            if w.len() > code.window {
                let img = apply_code(&code, &w).unwrap();
                prop_assert_eq!(TargetShiftX.admits(&img), Admissibility::Yes);
                let tail = apply_code(&code, &w[1..]).unwrap();
                prop_assert_eq!(tail.digits(), &img[1..]);
            }
        }
    }
}

#[test]
fn periodic_blocks_are_rotation_closed() {
    for spec in [
        ShiftSpec::golden(),
        fig(),
        ShiftSpec::two_sided(&Word::from(&[3][..])).unwrap(),
    ] {
        for n in 1..=8 {
            let blocks = spec.per_points(n).unwrap();
            for p in &blocks {
                assert_eq!(spec.is_admissible(p), Admissibility::Yes);
                for k in 0..n {
                    assert!(blocks.contains(&p.rotation(k)), "{p} rotation {k}");
                }
            }
        }
    }
}

#[test]
fn word_counts_grow_at_most_by_alphabet() {
    for spec in [
        ShiftSpec::golden(),
        fig(),
        ShiftSpec::two_sided(&Word::from(&[3][..])).unwrap(),
    ] {
        let c = spec.word_counts(12).unwrap();
        for n in 1..c.len() {
            assert!(c[n] <= &c[n - 1] * spec.alphabet() as u32);
        }
    }
}

#[test]
fn edges_respect_parity() {
    for spec in [ShiftSpec::golden(), fig()] {
        let g = build_graph(&spec, 30).unwrap();
        for e in g.edges().filter(|e| !e.spine) {
            let next = g.b()[e.src];
            if e.src % 2 == 0 {
                assert!(e.label < next, "{e:?}");
            } else {
                assert!(e.label > next, "{e:?}");
            }
        }
    }
}

#[test]
fn measures_are_consistent() {
    let golden = ShiftSpec::golden();
    let h = htop_estimate(&golden, 14, 0).unwrap().value;
    for n in [4, 7, 10, 13] {
        let mu = mu_n(&golden, n, n.min(6)).unwrap();
        assert!(mu.is_normalized());
        assert!(mu.is_consistent());
    }
    let mu = mu_n(&golden, 14, 14).unwrap();
    assert!(measure_entropy_estimate(&mu, 14) <= h + 0.05);
    let two = ShiftSpec::two_sided(&Word::from(&[3][..])).unwrap();
    for n in [3, 6, 9] {
        let mu = mu_n(&two, n, 4).unwrap();
        assert!(mu.is_normalized() && mu.is_consistent());
    }
}

#[test]
fn base_two_forces_threes() {
    let spec = ShiftSpec::two_sided(&Word::from(&[3][..])).unwrap();
    for j in 0..=9 {
        let ext = spec.extensions(&[3, 3, 3], 3 + j).unwrap();
        assert_eq!(ext, [Word::repeat(3, 3 + j)]);
    }
}
