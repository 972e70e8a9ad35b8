//! The alternating order on digit strings.
//!
//! `x ≺ y` when, at the first index `i` (1-based) where they differ,
//! `(-1)^i (y_i - x_i) < 0`: odd positions compare normally, even positions
//! compare reversed. Negative-base expansions are monotone in this order.

use std::cmp::Ordering;

use num_integer::Integer;
use serde::{Deserialize, Serialize};
use thiserror::Error;

mod sequence;
mod word;

pub use sequence::EvPeriodicSeq;
pub use word::Word;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OrderError {
    #[error("words of different lengths ({0} and {1}) are not comparable")]
    LengthMismatch(usize, usize),
    #[error("digit {0} is outside the alphabet")]
    InvalidDigit(u8),
    #[error("period of an eventually periodic sequence must be nonempty")]
    EmptyPeriod,
    #[error("cannot parse {0:?}")]
    Parse(String),
}

/// Outcome of comparing a finite word with the equally long prefix of a
/// (possibly only partially known) sequence.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum PrefixOrdering {
    Less,
    Greater,
    /// The word coincides with the prefix; the infinite continuation decides.
    EqualAtPrefix,
    /// The sequence is not known far enough to compare.
    Unknown,
}

/// Ordering decided by two different digits `x` and `y` at 1-based position `i`.
#[inline]
pub fn decide_at(i: usize, x: u8, y: u8) -> Ordering {
    debug_assert_ne!(x, y);
    let natural = x.cmp(&y);
    if i % 2 == 1 {
        natural
    } else {
        natural.reverse()
    }
}

fn first_difference<I, J>(u: I, v: J) -> Option<(usize, u8, u8)>
where
    I: IntoIterator<Item = u8>,
    J: IntoIterator<Item = u8>,
{
    u.into_iter()
        .zip(v)
        .enumerate()
        .find(|(_, (a, b))| a != b)
        .map(|(i, (a, b))| (i + 1, a, b))
}

/// Alternating comparison of two words of equal length.
pub fn alt_cmp(u: &[u8], v: &[u8]) -> Result<Ordering, OrderError> {
    if u.len() != v.len() {
        return Err(OrderError::LengthMismatch(u.len(), v.len()));
    }
    Ok(first_difference(u.iter().copied(), v.iter().copied())
        .map_or(Ordering::Equal, |(i, a, b)| decide_at(i, a, b)))
}

/// Exact alternating comparison of two eventually periodic sequences.
///
/// Any difference shows up within `max(preperiods) + lcm(periods)` symbols.
pub fn alt_cmp_seq(s: &EvPeriodicSeq, t: &EvPeriodicSeq) -> Ordering {
    let horizon =
        s.preperiod().len().max(t.preperiod().len()) + s.period().len().lcm(&t.period().len());
    first_difference(s.iter().take(horizon), t.iter().take(horizon))
        .map_or(Ordering::Equal, |(i, a, b)| decide_at(i, a, b))
}

/// Compare a finite word against the prefix of `seq` of the same length.
pub fn alt_cmp_prefix(w: &[u8], seq: &EvPeriodicSeq) -> PrefixOrdering {
    match first_difference(w.iter().copied(), seq.iter()) {
        Some((i, a, b)) => match decide_at(i, a, b) {
            Ordering::Less => PrefixOrdering::Less,
            _ => PrefixOrdering::Greater,
        },
        None => PrefixOrdering::EqualAtPrefix,
    }
}

/// Compare a finite word against a finite known prefix `b`. If `b` runs out
/// before a difference is found and `w` is longer, the result is `Unknown`.
pub fn alt_cmp_known(w: &[u8], b: &[u8]) -> PrefixOrdering {
    match first_difference(w.iter().copied(), b.iter().copied()) {
        Some((i, x, y)) => match decide_at(i, x, y) {
            Ordering::Less => PrefixOrdering::Less,
            _ => PrefixOrdering::Greater,
        },
        None if w.len() <= b.len() => PrefixOrdering::EqualAtPrefix,
        None => PrefixOrdering::Unknown,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Maximality {
    Yes,
    /// `σ^witness(b) ≻ b`; witness 0 means the first digit is not the alphabet maximum.
    No {
        witness: usize,
    },
    UndecidedAtPrefix,
}

/// Whether `b` dominates all of its shifts in the alternating order.
///
/// The alphabet is taken to be `1..=b_1`; any larger digit produces a
/// violating shift at its own position.
pub fn is_alt_shift_maximal(b: &EvPeriodicSeq) -> Maximality {
    for k in 1..b.orbit_len() {
        if alt_cmp_seq(&b.shift(k), b) == Ordering::Greater {
            return Maximality::No { witness: k };
        }
    }
    Maximality::Yes
}

/// As [`is_alt_shift_maximal`] with an explicit alphabet size.
pub fn is_alt_shift_maximal_in(b: &EvPeriodicSeq, alphabet: u8) -> Maximality {
    match is_alt_shift_maximal(b) {
        Maximality::Yes if b.digit(0) != alphabet => Maximality::No { witness: 0 },
        m => m,
    }
}

/// Prefix version: violations are definite, but passing every available
/// check only means the prefix is consistent with some maximal sequence.
pub fn is_alt_shift_maximal_prefix(b: &[u8]) -> Maximality {
    if b.is_empty() {
        return Maximality::UndecidedAtPrefix;
    }
    for k in 1..b.len() {
        if alt_cmp_known(&b[k..], b) == PrefixOrdering::Greater {
            return Maximality::No { witness: k };
        }
    }
    Maximality::UndecidedAtPrefix
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    fn seq(s: &str) -> EvPeriodicSeq {
        s.parse().unwrap()
    }

    #[test]
    fn word_comparisons() {
        assert_eq!(alt_cmp(&w("1"), &w("2")).unwrap(), Ordering::Less);
        assert_eq!(alt_cmp(&w("22"), &w("21")).unwrap(), Ordering::Less);
        assert_eq!(alt_cmp(&w("3232"), &w("3232")).unwrap(), Ordering::Equal);
        assert_eq!(alt_cmp(&w("2112"), &w("2111")).unwrap(), Ordering::Less);
        assert_eq!(alt_cmp(&w("212"), &w("211")).unwrap(), Ordering::Greater);
        assert_eq!(
            alt_cmp(&w("12"), &w("1")),
            Err(OrderError::LengthMismatch(2, 1))
        );
    }

    #[test]
    fn sequence_comparisons() {
        assert_eq!(alt_cmp_seq(&seq("|12"), &seq("|1")), Ordering::Less);
        assert_eq!(alt_cmp_seq(&seq("2|1"), &seq("21|1")), Ordering::Equal);
        // Decided at the even index 2 where 3 > 2, so 3^∞ is the smaller one.
        assert_eq!(alt_cmp_seq(&seq("|3"), &seq("|32")), Ordering::Less);
        assert_eq!(alt_cmp_seq(&seq("|2"), &seq("2|1")), Ordering::Less);
        assert_eq!(alt_cmp_seq(&seq("|21"), &seq("2|1")), Ordering::Greater);
    }

    #[test]
    fn prefix_comparisons() {
        let golden = seq("2|1");
        assert_eq!(
            alt_cmp_prefix(&w("2111"), &golden),
            PrefixOrdering::EqualAtPrefix
        );
        assert_eq!(alt_cmp_prefix(&w("22"), &golden), PrefixOrdering::Less);
        assert_eq!(alt_cmp_prefix(&w("212"), &golden), PrefixOrdering::Greater);
        assert_eq!(alt_cmp_known(&w("211"), &w("21")), PrefixOrdering::Unknown);
        assert_eq!(alt_cmp_known(&w("221"), &w("21")), PrefixOrdering::Less);
    }

    #[test]
    fn shift_maximality() {
        assert_eq!(is_alt_shift_maximal(&seq("2|1")), Maximality::Yes);
        assert_eq!(is_alt_shift_maximal(&seq("|3")), Maximality::Yes);
        assert_eq!(
            is_alt_shift_maximal(&seq("1|2")),
            Maximality::No { witness: 1 }
        );
        assert_eq!(is_alt_shift_maximal(&seq("|3232133")), Maximality::Yes);
        assert_eq!(
            is_alt_shift_maximal_in(&seq("|2"), 3),
            Maximality::No { witness: 0 }
        );
        assert_eq!(
            is_alt_shift_maximal_prefix(&w("3232133")),
            Maximality::UndecidedAtPrefix
        );
        assert_eq!(
            is_alt_shift_maximal_prefix(&w("3231")),
            Maximality::No { witness: 2 }
        );
    }
}
