//! Admissibility, enumeration and counting for negative-base shifts.
//!
//! A one-sided shift is given by its upper bound `b`: a word is admissible
//! when each of its suffixes is `⪯` the prefix of `b` of the same length. In
//! the odd-period case there is also a lower bound `(1 b_1⋯b_{n-1}(b_n-1))^∞`
//! and each suffix must in addition be `⪰` it.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt::{self, Write as _};

use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::numeric::{
    self, Beta, D1Class, ExpansionStatus, NumericError, PrecisionPolicy, UnitPoint,
};
use crate::order::{
    alt_cmp, alt_cmp_seq, decide_at, is_alt_shift_maximal, is_alt_shift_maximal_prefix,
    EvPeriodicSeq, Maximality, OrderError, Word,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LanguageError {
    #[error("upper bound is not alternately shift maximal (shift {witness} exceeds it)")]
    NotShiftMaximal { witness: usize },
    #[error("two-sided specs need an odd period, got {0}")]
    EvenPeriod(usize),
    #[error("the last digit of the period must exceed 1")]
    LastDigitOne,
    #[error("bound known to {available} digits, {needed} needed")]
    SpecPrefixTooShort { needed: usize, available: usize },
    #[error("periodic comparison undecided within the known {horizon} digits")]
    HorizonExhausted { horizon: usize },
    #[error("empty word")]
    EmptyWord,
    #[error(transparent)]
    Order(#[from] OrderError),
    #[error(transparent)]
    Numeric(#[from] NumericError),
}

/// The upper bound sequence, known exactly or only through a prefix.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Bound {
    Exact(EvPeriodicSeq),
    Prefix(Word),
}

impl Bound {
    /// Digit at 0-based index `i`, if known.
    pub fn digit(&self, i: usize) -> Option<u8> {
        match self {
            Bound::Exact(s) => Some(s.digit(i)),
            Bound::Prefix(w) => w.get(i).copied(),
        }
    }

    /// Number of known digits; `None` when the whole sequence is known.
    pub fn known_len(&self) -> Option<usize> {
        match self {
            Bound::Exact(_) => None,
            Bound::Prefix(w) => Some(w.len()),
        }
    }

    pub fn prefix(&self, n: usize) -> Option<Word> {
        match self {
            Bound::Exact(s) => Some(s.prefix(n)),
            Bound::Prefix(w) if w.len() >= n => Some(Word::from(&w[..n])),
            Bound::Prefix(_) => None,
        }
    }

    pub fn as_exact(&self) -> Option<&EvPeriodicSeq> {
        match self {
            Bound::Exact(s) => Some(s),
            Bound::Prefix(_) => None,
        }
    }
}

impl fmt::Display for Bound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Bound::Exact(s) => write!(f, "{s}"),
            Bound::Prefix(w) => write!(f, "{w}..."),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Admissibility {
    Yes,
    No,
    Undetermined,
}

/// Anything with a prefix-closed language over `1..=alphabet`.
pub trait Language {
    fn alphabet(&self) -> u8;
    fn admits(&self, w: &[u8]) -> Admissibility;
}

/// Admissible words of length `n` for any prefix-closed language, in
/// lexicographic order.
pub fn words_of<L: Language + ?Sized>(lang: &L, n: usize) -> Result<Vec<Word>, LanguageError> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(n);
    fn rec<L: Language + ?Sized>(
        lang: &L,
        n: usize,
        cur: &mut Vec<u8>,
        out: &mut Vec<Word>,
    ) -> Result<(), LanguageError> {
        if cur.len() == n {
            out.push(Word::from(&cur[..]));
            return Ok(());
        }
        for a in 1..=lang.alphabet() {
            cur.push(a);
            match lang.admits(cur) {
                Admissibility::Yes => rec(lang, n, cur, out)?,
                Admissibility::No => {}
                Admissibility::Undetermined => {
                    return Err(LanguageError::SpecPrefixTooShort {
                        needed: cur.len(),
                        available: cur.len() - 1,
                    })
                }
            }
            cur.pop();
        }
        Ok(())
    }
    rec(lang, n, &mut cur, &mut out)?;
    Ok(out)
}

/// Description of a negative-base shift by its bounds.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ShiftSpec {
    alphabet: u8,
    upper: Bound,
    lower: Option<EvPeriodicSeq>,
    origin: Option<String>,
}

/// Tie state of a word against both bounds: the lengths of its suffixes that
/// coincide with a prefix of the bound. Every other suffix is already
/// strictly inside.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Frontier {
    upper: Vec<usize>,
    lower: Vec<usize>,
}

impl Frontier {
    /// Longest suffix of the word that is a prefix of the upper bound.
    pub fn upper_match(&self) -> usize {
        self.upper.last().copied().unwrap_or(0)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Advance {
    Continue(Frontier),
    Reject,
    Undetermined,
}

impl ShiftSpec {
    /// One-sided shift with an exactly known, alternately shift maximal upper bound.
    pub fn one_sided(upper: EvPeriodicSeq) -> Result<Self, LanguageError> {
        if let Maximality::No { witness } = is_alt_shift_maximal(&upper) {
            return Err(LanguageError::NotShiftMaximal { witness });
        }
        Ok(ShiftSpec {
            alphabet: upper.digit(0),
            upper: Bound::Exact(upper),
            lower: None,
            origin: None,
        })
    }

    /// One-sided shift known through a finite prefix of its upper bound.
    pub fn one_sided_prefix(prefix: Word) -> Result<Self, LanguageError> {
        if prefix.is_empty() {
            return Err(LanguageError::EmptyWord);
        }
        if let Maximality::No { witness } = is_alt_shift_maximal_prefix(&prefix) {
            return Err(LanguageError::NotShiftMaximal { witness });
        }
        Ok(ShiftSpec {
            alphabet: prefix[0],
            upper: Bound::Prefix(prefix),
            lower: None,
            origin: None,
        })
    }

    pub fn from_bound(bound: Bound) -> Result<Self, LanguageError> {
        match bound {
            Bound::Exact(s) => Self::one_sided(s),
            Bound::Prefix(w) => Self::one_sided_prefix(w),
        }
    }

    /// Shift whose upper bound is `block^∞` with `|block|` odd, bounded
    /// below by `(1 b_1⋯b_{n-1}(b_n - 1))^∞`.
    pub fn two_sided(block: &Word) -> Result<Self, LanguageError> {
        let n = block.len();
        if n.is_multiple_of(2) {
            return Err(LanguageError::EvenPeriod(n));
        }
        let upper = EvPeriodicSeq::periodic(block)?;
        if upper.period().len() != n {
            return Err(LanguageError::EvenPeriod(upper.period().len()));
        }
        if let Maximality::No { witness } = is_alt_shift_maximal(&upper) {
            return Err(LanguageError::NotShiftMaximal { witness });
        }
        let last = block[n - 1];
        if last < 2 {
            return Err(LanguageError::LastDigitOne);
        }
        let mut low = vec![1];
        low.extend_from_slice(&block[..n - 1]);
        low.push(last - 1);
        Ok(ShiftSpec {
            alphabet: block[0],
            upper: Bound::Exact(upper),
            lower: Some(EvPeriodicSeq::periodic(&low)?),
            origin: None,
        })
    }

    /// `b = 21^∞`.
    pub fn golden() -> Self {
        let mut s =
            Self::one_sided(EvPeriodicSeq::new(&[2], &[1]).expect("valid")).expect("maximal");
        s.origin = Some("golden".into());
        s
    }

    /// Shift of the base `β`: two-sided when the expansion of 1 is periodic
    /// with odd period, exact when it is eventually periodic within
    /// `horizon`, otherwise the certified prefix of length `horizon`.
    pub fn from_beta(beta: &Beta, horizon: usize) -> Result<Self, LanguageError> {
        let orbit = numeric::orbit_of_one(beta, horizon)?;
        let mut spec = match (numeric::classify_d1(beta, horizon)?, orbit.sequence()) {
            (D1Class::PeriodicOdd { .. }, Some(seq)) => Self::two_sided(&Word::from(seq.period()))?,
            (_, Some(seq)) => Self::one_sided(seq)?,
            _ => {
                let digits = if beta.is_exact() {
                    orbit.digits
                } else {
                    let (out, _) = numeric::expand_refining(
                        beta,
                        &UnitPoint::one(),
                        horizon,
                        PrecisionPolicy::default(),
                    )?;
                    if let ExpansionStatus::PrecisionExhausted { at } = out.status {
                        return Err(NumericError::PrecisionExhausted { at }.into());
                    }
                    out.digits
                };
                Self::one_sided_prefix(digits)?
            }
        };
        spec.origin = Some(beta.to_string());
        Ok(spec)
    }

    pub fn with_origin(mut self, origin: impl Into<String>) -> Self {
        self.origin = Some(origin.into());
        self
    }

    pub fn alphabet(&self) -> u8 {
        self.alphabet
    }

    pub fn upper(&self) -> &Bound {
        &self.upper
    }

    pub fn lower(&self) -> Option<&EvPeriodicSeq> {
        self.lower.as_ref()
    }

    pub fn origin(&self) -> Option<&str> {
        self.origin.as_deref()
    }

    pub fn is_two_sided(&self) -> bool {
        self.lower.is_some()
    }

    pub fn start(&self) -> Frontier {
        Frontier::default()
    }

    /// Append the digit `a` to a word in state `f`.
    pub fn advance(&self, f: &Frontier, a: u8) -> Advance {
        let mut undetermined = false;
        let mut upper = Vec::with_capacity(f.upper.len() + 1);
        for j in std::iter::once(0).chain(f.upper.iter().copied()) {
            let Some(d) = self.upper.digit(j) else {
                undetermined = true;
                continue;
            };
            if a == d {
                upper.push(j + 1);
            } else if decide_at(j + 1, a, d) == Ordering::Greater {
                return Advance::Reject;
            }
        }
        let mut lower = Vec::new();
        if let Some(low) = &self.lower {
            lower.reserve(f.lower.len() + 1);
            for j in std::iter::once(0).chain(f.lower.iter().copied()) {
                let d = low.digit(j);
                if a == d {
                    lower.push(j + 1);
                } else if decide_at(j + 1, a, d) == Ordering::Less {
                    return Advance::Reject;
                }
            }
        }
        if undetermined {
            Advance::Undetermined
        } else {
            Advance::Continue(Frontier { upper, lower })
        }
    }

    /// State after reading `w`, `Ok(None)` if `w` is inadmissible.
    pub fn frontier_of(&self, w: &[u8]) -> Result<Option<Frontier>, LanguageError> {
        let mut f = self.start();
        for (i, &a) in w.iter().enumerate() {
            match self.advance(&f, a) {
                Advance::Continue(next) => f = next,
                Advance::Reject => return Ok(None),
                Advance::Undetermined => {
                    return Err(LanguageError::SpecPrefixTooShort {
                        needed: i + 1,
                        available: self.upper.known_len().unwrap_or(usize::MAX),
                    })
                }
            }
        }
        Ok(Some(f))
    }

    pub fn is_admissible(&self, w: &[u8]) -> Admissibility {
        match self.frontier_of(w) {
            Ok(Some(_)) => Admissibility::Yes,
            Ok(None) => Admissibility::No,
            Err(_) => Admissibility::Undetermined,
        }
    }

    fn need(&self, n: usize) -> Result<(), LanguageError> {
        match self.upper.known_len() {
            Some(k) if k < n => Err(LanguageError::SpecPrefixTooShort {
                needed: n,
                available: k,
            }),
            _ => Ok(()),
        }
    }

    /// Admissible words of length `n` beginning with `prefix`, in lexicographic order.
    pub fn extensions(&self, prefix: &[u8], n: usize) -> Result<Vec<Word>, LanguageError> {
        self.need(n)?;
        let mut out = Vec::new();
        if prefix.len() > n {
            return Ok(out);
        }
        let Some(f) = self.frontier_of(prefix)? else {
            return Ok(out);
        };
        let mut cur = prefix.to_vec();
        self.dfs(&f, n, &mut cur, &mut |w| out.push(Word::from(w)));
        Ok(out)
    }

    fn dfs(&self, f: &Frontier, n: usize, cur: &mut Vec<u8>, emit: &mut dyn FnMut(&[u8])) {
        if cur.len() == n {
            emit(cur);
            return;
        }
        for a in 1..=self.alphabet {
            if let Advance::Continue(next) = self.advance(f, a) {
                cur.push(a);
                self.dfs(&next, n, cur, emit);
                cur.pop();
            }
        }
    }

    /// All admissible words of length `n`, in lexicographic order.
    pub fn enumerate_words(&self, n: usize) -> Result<Vec<Word>, LanguageError> {
        self.extensions(&[], n)
    }

    /// Visit every admissible word of length `n` without collecting them.
    pub fn for_each_word(
        &self,
        n: usize,
        mut visit: impl FnMut(&[u8]),
    ) -> Result<(), LanguageError> {
        self.need(n)?;
        let mut cur = Vec::with_capacity(n);
        self.dfs(&self.start(), n, &mut cur, &mut visit);
        Ok(())
    }

    /// `#L_n` for `n = 0..=nmax` by dynamic programming over tie states.
    pub fn word_counts(&self, nmax: usize) -> Result<Vec<BigUint>, LanguageError> {
        self.need(nmax)?;
        let mut layer: BTreeMap<Frontier, BigUint> = BTreeMap::new();
        layer.insert(self.start(), BigUint::from(1u32));
        let mut counts = vec![BigUint::from(1u32)];
        for _ in 0..nmax {
            let mut next: BTreeMap<Frontier, BigUint> = BTreeMap::new();
            for (f, c) in &layer {
                for a in 1..=self.alphabet {
                    if let Advance::Continue(g) = self.advance(f, a) {
                        *next.entry(g).or_default() += c;
                    }
                }
            }
            counts.push(next.values().sum());
            layer = next;
        }
        Ok(counts)
    }

    /// Whether `block^∞` lies in the shift, i.e. every rotation `r` has
    /// `r^∞` between the bounds.
    pub fn is_periodic_admissible(&self, block: &[u8]) -> Result<bool, LanguageError> {
        if block.is_empty() {
            return Err(LanguageError::EmptyWord);
        }
        let w = Word::from(block);
        for k in 0..block.len() {
            let r = EvPeriodicSeq::periodic(&w.rotation(k))?;
            let above = match &self.upper {
                Bound::Exact(b) => alt_cmp_seq(&r, b) == Ordering::Greater,
                Bound::Prefix(b) => match alt_cmp(&r.prefix(b.len()), b)? {
                    Ordering::Equal => {
                        return Err(LanguageError::HorizonExhausted { horizon: b.len() })
                    }
                    o => o == Ordering::Greater,
                },
            };
            if above {
                return Ok(false);
            }
            if let Some(low) = &self.lower {
                if alt_cmp_seq(&r, low) == Ordering::Less {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Period blocks of the points with `σ^n x = x`.
    pub fn per_points(&self, n: usize) -> Result<Vec<Word>, LanguageError> {
        if n == 0 {
            return Err(LanguageError::EmptyWord);
        }
        let mut out = Vec::new();
        let mut err = None;
        self.for_each_word(n, |w| {
            if err.is_some() {
                return;
            }
            match self.is_periodic_admissible(w) {
                Ok(true) => out.push(Word::from(w)),
                Ok(false) => {}
                Err(e) => err = Some(e),
            }
        })?;
        match err {
            Some(e) => Err(e),
            None => Ok(out),
        }
    }

    pub fn per_count(&self, n: usize) -> Result<usize, LanguageError> {
        self.per_points(n).map(|v| v.len())
    }

    /// Word counts for `n ≤ nmax` and periodic point counts for `n ≤ per_max`.
    pub fn count_words(&self, nmax: usize, per_max: usize) -> Result<CountTable, LanguageError> {
        let counts = self.word_counts(nmax)?;
        let mut rows = Vec::with_capacity(nmax);
        for (n, count_l) in counts.into_iter().enumerate().skip(1) {
            let count_per = if n <= per_max {
                Some(BigUint::from(self.per_count(n)?))
            } else {
                None
            };
            rows.push(CountRow {
                n,
                count_l,
                count_per,
                exact: true,
            });
        }
        Ok(CountTable { rows })
    }

    /// Least `n ≤ nmax` such that some admissible word starts with `v` and
    /// has `w` at positions `n+1..n+|w|`.
    pub fn mixing_witness(
        &self,
        v: &[u8],
        w: &[u8],
        nmax: usize,
    ) -> Result<MixingOutcome, LanguageError> {
        for n in 0..=nmax {
            let len = v.len().max(n + w.len());
            let mut fixed: Vec<Option<u8>> = vec![None; len];
            let mut consistent = true;
            for (i, &a) in v.iter().enumerate() {
                fixed[i] = Some(a);
            }
            for (i, &a) in w.iter().enumerate() {
                match fixed[n + i] {
                    Some(b) if b != a => consistent = false,
                    _ => fixed[n + i] = Some(a),
                }
            }
            if !consistent {
                continue;
            }
            self.need(len)?;
            if let Some(word) = self.fill(&self.start(), &fixed, &mut Vec::with_capacity(len)) {
                return Ok(MixingOutcome::Found { n, word });
            }
        }
        Ok(MixingOutcome::NotFound { nmax })
    }

    fn fill(&self, f: &Frontier, fixed: &[Option<u8>], cur: &mut Vec<u8>) -> Option<Word> {
        let i = cur.len();
        if i == fixed.len() {
            return Some(Word::from(&cur[..]));
        }
        let choices: Vec<u8> = match fixed[i] {
            Some(a) => vec![a],
            None => (1..=self.alphabet).collect(),
        };
        for a in choices {
            if let Advance::Continue(g) = self.advance(f, a) {
                cur.push(a);
                if let Some(found) = self.fill(&g, fixed, cur) {
                    return Some(found);
                }
                cur.pop();
            }
        }
        None
    }
}

impl Language for ShiftSpec {
    fn alphabet(&self) -> u8 {
        self.alphabet
    }

    fn admits(&self, w: &[u8]) -> Admissibility {
        self.is_admissible(w)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum MixingOutcome {
    Found { n: usize, word: Word },
    NotFound { nmax: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CountRow {
    pub n: usize,
    pub count_l: BigUint,
    pub count_per: Option<BigUint>,
    pub exact: bool,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CountTable {
    pub rows: Vec<CountRow>,
}

impl CountTable {
    pub fn from_counts(counts: &[u64]) -> Self {
        CountTable {
            rows: counts
                .iter()
                .enumerate()
                .map(|(i, &c)| CountRow {
                    n: i + 1,
                    count_l: BigUint::from(c),
                    count_per: None,
                    exact: true,
                })
                .collect(),
        }
    }

    pub fn get(&self, n: usize) -> Option<&CountRow> {
        self.rows.iter().find(|r| r.n == n)
    }

    /// Columns `n,count_L,count_Per,exact`; a missing Per count is left empty.
    pub fn to_csv(&self) -> String {
        let mut s = String::from("n,count_L,count_Per,exact\n");
        for r in &self.rows {
            let per = r
                .count_per
                .as_ref()
                .map(|c| c.to_string())
                .unwrap_or_default();
            let _ = writeln!(s, "{},{},{},{}", r.n, r.count_l, per, r.exact);
        }
        s
    }
}

/// Natural logarithm of a big unsigned integer.
pub fn ln_big(x: &BigUint) -> f64 {
    if x.is_zero() {
        return f64::NEG_INFINITY;
    }
    let bits = x.bits();
    if bits < 1000 {
        return x.to_f64().expect("finite").ln();
    }
    let shift = bits - 64;
    let top = (x >> shift).to_f64().expect("finite");
    top.ln() + shift as f64 * std::f64::consts::LN_2
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct EntropyRow {
    pub n: usize,
    /// `(1/n) log #L_n`.
    pub lang: f64,
    /// `(1/n) log #Per(n)`, absent when not counted or zero.
    pub per: Option<f64>,
}

pub fn entropy_profile(counts: &CountTable) -> Vec<EntropyRow> {
    counts
        .rows
        .iter()
        .filter(|r| r.n > 0)
        .map(|r| EntropyRow {
            n: r.n,
            lang: ln_big(&r.count_l) / r.n as f64,
            per: r
                .count_per
                .as_ref()
                .filter(|c| !c.is_zero())
                .map(|c| ln_big(c) / r.n as f64),
        })
        .collect()
}
