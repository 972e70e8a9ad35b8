//! Sliding block codes from a negative-base shift onto the zero-entropy
//! shift `X = {1^∞} ∪ {1^k 2^∞ : k ≥ 1} ∪ {2^∞}`, and exhaustive checks of
//! the combinatorial claims that make them well defined and onto.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::language::{words_of, Admissibility, Language, LanguageError, ShiftSpec};
use crate::numeric::{
    self, classify_d1, golden_test, Beta, D1Class, GoldenSide, NumericError, UnitPoint,
};
use crate::order::Word;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FactorError {
    #[error("base is not below the golden ratio")]
    NotBelowGolden,
    #[error("expansion of 1 does not start with 21^k2 within {0}")]
    PatternMismatch(Word),
    #[error("expansion of 1 starts with 21^k2 for odd k = {k}")]
    OddK { k: usize },
    #[error("expansion of 1 starts with 21^k2 for k = {k} < 2")]
    KTooSmall { k: usize },
    #[error("expansion of 1 is not periodic with odd period")]
    NotOddPeriodic,
    #[error("the period block {0} ends with 1")]
    BnIsOne(Word),
    #[error("word of length {len} is shorter than the window {window}")]
    TooShort { len: usize, window: usize },
    #[error("neither block code applies to this base")]
    NoConstruction,
    #[error(transparent)]
    Numeric(#[from] NumericError),
    #[error(transparent)]
    Language(#[from] LanguageError),
}

/// The target shift `X`. Its words of length `n` are `1^i 2^(n-i)`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct TargetShiftX;

impl Language for TargetShiftX {
    fn alphabet(&self) -> u8 {
        2
    }

    fn admits(&self, w: &[u8]) -> Admissibility {
        let ok = w.iter().all(|&a| a == 1 || a == 2) && w.windows(2).all(|p| p[0] <= p[1]);
        if ok {
            Admissibility::Yes
        } else {
            Admissibility::No
        }
    }
}

pub fn x_language(n: usize) -> Vec<Word> {
    (0..=n)
        .rev()
        .map(|i| Word::repeat(1, i).concat(&Word::repeat(2, n - i)))
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum BlockRule {
    /// 1 on `1^m`, 2 otherwise.
    OnesToOne,
    /// 2 on the listed blocks, 1 otherwise.
    Detect(Vec<Word>),
    /// The first symbol of the window.
    FirstSymbol,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Provenance {
    /// Expansion of 1 starting with `21^k2`, window `k + 1`.
    BelowGolden {
        k: usize,
        prefix: Word,
    },
    /// Expansion of 1 equal to `block^∞` with odd period, window `3 |block|`.
    OddPeriod {
        block: Word,
    },
    Custom,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SlidingBlockCode {
    pub window: usize,
    pub rule: BlockRule,
    pub provenance: Provenance,
}

impl SlidingBlockCode {
    pub fn phi(&self, w: &[u8]) -> u8 {
        debug_assert_eq!(w.len(), self.window);
        match &self.rule {
            BlockRule::OnesToOne => {
                if w.iter().all(|&a| a == 1) {
                    1
                } else {
                    2
                }
            }
            BlockRule::Detect(set) => {
                if set.iter().any(|b| b.digits() == w) {
                    2
                } else {
                    1
                }
            }
            BlockRule::FirstSymbol => w[0],
        }
    }
}

/// `(π(w))_j = Φ(w_j ⋯ w_{j+m-1})`.
pub fn apply_code(code: &SlidingBlockCode, w: &[u8]) -> Result<Word, FactorError> {
    if w.len() < code.window {
        return Err(FactorError::TooShort {
            len: w.len(),
            window: code.window,
        });
    }
    Ok(Word::from(
        &w.windows(code.window)
            .map(|x| code.phi(x))
            .collect::<Vec<_>>()[..],
    ))
}

/// Code for a base below the golden ratio, read off the expansion prefix.
pub fn case1_code_from_prefix(prefix: &Word) -> Result<SlidingBlockCode, FactorError> {
    let mismatch = || FactorError::PatternMismatch(prefix.clone());
    if prefix.first() != Some(&2) {
        return Err(mismatch());
    }
    let k = prefix[1..].iter().take_while(|&&a| a == 1).count();
    if prefix.get(k + 1) != Some(&2) {
        return Err(mismatch());
    }
    if k % 2 == 1 {
        return Err(FactorError::OddK { k });
    }
    if k < 2 {
        return Err(FactorError::KTooSmall { k });
    }
    Ok(SlidingBlockCode {
        window: k + 1,
        rule: BlockRule::OnesToOne,
        provenance: Provenance::BelowGolden {
            k,
            prefix: Word::from(&prefix[..k + 2]),
        },
    })
}

pub fn build_case1_code(beta: &Beta, horizon: usize) -> Result<SlidingBlockCode, FactorError> {
    if golden_test(beta, horizon)? != GoldenSide::Below {
        return Err(FactorError::NotBelowGolden);
    }
    let d = numeric::expand(beta, &UnitPoint::one(), horizon)?;
    case1_code_from_prefix(&Word::from(&d.digits[..d.certified]))
}

/// Code for the expansion `block^∞` with `|block|` odd.
pub fn case2_code_from_block(block: &Word) -> Result<SlidingBlockCode, FactorError> {
    let n = block.len();
    if n.is_multiple_of(2) {
        return Err(FactorError::NotOddPeriodic);
    }
    if block.last() == Some(&1) {
        return Err(FactorError::BnIsOne(block.clone()));
    }
    let detect = (0..n)
        .map(|i| {
            let r = block.rotation(i);
            r.concat(&r).concat(&r)
        })
        .collect();
    Ok(SlidingBlockCode {
        window: 3 * n,
        rule: BlockRule::Detect(detect),
        provenance: Provenance::OddPeriod {
            block: block.clone(),
        },
    })
}

pub fn build_case2_code(beta: &Beta, horizon: usize) -> Result<SlidingBlockCode, FactorError> {
    let D1Class::PeriodicOdd { period } = classify_d1(beta, horizon)? else {
        return Err(FactorError::NotOddPeriodic);
    };
    let orbit = numeric::orbit_of_one(beta, horizon)?;
    case2_code_from_block(&Word::from(&orbit.digits[..period]))
}

/// The applicable code for `β` together with its shift.
pub fn factor_for_beta(
    beta: &Beta,
    horizon: usize,
) -> Result<(SlidingBlockCode, ShiftSpec), FactorError> {
    let spec = ShiftSpec::from_beta(beta, horizon)?;
    let code = match golden_test(beta, horizon)? {
        GoldenSide::Below => build_case1_code(beta, horizon)?,
        GoldenSide::AtOrAbove => match classify_d1(beta, horizon)? {
            D1Class::PeriodicOdd { .. } => build_case2_code(beta, horizon)?,
            _ => return Err(FactorError::NoConstruction),
        },
    };
    Ok((code, spec))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum ClaimStatus {
    Pass,
    Fail,
    Inconclusive,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClaimRecord {
    pub claim: String,
    pub depth: usize,
    pub status: ClaimStatus,
    pub counterexample: Option<String>,
}

impl ClaimRecord {
    fn new(claim: &str, depth: usize) -> Self {
        ClaimRecord {
            claim: claim.into(),
            depth,
            status: ClaimStatus::Pass,
            counterexample: None,
        }
    }

    fn fail(&mut self, example: impl Into<String>) {
        if self.status != ClaimStatus::Fail {
            self.status = ClaimStatus::Fail;
            self.counterexample = Some(example.into());
        }
    }

    fn inconclusive(&mut self, why: impl Into<String>) {
        if self.status == ClaimStatus::Pass {
            self.status = ClaimStatus::Inconclusive;
            self.counterexample = Some(why.into());
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorReport {
    pub provenance: Provenance,
    pub window: usize,
    pub depth: usize,
    pub claims: Vec<ClaimRecord>,
    pub notes: Vec<String>,
}

impl FactorReport {
    pub fn status(&self) -> ClaimStatus {
        let mut s = ClaimStatus::Pass;
        for c in &self.claims {
            match c.status {
                ClaimStatus::Fail => return ClaimStatus::Fail,
                ClaimStatus::Inconclusive => s = ClaimStatus::Inconclusive,
                ClaimStatus::Pass => {}
            }
        }
        s
    }

    pub fn claim(&self, id: &str) -> Option<&ClaimRecord> {
        self.claims.iter().find(|c| c.claim == id)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("serializable")
    }
}

fn admissible_words<L: Language + ?Sized>(lang: &L, n: usize, rec: &mut ClaimRecord) -> Vec<Word> {
    match words_of(lang, n) {
        Ok(ws) => ws,
        Err(e) => {
            rec.inconclusive(e.to_string());
            Vec::new()
        }
    }
}

/// `w 1^n` is inadmissible for every `w ≠ 1^{|w|}` with `|w| ≤ max_len`.
pub fn ones_suffix_check<L: Language + ?Sized>(lang: &L, n: usize, max_len: usize) -> ClaimRecord {
    let mut rec = ClaimRecord::new("ones-suffix-forbidden", max_len + n);
    let ones = Word::repeat(1, n);
    for len in 1..=max_len {
        for w in admissible_words(lang, len, &mut rec) {
            if w.iter().all(|&a| a == 1) {
                continue;
            }
            let x = w.concat(&ones);
            match lang.admits(&x) {
                Admissibility::No => {}
                Admissibility::Yes => rec.fail(x.to_string()),
                Admissibility::Undetermined => rec.inconclusive(format!("{x} undetermined")),
            }
        }
    }
    rec
}

/// Every admissible word of length `≤ max_len` starting with a cyclic block
/// `b_i ⋯ b_{i+3n-1}` continues the periodic point `(b_i ⋯ b_{i+n-1})^∞`.
pub fn singleton_check<L: Language + ?Sized>(
    lang: &L,
    block: &Word,
    max_len: usize,
) -> ClaimRecord {
    let mut rec = ClaimRecord::new("forced-continuation", max_len);
    let n = block.len();
    let heads: Vec<Word> = (0..n).map(|i| block.rotation(i)).collect();
    for len in 3 * n..=max_len {
        for w in admissible_words(lang, len, &mut rec) {
            for r in &heads {
                let head: Vec<u8> = r.iter().copied().cycle().take(3 * n).collect();
                if w.starts_with(&head) {
                    let forced: Vec<u8> = r.iter().copied().cycle().take(len).collect();
                    if w.digits() != &forced[..] {
                        rec.fail(w.to_string());
                    }
                }
            }
        }
    }
    rec
}

/// `1^j b_1 ⋯ b_{3n-j} ≠ b_i ⋯ b_{i+3n-1}` for `1 ≤ j ≤ 3n`, `1 ≤ i ≤ n`.
pub fn shifted_ones_check(block: &Word) -> ClaimRecord {
    let n = block.len();
    let mut rec = ClaimRecord::new("shifted-ones-distinct", 3 * n);
    let periodic = |start: usize, len: usize| -> Vec<u8> {
        block
            .iter()
            .copied()
            .cycle()
            .skip(start)
            .take(len)
            .collect()
    };
    for j in 1..=3 * n {
        let mut left = vec![1u8; j];
        left.extend(periodic(0, 3 * n - j));
        for i in 0..n {
            if left == periodic(i, 3 * n) {
                rec.fail(format!("j={j}, i={}", i + 1));
            }
        }
    }
    rec
}

/// Candidate preimages of `1^k 2^∞` of the form `1^j d` or `1^j 2 d`,
/// truncated to `len` symbols.
fn named_preimages(
    code: &SlidingBlockCode,
    d: &Word,
    k: usize,
    len: usize,
) -> Vec<(String, Vec<u8>)> {
    let ones_then = |j: usize, mid: &[u8]| -> Vec<u8> {
        let mut p = vec![1u8; j];
        p.extend_from_slice(mid);
        p.extend(d.iter().copied());
        p.truncate(len);
        p
    };
    match &code.provenance {
        Provenance::BelowGolden { .. } => {
            let m = code.window;
            vec![
                (format!("1^{} d", k + m), ones_then(k + m, &[])),
                (format!("1^{} d", k + m - 1), ones_then(k + m - 1, &[])),
            ]
        }
        Provenance::OddPeriod { block } => {
            let n = block.len();
            vec![
                (format!("1^{} d", k + n), ones_then(k + n, &[])),
                (format!("1^{} 2 d", k - 1), ones_then(k - 1, &[2])),
            ]
        }
        Provenance::Custom => Vec::new(),
    }
}

/// Exhaustive checks of the code on all admissible words up to `depth`.
///
/// `d` is a long enough prefix of the expansion of 1, used to test the named
/// preimages of `1^k 2^∞`; pass an empty word to skip them.
pub fn verify_factor<L: Language + ?Sized>(
    code: &SlidingBlockCode,
    lang: &L,
    depth: usize,
    d: &Word,
) -> FactorReport {
    let m = code.window;
    let mut monotone = ClaimRecord::new("monotone-2", depth);
    let mut containment = ClaimRecord::new("image-in-X", depth);
    let mut equivariance = ClaimRecord::new("equivariance", depth);
    let mut surjective = ClaimRecord::new("surjectivity", depth);
    let mut images = BTreeSet::new();
    let mut notes = Vec::new();
    if depth < m {
        for r in [
            &mut monotone,
            &mut containment,
            &mut equivariance,
            &mut surjective,
        ] {
            r.inconclusive(format!("depth {depth} below window {m}"));
        }
    }
    for len in m..=depth {
        for w in admissible_words(lang, len, &mut monotone) {
            let img = apply_code(code, &w).expect("long enough");
            if img.windows(2).any(|p| p[0] == 2 && p[1] == 1) {
                monotone.fail(format!("{w} -> {img}"));
            }
            if TargetShiftX.admits(&img) != Admissibility::Yes {
                containment.fail(format!("{w} -> {img}"));
            }
            if len > m {
                let tail = apply_code(code, &w[1..]).expect("long enough");
                if tail.digits() != &img[1..] {
                    equivariance.fail(w.to_string());
                }
            }
            if len == depth {
                images.insert(img);
            }
        }
    }
    if depth >= m {
        let len = depth - m + 1;
        let kmax = (depth / 2).max(4).min(len.saturating_sub(1));
        let mut targets = vec![Word::repeat(1, len), Word::repeat(2, len)];
        targets.extend((1..=kmax).map(|k| Word::repeat(1, k).concat(&Word::repeat(2, len - k))));
        for t in &targets {
            if !images.contains(t) {
                surjective.fail(format!("{t} not in image"));
            }
        }
        if !d.is_empty() {
            for k in 1..=kmax {
                let target = Word::repeat(1, k).concat(&Word::repeat(2, len - k));
                for (name, point) in named_preimages(code, d, k, depth) {
                    let verdict = if point.len() < depth {
                        "needs a longer prefix of d for"
                    } else if lang.admits(&point) != Admissibility::Yes {
                        "is not admissible, so is no preimage of"
                    } else if apply_code(code, &point).is_ok_and(|x| x == target) {
                        "maps to"
                    } else {
                        "does not map to"
                    };
                    notes.push(format!("k={k}: {name} {verdict} 1^{k}2^∞"));
                }
            }
        }
    }
    let mut claims = vec![monotone, containment, equivariance, surjective];
    match &code.provenance {
        Provenance::BelowGolden { k, .. } => {
            let mut rec = ClaimRecord::new("k-even-at-least-2", 0);
            if k % 2 == 1 || *k < 2 {
                rec.fail(format!("k={k}"));
            }
            claims.push(rec);
            claims.push(ones_suffix_check(lang, m, depth.saturating_sub(m)));
        }
        Provenance::OddPeriod { block } => {
            let mut rec = ClaimRecord::new("last-digit-not-1", 0);
            if block.last() == Some(&1) {
                rec.fail(block.to_string());
            }
            claims.push(rec);
            claims.push(singleton_check(lang, block, depth));
            claims.push(shifted_ones_check(block));
        }
        Provenance::Custom => {}
    }
    FactorReport {
        provenance: code.provenance.clone(),
        window: m,
        depth,
        claims,
        notes,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn target_shift() {
        assert_eq!(x_language(1), [w("1"), w("2")]);
        assert_eq!(x_language(2), [w("11"), w("12"), w("22")]);
        assert_eq!(x_language(5).len(), 6);
        assert_eq!(words_of(&TargetShiftX, 5).unwrap().len(), 6);
        assert_eq!(TargetShiftX.admits(&[2, 1]), Admissibility::No);
    }

    #[test]
    fn case1_construction() {
        let b = Beta::rational(13, 10).unwrap();
        let code = build_case1_code(&b, 20).unwrap();
        assert_eq!(code.window, 3);
        assert_eq!(apply_code(&code, &[1, 1, 1]).unwrap(), w("1"));
        assert_eq!(apply_code(&code, &[2, 1, 1, 2]).unwrap(), w("22"));
        assert_eq!(
            apply_code(&code, &[1, 1]),
            Err(FactorError::TooShort { len: 2, window: 3 })
        );
        assert_eq!(
            build_case1_code(&Beta::golden(), 20),
            Err(FactorError::NotBelowGolden)
        );
        assert_eq!(
            case1_code_from_prefix(&w("2122")),
            Err(FactorError::OddK { k: 1 })
        );
        assert_eq!(
            case1_code_from_prefix(&w("2211")),
            Err(FactorError::KTooSmall { k: 0 })
        );
        assert!(matches!(
            case1_code_from_prefix(&w("2111")),
            Err(FactorError::PatternMismatch(_))
        ));
    }

    #[test]
    fn case2_construction() {
        let two = Beta::rational(2, 1).unwrap();
        let code = build_case2_code(&two, 20).unwrap();
        assert_eq!(code.window, 3);
        assert_eq!(code.rule, BlockRule::Detect(vec![w("333")]));
        assert_eq!(apply_code(&code, &[3, 3, 3, 3]).unwrap(), w("22"));
        assert_eq!(
            build_case2_code(&Beta::golden(), 20),
            Err(FactorError::NotOddPeriodic)
        );
        assert!(matches!(
            case2_code_from_block(&w("321")),
            Err(FactorError::BnIsOne(_))
        ));
        assert_eq!(shifted_ones_check(&w("3")).status, ClaimStatus::Pass);
    }

    #[test]
    fn verify_small_depths() {
        let two = Beta::rational(2, 1).unwrap();
        let (code, spec) = factor_for_beta(&two, 20).unwrap();
        let r = verify_factor(&code, &spec, 8, &Word::repeat(3, 8));
        assert_eq!(r.status(), ClaimStatus::Pass, "{r:?}");
        let b = Beta::rational(13, 10).unwrap();
        let (code, spec) = factor_for_beta(&b, 30).unwrap();
        let d = numeric::expand(&b, &UnitPoint::one(), 30).unwrap().digits;
        let r = verify_factor(&code, &spec, 8, &d);
        assert_eq!(r.status(), ClaimStatus::Pass, "{r:?}");
    }

    #[test]
    fn identity_like_code_on_x() {
        let code = SlidingBlockCode {
            window: 1,
            rule: BlockRule::FirstSymbol,
            provenance: Provenance::Custom,
        };
        let r = verify_factor(&code, &TargetShiftX, 8, &Word::empty());
        assert_eq!(r.status(), ClaimStatus::Pass);
        assert_eq!(r.claims.len(), 4);
    }
}
