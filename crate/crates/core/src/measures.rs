//! Uniform measures on periodic points, cylinder masses, entropy estimates
//! and Gibbs-type diagnostics.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::language::{ln_big, LanguageError, ShiftSpec};
use crate::order::Word;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MeasureError {
    #[error("no points of period {n}")]
    EmptyPer { n: usize },
    #[error(transparent)]
    Language(#[from] LanguageError),
}

/// `μ_n`, the uniform probability on the points `x` with `σ^n x = x`.
/// Masses of cylinders `[w]` are kept exactly for `|w| ≤ m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EmpiricalMeasure {
    pub n: usize,
    pub m: usize,
    pub alphabet: u8,
    pub per_count: usize,
    counts: BTreeMap<Word, usize>,
}

fn prefix_of_power(block: &[u8], len: usize) -> Word {
    Word::from(&block.iter().copied().cycle().take(len).collect::<Vec<_>>()[..])
}

impl EmpiricalMeasure {
    /// The uniform measure on the points `p^∞` for the given period-`n` blocks.
    pub fn from_blocks(
        alphabet: u8,
        n: usize,
        blocks: &[Word],
        m: usize,
    ) -> Result<Self, MeasureError> {
        if blocks.is_empty() {
            return Err(MeasureError::EmptyPer { n });
        }
        let mut counts = BTreeMap::new();
        for p in blocks {
            for len in 0..=m {
                *counts.entry(prefix_of_power(p, len)).or_insert(0) += 1;
            }
        }
        Ok(EmpiricalMeasure {
            n,
            m,
            alphabet,
            per_count: blocks.len(),
            counts,
        })
    }

    /// Counts how many blocks `p` have `p^∞` starting with `w`.
    pub fn count(&self, w: &[u8]) -> usize {
        self.counts.get(&Word::from(w)).copied().unwrap_or(0)
    }

    pub fn mass(&self, w: &[u8]) -> BigRational {
        BigRational::new(BigInt::from(self.count(w)), BigInt::from(self.per_count))
    }

    pub fn mass_f64(&self, w: &[u8]) -> f64 {
        self.count(w) as f64 / self.per_count as f64
    }

    /// Cylinders of length `len` with positive mass.
    pub fn support(&self, len: usize) -> impl Iterator<Item = (&Word, usize)> {
        self.counts
            .iter()
            .filter(move |(w, _)| w.len() == len)
            .map(|(w, &c)| (w, c))
    }

    /// `Σ_{|w|=len} μ[w] = 1` for every `len ≤ m`.
    pub fn is_normalized(&self) -> bool {
        (0..=self.m).all(|len| {
            let total: BigRational = self
                .support(len)
                .map(|(w, _)| self.mass(w))
                .fold(BigRational::zero(), |a, b| a + b);
            total.is_one()
        })
    }

    /// `μ[w] = Σ_a μ[wa]` for every `|w| < m`.
    pub fn is_consistent(&self) -> bool {
        self.counts
            .iter()
            .filter(|(w, _)| w.len() < self.m)
            .all(|(w, _)| {
                let children: BigRational = (1..=self.alphabet)
                    .map(|a| self.mass(&w.concat(&[a])))
                    .fold(BigRational::zero(), |x, y| x + y);
                children == self.mass(w)
            })
    }

    /// Exact masses keyed by word, as `p/q` strings.
    pub fn to_json(&self) -> serde_json::Value {
        let masses: BTreeMap<String, String> = self
            .counts
            .keys()
            .map(|w| (w.to_string(), self.mass(w).to_string()))
            .collect();
        serde_json::json!({
            "n": self.n,
            "m": self.m,
            "per_count": self.per_count,
            "masses": masses,
        })
    }
}

pub fn mu_n(spec: &ShiftSpec, n: usize, m: usize) -> Result<EmpiricalMeasure, MeasureError> {
    let blocks = spec.per_points(n)?;
    EmpiricalMeasure::from_blocks(spec.alphabet(), n, &blocks, m)
}

/// `μ_n` with each point's mass spread over its `n` shifts. Agrees with
/// [`mu_n`] because the blocks are closed under rotation.
pub fn mu_n_rotation_averaged(
    spec: &ShiftSpec,
    n: usize,
    m: usize,
) -> Result<EmpiricalMeasure, MeasureError> {
    let blocks = spec.per_points(n)?;
    let mut all = Vec::with_capacity(blocks.len() * n);
    for p in &blocks {
        all.extend((0..n).map(|k| p.rotation(k)));
    }
    let mut out = EmpiricalMeasure::from_blocks(spec.alphabet(), n, &all, m)?;
    for c in out.counts.values_mut() {
        debug_assert_eq!(*c % n, 0);
        *c /= n;
    }
    out.per_count = blocks.len();
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct HtopEstimate {
    /// `(1/nmax) log #L_nmax`.
    pub value: f64,
    pub language: Vec<f64>,
    /// `(1/n) log #Per(n)` for `n ≤ per_max`, absent when `Per(n)` is empty.
    pub periodic: Vec<Option<f64>>,
    pub language_delta: Option<f64>,
    pub periodic_delta: Option<f64>,
}

fn last_delta(xs: &[f64]) -> Option<f64> {
    match xs {
        [.., a, b] => Some(b - a),
        _ => None,
    }
}

pub fn htop_estimate(
    spec: &ShiftSpec,
    nmax: usize,
    per_max: usize,
) -> Result<HtopEstimate, MeasureError> {
    let counts = spec.word_counts(nmax)?;
    let language: Vec<f64> = counts
        .iter()
        .enumerate()
        .skip(1)
        .map(|(n, c)| ln_big(c) / n as f64)
        .collect();
    let mut periodic = Vec::with_capacity(per_max);
    for n in 1..=per_max {
        let c = spec.per_count(n)?;
        periodic.push((c > 0).then(|| (c as f64).ln() / n as f64));
    }
    let known: Vec<f64> = periodic.iter().flatten().copied().collect();
    Ok(HtopEstimate {
        value: language.last().copied().unwrap_or(0.0),
        language_delta: last_delta(&language),
        periodic_delta: last_delta(&known),
        language,
        periodic,
    })
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GibbsReport {
    pub h: f64,
    /// Largest `μ[w] e^{|w| h}` over all words of length `1..=m`.
    pub max_ratio: f64,
    pub max_word: Option<Word>,
    /// Smallest `μ[w] e^{|w| h}` over the good words.
    pub min_ratio: Option<f64>,
    pub min_word: Option<Word>,
    /// Good words of mass zero.
    pub zero_mass: Vec<Word>,
    /// `max(max_ratio, 1/min_ratio)`, absent when some good word has mass zero.
    pub implied_k: Option<f64>,
}

/// Words of zero mass have ratio 0, so the upper scan runs over the support.
pub fn gibbs_check(measure: &EmpiricalMeasure, gwords: &[Word], h: f64) -> GibbsReport {
    let ratio = |w: &[u8], mass: f64| mass * (w.len() as f64 * h).exp();
    let mut max_ratio = 0.0;
    let mut max_word = None;
    for len in 1..=measure.m {
        for (w, c) in measure.support(len) {
            let r = ratio(w, c as f64 / measure.per_count as f64);
            if r > max_ratio {
                max_ratio = r;
                max_word = Some(w.clone());
            }
        }
    }
    let mut min_ratio: Option<f64> = None;
    let mut min_word = None;
    let mut zero_mass = Vec::new();
    for w in gwords {
        let r = ratio(w, measure.mass_f64(w));
        if r == 0.0 {
            zero_mass.push(w.clone());
        }
        if min_ratio.is_none_or(|m| r < m) {
            min_ratio = Some(r);
            min_word = Some(w.clone());
        }
    }
    let implied_k = match min_ratio {
        Some(m) if m > 0.0 => Some(max_ratio.max(1.0 / m)),
        Some(_) => None,
        None => Some(max_ratio.max(1.0)),
    };
    GibbsReport {
        h,
        max_ratio,
        max_word,
        min_ratio,
        min_word,
        zero_mass,
        implied_k,
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct WeakStarRow {
    pub word: Word,
    pub masses: Vec<Option<f64>>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct WeakStarTable {
    pub m: usize,
    pub ns: Vec<usize>,
    /// Periods with no periodic points.
    pub empty: Vec<usize>,
    pub rows: Vec<WeakStarRow>,
    /// Largest change of a length-`m` cylinder mass between consecutive
    /// nonempty periods.
    pub deviations: Vec<Option<f64>>,
}

impl WeakStarTable {
    /// Columns `word,n,mass`.
    pub fn to_csv(&self) -> String {
        let mut s = String::from("word,n,mass\n");
        for r in &self.rows {
            for (n, m) in self.ns.iter().zip(&r.masses) {
                if let Some(m) = m {
                    let _ = writeln!(s, "{},{},{:.8}", r.word, n, m);
                }
            }
        }
        s
    }
}

pub fn weakstar_diagnostic(
    spec: &ShiftSpec,
    ns: &[usize],
    m: usize,
) -> Result<WeakStarTable, MeasureError> {
    let mut measures = Vec::with_capacity(ns.len());
    let mut empty = Vec::new();
    for &n in ns {
        match mu_n(spec, n, m) {
            Ok(mu) => measures.push(Some(mu)),
            Err(MeasureError::EmptyPer { n }) => {
                empty.push(n);
                measures.push(None);
            }
            Err(e) => return Err(e),
        }
    }
    let mut words = std::collections::BTreeSet::new();
    for mu in measures.iter().flatten() {
        words.extend(mu.support(m).map(|(w, _)| w.clone()));
    }
    let rows: Vec<WeakStarRow> = words
        .into_iter()
        .map(|w| WeakStarRow {
            masses: measures
                .iter()
                .map(|mu| mu.as_ref().map(|mu| mu.mass_f64(&w)))
                .collect(),
            word: w,
        })
        .collect();
    let mut deviations = vec![None; ns.len()];
    let mut prev: Option<usize> = None;
    for (j, mu) in measures.iter().enumerate() {
        if mu.is_none() {
            continue;
        }
        if let Some(i) = prev {
            deviations[j] = Some(
                rows.iter()
                    .map(|r| (r.masses[j].unwrap_or(0.0) - r.masses[i].unwrap_or(0.0)).abs())
                    .fold(0.0, f64::max),
            );
        }
        prev = Some(j);
    }
    Ok(WeakStarTable {
        m,
        ns: ns.to_vec(),
        empty,
        rows,
        deviations,
    })
}

/// `(1/m) Σ_{|w|=m} -μ[w] log μ[w]`.
pub fn measure_entropy_estimate(measure: &EmpiricalMeasure, m: usize) -> f64 {
    if m == 0 {
        return 0.0;
    }
    let total = BigUint::from(measure.per_count);
    let ln_total = ln_big(&total);
    let sum: f64 = measure
        .support(m)
        .map(|(_, c)| {
            let p = c as f64 / measure.per_count as f64;
            -p * ((c as f64).ln() - ln_total)
        })
        .sum();
    sum / m as f64
}

/// Masses as `f64`, for reports.
pub fn to_f64(r: &BigRational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}
