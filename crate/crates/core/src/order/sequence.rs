use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::{OrderError, Word};

/// An eventually periodic one-sided sequence `pre · per per per ⋯`.
///
/// Always stored in canonical form: the period is primitive (not a proper
/// power) and the preperiod is as short as possible, so structural equality
/// coincides with equality of the infinite sequences.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub struct EvPeriodicSeq {
    pre: Vec<u8>,
    per: Vec<u8>,
}

impl EvPeriodicSeq {
    pub fn new(pre: &[u8], per: &[u8]) -> Result<Self, OrderError> {
        if per.is_empty() {
            return Err(OrderError::EmptyPeriod);
        }
        if let Some(&d) = pre.iter().chain(per).find(|&&d| d == 0) {
            return Err(OrderError::InvalidDigit(d));
        }
        let mut per = primitive_root(per).to_vec();
        let mut pre = pre.to_vec();
        while let (Some(&a), Some(&b)) = (pre.last(), per.last()) {
            if a != b {
                break;
            }
            pre.pop();
            per.rotate_right(1);
        }
        Ok(EvPeriodicSeq { pre, per })
    }

    /// The purely periodic sequence `block^∞`.
    pub fn periodic(block: &[u8]) -> Result<Self, OrderError> {
        Self::new(&[], block)
    }

    pub fn preperiod(&self) -> &[u8] {
        &self.pre
    }

    pub fn period(&self) -> &[u8] {
        &self.per
    }

    pub fn is_purely_periodic(&self) -> bool {
        self.pre.is_empty()
    }

    /// Digit at 0-based position `i`.
    pub fn digit(&self, i: usize) -> u8 {
        if i < self.pre.len() {
            self.pre[i]
        } else {
            self.per[(i - self.pre.len()) % self.per.len()]
        }
    }

    pub fn prefix(&self, n: usize) -> Word {
        Word::from(&(0..n).map(|i| self.digit(i)).collect::<Vec<_>>()[..])
    }

    pub fn iter(&self) -> impl Iterator<Item = u8> + '_ {
        (0..).map(move |i| self.digit(i))
    }

    /// `σ^k` of the sequence.
    pub fn shift(&self, k: usize) -> EvPeriodicSeq {
        if k <= self.pre.len() {
            return EvPeriodicSeq {
                pre: self.pre[k..].to_vec(),
                per: self.per.clone(),
            };
        }
        let r = (k - self.pre.len()) % self.per.len();
        let mut per = self.per.clone();
        per.rotate_left(r);
        EvPeriodicSeq {
            pre: Vec::new(),
            per,
        }
    }

    /// `word · self`.
    pub fn prepend(&self, word: &[u8]) -> EvPeriodicSeq {
        let mut pre = word.to_vec();
        pre.extend_from_slice(&self.pre);
        EvPeriodicSeq::new(&pre, &self.per).expect("period is nonempty")
    }

    /// Number of distinct shifts `σ^k`, `k ≥ 0`.
    pub fn orbit_len(&self) -> usize {
        self.pre.len() + self.per.len()
    }

    pub fn max_digit(&self) -> u8 {
        self.pre.iter().chain(&self.per).copied().max().unwrap_or(0)
    }
}

fn primitive_root(block: &[u8]) -> &[u8] {
    let n = block.len();
    let p = (1..=n)
        .filter(|p| n.is_multiple_of(*p))
        .find(|&p| (p..n).all(|i| block[i] == block[i - p]))
        .unwrap_or(n);
    &block[..p]
}

impl fmt::Display for EvPeriodicSeq {
    /// Written as `PRE|PER`, the same form the sequence files use.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let pre = Word::from(&self.pre[..]);
        let per = Word::from(&self.per[..]);
        write!(f, "{pre}|{per}")
    }
}

impl FromStr for EvPeriodicSeq {
    type Err = OrderError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (pre, per) = s
            .split_once('|')
            .ok_or_else(|| OrderError::Parse(format!("missing '|' in {s:?}")))?;
        let pre: Word = if pre.trim().is_empty() {
            Word::empty()
        } else {
            pre.parse()?
        };
        let per: Word = per.parse()?;
        EvPeriodicSeq::new(&pre, &per)
    }
}

impl From<EvPeriodicSeq> for String {
    fn from(s: EvPeriodicSeq) -> String {
        s.to_string()
    }
}

impl TryFrom<String> for EvPeriodicSeq {
    type Error = OrderError;

    fn try_from(s: String) -> Result<Self, Self::Error> {
        s.parse()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_form() {
        let a = EvPeriodicSeq::new(&[2, 1], &[1, 1]).unwrap();
        assert_eq!(a.preperiod(), &[2]);
        assert_eq!(a.period(), &[1]);
        let b = EvPeriodicSeq::new(&[1, 2], &[1, 2]).unwrap();
        assert!(b.is_purely_periodic());
        assert_eq!(b.period(), &[1, 2]);
        let c = EvPeriodicSeq::new(&[3, 1, 2], &[1, 2]).unwrap();
        assert_eq!(c.to_string(), "3|12");
        assert!(EvPeriodicSeq::new(&[1], &[]).is_err());
    }

    #[test]
    fn shifting_and_parsing() {
        let s: EvPeriodicSeq = "21|1".parse().unwrap();
        assert_eq!(s.to_string(), "2|1");
        assert_eq!(s.shift(1).to_string(), "|1");
        let t: EvPeriodicSeq = "|3232133".parse().unwrap();
        assert_eq!(t.shift(9).prefix(3).to_string(), "321");
        assert_eq!(t.prepend(&[1, 1]).prefix(4).to_string(), "1132");
    }
}
