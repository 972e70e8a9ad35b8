use std::fmt;
use std::ops::Deref;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::OrderError;

/// A finite string of digits. Digits are stored as `u8` and start at 1.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub struct Word(Vec<u8>);

impl Word {
    pub fn new(digits: Vec<u8>) -> Result<Self, OrderError> {
        if let Some(&d) = digits.iter().find(|&&d| d == 0) {
            return Err(OrderError::InvalidDigit(d));
        }
        Ok(Word(digits))
    }

    pub fn empty() -> Self {
        Word(Vec::new())
    }

    /// `digit` repeated `n` times.
    pub fn repeat(digit: u8, n: usize) -> Self {
        Word(vec![digit; n])
    }

    pub fn digits(&self) -> &[u8] {
        &self.0
    }

    pub fn into_digits(self) -> Vec<u8> {
        self.0
    }

    pub fn push(&mut self, digit: u8) {
        self.0.push(digit);
    }

    pub fn concat(&self, other: &[u8]) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(other);
        Word(v)
    }

    pub fn max_digit(&self) -> Option<u8> {
        self.0.iter().copied().max()
    }

    /// All digits lie in `1..=alphabet`.
    pub fn fits_alphabet(&self, alphabet: u8) -> bool {
        self.0.iter().all(|&d| d >= 1 && d <= alphabet)
    }

    /// The cyclic rotation starting at index `k`.
    pub fn rotation(&self, k: usize) -> Word {
        let n = self.0.len();
        if n == 0 {
            return Word::empty();
        }
        let k = k % n;
        let mut v = Vec::with_capacity(n);
        v.extend_from_slice(&self.0[k..]);
        v.extend_from_slice(&self.0[..k]);
        Word(v)
    }

    /// Smallest `p` dividing `len` with the word equal to its rotation by `p`.
    pub fn least_period(&self) -> usize {
        let n = self.0.len();
        (1..=n)
            .filter(|p| n.is_multiple_of(*p))
            .find(|&p| (p..n).all(|i| self.0[i] == self.0[i - p]))
            .unwrap_or(n)
    }
}

impl Deref for Word {
    type Target = [u8];

    fn deref(&self) -> &[u8] {
        &self.0
    }
}

impl From<&[u8]> for Word {
    fn from(d: &[u8]) -> Self {
        Word(d.to_vec())
    }
}

impl fmt::Display for Word {
    /// Digits are written back to back when all are below 10, otherwise comma separated.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.iter().all(|&d| d < 10) {
            for d in &self.0 {
                write!(f, "{d}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.0.iter().map(u8::to_string).collect();
            f.write_str(&parts.join(","))
        }
    }
}

impl FromStr for Word {
    type Err = OrderError;

    /// Accepts `2112`, `2,1,1,2` or `2 1 1 2`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let separated = s.contains(|c: char| c == ',' || c.is_whitespace());
        let digits = if separated {
            s.split(|c: char| c == ',' || c.is_whitespace())
                .filter(|t| !t.is_empty())
                .map(|t| {
                    t.parse::<u8>()
                        .map_err(|_| OrderError::Parse(t.to_string()))
                })
                .collect::<Result<Vec<_>, _>>()?
        } else {
            s.chars()
                .map(|c| {
                    c.to_digit(10)
                        .map(|d| d as u8)
                        .ok_or_else(|| OrderError::Parse(c.to_string()))
                })
                .collect::<Result<Vec<_>, _>>()?
        };
        Word::new(digits)
    }
}

impl From<Word> for String {
    fn from(w: Word) -> String {
        w.to_string()
    }
}

impl TryFrom<String> for Word {
    type Error = OrderError;

    fn try_from(s: String) -> Result<Self, Self::Error> {
        s.parse()
    }
}
