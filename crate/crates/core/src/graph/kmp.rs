use super::GraphError;

/// Streaming longest-suffix-equal-to-prefix matcher over a finite pattern.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FailureAutomaton {
    pattern: Vec<u8>,
    fail: Vec<usize>,
}

impl FailureAutomaton {
    pub fn new(pattern: &[u8]) -> Self {
        let mut fail = vec![0; pattern.len()];
        let mut k = 0;
        for i in 1..pattern.len() {
            while k > 0 && pattern[i] != pattern[k] {
                k = fail[k - 1];
            }
            if pattern[i] == pattern[k] {
                k += 1;
            }
            fail[i] = k;
        }
        FailureAutomaton {
            pattern: pattern.to_vec(),
            fail,
        }
    }

    pub fn pattern(&self) -> &[u8] {
        &self.pattern
    }

    /// State after reading `a` in state `q`. In the full-match state the
    /// next pattern symbol is unknown, so no further symbol can be read.
    pub fn next(&self, mut q: usize, a: u8) -> Result<usize, GraphError> {
        if q >= self.pattern.len() {
            return Err(GraphError::PrefixTooShort {
                needed: q + 1,
                available: self.pattern.len(),
            });
        }
        loop {
            if self.pattern[q] == a {
                return Ok(q + 1);
            }
            if q == 0 {
                return Ok(0);
            }
            q = self.fail[q - 1];
        }
    }

    pub fn run(&self, w: &[u8]) -> Result<usize, GraphError> {
        w.iter().try_fold(0, |q, &a| self.next(q, a))
    }
}

/// `k(w)`: length of the longest suffix of `w` equal to a prefix of `b`.
pub fn k_of(bprefix: &[u8], w: &[u8]) -> Result<usize, GraphError> {
    FailureAutomaton::new(bprefix).run(w)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn periodic_bound_sequence() {
        let b = [3, 2, 3, 2, 1, 3, 3];
        assert_eq!(k_of(&b, &[3, 2, 3, 2]).unwrap(), 4);
        assert_eq!(k_of(&b, &[3, 2, 1]).unwrap(), 0);
        assert_eq!(k_of(&b, &[]).unwrap(), 0);
        assert_eq!(k_of(&b, &[1, 3, 2, 3]).unwrap(), 3);
        assert_eq!(k_of(&b, &[3, 2, 3, 2, 3]).unwrap(), 3);
        assert!(matches!(
            k_of(&[2, 1], &[2, 1, 1]),
            Err(GraphError::PrefixTooShort { .. })
        ));
    }
}
