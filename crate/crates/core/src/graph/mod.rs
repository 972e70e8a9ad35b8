//! The countable labelled graph presenting a one-sided negative-base shift.
//!
//! Vertex `V_i` stands for all admissible words `w` with `k(w) = i`. From
//! `V_i` there is the spine edge to `V_{i+1}` labelled `b_{i+1}`, and for each
//! label `a` on the correct side of `b_{i+1}` (below it for even `i`, above it
//! for odd `i`) with `b_1⋯b_i a` admissible, an edge to `V_{k(b_1⋯b_i a)}`.
//! Only the vertices `V_0..V_K` are built; the spine edge out of `V_K`
//! points to `V_{K+1}`, whose own edges are unknown.

use std::collections::VecDeque;

use num_bigint::BigUint;
use num_traits::Zero;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::language::{Admissibility, LanguageError, ShiftSpec};
use crate::order::Word;

mod export;
mod kmp;

pub use export::{parse_b_sequence, to_dot, to_json, GraphJson};
pub use kmp::{k_of, FailureAutomaton};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("the graph presentation covers one-sided shifts only")]
    TwoSidedUnsupported,
    #[error("bound known to {available} digits, {needed} needed")]
    PrefixTooShort { needed: usize, available: usize },
    #[error("walk needs the edges of V_{vertex}, outside the slice")]
    TruncationInsufficient { vertex: usize },
    #[error("vertex {0} is not in the slice")]
    VertexOutOfRange(usize),
    #[error("cannot parse sequence: {0}")]
    Parse(String),
    #[error(transparent)]
    Language(#[from] LanguageError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Edge {
    pub src: usize,
    pub dst: usize,
    pub label: u8,
    pub spine: bool,
}

/// Vertices `V_0..V_K` of the graph with all their out-edges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphSlice {
    k: usize,
    b: Word,
    alphabet: u8,
    out: Vec<Vec<Edge>>,
    complete: Vec<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Walk {
    Path(Vec<usize>),
    /// No edge carries the symbol at this 0-based position.
    Reject {
        at: usize,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PathToOrigin {
    pub len: usize,
    pub labels: Word,
    pub vertices: Vec<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum GapScan {
    /// Every `V_k` with `L ≤ k ≤ K` has no edge to `V_j` with `0 ≤ k - j ≤ N`.
    /// Certified within the slice only.
    Found {
        l: usize,
    },
    NoneInSlice,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FollowerReport {
    pub k_w: usize,
    pub k_w2: usize,
    pub depth: usize,
    pub followers: usize,
    pub equal: bool,
    /// A continuation allowed after exactly one of the two words.
    pub counterexample: Option<Word>,
}

/// Build `V_0..V_K` from a one-sided spec whose bound is known to `K + 2` digits.
pub fn build_graph(spec: &ShiftSpec, k: usize) -> Result<GraphSlice, GraphError> {
    if spec.is_two_sided() {
        return Err(GraphError::TwoSidedUnsupported);
    }
    let b = spec
        .upper()
        .prefix(k + 2)
        .ok_or(GraphError::PrefixTooShort {
            needed: k + 2,
            available: spec.upper().known_len().unwrap_or(0),
        })?;
    let automaton = FailureAutomaton::new(&b);
    let alphabet = spec.alphabet();
    let mut out = Vec::with_capacity(k + 1);
    for i in 0..=k {
        let next = b[i];
        let mut edges = vec![Edge {
            src: i,
            dst: i + 1,
            label: next,
            spine: true,
        }];
        let labels: Vec<u8> = if i % 2 == 0 {
            (1..next).collect()
        } else {
            (next + 1..=alphabet).collect()
        };
        let mut word = b[..i].to_vec();
        for a in labels {
            word.push(a);
            match spec.is_admissible(&word) {
                Admissibility::Yes => {
                    let dst = automaton.run(&word)?;
                    assert!(dst <= i, "non-spine edge V_{i} -> V_{dst} must not climb");
                    edges.push(Edge {
                        src: i,
                        dst,
                        label: a,
                        spine: false,
                    });
                }
                Admissibility::No => {}
                Admissibility::Undetermined => {
                    return Err(GraphError::PrefixTooShort {
                        needed: word.len(),
                        available: b.len(),
                    })
                }
            }
            word.pop();
        }
        edges.sort_by_key(|e| e.label);
        for e in edges.iter().filter(|e| !e.spine) {
            if i % 2 == 0 {
                assert!(
                    e.label < next,
                    "even vertex {i} has label {} ≥ {next}",
                    e.label
                );
            } else {
                assert!(
                    e.label > next,
                    "odd vertex {i} has label {} ≤ {next}",
                    e.label
                );
            }
        }
        out.push(edges);
    }
    Ok(GraphSlice {
        k,
        b,
        alphabet,
        out,
        complete: vec![true; k + 1],
    })
}

impl GraphSlice {
    /// Truncation depth `K`.
    pub fn depth(&self) -> usize {
        self.k
    }

    /// The prefix `b_1⋯b_{K+2}` the slice was built from.
    pub fn b(&self) -> &Word {
        &self.b
    }

    pub fn alphabet(&self) -> u8 {
        self.alphabet
    }

    pub fn complete(&self) -> &[bool] {
        &self.complete
    }

    pub fn out_edges(&self, v: usize) -> Result<&[Edge], GraphError> {
        if v > self.k {
            return Err(GraphError::TruncationInsufficient { vertex: v });
        }
        Ok(&self.out[v])
    }

    pub fn edges(&self) -> impl Iterator<Item = &Edge> {
        self.out.iter().flatten()
    }

    fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v > self.k {
            Err(GraphError::VertexOutOfRange(v))
        } else {
            Ok(())
        }
    }

    /// Follow the labels of `w` from `start`.
    pub fn walk_from(&self, start: usize, w: &[u8]) -> Result<Walk, GraphError> {
        self.check_vertex(start)?;
        let mut path = Vec::with_capacity(w.len() + 1);
        path.push(start);
        let mut v = start;
        for (i, &a) in w.iter().enumerate() {
            match self.out_edges(v)?.iter().find(|e| e.label == a) {
                Some(e) => v = e.dst,
                None => return Ok(Walk::Reject { at: i }),
            }
            path.push(v);
        }
        Ok(Walk::Path(path))
    }

    pub fn walk(&self, w: &[u8]) -> Result<Walk, GraphError> {
        self.walk_from(0, w)
    }

    /// Labels of all length-`n` paths from `from`, in lexicographic order.
    pub fn path_labels(&self, n: usize, from: usize) -> Result<Vec<Word>, GraphError> {
        self.check_vertex(from)?;
        let mut out = Vec::new();
        let mut cur = Vec::with_capacity(n);
        self.collect_paths(from, n, &|_| true, &mut cur, &mut out)?;
        Ok(out)
    }

    /// Labels of length-`n` paths from `from` whose every later vertex satisfies `allowed`.
    pub fn path_labels_within(
        &self,
        n: usize,
        from: usize,
        allowed: &dyn Fn(usize) -> bool,
    ) -> Result<Vec<Word>, GraphError> {
        self.check_vertex(from)?;
        let mut out = Vec::new();
        let mut cur = Vec::with_capacity(n);
        self.collect_paths(from, n, allowed, &mut cur, &mut out)?;
        Ok(out)
    }

    fn collect_paths(
        &self,
        v: usize,
        n: usize,
        allowed: &dyn Fn(usize) -> bool,
        cur: &mut Vec<u8>,
        out: &mut Vec<Word>,
    ) -> Result<(), GraphError> {
        if cur.len() == n {
            out.push(Word::from(&cur[..]));
            return Ok(());
        }
        for e in self.out_edges(v)? {
            if !allowed(e.dst) {
                continue;
            }
            cur.push(e.label);
            self.collect_paths(e.dst, n, allowed, cur, out)?;
            cur.pop();
        }
        Ok(())
    }

    /// Numbers of paths of lengths `0..=n` from `from` through vertices
    /// satisfying `allowed`.
    pub fn path_counts_within(
        &self,
        n: usize,
        from: usize,
        allowed: &dyn Fn(usize) -> bool,
    ) -> Result<Vec<BigUint>, GraphError> {
        self.check_vertex(from)?;
        let mut mass = vec![BigUint::zero(); self.k + 2];
        mass[from] = BigUint::from(1u32);
        let mut counts = vec![BigUint::from(1u32)];
        for _ in 0..n {
            if !mass[self.k + 1].is_zero() {
                return Err(GraphError::TruncationInsufficient { vertex: self.k + 1 });
            }
            let mut next = vec![BigUint::zero(); self.k + 2];
            for (v, m) in mass.iter().enumerate().take(self.k + 1) {
                if m.is_zero() {
                    continue;
                }
                for e in &self.out[v] {
                    if allowed(e.dst) {
                        next[e.dst] += m;
                    }
                }
            }
            counts.push(next.iter().sum());
            mass = next;
        }
        Ok(counts)
    }

    /// Number of length-`n` paths from `from`.
    pub fn path_count(&self, n: usize, from: usize) -> Result<BigUint, GraphError> {
        Ok(self
            .path_counts_within(n, from, &|_| true)?
            .pop()
            .expect("nonempty"))
    }

    /// Breadth-first distances to `V_0` inside the slice.
    fn distances_to_origin(&self) -> Vec<Option<usize>> {
        let mut rev: Vec<Vec<usize>> = vec![Vec::new(); self.k + 1];
        for e in self.edges() {
            if e.dst <= self.k {
                rev[e.dst].push(e.src);
            }
        }
        let mut dist = vec![None; self.k + 1];
        dist[0] = Some(0);
        let mut queue = VecDeque::from([0]);
        while let Some(v) = queue.pop_front() {
            let d = dist[v].expect("queued vertices have distances");
            for &u in &rev[v] {
                if dist[u].is_none() {
                    dist[u] = Some(d + 1);
                    queue.push_back(u);
                }
            }
        }
        dist
    }

    /// Shortest path from `V_i` to `V_0`, lexicographically least among the
    /// shortest ones.
    pub fn shortest_path_to_v0(&self, i: usize) -> Result<PathToOrigin, GraphError> {
        self.check_vertex(i)?;
        let dist = self.distances_to_origin();
        let Some(len) = dist[i] else {
            return Err(GraphError::TruncationInsufficient { vertex: i });
        };
        let mut labels = Vec::with_capacity(len);
        let mut vertices = vec![i];
        let mut v = i;
        for remaining in (0..len).rev() {
            let e = self.out[v]
                .iter()
                .find(|e| e.dst <= self.k && dist[e.dst] == Some(remaining))
                .expect("distance decreases along some edge");
            labels.push(e.label);
            v = e.dst;
            vertices.push(v);
        }
        Ok(PathToOrigin {
            len,
            labels: Word::from(&labels[..]),
            vertices,
        })
    }

    /// Least `L` such that no vertex `V_k`, `L ≤ k ≤ K`, has an edge falling
    /// back by at most `N`.
    pub fn gap_scan(&self, n: usize) -> GapScan {
        let bad = |k: usize| self.out[k].iter().any(|e| e.dst <= k && k - e.dst <= n);
        match (0..=self.k).rev().find(|&k| bad(k)) {
            None => GapScan::Found { l: 0 },
            Some(k) if k == self.k => GapScan::NoneInSlice,
            Some(k) => GapScan::Found { l: k + 1 },
        }
    }
}

/// Compare the depth-`depth` follower sets of `w` and `w2` by brute force.
pub fn follower_equiv_check(
    spec: &ShiftSpec,
    w: &[u8],
    w2: &[u8],
    depth: usize,
) -> Result<FollowerReport, GraphError> {
    let needed = w.len().max(w2.len()) + depth + 1;
    let b = spec
        .upper()
        .prefix(needed)
        .ok_or(GraphError::PrefixTooShort {
            needed,
            available: spec.upper().known_len().unwrap_or(0),
        })?;
    let automaton = FailureAutomaton::new(&b);
    let followers = |x: &[u8]| -> Result<Vec<Word>, GraphError> {
        let mut tails: Vec<Word> = spec
            .extensions(x, x.len() + depth)?
            .into_iter()
            .map(|e| Word::from(&e[x.len()..]))
            .collect();
        tails.sort();
        Ok(tails)
    };
    let f1 = followers(w)?;
    let f2 = followers(w2)?;
    let counterexample = f1
        .iter()
        .find(|u| f2.binary_search(u).is_err())
        .or_else(|| f2.iter().find(|u| f1.binary_search(u).is_err()))
        .cloned();
    Ok(FollowerReport {
        k_w: automaton.run(w)?,
        k_w2: automaton.run(w2)?,
        depth,
        followers: f1.len(),
        equal: counterexample.is_none(),
        counterexample,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::order::EvPeriodicSeq;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    fn sample() -> ShiftSpec {
        ShiftSpec::one_sided(EvPeriodicSeq::periodic(&w("3232133")).unwrap()).unwrap()
    }

    fn triples(g: &GraphSlice) -> Vec<(usize, usize, u8)> {
        g.edges().map(|e| (e.src, e.dst, e.label)).collect()
    }

    #[test]
    fn golden_slice() {
        let g = build_graph(&ShiftSpec::golden(), 3).unwrap();
        assert_eq!(
            triples(&g),
            [
                (0, 0, 1),
                (0, 1, 2),
                (1, 2, 1),
                (1, 1, 2),
                (2, 3, 1),
                (3, 4, 1),
                (3, 1, 2)
            ]
        );
        assert!(matches!(
            build_graph(&ShiftSpec::two_sided(&w("3")).unwrap(), 3),
            Err(GraphError::TwoSidedUnsupported)
        ));
    }

    #[test]
    fn walks() {
        let g = build_graph(&ShiftSpec::golden(), 6).unwrap();
        assert_eq!(g.walk(&w("21")).unwrap(), Walk::Path(vec![0, 1, 2]));
        assert_eq!(g.walk(&w("22")).unwrap(), Walk::Path(vec![0, 1, 1]));
        assert_eq!(g.walk(&w("12")).unwrap(), Walk::Path(vec![0, 0, 1]));
        assert_eq!(g.walk(&w("212")).unwrap(), Walk::Reject { at: 2 });
        assert!(matches!(
            g.walk(&w("2111111111")),
            Err(GraphError::TruncationInsufficient { vertex: 7 })
        ));
    }

    #[test]
    fn counts_match_language() {
        let spec = ShiftSpec::golden();
        let g = build_graph(&spec, 12).unwrap();
        assert_eq!(g.path_count(0, 0).unwrap(), BigUint::from(1u32));
        assert_eq!(g.path_count(1, 0).unwrap(), BigUint::from(2u32));
        assert_eq!(g.path_count(2, 0).unwrap(), BigUint::from(4u32));
        for n in 1..=10 {
            assert_eq!(
                g.path_labels(n, 0).unwrap(),
                spec.enumerate_words(n).unwrap()
            );
        }
        let spec = sample();
        let g = build_graph(&spec, 12).unwrap();
        for n in 1..=8 {
            assert_eq!(
                g.path_labels(n, 0).unwrap(),
                spec.enumerate_words(n).unwrap()
            );
        }
    }

    #[test]
    fn paths_home() {
        let g = build_graph(&ShiftSpec::golden(), 10).unwrap();
        assert_eq!(g.shortest_path_to_v0(0).unwrap().len, 0);
        assert!(matches!(
            g.shortest_path_to_v0(1),
            Err(GraphError::TruncationInsufficient { vertex: 1 })
        ));
        let g = build_graph(&sample(), 12).unwrap();
        let p = g.shortest_path_to_v0(2).unwrap();
        assert_eq!(*p.vertices.last().unwrap(), 0);
        assert_eq!(
            g.walk_from(2, &p.labels).unwrap(),
            Walk::Path(p.vertices.clone())
        );
    }

    #[test]
    fn gaps() {
        let g = build_graph(&ShiftSpec::golden(), 10).unwrap();
        assert_eq!(g.gap_scan(1), GapScan::Found { l: 2 });
        assert_eq!(g.gap_scan(4), GapScan::Found { l: 6 });
        let threes = ShiftSpec::one_sided(EvPeriodicSeq::periodic(&[3]).unwrap()).unwrap();
        let g = build_graph(&threes, 8).unwrap();
        assert_eq!(g.gap_scan(1), GapScan::Found { l: 1 });
    }

    #[test]
    fn followers() {
        let g = ShiftSpec::golden();
        let r = follower_equiv_check(&g, &w("1"), &w("11"), 6).unwrap();
        assert!(r.equal && r.k_w == 0 && r.k_w2 == 0);
        let r = follower_equiv_check(&g, &w("2"), &w("12"), 6).unwrap();
        assert!(r.equal && r.k_w == 1 && r.k_w2 == 1);
        let r = follower_equiv_check(&g, &w("2"), &w("21"), 4).unwrap();
        assert!(!r.equal);
    }
}
