//! Splitting the language into a good part `G^(L)` and a low-entropy
//! suffix part `C^(L)`, the path-count bounds behind the entropy estimate,
//! and gluing good words into periodic points.
//!
//! `C^(L)` consists of the words `b_L w` with `w` the label of a path from
//! `V_L` that never returns to `V_0..V_{L-1}`; `G^(L)` of the labels of paths
//! from `V_0` ending in one of `V_0..V_{L-1}`.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{GraphError, GraphSlice, Walk};
use crate::language::{ln_big, LanguageError, ShiftSpec};
use crate::order::Word;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DecompError {
    #[error("cutoff L = {l} must satisfy 1 ≤ L ≤ K = {k}")]
    BadCutoff { l: usize, k: usize },
    #[error("word {index} ends at V_{end}, beyond V_{limit}")]
    NotInGM {
        index: usize,
        end: usize,
        limit: usize,
    },
    #[error("word {0} is not admissible")]
    NotAdmissible(Word),
    #[error("V_0 has no self-loop labelled 1")]
    NoSelfLoop,
    #[error("no connectors of a common length up to {t_max} close the loop")]
    NoConnector { t_max: usize },
    #[error("no L ≤ {lmax} has all tail estimates within the target")]
    NoLFound { lmax: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Language(#[from] LanguageError),
}

fn check_cutoff(g: &GraphSlice, l: usize) -> Result<(), DecompError> {
    if l == 0 || l > g.depth() {
        Err(DecompError::BadCutoff { l, k: g.depth() })
    } else {
        Ok(())
    }
}

/// The words of `C^(L)` of length `n ≥ 1`, in lexicographic order.
pub fn c_words(g: &GraphSlice, l: usize, n: usize) -> Result<Vec<Word>, DecompError> {
    check_cutoff(g, l)?;
    if n == 0 {
        return Ok(Vec::new());
    }
    let head = [g.b()[l - 1]];
    Ok(g.path_labels_within(n - 1, l, &|v| v >= l)?
        .into_iter()
        .map(|w| Word::from(&head[..]).concat(&w))
        .collect())
}

/// `#C^(L)_n`, counted as paths from `V_{L-1}` that stay in `V_L, V_{L+1}, …`.
pub fn c_count(g: &GraphSlice, l: usize, n: usize) -> Result<BigUint, DecompError> {
    check_cutoff(g, l)?;
    Ok(g.path_counts_within(n, l - 1, &|v| v >= l)?
        .pop()
        .expect("nonempty"))
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CRow {
    pub l: usize,
    pub n: usize,
    pub count: BigUint,
    /// `(1/n) log #C^(L)_n`, taken as 0 for an empty set.
    pub estimate: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CProfile {
    pub epsilon: f64,
    pub nmax: usize,
    pub lmax: usize,
    pub rows: Vec<CRow>,
    /// Least `L` whose estimates for `n ≥ ⌈nmax/2⌉` are all `≤ ε`.
    pub l_hat: Option<usize>,
}

impl CProfile {
    pub fn selected(&self) -> Result<usize, DecompError> {
        self.l_hat.ok_or(DecompError::NoLFound { lmax: self.lmax })
    }

    pub fn tail(&self, l: usize) -> impl Iterator<Item = &CRow> {
        let from = self.nmax.div_ceil(2);
        self.rows.iter().filter(move |r| r.l == l && r.n >= from)
    }

    /// Columns `L,n,count,estimate`.
    pub fn to_csv(&self) -> String {
        let mut s = String::from("L,n,count,estimate\n");
        for r in &self.rows {
            let _ = writeln!(s, "{},{},{},{:.6}", r.l, r.n, r.count, r.estimate);
        }
        s
    }
}

/// Finite-`n` entropy estimates of `C^(L)` for `1 ≤ L ≤ Lmax`, `1 ≤ n ≤ nmax`.
pub fn c_entropy_profile(
    g: &GraphSlice,
    lmax: usize,
    nmax: usize,
    epsilon: f64,
) -> Result<CProfile, DecompError> {
    let mut rows = Vec::new();
    for l in 1..=lmax {
        check_cutoff(g, l)?;
        let counts = g.path_counts_within(nmax, l - 1, &|v| v >= l)?;
        for (n, count) in counts.into_iter().enumerate().skip(1) {
            let estimate = if count.is_zero() {
                0.0
            } else {
                ln_big(&count) / n as f64
            };
            rows.push(CRow {
                l,
                n,
                count,
                estimate,
            });
        }
    }
    let mut profile = CProfile {
        epsilon,
        nmax,
        lmax,
        rows,
        l_hat: None,
    };
    profile.l_hat = (1..=lmax).find(|&l| profile.tail(l).all(|r| r.estimate <= epsilon));
    Ok(profile)
}

/// Adjacency of the subgraph on `W_i = V_{L+i-2}` (`i ≥ 1`) whose edges
/// end in `V_L, V_{L+1}, …`, with row sums of its powers.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CountMatrix {
    pub l: usize,
    pub depth: usize,
    /// `entries[i-1][j-1] = a_ij` for `1 ≤ i ≤ R`, `1 ≤ j ≤ R + 1`, where
    /// `W_{R+1} = V_{K+1}` lies beyond the slice.
    pub entries: Vec<Vec<u32>>,
    /// `row_sums[i-1][n-1] = a_i^(n)`, absent when paths leave the slice.
    pub row_sums: Vec<Vec<Option<BigUint>>>,
}

impl CountMatrix {
    pub fn build(g: &GraphSlice, l: usize, nmax: usize) -> Result<Self, DecompError> {
        check_cutoff(g, l)?;
        let k = g.depth();
        let r = k - l + 2;
        let mut entries = vec![vec![0u32; r + 1]; r];
        for (i, row) in entries.iter_mut().enumerate() {
            for e in g.out_edges(l - 1 + i)? {
                if e.dst >= l {
                    row[e.dst + 1 - l] += 1;
                }
            }
        }
        let mut row_sums = Vec::with_capacity(r);
        for i in 0..r {
            let mut sums = Vec::with_capacity(nmax);
            let mut mass = vec![BigUint::zero(); r + 1];
            mass[i] = BigUint::one();
            let mut exact = true;
            for _ in 0..nmax {
                if !mass[r].is_zero() {
                    exact = false;
                }
                let mut next = vec![BigUint::zero(); r + 1];
                for (src, m) in mass.iter().enumerate().take(r) {
                    if m.is_zero() {
                        continue;
                    }
                    for (dst, &a) in entries[src].iter().enumerate() {
                        if a > 0 {
                            next[dst] += m * a;
                        }
                    }
                }
                mass = next;
                sums.push(exact.then(|| mass.iter().sum()));
            }
            row_sums.push(sums);
        }
        Ok(CountMatrix {
            l,
            depth: k,
            entries,
            row_sums,
        })
    }

    pub fn size(&self) -> usize {
        self.entries.len()
    }

    /// `a_ij`, 1-based.
    pub fn a(&self, i: usize, j: usize) -> u32 {
        self.entries[i - 1][j - 1]
    }

    /// `a_i^(n)`, 1-based, when exact.
    pub fn a_n(&self, i: usize, n: usize) -> Option<&BigUint> {
        self.row_sums.get(i - 1)?.get(n - 1)?.as_ref()
    }

    /// Whether some edge other than a spine edge stays among the high vertices.
    pub fn has_back_edges(&self) -> bool {
        self.entries
            .iter()
            .enumerate()
            .any(|(i, row)| row.iter().enumerate().any(|(j, &a)| a > 0 && j != i + 1))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundRow {
    pub q: usize,
    pub length: usize,
    pub a1: Option<BigUint>,
    pub bound: BigUint,
    /// `None` when `a_1^(qN+1)` is not exact in the slice.
    pub holds: Option<bool>,
    pub margin: Option<BigUint>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StructureChecks {
    pub entries_binary: bool,
    pub superdiagonal_ones: bool,
    pub near_entries_zero: bool,
    pub short_rows_single: bool,
    pub rows_at_most_b: bool,
    pub monotone_in_n: bool,
}

impl StructureChecks {
    pub fn all(&self) -> bool {
        self.entries_binary
            && self.superdiagonal_ones
            && self.near_entries_zero
            && self.short_rows_single
            && self.rows_at_most_b
            && self.monotone_in_n
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundReport {
    pub n: usize,
    pub b: u8,
    pub l: usize,
    pub rows: Vec<BoundRow>,
    pub structure: StructureChecks,
    pub back_edges: bool,
}

impl BoundReport {
    /// All checked bounds hold, at least one was exact, and the structural
    /// properties of the matrix are confirmed.
    pub fn passed(&self) -> bool {
        self.rows.iter().any(|r| r.holds.is_some())
            && self.rows.iter().all(|r| r.holds != Some(false))
            && self.structure.all()
    }
}

/// Compare `a_1^(qN+1)` with `b^(2q-3) N^(2q-3)` for `2 ≤ q ≤ qmax` and check
/// the structural properties of the matrix used to derive it.
pub fn bound_check(counts: &CountMatrix, n: usize, b: u8, qmax: usize) -> BoundReport {
    let mut rows = Vec::new();
    for q in 2..=qmax {
        let length = q * n + 1;
        let e = (2 * q - 3) as u32;
        let bound = BigUint::from(b).pow(e) * BigUint::from(n).pow(e);
        let a1 = counts.a_n(1, length).cloned();
        let holds = a1.as_ref().map(|a| a <= &bound);
        let margin = a1.as_ref().filter(|a| *a <= &bound).map(|a| &bound - a);
        rows.push(BoundRow {
            q,
            length,
            a1,
            bound,
            holds,
            margin,
        });
    }
    let r = counts.size();
    let mut s = StructureChecks {
        entries_binary: true,
        superdiagonal_ones: true,
        near_entries_zero: true,
        short_rows_single: true,
        rows_at_most_b: true,
        monotone_in_n: true,
    };
    for i in 1..=r {
        for j in 1..=r + 1 {
            let a = counts.a(i, j);
            s.entries_binary &= a <= 1;
            if j == i + 1 {
                s.superdiagonal_ones &= a == 1;
            } else if j + n > i {
                s.near_entries_zero &= a == 0;
            }
        }
        if let Some(a1) = counts.a_n(i, 1) {
            if i <= n {
                s.short_rows_single &= a1.is_one();
            }
            s.rows_at_most_b &= *a1 <= BigUint::from(b);
        }
        let sums = &counts.row_sums[i - 1];
        for w in sums.windows(2) {
            if let (Some(x), Some(y)) = (&w[0], &w[1]) {
                s.monotone_in_n &= x <= y;
            }
        }
    }
    BoundReport {
        n,
        b,
        l: counts.l,
        rows,
        structure: s,
        back_edges: counts.has_back_edges(),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Split {
    pub u: Word,
    pub v: Word,
    pub vertices: Vec<usize>,
}

fn walk_path(g: &GraphSlice, start: usize, w: &[u8]) -> Result<Vec<usize>, DecompError> {
    match g.walk_from(start, w)? {
        Walk::Path(p) => Ok(p),
        Walk::Reject { .. } => Err(DecompError::NotAdmissible(Word::from(w))),
    }
}

/// `w = u·v` with `u` ending at the last visit of the walk to `V_0..V_{L-1}`.
pub fn split(g: &GraphSlice, l: usize, w: &[u8]) -> Result<Split, DecompError> {
    check_cutoff(g, l)?;
    let vertices = walk_path(g, 0, w)?;
    let cut = vertices
        .iter()
        .rposition(|&v| v < l)
        .expect("walk starts at V_0");
    Ok(Split {
        u: Word::from(&w[..cut]),
        v: Word::from(&w[cut..]),
        vertices,
    })
}

/// The walk of `w` from `V_0` ends in `V_0..V_{L-1}`.
pub fn in_g(g: &GraphSlice, l: usize, w: &[u8]) -> Result<bool, DecompError> {
    check_cutoff(g, l)?;
    match g.walk(w)? {
        Walk::Path(p) => Ok(*p.last().expect("nonempty") < l),
        Walk::Reject { .. } => Ok(false),
    }
}

/// `v` labels a path from `V_{L-1}` that stays in `V_L, V_{L+1}, …`.
pub fn in_c(g: &GraphSlice, l: usize, v: &[u8]) -> Result<bool, DecompError> {
    check_cutoff(g, l)?;
    if v.is_empty() {
        return Ok(false);
    }
    match g.walk_from(l - 1, v)? {
        Walk::Path(p) => Ok(p[1..].iter().all(|&x| x >= l)),
        Walk::Reject { .. } => Ok(false),
    }
}

/// The walk of `w` from `V_0` ends at some `V_j` with `j ≤ M + L - 1`.
pub fn in_gm(g: &GraphSlice, l: usize, m: usize, w: &[u8]) -> Result<bool, DecompError> {
    check_cutoff(g, l)?;
    match g.walk(w)? {
        Walk::Path(p) => Ok(*p.last().expect("nonempty") < m + l),
        Walk::Reject { .. } => Ok(false),
    }
}

/// `t_M`: the longest of the shortest paths from `V_i` to `V_0`, `i ≤ M + L - 1`.
pub fn t_gap(g: &GraphSlice, m: usize, l: usize) -> Result<usize, DecompError> {
    let top = m + l - 1;
    if top > g.depth() {
        return Err(GraphError::TruncationInsufficient { vertex: top }.into());
    }
    let mut t = 0;
    for i in 0..=top {
        t = t.max(g.shortest_path_to_v0(i)?.len);
    }
    Ok(t)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum GlueRoute {
    /// Shortest path back to `V_0` padded with 1s to length `t_M`.
    ShortestPathPadding,
    /// Connectors of a common exact length found by search; the loop is
    /// closed at `start_vertex` instead of `V_0`.
    ExactLengthSearch { start_vertex: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GlueResult {
    pub words: Vec<Word>,
    pub connectors: Vec<Word>,
    pub t: usize,
    /// `w^1 v^1 ⋯ w^m v^m`.
    pub block: Word,
    pub route: GlueRoute,
    /// Every rotation `r` of the block has `r^∞` in the shift.
    pub admissible: bool,
    pub least_period: usize,
}

fn glued_block(words: &[Word], connectors: &[Word]) -> Word {
    let mut p = Vec::new();
    for (w, v) in words.iter().zip(connectors) {
        p.extend_from_slice(w);
        p.extend_from_slice(v);
    }
    Word::from(&p[..])
}

/// Glue `w^1, …, w^m ∈ G^(L)(M)` into a periodic point `(w^1 v^1 ⋯ w^m v^m)^∞`
/// with connectors of a common length.
///
/// The connectors are shortest paths back to `V_0` padded with 1s when every
/// vertex up to `V_{M+L-1}` reaches `V_0` inside the slice. Otherwise the
/// shortest common length admitting a closed loop is searched for.
pub fn glue(
    g: &GraphSlice,
    spec: &ShiftSpec,
    l: usize,
    m: usize,
    words: &[Word],
) -> Result<GlueResult, DecompError> {
    check_cutoff(g, l)?;
    let mut ends = Vec::with_capacity(words.len());
    for (index, w) in words.iter().enumerate() {
        let end = *walk_path(g, 0, w)?.last().expect("nonempty");
        if end >= m + l {
            return Err(DecompError::NotInGM {
                index,
                end,
                limit: m + l - 1,
            });
        }
        ends.push(end);
    }
    if !g.out_edges(0)?.iter().any(|e| e.label == 1 && e.dst == 0) {
        return Err(DecompError::NoSelfLoop);
    }
    let (connectors, t, route) = match t_gap(g, m, l) {
        Ok(t) => {
            let mut cs = Vec::with_capacity(words.len());
            for &end in &ends {
                let path = g.shortest_path_to_v0(end)?;
                let pad = Word::repeat(1, t - path.len);
                cs.push(path.labels.concat(&pad));
            }
            (cs, t, GlueRoute::ShortestPathPadding)
        }
        Err(DecompError::Graph(GraphError::TruncationInsufficient { .. })) => {
            let (cs, t, start) = search_connectors(g, words, 2 * (g.depth() + 1))?;
            (
                cs,
                t,
                GlueRoute::ExactLengthSearch {
                    start_vertex: start,
                },
            )
        }
        Err(e) => return Err(e),
    };
    let block = glued_block(words, &connectors);
    let admissible = !block.is_empty() && spec.is_periodic_admissible(&block)?;
    Ok(GlueResult {
        words: words.to_vec(),
        least_period: block.least_period(),
        connectors,
        t,
        block,
        route,
        admissible,
    })
}

/// `reach[s][u]`: vertices reachable from `u` by paths of exactly `s` edges inside the slice.
fn exact_reach(g: &GraphSlice, t: usize) -> Vec<Vec<BTreeSet<usize>>> {
    let k = g.depth();
    let mut reach = vec![(0..=k).map(|u| BTreeSet::from([u])).collect::<Vec<_>>()];
    for s in 1..=t {
        let layer: Vec<BTreeSet<usize>> = (0..=k)
            .map(|u| {
                reach[s - 1][u]
                    .iter()
                    .flat_map(|&v| g.out_edges(v).expect("in slice").iter())
                    .filter(|e| e.dst <= k)
                    .map(|e| e.dst)
                    .collect()
            })
            .collect();
        reach.push(layer);
    }
    reach
}

/// Lexicographically least label word of an exact-length path `from → to`.
fn least_path(
    g: &GraphSlice,
    reach: &[Vec<BTreeSet<usize>>],
    from: usize,
    to: usize,
    t: usize,
) -> Word {
    let mut labels = Vec::with_capacity(t);
    let mut v = from;
    for s in (0..t).rev() {
        let e = g
            .out_edges(v)
            .expect("in slice")
            .iter()
            .find(|e| e.dst <= g.depth() && reach[s][e.dst].contains(&to))
            .expect("a step towards the target exists");
        labels.push(e.label);
        v = e.dst;
    }
    Word::from(&labels[..])
}

fn read_from(g: &GraphSlice, start: usize, w: &[u8]) -> Option<usize> {
    match g.walk_from(start, w) {
        Ok(Walk::Path(p)) => p.last().copied(),
        _ => None,
    }
}

fn search_connectors(
    g: &GraphSlice,
    words: &[Word],
    t_max: usize,
) -> Result<(Vec<Word>, usize, usize), DecompError> {
    let reach = exact_reach(g, t_max);
    let k = g.depth();
    for t in 0..=t_max {
        for h1 in 0..=k {
            if let Some(targets) = close_loop(g, words, &reach[t], h1, h1, 0) {
                let mut connectors = Vec::with_capacity(words.len());
                let mut v = h1;
                for (i, w) in words.iter().enumerate() {
                    let end = read_from(g, v, w).expect("checked during search");
                    connectors.push(least_path(g, &reach, end, targets[i], t));
                    v = targets[i];
                }
                return Ok((connectors, t, h1));
            }
        }
    }
    Err(DecompError::NoConnector { t_max })
}

/// Starting at `v` before word `i`, choose the vertices after each connector so
/// that the last connector returns to `h1`.
fn close_loop(
    g: &GraphSlice,
    words: &[Word],
    reach_t: &[BTreeSet<usize>],
    h1: usize,
    v: usize,
    i: usize,
) -> Option<Vec<usize>> {
    let end = read_from(g, v, &words[i]).filter(|&e| e < reach_t.len())?;
    let next = &reach_t[end];
    if i + 1 == words.len() {
        return next.contains(&h1).then(|| vec![h1]);
    }
    for &h in next {
        if let Some(mut rest) = close_loop(g, words, reach_t, h1, h, i + 1) {
            rest.insert(0, h);
            return Some(rest);
        }
    }
    None
}
