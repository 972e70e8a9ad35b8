//! Brute-force reference implementations for tests. Everything works on raw
//! digit vectors and shares no code with the main crate.

use std::cmp::Ordering;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Yes,
    No,
    Undetermined,
}

/// Bounds of a negative-base shift: the upper sequence `pre per^∞` (or just
/// `pre` when `per` is empty) and, for the two-sided case, `lower^∞`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleSpec {
    pub alphabet: u8,
    pub pre: Vec<u8>,
    pub per: Vec<u8>,
    pub lower: Option<Vec<u8>>,
}

impl OracleSpec {
    pub fn periodic(pre: &[u8], per: &[u8]) -> Self {
        OracleSpec {
            alphabet: *pre.iter().chain(per).max().unwrap(),
            pre: pre.to_vec(),
            per: per.to_vec(),
            lower: None,
        }
    }

    pub fn prefix(b: &[u8]) -> Self {
        OracleSpec::periodic(b, &[])
    }

    /// `b = block^∞`, odd `|block|`, with lower bound `(1 b_1 ⋯ b_{n-1} (b_n - 1))^∞`.
    pub fn two_sided(block: &[u8]) -> Self {
        let mut low = vec![1];
        low.extend_from_slice(&block[..block.len() - 1]);
        low.push(block[block.len() - 1] - 1);
        OracleSpec {
            lower: Some(low),
            ..OracleSpec::periodic(&[], block)
        }
    }

    pub fn golden() -> Self {
        OracleSpec::periodic(&[2], &[1])
    }

    /// `b_i`, 1-based.
    pub fn upper(&self, i: usize) -> Option<u8> {
        if i <= self.pre.len() {
            Some(self.pre[i - 1])
        } else if self.per.is_empty() {
            None
        } else {
            Some(self.per[(i - 1 - self.pre.len()) % self.per.len()])
        }
    }

    fn lower_digit(&self, i: usize) -> Option<u8> {
        self.lower.as_ref().map(|l| l[(i - 1) % l.len()])
    }
}

/// Alternating order on equal-length words: `x ≺ y` iff at the first
/// difference `i` (1-based), `(-1)^i (y_i - x_i) < 0`.
pub fn alt_order(x: &[u8], y: &[u8]) -> Ordering {
    assert_eq!(x.len(), y.len());
    for i in 0..x.len() {
        if x[i] != y[i] {
            let pos = i + 1;
            let diff = y[i] as i32 - x[i] as i32;
            let signed = if pos % 2 == 0 { diff } else { -diff };
            return if signed < 0 {
                Ordering::Less
            } else {
                Ordering::Greater
            };
        }
    }
    Ordering::Equal
}

/// Each suffix `w_i ⋯ w_{|w|}` compared with the prefix of `b` of the same
/// length, and with the lower bound when present.
pub fn naive_admissible(spec: &OracleSpec, w: &[u8]) -> Verdict {
    if w.iter().any(|&a| a == 0 || a > spec.alphabet) {
        return Verdict::No;
    }
    let mut undetermined = false;
    for i in 0..w.len() {
        let suffix = &w[i..];
        let mut b = Vec::new();
        for j in 1..=suffix.len() {
            match spec.upper(j) {
                Some(d) => b.push(d),
                None => break,
            }
        }
        if b.len() < suffix.len() {
            let k = b.len();
            match alt_order(&suffix[..k], &b) {
                Ordering::Greater => return Verdict::No,
                Ordering::Less => {}
                Ordering::Equal => undetermined = true,
            }
        } else if alt_order(suffix, &b) == Ordering::Greater {
            return Verdict::No;
        }
        if spec.lower.is_some() {
            let low: Vec<u8> = (1..=suffix.len())
                .map(|j| spec.lower_digit(j).unwrap())
                .collect();
            if alt_order(suffix, &low) == Ordering::Less {
                return Verdict::No;
            }
        }
    }
    if undetermined {
        Verdict::Undetermined
    } else {
        Verdict::Yes
    }
}

/// All words of `A^n` in lexicographic order.
pub fn all_words(alphabet: u8, n: usize) -> Vec<Vec<u8>> {
    let mut out = vec![Vec::new()];
    for _ in 0..n {
        let mut next = Vec::with_capacity(out.len() * alphabet as usize);
        for w in &out {
            for a in 1..=alphabet {
                let mut x = w.clone();
                x.push(a);
                next.push(x);
            }
        }
        out = next;
    }
    out
}

/// Admissible words of length `n` by a full scan of `A^n`. `None` if any
/// word is undetermined.
pub fn naive_words(spec: &OracleSpec, n: usize) -> Option<Vec<Vec<u8>>> {
    let mut out = Vec::new();
    let mut w = vec![1u8; n];
    loop {
        match naive_admissible(spec, &w) {
            Verdict::Yes => out.push(w.clone()),
            Verdict::No => {}
            Verdict::Undetermined => return None,
        }
        let mut i = n;
        loop {
            if i == 0 {
                return Some(out);
            }
            i -= 1;
            if w[i] < spec.alphabet {
                w[i] += 1;
                for x in &mut w[i + 1..] {
                    *x = 1;
                }
                break;
            }
        }
    }
}

/// Longest `k` with `w` ending in `b_1 ⋯ b_k`, by checking every `k`.
pub fn naive_k(b: &[u8], w: &[u8]) -> usize {
    let mut best = 0;
    for k in 1..=w.len().min(b.len()) {
        if w[w.len() - k..] == b[..k] {
            best = k;
        }
    }
    best
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Whether `block^∞` lies between the bounds, comparing every rotation on a
/// window long enough to see any difference.
pub fn naive_periodic_admissible(spec: &OracleSpec, block: &[u8]) -> Verdict {
    let n = block.len();
    for r in 0..n {
        let x = |i: usize| block[(r + i - 1) % n];
        let horizon = if spec.per.is_empty() {
            spec.pre.len()
        } else {
            spec.pre.len() + n * spec.per.len() / gcd(n, spec.per.len()) + 1
        };
        let xs: Vec<u8> = (1..=horizon).map(x).collect();
        let bs: Vec<u8> = (1..=horizon).map(|i| spec.upper(i).unwrap()).collect();
        match alt_order(&xs, &bs) {
            Ordering::Greater => return Verdict::No,
            Ordering::Equal if spec.per.is_empty() => return Verdict::Undetermined,
            _ => {}
        }
        if let Some(l) = &spec.lower {
            let h = n * l.len() / gcd(n, l.len()) + 1;
            let xs: Vec<u8> = (1..=h).map(x).collect();
            let ls: Vec<u8> = (1..=h).map(|i| l[(i - 1) % l.len()]).collect();
            if alt_order(&xs, &ls) == Ordering::Less {
                return Verdict::No;
            }
        }
    }
    Verdict::Yes
}

/// Period-`n` blocks of periodic points by a full scan of `A^n`.
pub fn naive_per(spec: &OracleSpec, n: usize) -> Option<Vec<Vec<u8>>> {
    let mut out = Vec::new();
    for w in all_words(spec.alphabet, n) {
        match naive_periodic_admissible(spec, &w) {
            Verdict::Yes => out.push(w),
            Verdict::No => {}
            Verdict::Undetermined => return None,
        }
    }
    Some(out)
}

/// Edges `(src, dst, label)` of the graph on `V_0..V_K`: from `V_i`, every
/// `a` with `b_1 ⋯ b_i a` admissible leads to `V_{k(b_1 ⋯ b_i a)}`.
pub fn naive_edges(spec: &OracleSpec, k: usize) -> Vec<(usize, usize, u8)> {
    let b: Vec<u8> = (1..=k + 2).map(|i| spec.upper(i).unwrap()).collect();
    let mut out = Vec::new();
    for i in 0..=k {
        for a in 1..=spec.alphabet {
            let mut w = b[..i].to_vec();
            w.push(a);
            if naive_admissible(spec, &w) == Verdict::Yes {
                out.push((i, naive_k(&b, &w), a));
            }
        }
    }
    out
}

/// Label words of the paths of length `n` from `start`, through the edge
/// list, ignoring paths that leave `V_0..V_K`.
pub fn naive_path_labels(
    edges: &[(usize, usize, u8)],
    k: usize,
    start: usize,
    n: usize,
) -> Vec<Vec<u8>> {
    let mut out = Vec::new();
    let mut stack = vec![(start, Vec::new())];
    while let Some((v, w)) = stack.pop() {
        if w.len() == n {
            out.push(w);
            continue;
        }
        for &(s, d, a) in edges {
            if s == v && d <= k {
                let mut x = w.clone();
                x.push(a);
                stack.push((d, x));
            }
        }
    }
    out.sort();
    out
}

/// `v ∈ C^(L)`: `b_1 ⋯ b_{L-1} v` is admissible and each of its prefixes
/// longer than `L - 1` ends with at least `L` symbols of `b`.
pub fn naive_in_c(spec: &OracleSpec, l: usize, v: &[u8]) -> bool {
    if v.is_empty() {
        return false;
    }
    let b: Vec<u8> = (1..=l + v.len() + 1)
        .map(|i| spec.upper(i).unwrap())
        .collect();
    let mut w = b[..l - 1].to_vec();
    w.extend_from_slice(v);
    if naive_admissible(spec, &w) != Verdict::Yes {
        return false;
    }
    (l..=w.len()).all(|j| naive_k(&b, &w[..j]) >= l)
}

/// `w ∈ G^(L)`: admissible with `k(w) < L`.
pub fn naive_in_g(spec: &OracleSpec, l: usize, w: &[u8]) -> bool {
    let b: Vec<u8> = (1..=w.len() + 1).map(|i| spec.upper(i).unwrap()).collect();
    naive_admissible(spec, w) == Verdict::Yes && naive_k(&b, w) < l
}

/// Some admissible word of length `|w| + extra` starting with `w`.
pub fn extension_witness(spec: &OracleSpec, w: &[u8], extra: usize) -> Option<Vec<u8>> {
    if naive_admissible(spec, w) != Verdict::Yes {
        return None;
    }
    if extra == 0 {
        return Some(w.to_vec());
    }
    for a in 1..=spec.alphabet {
        let mut x = w.to_vec();
        x.push(a);
        if let Some(found) = extension_witness(spec, &x, extra - 1) {
            return Some(found);
        }
    }
    None
}

fn gcd_i(a: i128, b: i128) -> i128 {
    if b == 0 {
        a.abs()
    } else {
        gcd_i(b, a % b)
    }
}

/// First `n` digits of the expansion of `x = xn/xd` in base `-p/q`,
/// in `i128` arithmetic. `None` on overflow.
pub fn naive_expand(p: i128, q: i128, xn: i128, xd: i128, n: usize) -> Option<Vec<u8>> {
    let (mut a, mut c) = (xn, xd);
    let mut out = Vec::with_capacity(n);
    for _ in 0..n {
        let num = p.checked_mul(a)?;
        let den = q.checked_mul(c)?;
        let digit = num.div_euclid(den) + 1;
        out.push(u8::try_from(digit).ok()?);
        a = digit.checked_mul(den)?.checked_sub(num)?;
        c = den;
        let g = gcd_i(a, c);
        a /= g;
        c /= g;
    }
    Some(out)
}

/// Float interval propagation of `(lo, hi)` under the extended map until the
/// union covers `(tol, 1 - tol)`.
pub fn naive_leo(beta: f64, lo: f64, hi: f64, nmax: usize, tol: f64) -> Option<usize> {
    let top = beta.floor() as i64 + 1;
    let mut spans = vec![(lo, hi)];
    for n in 0..=nmax {
        spans.sort_by(|x, y| x.partial_cmp(y).unwrap());
        let mut merged: Vec<(f64, f64)> = Vec::new();
        for s in spans {
            match merged.last_mut() {
                Some(last) if s.0 <= last.1 + 1e-12 => last.1 = last.1.max(s.1),
                _ => merged.push(s),
            }
        }
        if merged.iter().any(|&(a, b)| a <= tol && b >= 1.0 - tol) {
            return Some(n);
        }
        let mut next = Vec::new();
        for &(a, b) in &merged {
            if a <= 0.0 {
                next.push((1.0, 1.0));
            }
            for d in 1..=top {
                let cl = ((d - 1) as f64 / beta).max(a);
                let ch = (d as f64 / beta).min(1.0).min(b);
                if cl < ch {
                    next.push((d as f64 - beta * ch, d as f64 - beta * cl));
                }
            }
        }
        spans = next;
    }
    None
}

/// Depth caps, horizons and the random seed used by the test suites.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleConfig {
    pub max_len: usize,
    pub per_max: usize,
    pub horizon: usize,
    pub samples: usize,
    pub seed: u64,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig {
            max_len: 14,
            per_max: 12,
            horizon: 60,
            samples: 10_000,
            seed: 0x5eed_2024,
        }
    }
}
