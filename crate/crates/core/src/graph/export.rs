use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use super::{Edge, GraphError, GraphSlice};
use crate::language::Bound;
use crate::order::{EvPeriodicSeq, Word};

/// Adjacency-list form of a slice.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    pub depth: usize,
    pub b_prefix: Word,
    pub vertices: Vec<String>,
    pub edges: Vec<Edge>,
}

pub fn to_json(g: &GraphSlice) -> GraphJson {
    GraphJson {
        depth: g.depth(),
        b_prefix: g.b().clone(),
        vertices: (0..=g.depth() + 1).map(|i| format!("V{i}")).collect(),
        edges: g.edges().copied().collect(),
    }
}

pub fn to_dot(g: &GraphSlice) -> String {
    let mut s = String::from("digraph G {\n  rankdir=LR;\n");
    for i in 0..=g.depth() {
        let _ = writeln!(s, "  V{i};");
    }
    let _ = writeln!(s, "  V{} [style=dashed];", g.depth() + 1);
    for e in g.edges() {
        let style = if e.spine { ", style=bold" } else { "" };
        let _ = writeln!(
            s,
            "  V{} -> V{} [label=\"{}\"{style}];",
            e.src, e.dst, e.label
        );
    }
    s.push_str("}\n");
    s
}

/// Read a bound sequence: digits separated by whitespace or commas, or
/// `PRE|PER` for an eventually periodic sequence. Lines starting with `#`
/// are ignored.
pub fn parse_b_sequence(text: &str) -> Result<Bound, GraphError> {
    let body: String = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .collect::<Vec<_>>()
        .join(" ");
    let body = body.trim();
    if body.is_empty() {
        return Err(GraphError::Parse("empty sequence".into()));
    }
    let parse_word = |s: &str| -> Result<Word, GraphError> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Word::empty());
        }
        s.parse::<Word>()
            .map_err(|e| GraphError::Parse(e.to_string()))
    };
    match body.split_once('|') {
        Some((pre, per)) => {
            let seq = EvPeriodicSeq::new(&parse_word(pre)?, &parse_word(per)?)
                .map_err(|e| GraphError::Parse(e.to_string()))?;
            Ok(Bound::Exact(seq))
        }
        None => Ok(Bound::Prefix(parse_word(body)?)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::build_graph;
    use crate::language::ShiftSpec;

    #[test]
    fn sequence_files() {
        assert_eq!(
            parse_b_sequence("# golden\n2 | 1\n").unwrap(),
            Bound::Exact("2|1".parse().unwrap())
        );
        assert_eq!(
            parse_b_sequence("3, 2, 3, 2, 1, 3, 3").unwrap(),
            Bound::Prefix("3232133".parse().unwrap())
        );
        assert_eq!(
            parse_b_sequence("|3232133").unwrap(),
            Bound::Exact("|3232133".parse().unwrap())
        );
        assert!(parse_b_sequence("  \n# nothing\n").is_err());
        assert!(parse_b_sequence("3 x 2").is_err());
    }

    #[test]
    fn exports() {
        let g = build_graph(&ShiftSpec::golden(), 2).unwrap();
        let dot = to_dot(&g);
        assert!(dot.contains("V0 -> V0 [label=\"1\"];"));
        assert!(dot.contains("V2 -> V3 [label=\"1\", style=bold];"));
        let json = serde_json::to_string(&to_json(&g)).unwrap();
        let back: GraphJson = serde_json::from_str(&json).unwrap();
        assert_eq!(back.edges.len(), g.edges().count());
        assert_eq!(back.b_prefix.to_string(), "2111");
    }
}
