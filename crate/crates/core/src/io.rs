//! Text formats for rules and groups, and DOT output for adjoint graphs.
//!
//! Rule files are JSON objects:
//!
//! ```json
//! {
//!   "rank": 2,
//!   "labels": ["1", "τ"],
//!   "dual": [0, 1],
//!   "fusion": [
//!     [0,0,0,1],
//!     [0,1,1,1],
//!     [1,0,1,1],
//!     [1,1,0,1],
//!     [1,1,1,1]
//!   ]
//! }
//! ```
//!
//! `fusion` lists only the nonzero `[i, j, k, N_{ij}^k]` records; every
//! omitted entry is zero. Group files carry `order`, a row-major `table`
//! and an optional `name`.

use std::collections::HashSet;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::acyclicity::adjoint_graph;
use crate::error::{Error, Result};
use crate::generators::FiniteGroup;
use crate::rule::FusionRule;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RuleFile {
    pub rank: i64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
    pub dual: Vec<i64>,
    pub fusion: Vec<[i64; 4]>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupFile {
    pub order: i64,
    pub table: Vec<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
}

fn to_index(value: i64, rank: usize, what: &str) -> Result<usize> {
    usize::try_from(value)
        .ok()
        .filter(|&v| v < rank)
        .ok_or_else(|| Error::Structural(format!("{what} {value} is out of range for rank {rank}")))
}

impl RuleFile {
    pub fn into_rule(self) -> Result<FusionRule> {
        let rank = usize::try_from(self.rank)
            .ok()
            .filter(|&r| r >= 1)
            .ok_or_else(|| Error::Structural(format!("rank must be a positive integer, got {}", self.rank)))?;
        let labels = match self.labels {
            Some(labels) if labels.len() != rank => {
                return Err(Error::Structural(format!(
                    "{} labels given for rank {rank}",
                    labels.len()
                )))
            }
            Some(labels) => labels,
            None => FusionRule::default_labels(rank),
        };
        if self.dual.len() != rank {
            return Err(Error::Structural(format!(
                "dual has {} entries, expected {rank}",
                self.dual.len()
            )));
        }
        let dual = self
            .dual
            .iter()
            .map(|&d| to_index(d, rank, "dual index"))
            .collect::<Result<Vec<_>>>()?;
        let mut tensor = vec![0u32; rank * rank * rank];
        let mut seen = HashSet::new();
        for rec in &self.fusion {
            let [i, j, k, m] = *rec;
            let (i, j, k) = (
                to_index(i, rank, "label")?,
                to_index(j, rank, "label")?,
                to_index(k, rank, "label")?,
            );
            if !seen.insert((i, j, k)) {
                return Err(Error::Structural(format!(
                    "duplicate fusion record for ({i}, {j}, {k})"
                )));
            }
            let m = u32::try_from(m)
                .ok()
                .filter(|&m| m >= 1)
                .ok_or_else(|| {
                    Error::Structural(format!(
                        "multiplicity {m} for ({i}, {j}, {k}) must be a positive integer"
                    ))
                })?;
            tensor[(i * rank + j) * rank + k] = m;
        }
        FusionRule::new(labels, dual, tensor)
    }

    pub fn from_rule(rule: &FusionRule) -> Self {
        let r = rule.rank();
        let mut fusion = Vec::new();
        for i in 0..r {
            for j in 0..r {
                for (k, m) in rule.fuse(i, j) {
                    fusion.push([i as i64, j as i64, k as i64, i64::from(m)]);
                }
            }
        }
        RuleFile {
            rank: r as i64,
            labels: Some(rule.labels().to_vec()),
            dual: rule.dual_map().iter().map(|&d| d as i64).collect(),
            fusion,
        }
    }
}

pub fn parse_rule(text: &str) -> Result<FusionRule> {
    let file: RuleFile = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    file.into_rule()
}

/// Serializes with one fusion record per line; output is deterministic.
pub fn write_rule(rule: &FusionRule) -> String {
    let file = RuleFile::from_rule(rule);
    let mut out = String::from("{\n");
    let _ = writeln!(out, "  \"rank\": {},", file.rank);
    if let Some(labels) = &file.labels {
        let _ = writeln!(out, "  \"labels\": {},", json(labels.as_slice()));
    }
    let _ = writeln!(out, "  \"dual\": {},", json(&file.dual));
    out.push_str("  \"fusion\": [\n");
    for (n, rec) in file.fusion.iter().enumerate() {
        let sep = if n + 1 == file.fusion.len() { "" } else { "," };
        let _ = writeln!(out, "    [{},{},{},{}]{sep}", rec[0], rec[1], rec[2], rec[3]);
    }
    out.push_str("  ]\n}\n");
    out
}

fn json<T: Serialize + ?Sized>(value: &T) -> String {
    serde_json::to_string(value).expect("plain data serializes")
}

pub fn parse_group(text: &str) -> Result<FiniteGroup> {
    let file: GroupFile = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    let order = usize::try_from(file.order)
        .ok()
        .filter(|&o| o >= 1)
        .ok_or_else(|| Error::Structural(format!("order must be a positive integer, got {}", file.order)))?;
    let table = file
        .table
        .iter()
        .map(|&x| to_index(x, order, "group element"))
        .collect::<Result<Vec<_>>>()?;
    FiniteGroup::from_table(file.name.unwrap_or_else(|| format!("G{order}")), order, table)
}

pub fn write_group(group: &FiniteGroup) -> String {
    let file = GroupFile {
        order: group.order() as i64,
        table: group.table().iter().map(|&x| x as i64).collect(),
        name: Some(group.name().to_string()),
    };
    let mut s = serde_json::to_string_pretty(&file).expect("plain data serializes");
    s.push('\n');
    s
}

fn dot_escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

/// DOT digraph of the adjoint graph: one node per dual pair, one edge per
/// positive `N_{i ī}^j`, labelled with the multiplicity.
pub fn adjoint_dot(rule: &FusionRule) -> String {
    let graph = adjoint_graph(rule);
    let mut out = String::from("digraph adjoint {\n");
    out.push_str("  rankdir=TB;\n");
    out.push_str("  node [shape=circle];\n");
    for (v, _) in graph.vertices.iter().enumerate() {
        let name = graph.vertex_names(rule, v).join(", ");
        let _ = writeln!(out, "  v{v} [label=\"{}\"];", dot_escape(&name));
    }
    for e in &graph.edges {
        let _ = writeln!(out, "  v{} -> v{} [label=\"{}\"];", e.from, e.to, e.weight);
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    const FIB: &str = r#"{"rank": 2, "labels": ["1", "τ"], "dual": [0, 1],
        "fusion": [[0,0,0,1],[0,1,1,1],[1,0,1,1],[1,1,0,1],[1,1,1,1]]}"#;

    #[test]
    fn parses_sparse_records() {
        let r = parse_rule(FIB).unwrap();
        assert_eq!(r.rank(), 2);
        assert_eq!(r.n(1, 1, 1), 1);
        assert_eq!(r.label(1), "τ");
        assert!(r.validate().valid);
    }

    #[test]
    fn roundtrip_is_exact() {
        let r = parse_rule(FIB).unwrap();
        let text = write_rule(&r);
        assert_eq!(parse_rule(&text).unwrap(), r);
        assert_eq!(write_rule(&parse_rule(&text).unwrap()), text);
    }

    #[test]
    fn labels_are_optional() {
        let r = parse_rule(r#"{"rank":1,"dual":[0],"fusion":[[0,0,0,1]]}"#).unwrap();
        assert_eq!(r.labels(), &["1".to_string()]);
    }

    #[test]
    fn rejects_duplicates_and_bad_values() {
        let dup = r#"{"rank":1,"dual":[0],"fusion":[[0,0,0,1],[0,0,0,1]]}"#;
        assert!(matches!(parse_rule(dup), Err(Error::Structural(m)) if m.contains("duplicate")));
        let zero = r#"{"rank":1,"dual":[0],"fusion":[[0,0,0,0]]}"#;
        assert!(matches!(parse_rule(zero), Err(Error::Structural(_))));
        let range = r#"{"rank":1,"dual":[0],"fusion":[[0,0,3,1]]}"#;
        assert!(matches!(parse_rule(range), Err(Error::Structural(_))));
        let neg = r#"{"rank":-1,"dual":[],"fusion":[]}"#;
        assert!(matches!(parse_rule(neg), Err(Error::Structural(_))));
        assert!(matches!(parse_rule("{"), Err(Error::Parse(_))));
        assert!(matches!(
            parse_rule(r#"{"rank":1,"dual":[0],"fusion":[],"extra":1}"#),
            Err(Error::Parse(_))
        ));
    }

    #[test]
    fn group_roundtrip() {
        let g = FiniteGroup::quaternion();
        let parsed = parse_group(&write_group(&g)).unwrap();
        assert_eq!(parsed.table(), g.table());
        assert_eq!(parsed.name(), "Q8");
        assert!(parse_group(r#"{"order":2,"table":[0,1,1,1]}"#).is_err());
    }

    #[test]
    fn dot_for_trivial_rule() {
        let dot = adjoint_dot(&FusionRule::trivial());
        assert_eq!(dot.matches("[label=").count(), 1);
        assert!(!dot.contains("->"));
    }
}
