//! Digraph files: JSON lines of arcs, DOT with multi-edges, and a summary
//! manifest.

use std::fmt::Write as _;
use std::fs;
use std::io;
use std::path::Path;

use serde::{Deserialize, Serialize};

use super::construct::{Arc, ArcReading, ConstructionDigraph, DigraphSummary};
use super::ops::{all_applications, OpApplication};
use super::TerminalCatalogs;
use crate::patch::MinDistanceArray;

/// One arc as a JSON line.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArcRecord {
    pub from: String,
    pub to: String,
    pub op: u8,
    pub partner: Option<String>,
    /// Position in the source representative, or the reading start of a
    /// terminal merge.
    pub offset: usize,
    pub flip: bool,
}

pub fn arc_records(d: &ConstructionDigraph) -> Vec<ArcRecord> {
    d.arcs
        .iter()
        .map(|a| ArcRecord {
            from: d.nodes[a.from].to_string(),
            to: d.nodes[a.to].to_string(),
            op: a.app.op,
            partner: a.app.partner.clone(),
            offset: a.app.position,
            flip: a.app.flip,
        })
        .collect()
}

pub fn to_json_lines(d: &ConstructionDigraph) -> String {
    let mut out = String::new();
    for r in arc_records(d) {
        out.push_str(&serde_json::to_string(&r).expect("serializable"));
        out.push('\n');
    }
    out
}

/// DOT export; parallel arcs are kept as separate edges.
pub fn to_dot(d: &ConstructionDigraph) -> String {
    let mut out = String::from("digraph D {\n");
    for (i, n) in d.nodes.iter().enumerate() {
        let _ = writeln!(out, "  n{i} [label=\"{n}\"];");
    }
    for a in &d.arcs {
        let _ = writeln!(out, "  n{} -> n{} [label=\"O{}\"];", a.from, a.to, a.app.op);
    }
    out.push_str("}\n");
    out
}

/// Reads arcs back, checking that every arc is an application of its
/// operation at the stated position of the source node.
pub fn from_json_lines(text: &str, cats: &TerminalCatalogs) -> io::Result<ConstructionDigraph> {
    let bad = |m: String| io::Error::new(io::ErrorKind::InvalidData, m);
    let mut recs = Vec::new();
    for (n, line) in text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty()) {
        let r: ArcRecord = serde_json::from_str(line).map_err(|e| bad(format!("line {}: {e}", n + 1)))?;
        recs.push(r);
    }
    let parse = |s: &str| s.parse::<MinDistanceArray>().map_err(|e| bad(e.to_string()));
    let mut nodes: Vec<MinDistanceArray> = Vec::new();
    for r in &recs {
        nodes.push(parse(&r.from)?);
        nodes.push(parse(&r.to)?);
    }
    nodes.sort();
    nodes.dedup();
    let id = |a: &MinDistanceArray| nodes.binary_search(a).expect("collected");
    let mut arcs = Vec::new();
    for r in &recs {
        let from = parse(&r.from)?;
        let to = parse(&r.to)?;
        let app = OpApplication { op: r.op, position: r.offset, partner: r.partner.clone(), flip: r.flip, result: to.clone() };
        if !all_applications(&from, &cats.j2, &cats.t10, &cats.t12).contains(&app) {
            return Err(bad(format!("arc {} -> {} by O{} fails its precondition", r.from, r.to, r.op)));
        }
        arcs.push(Arc { from: id(&from), to: id(&to), app });
    }
    arcs.sort_by(|a, b| (a.from, &a.app).cmp(&(b.from, &b.app)));
    Ok(ConstructionDigraph { nodes, arcs, valid_seeds: Vec::new() })
}

/// Summary manifest. The alternate reading is present when it was run.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DigraphManifest {
    pub reading: ArcReading,
    #[serde(flatten)]
    pub summary: DigraphSummary,
    pub expected_nodes: usize,
    pub expected_arcs: usize,
    pub invalid_seeds: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub alternate: Option<DigraphSummary>,
}

pub fn manifest(d: &ConstructionDigraph, seeds: &[MinDistanceArray], reading: ArcReading) -> DigraphManifest {
    let mut invalid: Vec<String> = seeds.iter().filter(|s| d.index_of(s).is_none()).map(|s| s.to_string()).collect();
    invalid.sort();
    invalid.dedup();
    DigraphManifest {
        reading,
        summary: d.summary(),
        expected_nodes: 7802,
        expected_arcs: 28379,
        invalid_seeds: invalid,
        alternate: None,
    }
}

/// Writes `digraph.jsonl`, `digraph.dot` and `digraph-manifest.json`.
pub fn write_digraph(dir: &Path, d: &ConstructionDigraph, m: &DigraphManifest) -> io::Result<()> {
    fs::create_dir_all(dir)?;
    fs::write(dir.join("digraph.jsonl"), to_json_lines(d))?;
    fs::write(dir.join("digraph.dot"), to_dot(d))?;
    fs::write(dir.join("digraph-manifest.json"), serde_json::to_string_pretty(m)? + "\n")?;
    Ok(())
}
