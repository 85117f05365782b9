//! Closure of seed arrays under O1 to O7, pruned to nodes that reach [].

use std::collections::{BTreeMap, BTreeSet};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::ops::{all_applications, OpApplication, Partner};
use crate::error::SearchError;
use crate::patch::MinDistanceArray;

/// Closing partners used by the terminal operations.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct TerminalCatalogs {
    pub j2: Partner,
    pub t10: Vec<Partner>,
    pub t12: Vec<Partner>,
}

/// How arcs between the same two nodes are counted.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum ArcReading {
    /// One arc per ordered node pair for O1, O2, O6; one arc per merge way
    /// for terminal operations.
    Primary,
    /// One arc per application.
    EveryApplication,
}

#[derive(Clone, Debug)]
pub struct DigraphConfig {
    pub reading: ArcReading,
    /// Abort when the closure exceeds this many nodes.
    pub max_nodes: usize,
}

impl Default for DigraphConfig {
    fn default() -> Self {
        DigraphConfig { reading: ArcReading::Primary, max_nodes: 2_000_000 }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Arc {
    pub from: usize,
    pub to: usize,
    pub app: OpApplication,
}

/// Nodes are sorted; node 0 is always `[]` when present.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConstructionDigraph {
    pub nodes: Vec<MinDistanceArray>,
    pub arcs: Vec<Arc>,
    /// Seeds that survived pruning, in input order.
    pub valid_seeds: Vec<MinDistanceArray>,
}

impl ConstructionDigraph {
    pub fn index_of(&self, a: &MinDistanceArray) -> Option<usize> {
        self.nodes.binary_search(a).ok()
    }

    /// Nodes with an arc to themselves.
    pub fn loop_nodes(&self) -> Vec<&MinDistanceArray> {
        let s: BTreeSet<usize> = self.arcs.iter().filter(|a| a.from == a.to).map(|a| a.from).collect();
        s.into_iter().map(|i| &self.nodes[i]).collect()
    }

    pub fn out_arcs(&self, v: usize) -> impl Iterator<Item = &Arc> {
        // arcs are sorted by source
        let lo = self.arcs.partition_point(|a| a.from < v);
        self.arcs[lo..].iter().take_while(move |a| a.from == v)
    }

    /// Number of arcs from `a` to `b`.
    pub fn bundle(&self, a: &MinDistanceArray, b: &MinDistanceArray) -> usize {
        match (self.index_of(a), self.index_of(b)) {
            (Some(x), Some(y)) => self.out_arcs(x).filter(|e| e.to == y).count(),
            _ => 0,
        }
    }

    /// Shortest number of arcs from every node to `[]`.
    pub fn distance_to_empty(&self) -> Vec<usize> {
        let n = self.nodes.len();
        let mut rev: Vec<Vec<usize>> = vec![Vec::new(); n];
        for a in &self.arcs {
            rev[a.to].push(a.from);
        }
        let mut dist = vec![usize::MAX; n];
        let mut queue = std::collections::VecDeque::new();
        if let Some(e) = self.index_of(&MinDistanceArray::empty()) {
            dist[e] = 0;
            queue.push_back(e);
        }
        while let Some(v) = queue.pop_front() {
            for &u in &rev[v] {
                if dist[u] == usize::MAX {
                    dist[u] = dist[v] + 1;
                    queue.push_back(u);
                }
            }
        }
        dist
    }

    pub fn summary(&self) -> DigraphSummary {
        DigraphSummary {
            nodes: self.nodes.len(),
            arcs: self.arcs.len(),
            loops: self.loop_nodes().iter().map(|a| a.to_string()).collect(),
            seeds_valid: self.valid_seeds.len(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DigraphSummary {
    pub nodes: usize,
    pub arcs: usize,
    pub loops: Vec<String>,
    pub seeds_valid: usize,
}

fn arcs_of(a: &MinDistanceArray, cats: &TerminalCatalogs, reading: ArcReading) -> Vec<OpApplication> {
    let mut apps = all_applications(a, &cats.j2, &cats.t10, &cats.t12);
    apps.sort();
    if reading == ArcReading::Primary {
        let mut seen = BTreeSet::new();
        apps.retain(|app| app.partner.is_some() || seen.insert(app.result.clone()));
    }
    apps
}

/// Builds the digraph from the seeds: forward closure, then removal of
/// every node without a directed path to `[]`.
pub fn generate_digraph(
    seeds: &[MinDistanceArray],
    cats: &TerminalCatalogs,
    cfg: &DigraphConfig,
) -> Result<ConstructionDigraph, SearchError> {
    let mut out: BTreeMap<MinDistanceArray, Vec<OpApplication>> = BTreeMap::new();
    let mut frontier: Vec<MinDistanceArray> = seeds.to_vec();
    frontier.sort();
    frontier.dedup();
    while !frontier.is_empty() {
        let expanded: Vec<(MinDistanceArray, Vec<OpApplication>)> =
            frontier.par_iter().map(|a| (a.clone(), arcs_of(a, cats, cfg.reading))).collect();
        let mut next = BTreeSet::new();
        for (a, apps) in expanded {
            for app in &apps {
                if !out.contains_key(&app.result) {
                    next.insert(app.result.clone());
                }
            }
            out.insert(a, apps);
        }
        next.retain(|a| !out.contains_key(a));
        if out.len() + next.len() > cfg.max_nodes {
            return Err(SearchError::Budget { order: out.len() + next.len(), budget: cfg.max_nodes });
        }
        frontier = next.into_iter().collect();
    }
    // backward reachability from []
    let all: Vec<MinDistanceArray> = out.keys().cloned().collect();
    let id = |a: &MinDistanceArray| all.binary_search(a).expect("closed");
    let mut rev: Vec<Vec<usize>> = vec![Vec::new(); all.len()];
    for (a, apps) in &out {
        for app in apps {
            rev[id(&app.result)].push(id(a));
        }
    }
    let mut alive = vec![false; all.len()];
    let mut stack = Vec::new();
    if let Ok(e) = all.binary_search(&MinDistanceArray::empty()) {
        alive[e] = true;
        stack.push(e);
    }
    while let Some(v) = stack.pop() {
        for &u in &rev[v] {
            if !alive[u] {
                alive[u] = true;
                stack.push(u);
            }
        }
    }
    let nodes: Vec<MinDistanceArray> = all.iter().zip(&alive).filter(|(_, &k)| k).map(|(a, _)| a.clone()).collect();
    let nid = |a: &MinDistanceArray| nodes.binary_search(a).ok();
    let mut arcs = Vec::new();
    for (a, apps) in &out {
        let Some(from) = nid(a) else { continue };
        for app in apps {
            if let Some(to) = nid(&app.result) {
                arcs.push(Arc { from, to, app: app.clone() });
            }
        }
    }
    let mut valid_seeds = Vec::new();
    for s in seeds {
        if nid(s).is_some() && !valid_seeds.contains(s) {
            valid_seeds.push(s.clone());
        }
    }
    log::info!("digraph: {} nodes before pruning, {} after, {} arcs", all.len(), nodes.len(), arcs.len());
    Ok(ConstructionDigraph { nodes, arcs, valid_seeds })
}
