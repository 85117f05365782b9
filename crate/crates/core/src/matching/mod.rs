//! Perfect matchings of small graphs.
//!
//! Matchings are enumerated by branching on the lowest unmatched vertex,
//! with unit propagation (a vertex with a single available neighbour is
//! matched immediately). The order of results is deterministic.

pub mod forcing;

use serde::{Deserialize, Serialize};

use crate::plane::{edge, Edge, PlaneGraph};

pub use forcing::{
    anti_forcing_number, anti_forcing_search, forcing_number_of, forcing_record, is_1_resonant, is_forcing_set,
    min_forcing_number, ForcingRecord, ForcingResult, DEFAULT_BUDGET,
};

/// A set of independent edges, kept sorted.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Matching {
    edges: Vec<Edge>,
}

impl Matching {
    /// Builds a matching; panics if two edges share a vertex.
    pub fn new(mut edges: Vec<Edge>) -> Self {
        for e in edges.iter_mut() {
            *e = edge(e.0, e.1);
        }
        edges.sort_unstable();
        edges.dedup();
        let mut seen = std::collections::HashSet::new();
        for &(u, v) in &edges {
            assert!(seen.insert(u) && seen.insert(v), "edges of a matching must be independent");
        }
        Matching { edges }
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn contains(&self, e: Edge) -> bool {
        self.edges.binary_search(&edge(e.0, e.1)).is_ok()
    }

    /// Covers every vertex of a graph of order `n`.
    pub fn is_perfect(&self, n: usize) -> bool {
        2 * self.edges.len() == n
    }

    /// `mate[v]`, `usize::MAX` for uncovered vertices.
    pub fn mates(&self, n: usize) -> Vec<usize> {
        let mut m = vec![usize::MAX; n];
        for &(u, v) in &self.edges {
            m[u] = v;
            m[v] = u;
        }
        m
    }
}

/// Plain adjacency used by the matching kernels.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Adjacency {
    pub adj: Vec<Vec<usize>>,
}

impl Adjacency {
    pub fn from_plane(g: &PlaneGraph) -> Self {
        let mut adj: Vec<Vec<usize>> = g.rotations().to_vec();
        for a in adj.iter_mut() {
            a.sort_unstable();
        }
        Adjacency { adj }
    }

    pub fn from_edges(n: usize, edges: &[Edge]) -> Self {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for a in adj.iter_mut() {
            a.sort_unstable();
            a.dedup();
        }
        Adjacency { adj }
    }

    pub fn order(&self) -> usize {
        self.adj.len()
    }

    pub fn edges(&self) -> Vec<Edge> {
        let mut out = Vec::new();
        for (u, ns) in self.adj.iter().enumerate() {
            for &v in ns {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn without_edges(&self, removed: &[Edge]) -> Adjacency {
        let mut adj = self.adj.clone();
        for &(u, v) in removed {
            adj[u].retain(|&x| x != v);
            adj[v].retain(|&x| x != u);
        }
        Adjacency { adj }
    }
}

/// Search state shared by the enumerators: `blocked[v]` marks vertices that
/// are already matched or deleted.
struct Search<'a> {
    adj: &'a [Vec<usize>],
    blocked: Vec<bool>,
    stack: Vec<Edge>,
    cap: usize,
    found: Vec<Vec<Edge>>,
    count: usize,
    keep: bool,
}

impl<'a> Search<'a> {
    fn free_degree(&self, v: usize) -> (usize, usize) {
        let mut d = 0;
        let mut last = usize::MAX;
        for &w in &self.adj[v] {
            if !self.blocked[w] {
                d += 1;
                last = w;
            }
        }
        (d, last)
    }

    fn run(&mut self) {
        if self.count >= self.cap {
            return;
        }
        let mark = self.stack.len();
        let mut newly: Vec<usize> = Vec::new();
        // unit propagation
        let mut ok = true;
        loop {
            let mut changed = false;
            for v in 0..self.adj.len() {
                if self.blocked[v] {
                    continue;
                }
                let (d, w) = self.free_degree(v);
                if d == 0 {
                    ok = false;
                    break;
                }
                if d == 1 {
                    self.blocked[v] = true;
                    self.blocked[w] = true;
                    newly.push(v);
                    newly.push(w);
                    self.stack.push(edge(v, w));
                    changed = true;
                }
            }
            if !ok || !changed {
                break;
            }
        }
        if ok {
            match (0..self.adj.len()).find(|&v| !self.blocked[v]) {
                None => {
                    self.count += 1;
                    if self.keep {
                        let mut m = self.stack.clone();
                        m.sort_unstable();
                        self.found.push(m);
                    }
                }
                Some(v) => {
                    let nbrs: Vec<usize> =
                        self.adj[v].iter().copied().filter(|&w| !self.blocked[w]).collect();
                    for w in nbrs {
                        self.blocked[v] = true;
                        self.blocked[w] = true;
                        self.stack.push(edge(v, w));
                        self.run();
                        self.stack.pop();
                        self.blocked[v] = false;
                        self.blocked[w] = false;
                        if self.count >= self.cap {
                            break;
                        }
                    }
                }
            }
        }
        for v in newly {
            self.blocked[v] = false;
        }
        self.stack.truncate(mark);
    }
}

/// Perfect matchings of `adj` avoiding the `deleted` vertices, at most `cap`.
pub fn matchings_avoiding(adj: &Adjacency, deleted: &[bool], cap: usize) -> Vec<Vec<Edge>> {
    let mut s = Search {
        adj: &adj.adj,
        blocked: deleted.to_vec(),
        stack: Vec::new(),
        cap,
        found: Vec::new(),
        count: 0,
        keep: true,
    };
    let free = deleted.iter().filter(|&&b| !b).count();
    if free % 2 == 1 {
        return Vec::new();
    }
    s.run();
    s.found
}

/// Number of perfect matchings avoiding `deleted`, counting stops at `cap`.
pub fn count_avoiding(adj: &Adjacency, deleted: &[bool], cap: usize) -> usize {
    let free = deleted.iter().filter(|&&b| !b).count();
    if free % 2 == 1 {
        return 0;
    }
    let mut s = Search {
        adj: &adj.adj,
        blocked: deleted.to_vec(),
        stack: Vec::new(),
        cap,
        found: Vec::new(),
        count: 0,
        keep: false,
    };
    s.run();
    s.count
}

/// All perfect matchings (or the first `cap`), in deterministic order.
/// A graph of odd order has none; the reason is logged.
pub fn enumerate_perfect_matchings(g: &PlaneGraph, cap: Option<usize>) -> Vec<Matching> {
    if g.order() % 2 == 1 {
        log::info!("odd order {}: no perfect matching", g.order());
        return Vec::new();
    }
    let adj = Adjacency::from_plane(g);
    matchings_avoiding(&adj, &vec![false; g.order()], cap.unwrap_or(usize::MAX))
        .into_iter()
        .map(|edges| Matching { edges })
        .collect()
}

/// Exact number of perfect matchings.
pub fn count_perfect_matchings(g: &PlaneGraph) -> usize {
    count_avoiding(&Adjacency::from_plane(g), &vec![false; g.order()], usize::MAX)
}

/// Exactly one perfect matching exists (enumeration capped at two).
pub fn has_unique_pm(g: &PlaneGraph) -> bool {
    count_avoiding(&Adjacency::from_plane(g), &vec![false; g.order()], 2) == 1
}

/// The unique perfect matching of `adj` minus `deleted`, if it is unique.
pub fn unique_pm_avoiding(adj: &Adjacency, deleted: &[bool]) -> Option<Vec<Edge>> {
    let mut ms = matchings_avoiding(adj, deleted, 2);
    if ms.len() == 1 {
        ms.pop()
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::plane::named;

    /// Independent oracle: recursive count without propagation.
    fn brute(adj: &[Vec<usize>], used: &mut Vec<bool>) -> usize {
        let Some(v) = (0..adj.len()).find(|&v| !used[v]) else {
            return 1;
        };
        used[v] = true;
        let mut total = 0;
        for &w in &adj[v] {
            if !used[w] {
                used[w] = true;
                total += brute(adj, used);
                used[w] = false;
            }
        }
        used[v] = false;
        total
    }

    #[test]
    fn counts_agree_with_oracle() {
        for g in [named::cycle(6), named::dodecahedron(), named::f24(), named::cube()] {
            let adj = Adjacency::from_plane(&g);
            let expect = brute(&adj.adj, &mut vec![false; g.order()]);
            assert_eq!(count_perfect_matchings(&g), expect);
            let all = enumerate_perfect_matchings(&g, None);
            assert_eq!(all.len(), expect);
            let mut dedup = all.clone();
            dedup.sort();
            dedup.dedup();
            assert_eq!(dedup.len(), expect);
            assert!(all.iter().all(|m| m.is_perfect(g.order())));
        }
    }

    #[test]
    fn small_cases() {
        assert_eq!(count_perfect_matchings(&named::cycle(6)), 2);
        let k2 = PlaneGraph::new(vec![vec![1], vec![0]]).unwrap();
        assert!(has_unique_pm(&k2));
        assert!(!has_unique_pm(&named::cycle(6)));
        assert!(enumerate_perfect_matchings(&named::cycle(5), None).is_empty());
        assert_eq!(enumerate_perfect_matchings(&named::dodecahedron(), Some(3)).len(), 3);
    }
}
