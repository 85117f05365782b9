//! Forcing numbers, the anti-forcing number and 1-resonance.
//!
//! A set `S` of a perfect matching `M` forces `M` iff `G - V(S)` has `M - S`
//! as its only perfect matching, equivalently iff every `M`-alternating
//! cycle contains an edge of `S`. The searches below use the second view to
//! prune and the first one to accept.

use serde::{Deserialize, Serialize};

use crate::error::SearchError;
use crate::matching::{count_avoiding, matchings_avoiding, Adjacency, Matching};
use crate::plane::{edge, Edge, PlaneGraph};

/// Outcome of a forcing-type search.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ForcingResult {
    pub value: usize,
    /// Edges of the optimal set, sorted.
    pub witness: Vec<Edge>,
    /// The perfect matching the witness forces (or leaves unique).
    pub matching: Matching,
    /// Number of definitional uniqueness checks performed.
    pub certificate: usize,
}

/// Default vertex budget for the exhaustive searches.
pub const DEFAULT_BUDGET: usize = 120;

fn check_budget(g: &PlaneGraph, budget: usize) -> Result<(), SearchError> {
    if g.order() > budget {
        Err(SearchError::Budget { order: g.order(), budget })
    } else {
        Ok(())
    }
}

fn deleted_vertices(n: usize, s: &[Edge]) -> Vec<bool> {
    let mut d = vec![false; n];
    for &(u, v) in s {
        d[u] = true;
        d[v] = true;
    }
    d
}

/// Definitional test: `s ⊆ m` and `G - V(s)` has a unique perfect matching.
pub fn is_forcing_set(g: &PlaneGraph, m: &Matching, s: &[Edge]) -> Result<bool, SearchError> {
    for &e in s {
        if !m.contains(e) {
            return Err(SearchError::NotSubset(format!("{e:?}")));
        }
    }
    let adj = Adjacency::from_plane(g);
    Ok(count_avoiding(&adj, &deleted_vertices(g.order(), s), 2) == 1)
}

/// Splits a symmetric difference of two perfect matchings into cycles,
/// returning for each cycle the indices of its edges in `m`.
fn alternating_cycles(m: &[Edge], other: &[Edge], n: usize) -> Vec<Vec<usize>> {
    let in_m: std::collections::HashMap<Edge, usize> =
        m.iter().enumerate().map(|(i, &e)| (e, i)).collect();
    let other_set: std::collections::HashSet<Edge> = other.iter().copied().collect();
    let mut mate_other = vec![usize::MAX; n];
    for &(u, v) in other {
        mate_other[u] = v;
        mate_other[v] = u;
    }
    let mut mate_m = vec![usize::MAX; n];
    for &(u, v) in m {
        mate_m[u] = v;
        mate_m[v] = u;
    }
    let mut seen = vec![false; n];
    let mut cycles = Vec::new();
    for &(u, v) in m {
        if other_set.contains(&(u, v)) || seen[u] {
            continue;
        }
        let mut cyc = Vec::new();
        let mut x = u;
        loop {
            seen[x] = true;
            let y = mate_m[x];
            seen[y] = true;
            cyc.push(in_m[&edge(x, y)]);
            x = mate_other[y];
            if x == u {
                break;
            }
        }
        cyc.sort_unstable();
        cycles.push(cyc);
    }
    cycles
}

/// Alternating faces of `g` with respect to `m`, as `m`-edge index lists.
fn alternating_faces(g: &PlaneGraph, m: &[Edge]) -> Vec<Vec<usize>> {
    let idx: std::collections::HashMap<Edge, usize> =
        m.iter().enumerate().map(|(i, &e)| (e, i)).collect();
    let mut out = Vec::new();
    for f in g.faces() {
        if f.len() % 2 == 1 {
            continue;
        }
        let es: Vec<Edge> = f.darts.iter().map(|&(a, b)| edge(a, b)).collect();
        for parity in 0..2 {
            if es.iter().enumerate().all(|(i, e)| idx.contains_key(e) == (i % 2 == parity)) {
                let mut c: Vec<usize> = es.iter().filter_map(|e| idx.get(e).copied()).collect();
                c.sort_unstable();
                out.push(c);
            }
        }
    }
    out
}

struct HittingSearch<'a> {
    adj: &'a Adjacency,
    m: &'a [Edge],
    cycles: Vec<Vec<usize>>,
    chosen: Vec<usize>,
    checks: usize,
}

impl HittingSearch<'_> {
    fn search(&mut self, budget: usize) -> bool {
        loop {
            let unhit = self
                .cycles
                .iter()
                .position(|c| !c.iter().any(|i| self.chosen.contains(i)));
            match unhit {
                Some(ci) => {
                    if budget == 0 {
                        return false;
                    }
                    let cyc = self.cycles[ci].clone();
                    for i in cyc {
                        self.chosen.push(i);
                        if self.search(budget - 1) {
                            return true;
                        }
                        self.chosen.pop();
                    }
                    return false;
                }
                None => {
                    self.checks += 1;
                    let s: Vec<Edge> = self.chosen.iter().map(|&i| self.m[i]).collect();
                    let del = deleted_vertices(self.adj.order(), &s);
                    let ms = matchings_avoiding(self.adj, &del, 2);
                    if ms.len() <= 1 {
                        return true;
                    }
                    let rest: Vec<Edge> =
                        self.m.iter().copied().filter(|e| !s.contains(e)).collect();
                    let other = if ms[0] == rest { &ms[1] } else { &ms[0] };
                    let mut full = other.clone();
                    full.extend_from_slice(&s);
                    for c in alternating_cycles(self.m, &full, self.adj.order()) {
                        if !self.cycles.contains(&c) {
                            self.cycles.push(c);
                        }
                    }
                }
            }
        }
    }
}

/// Forcing number `f(G, M)` with a minimum forcing set.
pub fn forcing_number_of(g: &PlaneGraph, m: &Matching) -> ForcingResult {
    assert!(m.is_perfect(g.order()), "matching must be perfect");
    let adj = Adjacency::from_plane(g);
    let medges = m.edges();
    let mut hs = HittingSearch {
        adj: &adj,
        m: medges,
        cycles: alternating_faces(g, medges),
        chosen: Vec::new(),
        checks: 0,
    };
    for size in 0..=medges.len() {
        hs.chosen.clear();
        if hs.search(size) {
            let mut witness: Vec<Edge> = hs.chosen.iter().map(|&i| medges[i]).collect();
            witness.sort_unstable();
            return ForcingResult {
                value: witness.len(),
                witness,
                matching: m.clone(),
                certificate: hs.checks,
            };
        }
    }
    unreachable!("the whole matching always forces itself")
}

/// Calls `visit` on every set of `size` pairwise independent edges in
/// lexicographic order until it returns `true`.
fn independent_sets(
    edges: &[Edge],
    size: usize,
    n: usize,
    visit: &mut dyn FnMut(&[Edge]) -> bool,
) -> bool {
    fn rec(
        edges: &[Edge],
        start: usize,
        left: usize,
        used: &mut Vec<bool>,
        cur: &mut Vec<Edge>,
        visit: &mut dyn FnMut(&[Edge]) -> bool,
    ) -> bool {
        if left == 0 {
            return visit(cur);
        }
        for i in start..edges.len() {
            if edges.len() - i < left {
                break;
            }
            let (u, v) = edges[i];
            if used[u] || used[v] {
                continue;
            }
            used[u] = true;
            used[v] = true;
            cur.push(edges[i]);
            let stop = rec(edges, i + 1, left - 1, used, cur, visit);
            cur.pop();
            used[u] = false;
            used[v] = false;
            if stop {
                return true;
            }
        }
        false
    }
    rec(edges, 0, size, &mut vec![false; n], &mut Vec::new(), visit)
}

/// Minimum forcing number `f(G)`: the least `|S|` over independent edge
/// sets `S` such that `G - V(S)` has exactly one perfect matching. The
/// witness is the lexicographically first such set.
pub fn min_forcing_number(g: &PlaneGraph, budget: usize) -> Result<ForcingResult, SearchError> {
    check_budget(g, budget)?;
    let n = g.order();
    let adj = Adjacency::from_plane(g);
    if count_avoiding(&adj, &vec![false; n], 1) == 0 {
        return Err(SearchError::NoPerfectMatching);
    }
    let edges = g.edges();
    let mut checks = 0;
    for size in 0..=n / 2 {
        let mut result = None;
        independent_sets(&edges, size, n, &mut |s| {
            checks += 1;
            let del = deleted_vertices(n, s);
            let ms = matchings_avoiding(&adj, &del, 2);
            if ms.len() == 1 {
                let mut all = ms[0].clone();
                all.extend_from_slice(s);
                result = Some((s.to_vec(), Matching::new(all)));
                true
            } else {
                false
            }
        });
        if let Some((witness, matching)) = result {
            return Ok(ForcingResult { value: size, witness, matching, certificate: checks });
        }
    }
    unreachable!("a perfect matching forces itself")
}

fn adjacency_bridges(adj: &[Vec<usize>]) -> bool {
    let n = adj.len();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut time = 0;
    for root in 0..n {
        if disc[root] != usize::MAX {
            continue;
        }
        let mut stack: Vec<(usize, usize, usize)> = vec![(root, usize::MAX, 0)];
        disc[root] = time;
        low[root] = time;
        time += 1;
        while let Some(&mut (v, parent, ref mut idx)) = stack.last_mut() {
            if *idx < adj[v].len() {
                let w = adj[v][*idx];
                *idx += 1;
                if w == parent {
                    continue;
                }
                if disc[w] == usize::MAX {
                    disc[w] = time;
                    low[w] = time;
                    time += 1;
                    stack.push((w, v, 0));
                } else {
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                stack.pop();
                if let Some(&(p, _, _)) = stack.last() {
                    low[p] = low[p].min(low[v]);
                    if low[v] > disc[p] {
                        return true;
                    }
                }
            }
        }
    }
    false
}

/// Smallest edge set of size at most `max_size` whose deletion leaves a
/// unique perfect matching, searched by increasing size. Candidates without
/// a bridge are skipped: a graph with a unique perfect matching always has
/// a bridge in that matching.
pub fn anti_forcing_search(
    g: &PlaneGraph,
    max_size: usize,
    budget: usize,
) -> Result<Option<ForcingResult>, SearchError> {
    check_budget(g, budget)?;
    let n = g.order();
    let adj = Adjacency::from_plane(g);
    if count_avoiding(&adj, &vec![false; n], 1) == 0 {
        return Err(SearchError::NoPerfectMatching);
    }
    let edges = g.edges();
    let none = vec![false; n];
    let mut checks = 0usize;
    for size in 0..=max_size.min(edges.len()) {
        let mut found: Option<(Vec<Edge>, Vec<Edge>)> = None;
        let mut cur: Vec<Edge> = Vec::new();
        let mut stack_adj = adj.clone();
        fn rec(
            edges: &[Edge],
            start: usize,
            left: usize,
            a: &mut Adjacency,
            cur: &mut Vec<Edge>,
            none: &[bool],
            checks: &mut usize,
            found: &mut Option<(Vec<Edge>, Vec<Edge>)>,
        ) -> bool {
            if left == 0 {
                if a.adj.iter().any(|x| x.is_empty()) {
                    return false;
                }
                if !cur.is_empty() && !adjacency_bridges(&a.adj) {
                    return false;
                }
                *checks += 1;
                let ms = matchings_avoiding(a, none, 2);
                if ms.len() == 1 {
                    *found = Some((cur.clone(), ms[0].clone()));
                    return true;
                }
                return false;
            }
            for i in start..edges.len() {
                if edges.len() - i < left {
                    break;
                }
                let (u, v) = edges[i];
                a.adj[u].retain(|&x| x != v);
                a.adj[v].retain(|&x| x != u);
                cur.push(edges[i]);
                let stop = rec(edges, i + 1, left - 1, a, cur, none, checks, found);
                cur.pop();
                a.adj[u].push(v);
                a.adj[u].sort_unstable();
                a.adj[v].push(u);
                a.adj[v].sort_unstable();
                if stop {
                    return true;
                }
            }
            false
        }
        rec(&edges, 0, size, &mut stack_adj, &mut cur, &none, &mut checks, &mut found);
        if let Some((witness, m)) = found {
            return Ok(Some(ForcingResult {
                value: size,
                witness,
                matching: Matching::new(m),
                certificate: checks,
            }));
        }
    }
    Ok(None)
}

/// Anti-forcing number `af(G)`.
pub fn anti_forcing_number(g: &PlaneGraph, budget: usize) -> Result<ForcingResult, SearchError> {
    Ok(anti_forcing_search(g, usize::MAX, budget)?.expect("deleting all non-matching edges works"))
}

/// Every hexagon can be removed leaving a graph with a perfect matching.
pub fn is_1_resonant(g: &PlaneGraph) -> bool {
    let adj = Adjacency::from_plane(g);
    g.faces().iter().filter(|f| f.len() == 6).all(|f| {
        let mut del = vec![false; g.order()];
        for v in f.vertices() {
            del[v] = true;
        }
        count_avoiding(&adj, &del, 1) == 1
    })
}

/// One row of the forcing table. Searches that were not requested are
/// left out.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ForcingRecord {
    pub graph_id: String,
    pub pm_count: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub f: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub f_witness: Option<Vec<Edge>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub af: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub af_witness: Option<Vec<Edge>>,
    pub resonant: bool,
}

pub fn forcing_record(id: &str, g: &PlaneGraph, forcing: bool, anti: bool, budget: usize) -> Result<ForcingRecord, SearchError> {
    let f = if forcing { Some(min_forcing_number(g, budget)?) } else { None };
    let af = if anti { Some(anti_forcing_number(g, budget)?) } else { None };
    Ok(ForcingRecord {
        graph_id: id.to_string(),
        pm_count: crate::matching::count_perfect_matchings(g),
        f: f.as_ref().map(|r| r.value),
        f_witness: f.map(|r| r.witness),
        af: af.as_ref().map(|r| r.value),
        af_witness: af.map(|r| r.witness),
        resonant: is_1_resonant(g),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matching::enumerate_perfect_matchings;
    use crate::plane::named;

    /// Raw subset enumeration over the matching.
    fn brute_forcing(g: &PlaneGraph, m: &Matching) -> usize {
        let es = m.edges();
        for size in 0..=es.len() {
            let mut idx: Vec<usize> = (0..size).collect();
            loop {
                let s: Vec<Edge> = idx.iter().map(|&i| es[i]).collect();
                if is_forcing_set(g, m, &s).unwrap() {
                    return size;
                }
                // next combination
                let mut i = size;
                loop {
                    if i == 0 {
                        break;
                    }
                    i -= 1;
                    if idx[i] != i + es.len() - size {
                        idx[i] += 1;
                        for j in i + 1..size {
                            idx[j] = idx[j - 1] + 1;
                        }
                        break;
                    }
                    if i == 0 {
                        idx.clear();
                    }
                }
                if idx.len() != size || size == 0 {
                    break;
                }
            }
        }
        unreachable!()
    }

    #[test]
    fn trivial_graphs() {
        let k2 = PlaneGraph::new(vec![vec![1], vec![0]]).unwrap();
        let m = Matching::new(vec![(0, 1)]);
        assert_eq!(forcing_number_of(&k2, &m).value, 0);
        assert_eq!(anti_forcing_number(&k2, 10).unwrap().value, 0);
        let c6 = named::cycle(6);
        for m in enumerate_perfect_matchings(&c6, None) {
            assert_eq!(forcing_number_of(&c6, &m).value, 1);
            assert!(is_forcing_set(&c6, &m, m.edges()).unwrap());
            assert!(!is_forcing_set(&c6, &m, &[]).unwrap());
        }
    }

    #[test]
    fn subset_oracle_on_dodecahedron() {
        let g = named::dodecahedron();
        let pms = enumerate_perfect_matchings(&g, None);
        for m in pms.iter().take(12) {
            let r = forcing_number_of(&g, m);
            assert_eq!(r.value, brute_forcing(&g, m));
            assert!(is_forcing_set(&g, m, &r.witness).unwrap());
        }
    }

    #[test]
    fn f24_values() {
        let g = named::f24();
        let f = min_forcing_number(&g, 60).unwrap();
        assert_eq!(f.value, 2);
        assert!(is_forcing_set(&g, &f.matching, &f.witness).unwrap());
        let af = anti_forcing_number(&g, 60).unwrap();
        assert_eq!(af.value, 4);
        assert!(is_1_resonant(&g));
    }

    #[test]
    fn not_subset_is_error() {
        let c6 = named::cycle(6);
        let m = &enumerate_perfect_matchings(&c6, None)[0];
        let other: Edge = c6.edges().into_iter().find(|e| !m.contains(*e)).unwrap();
        assert!(is_forcing_set(&c6, m, &[other]).is_err());
    }
}
