//! Minimal edge cuts of bounded size.
//!
//! In a connected plane graph the minimal edge cuts (bonds) are exactly the
//! edge sets of simple cycles of the dual graph, so cuts of size at most `k`
//! are found by enumerating short dual cycles.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::SearchError;
use crate::plane::{canonical_form, edge, named, Edge, PlaneGraph};

/// Largest cut size accepted by [`edge_cuts_up_to`].
pub const MAX_CUT: usize = 7;

/// Classification of a bond.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CutKind {
    /// All cut edges share an end vertex.
    pub trivial: bool,
    /// Both sides contain a cycle.
    pub cyclic: bool,
    /// Cyclic, and one side is a single cycle whose length is the cut size.
    pub trivial_cyclic: bool,
    /// One side is a single edge.
    pub isolates_edge: bool,
    /// Cyclic and not both sides contain exactly six pentagons.
    pub degenerate: bool,
}

/// A minimal edge cut with its two (connected) sides.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EdgeCut {
    pub edges: Vec<Edge>,
    pub side_a: Vec<usize>,
    pub side_b: Vec<usize>,
    pub kind: CutKind,
}

impl EdgeCut {
    pub fn size(&self) -> usize {
        self.edges.len()
    }

    pub fn side(&self, a: bool) -> &[usize] {
        if a {
            &self.side_a
        } else {
            &self.side_b
        }
    }
}

/// All bonds with at most `k` edges, sorted by (size, edges).
pub fn edge_cuts_up_to(g: &PlaneGraph, k: usize) -> Result<Vec<EdgeCut>, SearchError> {
    if k > MAX_CUT {
        return Err(SearchError::CutBound(k));
    }
    let (faces, face_of) = g.face_map();
    let nf = faces.len();
    // dual adjacency: (neighbour face, primal edge)
    let mut dual: Vec<Vec<(usize, Edge)>> = vec![Vec::new(); nf];
    for (u, v) in g.edges() {
        let f = face_of[&(u, v)];
        let h = face_of[&(v, u)];
        dual[f].push((h, (u, v)));
        if f != h {
            dual[h].push((f, (u, v)));
        }
    }
    let mut found: BTreeSet<Vec<Edge>> = BTreeSet::new();
    for s in 0..nf {
        let mut path_faces = vec![s];
        let mut path_edges: Vec<Edge> = Vec::new();
        dfs(s, s, k, &dual, &mut path_faces, &mut path_edges, &mut found);
    }
    let pentagons: Vec<Vec<usize>> = faces
        .iter()
        .filter(|f| f.len() == 5)
        .map(|f| f.vertices().collect())
        .collect();
    let mut cuts: Vec<EdgeCut> = found.into_iter().map(|es| make_cut(g, es, &pentagons)).collect();
    cuts.sort_by(|a, b| (a.edges.len(), &a.edges).cmp(&(b.edges.len(), &b.edges)));
    Ok(cuts)
}

fn dfs(
    s: usize,
    cur: usize,
    k: usize,
    dual: &[Vec<(usize, Edge)>],
    path_faces: &mut Vec<usize>,
    path_edges: &mut Vec<Edge>,
    found: &mut BTreeSet<Vec<Edge>>,
) {
    for &(nb, e) in &dual[cur] {
        if path_edges.contains(&e) {
            continue;
        }
        if nb == s {
            let mut es = path_edges.clone();
            es.push(e);
            es.sort_unstable();
            found.insert(es);
            continue;
        }
        if nb < s || path_faces.contains(&nb) || path_edges.len() + 1 >= k {
            continue;
        }
        path_faces.push(nb);
        path_edges.push(e);
        dfs(s, nb, k, dual, path_faces, path_edges, found);
        path_faces.pop();
        path_edges.pop();
    }
}

fn make_cut(g: &PlaneGraph, edges: Vec<Edge>, pentagons: &[Vec<usize>]) -> EdgeCut {
    let h = g.without_edges(&edges);
    let comps = h.components();
    debug_assert_eq!(comps.len(), 2, "dual cycle must give a bond");
    let side_a = comps[0].clone();
    let side_b = comps[1..].concat();
    let kind = classify(g, &edges, &side_a, &side_b, pentagons);
    EdgeCut { edges, side_a, side_b, kind }
}

fn induced_edge_count(g: &PlaneGraph, side: &[usize], inside: &[bool]) -> usize {
    side.iter()
        .map(|&v| g.rotation(v).iter().filter(|&&w| inside[w]).count())
        .sum::<usize>()
        / 2
}

fn classify(
    g: &PlaneGraph,
    edges: &[Edge],
    side_a: &[usize],
    side_b: &[usize],
    pentagons: &[Vec<usize>],
) -> CutKind {
    let n = g.order();
    let mut in_a = vec![false; n];
    for &v in side_a {
        in_a[v] = true;
    }
    let in_b: Vec<bool> = in_a.iter().map(|&x| !x).collect();
    let ea = induced_edge_count(g, side_a, &in_a);
    let eb = induced_edge_count(g, side_b, &in_b);
    // connected sides: a cycle exists iff edges >= vertices
    let cyc_a = ea >= side_a.len();
    let cyc_b = eb >= side_b.len();
    let cyclic = cyc_a && cyc_b;
    let k = edges.len();
    let is_cycle = |side: &[usize], e: usize, inside: &[bool]| {
        side.len() == k
            && e == k
            && side
                .iter()
                .all(|&v| g.rotation(v).iter().filter(|&&w| inside[w]).count() == 2)
    };
    let trivial_cyclic = cyclic && (is_cycle(side_a, ea, &in_a) || is_cycle(side_b, eb, &in_b));
    let trivial = side_a.len() == 1 || side_b.len() == 1 || {
        let first = edges[0];
        [first.0, first.1].iter().any(|&x| edges.iter().all(|&(u, v)| u == x || v == x))
    };
    let isolates_edge = (side_a.len() == 2 && ea == 1) || (side_b.len() == 2 && eb == 1);
    let count = |inside: &[bool]| pentagons.iter().filter(|p| p.iter().all(|&v| inside[v])).count();
    let degenerate = cyclic && !(count(&in_a) == 6 && count(&in_b) == 6);
    CutKind { trivial, cyclic, trivial_cyclic, isolates_edge, degenerate }
}

/// Smallest size of a cyclic edge cut, if one of size at most 7 exists.
pub fn cyclic_edge_connectivity(g: &PlaneGraph) -> Option<usize> {
    edge_cuts_up_to(g, MAX_CUT)
        .ok()?
        .into_iter()
        .find(|c| c.kind.cyclic)
        .map(|c| c.size())
}

/// Returns `k` when `g` has a non-trivial cyclic 5-edge cut, which happens
/// exactly for the tubes `G^k`.
pub fn classify_gk(g: &PlaneGraph) -> Option<usize> {
    let cuts = edge_cuts_up_to(g, 5).ok()?;
    let has = cuts.iter().any(|c| c.size() == 5 && c.kind.cyclic && !c.kind.trivial_cyclic);
    if !has || g.order() < 30 || (g.order() - 20) % 10 != 0 {
        return None;
    }
    let k = (g.order() - 20) / 10;
    if canonical_form(g) == canonical_form(&named::gk(k)) {
        Some(k)
    } else {
        log::warn!("non-trivial cyclic 5-cut in a graph that is not G^{k}");
        None
    }
}

/// Lemma-style sanity summary of the small cuts of a fullerene.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SmallCutReport {
    pub three_cuts_trivial: bool,
    pub four_cuts_isolate_edge: bool,
    pub cyclic_edge_connectivity: Option<usize>,
}

pub fn small_cut_report(g: &PlaneGraph) -> SmallCutReport {
    let cuts = edge_cuts_up_to(g, 5).expect("bound is valid");
    SmallCutReport {
        three_cuts_trivial: cuts.iter().filter(|c| c.size() == 3).all(|c| c.kind.trivial),
        four_cuts_isolate_edge: cuts.iter().filter(|c| c.size() == 4).all(|c| c.kind.isolates_edge),
        cyclic_edge_connectivity: cyclic_edge_connectivity(g),
    }
}

/// Edges joining `side` to the rest of the graph, sorted.
pub fn boundary_edges(g: &PlaneGraph, side: &[usize]) -> Vec<Edge> {
    let mut inside = vec![false; g.order()];
    for &v in side {
        inside[v] = true;
    }
    let mut out: Vec<Edge> = side
        .iter()
        .flat_map(|&v| g.rotation(v).iter().filter(|&&w| !inside[w]).map(move |&w| edge(v, w)))
        .collect();
    out.sort_unstable();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dodecahedron_cuts() {
        let g = named::dodecahedron();
        let cuts = edge_cuts_up_to(&g, 5).unwrap();
        let threes = cuts.iter().filter(|c| c.size() == 3).count();
        assert_eq!(threes, 20);
        let fives: Vec<_> = cuts.iter().filter(|c| c.size() == 5 && c.kind.cyclic).collect();
        assert_eq!(fives.len(), 12);
        assert!(fives.iter().all(|c| c.kind.trivial_cyclic));
        assert_eq!(cyclic_edge_connectivity(&g), Some(5));
        assert_eq!(classify_gk(&g), None);
    }

    #[test]
    fn gk_detected() {
        assert_eq!(classify_gk(&named::gk(2)), Some(2));
        assert_eq!(classify_gk(&named::f24()), None);
    }

    #[test]
    fn bound_enforced() {
        assert_eq!(edge_cuts_up_to(&named::f24(), 8), Err(SearchError::CutBound(8)));
    }
}
