//! Plane graphs stored as rotation systems.
//!
//! A [`PlaneGraph`] keeps, for every vertex, the clockwise cyclic order of
//! its neighbours. Nothing geometric is stored: faces are recovered by
//! walking darts, and every construction in the crate works directly on the
//! rotation.

pub mod canon;
pub mod cuts;
pub mod dot;
pub mod fullerene;
pub mod named;
pub mod planar_code;

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::error::GraphError;

pub use canon::{canonical_form, CanonicalForm};
pub use cuts::{cyclic_edge_connectivity, edge_cuts_up_to, classify_gk, CutKind, EdgeCut};
pub use fullerene::{validate_fullerene, Fullerene, Violation};

/// A directed edge `(tail, head)`.
pub type Dart = (usize, usize);

/// Undirected edge, always stored with `u < v`.
pub type Edge = (usize, usize);

/// Normalizes an unordered vertex pair.
#[inline]
pub fn edge(u: usize, v: usize) -> Edge {
    if u < v {
        (u, v)
    } else {
        (v, u)
    }
}

/// A face as the cyclic sequence of vertices met while walking its darts.
///
/// For faces of a 2-connected graph this is a simple cycle; for the outer
/// face of a tree-like patch the same vertex may appear several times.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Face {
    pub darts: Vec<Dart>,
}

impl Face {
    pub fn len(&self) -> usize {
        self.darts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.darts.is_empty()
    }

    pub fn vertices(&self) -> impl Iterator<Item = usize> + '_ {
        self.darts.iter().map(|d| d.0)
    }
}

/// A plane graph given by its rotation system.
///
/// `rotation[v]` lists the neighbours of `v` in clockwise order. The graph is
/// simple: no loops and no parallel edges.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PlaneGraph {
    rotation: Vec<Vec<usize>>,
}

impl PlaneGraph {
    /// Builds a plane graph, checking that adjacency is symmetric and simple.
    pub fn new(rotation: Vec<Vec<usize>>) -> Result<Self, GraphError> {
        let n = rotation.len();
        for (v, nbrs) in rotation.iter().enumerate() {
            for (i, &w) in nbrs.iter().enumerate() {
                if w >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: w, order: n });
                }
                if w == v {
                    return Err(GraphError::Loop(v));
                }
                if nbrs[..i].contains(&w) {
                    return Err(GraphError::ParallelEdge(v, w));
                }
                if !rotation[w].contains(&v) {
                    return Err(GraphError::Asymmetric(v, w));
                }
            }
        }
        Ok(PlaneGraph { rotation })
    }

    /// Builds a plane graph without validation. Callers guarantee symmetry.
    pub(crate) fn from_rotation_unchecked(rotation: Vec<Vec<usize>>) -> Self {
        debug_assert!(PlaneGraph::new(rotation.clone()).is_ok());
        PlaneGraph { rotation }
    }

    pub fn order(&self) -> usize {
        self.rotation.len()
    }

    pub fn size(&self) -> usize {
        self.rotation.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn degree(&self, v: usize) -> usize {
        self.rotation[v].len()
    }

    pub fn rotation(&self, v: usize) -> &[usize] {
        &self.rotation[v]
    }

    pub fn rotations(&self) -> &[Vec<usize>] {
        &self.rotation
    }

    pub fn into_rotations(self) -> Vec<Vec<usize>> {
        self.rotation
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rotation[u].contains(&v)
    }

    /// All edges as sorted `(u, v)` pairs with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<Edge> {
        let mut out = Vec::with_capacity(self.size());
        for (u, nbrs) in self.rotation.iter().enumerate() {
            for &v in nbrs {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// Map from edge to its index in [`PlaneGraph::edges`].
    pub fn edge_index(&self) -> HashMap<Edge, usize> {
        self.edges().into_iter().enumerate().map(|(i, e)| (e, i)).collect()
    }

    pub fn darts(&self) -> impl Iterator<Item = Dart> + '_ {
        self.rotation
            .iter()
            .enumerate()
            .flat_map(|(u, nbrs)| nbrs.iter().map(move |&v| (u, v)))
    }

    /// Position of `w` in the rotation of `v`.
    #[inline]
    pub fn position(&self, v: usize, w: usize) -> usize {
        self.rotation[v]
            .iter()
            .position(|&x| x == w)
            .unwrap_or_else(|| panic!("{w} is not a neighbour of {v}"))
    }

    /// Next dart along the face that lies to the left of `(u, v)`.
    ///
    /// The successor of `u` in the clockwise rotation of `v` is taken, so
    /// bounded faces are walked counterclockwise.
    #[inline]
    pub fn next_in_face(&self, (u, v): Dart) -> Dart {
        let rot = &self.rotation[v];
        let i = self.position(v, u);
        (v, rot[(i + 1) % rot.len()])
    }

    /// The face walk starting with dart `d`.
    pub fn face_from(&self, d: Dart) -> Face {
        let mut darts = vec![d];
        let mut cur = self.next_in_face(d);
        while cur != d {
            darts.push(cur);
            cur = self.next_in_face(cur);
        }
        Face { darts }
    }

    /// All faces, each dart lying on exactly one of them. Faces are listed
    /// in order of their smallest starting dart.
    pub fn faces(&self) -> Vec<Face> {
        let mut seen: HashMap<Dart, usize> = HashMap::new();
        let mut faces = Vec::new();
        let mut all: Vec<Dart> = self.darts().collect();
        all.sort_unstable();
        for d in all {
            if seen.contains_key(&d) {
                continue;
            }
            let f = self.face_from(d);
            for &x in &f.darts {
                seen.insert(x, faces.len());
            }
            faces.push(f);
        }
        faces
    }

    /// Dart → face index, consistent with [`PlaneGraph::faces`].
    pub fn face_map(&self) -> (Vec<Face>, HashMap<Dart, usize>) {
        let faces = self.faces();
        let mut map = HashMap::with_capacity(2 * self.size());
        for (i, f) in faces.iter().enumerate() {
            for &d in &f.darts {
                map.insert(d, i);
            }
        }
        (faces, map)
    }

    /// The same graph with every rotation reversed (orientation flip).
    pub fn mirror(&self) -> PlaneGraph {
        PlaneGraph {
            rotation: self
                .rotation
                .iter()
                .map(|r| r.iter().rev().copied().collect())
                .collect(),
        }
    }

    /// Relabels vertices: vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> PlaneGraph {
        let mut rotation = vec![Vec::new(); self.order()];
        for (v, nbrs) in self.rotation.iter().enumerate() {
            rotation[perm[v]] = nbrs.iter().map(|&w| perm[w]).collect();
        }
        PlaneGraph { rotation }
    }

    /// Connected components as sorted vertex lists.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.order();
        let mut comp = vec![usize::MAX; n];
        let mut out = Vec::new();
        for s in 0..n {
            if comp[s] != usize::MAX {
                continue;
            }
            let id = out.len();
            let mut stack = vec![s];
            comp[s] = id;
            let mut members = vec![];
            while let Some(v) = stack.pop() {
                members.push(v);
                for &w in &self.rotation[v] {
                    if comp[w] == usize::MAX {
                        comp[w] = id;
                        stack.push(w);
                    }
                }
            }
            members.sort_unstable();
            out.push(members);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.order() == 0 || self.components().len() == 1
    }

    /// Euler characteristic V - E + F (2 for a connected plane graph).
    pub fn euler_characteristic(&self) -> i64 {
        self.order() as i64 - self.size() as i64 + self.faces().len() as i64
    }

    /// Checks the rotation system describes a connected plane embedding.
    pub fn check_plane(&self) -> Result<(), GraphError> {
        if !self.is_connected() {
            return Err(GraphError::Disconnected);
        }
        let chi = self.euler_characteristic();
        if chi != 2 {
            return Err(GraphError::NotPlanar(chi));
        }
        Ok(())
    }

    /// Is the graph still connected after deleting `removed` vertices?
    pub fn connected_without(&self, removed: &[usize]) -> bool {
        let n = self.order();
        let mut gone = vec![false; n];
        for &r in removed {
            gone[r] = true;
        }
        let Some(start) = (0..n).find(|&v| !gone[v]) else {
            return true;
        };
        let mut seen = gone.clone();
        seen[start] = true;
        let mut stack = vec![start];
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for &w in &self.rotation[v] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count + removed.len() == n
    }

    /// Vertex connectivity is at least 3 (checked by deleting every pair).
    pub fn is_3_connected(&self) -> bool {
        let n = self.order();
        if n < 4 || !self.is_connected() {
            return false;
        }
        for a in 0..n {
            if !self.connected_without(&[a]) {
                return false;
            }
            for b in a + 1..n {
                if !self.connected_without(&[a, b]) {
                    return false;
                }
            }
        }
        true
    }

    /// Bridges of the graph (edges whose removal disconnects their component).
    pub fn bridges(&self) -> Vec<Edge> {
        let n = self.order();
        let mut disc = vec![usize::MAX; n];
        let mut low = vec![0usize; n];
        let mut out = Vec::new();
        let mut time = 0;
        for root in 0..n {
            if disc[root] != usize::MAX {
                continue;
            }
            // iterative DFS: (vertex, parent, next neighbour index)
            let mut stack: Vec<(usize, usize, usize)> = vec![(root, usize::MAX, 0)];
            disc[root] = time;
            low[root] = time;
            time += 1;
            while let Some(&mut (v, parent, ref mut idx)) = stack.last_mut() {
                if *idx < self.rotation[v].len() {
                    let w = self.rotation[v][*idx];
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
                            out.push(edge(p, v));
                        }
                    }
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// Induced subgraph on `keep` (sorted or not); returns the graph and the
    /// map from new ids to old ids. Rotation order is inherited.
    pub fn induced(&self, keep: &[usize]) -> (PlaneGraph, Vec<usize>) {
        let mut new_id = vec![usize::MAX; self.order()];
        for (i, &v) in keep.iter().enumerate() {
            new_id[v] = i;
        }
        let rotation = keep
            .iter()
            .map(|&v| {
                self.rotation[v]
                    .iter()
                    .filter(|&&w| new_id[w] != usize::MAX)
                    .map(|&w| new_id[w])
                    .collect()
            })
            .collect();
        (PlaneGraph { rotation }, keep.to_vec())
    }

    /// Graph with the given edges removed (rotation order otherwise kept).
    pub fn without_edges(&self, removed: &[Edge]) -> PlaneGraph {
        let mut rotation = self.rotation.clone();
        for &(u, v) in removed {
            rotation[u].retain(|&x| x != v);
            rotation[v].retain(|&x| x != u);
        }
        PlaneGraph { rotation }
    }

    /// Size histogram of the faces, e.g. `{5: 12, 6: 2}`.
    pub fn face_size_counts(&self) -> std::collections::BTreeMap<usize, usize> {
        let mut m = std::collections::BTreeMap::new();
        for f in self.faces() {
            *m.entry(f.len()).or_insert(0) += 1;
        }
        m
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> PlaneGraph {
        PlaneGraph::new((0..n).map(|i| vec![(i + n - 1) % n, (i + 1) % n]).collect()).unwrap()
    }

    #[test]
    fn cycle_has_two_faces() {
        let c6 = cycle(6);
        let faces = c6.faces();
        assert_eq!(faces.len(), 2);
        assert!(faces.iter().all(|f| f.len() == 6));
        assert_eq!(c6.euler_characteristic(), 2);
    }

    #[test]
    fn asymmetric_rotation_is_rejected() {
        let err = PlaneGraph::new(vec![vec![1], vec![]]).unwrap_err();
        assert!(matches!(err, GraphError::Asymmetric(0, 1)));
    }

    #[test]
    fn every_dart_on_one_face() {
        let g = named::dodecahedron();
        let (faces, map) = g.face_map();
        assert_eq!(map.len(), 2 * g.size());
        assert_eq!(faces.iter().map(Face::len).sum::<usize>(), 2 * g.size());
    }

    #[test]
    fn bridges_of_path() {
        let p = PlaneGraph::new(vec![vec![1], vec![0, 2], vec![1]]).unwrap();
        assert_eq!(p.bridges(), vec![(0, 1), (1, 2)]);
        assert!(cycle(5).bridges().is_empty());
    }

    #[test]
    fn mirror_keeps_faces() {
        let g = named::f24();
        let m = g.mirror();
        assert_eq!(g.face_size_counts(), m.face_size_counts());
    }
}
