//! Generalized patches: connected plane subgraphs of a cubic plane graph
//! together with the half-edges that leave them.
//!
//! A half-edge is stored as a leaf vertex hanging off its anchor, placed in
//! the rotation exactly where the missing edge was. Leaves are numbered after
//! the real vertices, in the order in which the outer face walk meets them,
//! so half-edge `i` is vertex `real_order() + i`. Every real vertex has
//! degree three counting its leaves.

pub mod array;

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::error::OpError;
use crate::matching::{has_unique_pm, Adjacency};
use crate::plane::canon::{canonical_code, CodeOptions};
use crate::plane::{edge, CanonicalForm, Edge, Face, PlaneGraph};

pub use array::{Direction, DistanceArray, MinDistanceArray};

/// A generalized patch with its half-edges.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneralizedPatch {
    graph: PlaneGraph,
    real: usize,
    /// Distinguished half-edge, e.g. where a connecting edge issues.
    marker: Option<usize>,
}

/// Raw rotation lists with a leaf flag, used while building patches.
#[derive(Clone, Debug)]
pub(crate) struct Draft {
    pub rot: Vec<Vec<usize>>,
    pub leaf: Vec<bool>,
    pub marker: Option<usize>,
}

impl Draft {
    pub fn from_patch(p: &GeneralizedPatch) -> Draft {
        let n = p.graph.order();
        Draft {
            rot: p.graph.rotations().to_vec(),
            leaf: (0..n).map(|v| v >= p.real).collect(),
            marker: p.marker.map(|i| p.real + i),
        }
    }

    pub fn add_vertex(&mut self, leaf: bool) -> usize {
        self.rot.push(Vec::new());
        self.leaf.push(leaf);
        self.rot.len() - 1
    }

    pub fn replace(&mut self, v: usize, old: usize, new: usize) {
        let p = self.rot[v].iter().position(|&w| w == old).expect("neighbour present");
        self.rot[v][p] = new;
    }

    /// Detaches a leaf; it is dropped by [`Draft::finish`].
    pub fn kill_leaf(&mut self, l: usize) {
        debug_assert!(self.leaf[l]);
        self.rot[l].clear();
        if self.marker == Some(l) {
            self.marker = None;
        }
    }

    /// Adds a fresh leaf at `v` and returns it; the caller places it.
    pub fn new_leaf(&mut self, v: usize) -> usize {
        let l = self.add_vertex(true);
        self.rot[l].push(v);
        l
    }

    /// Compacts and validates. Real vertices keep their relative order,
    /// leaves are renumbered along the outer face walk.
    pub fn finish(self) -> Result<GeneralizedPatch, OpError> {
        self.finish_with_map().map(|r| r.0)
    }

    /// Like [`Draft::finish`], also returning the new id of every draft
    /// vertex (`usize::MAX` for dropped leaves).
    pub fn finish_with_map(self) -> Result<(GeneralizedPatch, Vec<usize>), OpError> {
        let n = self.rot.len();
        let live_leaf = |v: usize| self.leaf[v] && !self.rot[v].is_empty();
        let reals: Vec<usize> = (0..n).filter(|&v| !self.leaf[v]).collect();
        let mut id = vec![usize::MAX; n];
        for (i, &v) in reals.iter().enumerate() {
            id[v] = i;
        }
        let leaves: Vec<usize> = (0..n).filter(|&v| live_leaf(v)).collect();
        for &v in &reals {
            if self.rot[v].len() != 3 {
                return Err(OpError::Infeasible(format!("vertex of degree {}", self.rot[v].len())));
            }
            let r = &self.rot[v];
            if r.contains(&v) || r[0] == r[1] || r[1] == r[2] || r[0] == r[2] {
                return Err(OpError::Infeasible("loop or parallel edge".into()));
            }
        }
        let darts: usize = self.rot.iter().map(Vec::len).sum();
        let mut order = Vec::new();
        if let Some(&first) = leaves.iter().min_by_key(|&&l| {
            let a = self.rot[l][0];
            (id[a], self.rot[a].iter().position(|&w| w == l).unwrap())
        }) {
            // walk the face through (first, anchor)
            let tmp = PlaneGraph::from_rotation_unchecked(self.rot.clone());
            let start = (first, self.rot[first][0]);
            let mut d = start;
            for step in 0.. {
                if step > darts {
                    return Err(OpError::Infeasible("inconsistent rotation".into()));
                }
                if live_leaf(d.0) {
                    order.push(d.0);
                }
                d = tmp.next_in_face(d);
                if d == start {
                    break;
                }
            }
            if order.len() != leaves.len() {
                return Err(OpError::Infeasible("half-edges lie on different faces".into()));
            }
        }
        for (i, &l) in order.iter().enumerate() {
            id[l] = reals.len() + i;
        }
        let mut rot = vec![Vec::new(); reals.len() + order.len()];
        for v in reals.iter().chain(order.iter()) {
            rot[id[*v]] = self.rot[*v].iter().map(|&w| id[w]).collect();
        }
        let graph = PlaneGraph::new(rot).map_err(|e| OpError::Infeasible(e.to_string()))?;
        if !graph.is_connected() {
            return Err(OpError::Infeasible("patch is disconnected".into()));
        }
        graph.check_plane().map_err(|e| OpError::Infeasible(e.to_string()))?;
        let marker = self.marker.filter(|&m| live_leaf(m)).map(|m| id[m] - reals.len());
        Ok((GeneralizedPatch { graph, real: reals.len(), marker }, id))
    }
}

/// Serialized form of a patch. `rotation` lists the real vertices
/// `0..vertices` followed by one leaf per half-edge, in half-edge order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PatchRecord {
    pub vertices: usize,
    pub rotation: Vec<Vec<usize>>,
    pub half_edge_anchors: Vec<usize>,
    pub distance_array: DistanceArray,
    pub min_distance_array: MinDistanceArray,
    pub f5: usize,
    pub marker_index: Option<usize>,
}

/// Record of the structural predicates of a patch.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Predicates {
    pub has_pendent_pentagon: bool,
    /// Number of (bridge, side) pairs that are pendent blossoms.
    pub pendent_blossoms: usize,
    /// `Some(true)` if the real graph has a unique perfect matching and one
    /// of its bridges lies in it; `None` without a unique perfect matching.
    pub bridges_in_pm: Option<bool>,
    pub is_patch: bool,
    pub two_connected: bool,
}

impl GeneralizedPatch {
    /// A single vertex with three half-edges.
    pub fn single_vertex() -> Self {
        let d = Draft { rot: vec![vec![1, 2, 3], vec![0], vec![0], vec![0]], leaf: vec![false, true, true, true], marker: None };
        d.finish().expect("valid")
    }

    /// A cycle of length `s` with one half-edge at every vertex.
    pub fn ring(s: usize) -> Self {
        assert!(s >= 3);
        let mut rot = Vec::new();
        for i in 0..s {
            // clockwise: next, previous, leaf keeps the leaf outside
            rot.push(vec![(i + 1) % s, s + i, (i + s - 1) % s]);
        }
        for i in 0..s {
            rot.push(vec![i]);
        }
        let mut leaf = vec![false; s];
        leaf.extend(std::iter::repeat(true).take(s));
        let p = Draft { rot, leaf, marker: None }.finish().expect("valid ring");
        // make sure the leaves sit on the unbounded side: the ring's other
        // face has no leaves
        debug_assert_eq!(p.interior_faces().len(), 1);
        p
    }

    /// The component induced by `side` in a cubic plane graph, with one
    /// half-edge per edge leaving it.
    pub fn from_side(host: &PlaneGraph, side: &[usize]) -> Result<Self, OpError> {
        let mut inside = vec![usize::MAX; host.order()];
        for (i, &v) in side.iter().enumerate() {
            inside[v] = i;
        }
        let mut d = Draft { rot: vec![Vec::new(); side.len()], leaf: vec![false; side.len()], marker: None };
        for (i, &v) in side.iter().enumerate() {
            let mut r = Vec::new();
            for &w in host.rotation(v) {
                if inside[w] != usize::MAX {
                    r.push(inside[w]);
                } else {
                    let l = d.add_vertex(true);
                    d.rot[l].push(i);
                    r.push(l);
                }
            }
            d.rot[i] = r;
        }
        d.finish()
    }

    pub fn graph(&self) -> &PlaneGraph {
        &self.graph
    }

    /// Number of real vertices.
    pub fn real_order(&self) -> usize {
        self.real
    }

    /// Number of half-edges `k`.
    pub fn stub_count(&self) -> usize {
        self.graph.order() - self.real
    }

    pub fn is_closed(&self) -> bool {
        self.stub_count() == 0
    }

    pub fn marker(&self) -> Option<usize> {
        self.marker
    }

    pub fn with_marker(mut self, m: Option<usize>) -> Self {
        self.marker = m.filter(|&i| i < self.stub_count());
        self
    }

    /// Leaf vertex of half-edge `i`.
    pub fn stub(&self, i: usize) -> usize {
        self.real + i
    }

    /// Real vertex carrying half-edge `i`.
    pub fn anchor(&self, i: usize) -> usize {
        self.graph.rotation(self.stub(i))[0]
    }

    /// Number of half-edges at each real vertex.
    pub fn stubs_at(&self, v: usize) -> usize {
        self.graph.rotation(v).iter().filter(|&&w| w >= self.real).count()
    }

    /// Real vertices met strictly between half-edge `i` and half-edge `i+1`
    /// on the outer face walk, with multiplicity.
    pub fn gap_walk(&self, i: usize) -> Vec<usize> {
        let k = self.stub_count();
        let l = self.stub(i);
        let target = self.stub((i + 1) % k);
        let mut d = (l, self.anchor(i));
        let mut out = Vec::new();
        loop {
            let v = d.1;
            if v == target {
                break;
            }
            out.push(v);
            d = self.graph.next_in_face(d);
        }
        out
    }

    /// The distance-array in the outer-walk order starting at half-edge 0.
    pub fn gaps(&self) -> DistanceArray {
        DistanceArray((0..self.stub_count()).map(|i| self.gap_walk(i).len() as u8).collect())
    }

    /// Distance-array read from half-edge `start` in the given direction.
    pub fn distance_array(&self, start: usize, dir: Direction) -> DistanceArray {
        let g = self.gaps();
        let k = g.len();
        if k == 0 {
            return g;
        }
        match dir {
            Direction::Cw => g.rotate(start),
            Direction::Ccw => DistanceArray((0..k).map(|i| g.0[(start + 2 * k - 1 - i) % k]).collect()),
        }
    }

    pub fn min_array(&self) -> MinDistanceArray {
        self.gaps().normalize()
    }

    /// Faces of the embedding that contain no half-edge.
    pub fn interior_faces(&self) -> Vec<Face> {
        self.graph
            .faces()
            .into_iter()
            .filter(|f| f.vertices().all(|v| v < self.real))
            .collect()
    }

    /// Length of the outer face of the real subgraph (0 when closed).
    pub fn outer_length(&self) -> usize {
        if self.is_closed() {
            return 0;
        }
        let f = self.graph.face_from((self.stub(0), self.anchor(0)));
        f.darts.iter().filter(|&&(u, v)| u < self.real && v < self.real).count()
    }

    pub fn pentagons(&self) -> usize {
        self.interior_faces().iter().filter(|f| f.len() == 5).count()
    }

    /// Real vertices of degree one in the real subgraph.
    pub fn n1(&self) -> usize {
        (0..self.real).filter(|&v| self.stubs_at(v) == 2).count()
    }

    /// Real vertices of degree two in the real subgraph.
    pub fn n2(&self) -> usize {
        (0..self.real).filter(|&v| self.stubs_at(v) == 1).count()
    }

    /// The real subgraph without half-edges.
    pub fn real_graph(&self) -> PlaneGraph {
        let keep: Vec<usize> = (0..self.real).collect();
        self.graph.induced(&keep).0
    }

    /// Checks `6 - f5 = 4 n1 + 2 n2 - l`. A single vertex has no outer face
    /// walk of its own and is reported as `None`.
    pub fn boundary_formula_check(&self) -> Option<bool> {
        if self.real < 2 || self.is_closed() {
            log::debug!("boundary formula skipped for a component without edges");
            return None;
        }
        let lhs = 6 - self.pentagons() as i64;
        let rhs = 4 * self.n1() as i64 + 2 * self.n2() as i64 - self.outer_length() as i64;
        Some(lhs == rhs)
    }

    /// Canonical certificate. Half-edges, the marker and the given real
    /// edges are coloured so they are respected by isomorphisms.
    pub fn canonical_form(&self, marked_edges: &[Edge]) -> CanonicalForm {
        self.canonical_form_colored(&[(marked_edges, 1)])
    }

    /// Canonical certificate with several classes of coloured edges.
    pub fn canonical_form_colored(&self, classes: &[(&[Edge], u32)]) -> CanonicalForm {
        self.labellings_colored(classes).first().map(|l| CanonicalForm(l.code.clone())).unwrap_or(CanonicalForm(vec![]))
    }

    /// True when the patch (with its marker) is not isomorphic to its mirror.
    pub fn is_chiral(&self) -> bool {
        let labs = self.labellings(&[]);
        !(labs.iter().any(|l| l.mirrored) && labs.iter().any(|l| !l.mirrored))
    }

    pub(crate) fn labellings(&self, marked_edges: &[Edge]) -> Vec<crate::plane::canon::Labelling> {
        self.labellings_colored(&[(marked_edges, 1)])
    }

    pub(crate) fn labellings_colored(&self, classes: &[(&[Edge], u32)]) -> Vec<crate::plane::canon::Labelling> {
        let n = self.graph.order();
        let colors: Vec<u32> = (0..n)
            .map(|v| {
                if v < self.real {
                    0
                } else if self.marker == Some(v - self.real) {
                    2
                } else {
                    1
                }
            })
            .collect();
        let ec: HashMap<Edge, u32> =
            classes.iter().flat_map(|(es, c)| es.iter().map(move |&(u, v)| (edge(u, v), *c))).collect();
        let starts: Vec<(usize, usize)> = if self.is_closed() {
            self.graph.darts().collect()
        } else {
            let m = self.marker.map(|i| self.stub(i));
            (self.real..n).filter(|&l| m.is_none() || m == Some(l)).map(|l| (l, self.graph.rotation(l)[0])).collect()
        };
        canonical_code(
            &self.graph,
            &CodeOptions { vertex_colors: Some(&colors), edge_colors: Some(&ec), starts: Some(&starts), mirror: true },
        )
    }

    /// Structural predicates of the real subgraph.
    pub fn structural_predicates(&self) -> Predicates {
        let g = self.real_graph();
        let bridges = g.bridges();
        let mut pendent = 0;
        let mut pendent_pentagon = false;
        for &(u, v) in &bridges {
            let h = g.without_edges(&[(u, v)]);
            for (x, _) in [(u, v), (v, u)] {
                let comp = component_of(&h, x);
                let rest: Vec<usize> = comp.iter().copied().filter(|&w| w != x).collect();
                let ok = rest.is_empty() || {
                    let (sub, _) = h.induced(&rest);
                    has_unique_pm(&sub)
                };
                if ok {
                    pendent += 1;
                    if comp.len() == 5 {
                        let (sub, _) = h.induced(&comp);
                        if sub.size() == 5 && (0..5).all(|i| sub.degree(i) == 2) {
                            pendent_pentagon = true;
                        }
                    }
                }
            }
        }
        let bridges_in_pm = if has_unique_pm(&g) {
            let pm = crate::matching::enumerate_perfect_matchings(&g, Some(1));
            Some(bridges.iter().any(|&b| pm[0].contains(b)))
        } else {
            None
        };
        let two_connected = g.order() >= 3 && g.is_connected() && (0..g.order()).all(|v| g.connected_without(&[v]));
        let is_patch = two_connected && self.n1() == 0;
        Predicates { has_pendent_pentagon: pendent_pentagon, pendent_blossoms: pendent, bridges_in_pm, is_patch, two_connected }
    }

    /// Adds a face of size `s` across gap `i`: the anchors of half-edges `i`
    /// and `i + 1` are joined by a path of `s - a_i` new vertices, each with
    /// one half-edge. With no new vertices the anchors are joined directly.
    pub fn add_face(&self, i: usize, s: usize) -> Result<GeneralizedPatch, OpError> {
        let k = self.stub_count();
        if k < 2 {
            return Err(OpError::Precondition("need two half-edges".into()));
        }
        let walk = self.gap_walk(i);
        let a = walk.len();
        if s < a {
            return Err(OpError::Precondition(format!("face of size {s} is shorter than gap {a}")));
        }
        let mut sorted = walk.clone();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != a {
            return Err(OpError::Infeasible("gap walk repeats a vertex".into()));
        }
        let new = s - a;
        let (t0, t1) = (self.stub(i), self.stub((i + 1) % k));
        let (x, y) = (self.anchor(i), self.anchor((i + 1) % k));
        if new == 0 && (x == y || self.graph.has_edge(x, y)) {
            return Err(OpError::Infeasible("joining would create a loop or parallel edge".into()));
        }
        if new == 1 && x == y {
            return Err(OpError::Infeasible("joining would create a parallel edge".into()));
        }
        let mut d = Draft::from_patch(self);
        let mut path = vec![x];
        for _ in 0..new {
            path.push(d.add_vertex(false));
        }
        path.push(y);
        d.replace(x, t0, path[1]);
        d.replace(y, t1, path[new]);
        for j in 1..=new {
            let l = d.new_leaf(path[j]);
            d.rot[path[j]] = vec![path[j + 1], path[j - 1], l];
        }
        d.kill_leaf(t0);
        d.kill_leaf(t1);
        d.finish()
    }

    /// Replaces half-edge `i` by a new vertex carrying two half-edges.
    pub fn sprout(&self, i: usize) -> Result<GeneralizedPatch, OpError> {
        let t = self.stub(i);
        let x = self.anchor(i);
        let mut d = Draft::from_patch(self);
        let v = d.add_vertex(false);
        d.replace(x, t, v);
        let l1 = d.new_leaf(v);
        let l2 = d.new_leaf(v);
        d.rot[v] = vec![x, l1, l2];
        d.kill_leaf(t);
        d.finish()
    }

    /// Joins the half-edges around gap `i` at a new vertex whose third
    /// neighbour is another new vertex carrying two half-edges.
    pub fn add_vertex_pair(&self, i: usize) -> Result<GeneralizedPatch, OpError> {
        let a = self.gap_walk(i).len();
        let p = self.add_face(i, a + 1)?;
        let u = self.real;
        let t = (0..p.stub_count()).find(|&j| p.anchor(j) == u).expect("new vertex has a half-edge");
        p.sprout(t)
    }

    /// Attaches a pentagon `v1..v5` whose vertices `v1..v4` take half-edges
    /// `j..=j+3`, and a pendant vertex at `v5` carrying two half-edges.
    pub fn attach_pendent_pentagon(&self, j: usize) -> Result<GeneralizedPatch, OpError> {
        let k = self.stub_count();
        if k < 4 {
            return Err(OpError::Precondition("need four half-edges".into()));
        }
        let mut last = None;
        for flip in [false, true] {
            let mut d = Draft::from_patch(self);
            let p: Vec<usize> = (0..5).map(|_| d.add_vertex(false)).collect();
            let v = d.add_vertex(false);
            for i in 0..4 {
                let t = self.stub((j + i) % k);
                let x = self.anchor((j + i) % k);
                d.replace(x, t, p[i]);
                d.kill_leaf(t);
            }
            for i in 0..5 {
                let (prev, next) = (p[(i + 4) % 5], p[(i + 1) % 5]);
                let out = if i == 4 { v } else { self.anchor((j + i) % k) };
                d.rot[p[i]] = if flip { vec![next, prev, out] } else { vec![prev, next, out] };
            }
            let l1 = d.new_leaf(v);
            let l2 = d.new_leaf(v);
            d.rot[v] = vec![p[4], l1, l2];
            match d.finish() {
                Ok(q) if q.interior_faces().len() == self.interior_faces().len() + 4 => return Ok(q),
                Ok(_) => last = Some(OpError::Infeasible("pentagon on the wrong side".into())),
                Err(e) => last = Some(e),
            }
        }
        Err(last.expect("tried"))
    }

    /// Joins half-edge `i` of `self` and half-edge `j` of `other` into an
    /// edge, giving a disjoint-union-free merged patch.
    pub fn bridge(&self, i: usize, other: &GeneralizedPatch, j: usize) -> Result<GeneralizedPatch, OpError> {
        let mut d = Draft::from_patch(self);
        let base = d.rot.len();
        for (v, r) in other.graph.rotations().iter().enumerate() {
            d.rot.push(r.iter().map(|&w| w + base).collect());
            d.leaf.push(v >= other.real);
        }
        let (t, x) = (self.stub(i), self.anchor(i));
        let (s, y) = (base + other.stub(j), base + other.anchor(j));
        d.replace(x, t, y);
        d.replace(y, s, x);
        d.kill_leaf(t);
        d.kill_leaf(s);
        d.marker = None;
        d.finish()
    }

    /// Mirror image, with half-edges renumbered along the new walk.
    pub fn mirror(&self) -> GeneralizedPatch {
        let mut d = Draft::from_patch(self);
        for r in d.rot.iter_mut() {
            r.reverse();
        }
        d.finish().expect("mirror of a valid patch")
    }

    /// Glues all half-edges of `self` to those of `q`: half-edge `i` meets
    /// half-edge `(offset - i) mod k` of `q` (of its mirror when `flip`).
    /// Every face along the seam must be a pentagon or a hexagon.
    pub fn glue(&self, q: &GeneralizedPatch, offset: usize, flip: bool) -> Result<PlaneGraph, OpError> {
        let k = self.stub_count();
        if q.stub_count() != k {
            return Err(OpError::Arity(k, q.stub_count()));
        }
        let q = if flip { q.mirror() } else { q.clone() };
        let a = self.gaps();
        let b = q.gaps();
        for i in 0..k {
            let size = a.0[i] as usize + b.0[(offset + 2 * k - 1 - i) % k] as usize;
            if size != 5 && size != 6 {
                return Err(OpError::BadFace { size, position: i });
            }
        }
        let n = self.real + q.real;
        let mut rot: Vec<Vec<usize>> = Vec::with_capacity(n);
        let pa = |v: usize| -> usize { v };
        for v in 0..self.real {
            rot.push(
                self.graph
                    .rotation(v)
                    .iter()
                    .map(|&w| if w < self.real { pa(w) } else { self.real + q.anchor((offset + k - (w - self.real)) % k) })
                    .collect(),
            );
        }
        // inverse pairing for q's half-edges
        let mut partner = vec![0; k];
        for i in 0..k {
            partner[(offset + k - i) % k] = i;
        }
        for v in 0..q.real {
            rot.push(
                q.graph
                    .rotation(v)
                    .iter()
                    .map(|&w| if w < q.real { self.real + w } else { self.anchor(partner[w - q.real]) })
                    .collect(),
            );
        }
        let g = PlaneGraph::new(rot).map_err(|e| OpError::Infeasible(e.to_string()))?;
        g.check_plane().map_err(|e| OpError::Infeasible(e.to_string()))?;
        if let Some(f) = g.faces().iter().find(|f| f.len() != 5 && f.len() != 6) {
            return Err(OpError::BadFace { size: f.len(), position: usize::MAX });
        }
        Ok(g)
    }

    pub fn to_record(&self) -> PatchRecord {
        PatchRecord {
            vertices: self.real,
            rotation: self.graph.rotations().to_vec(),
            half_edge_anchors: (0..self.stub_count()).map(|i| self.anchor(i)).collect(),
            distance_array: self.gaps(),
            min_distance_array: self.min_array(),
            f5: self.pentagons(),
            marker_index: self.marker,
        }
    }

    /// Rebuilds a patch and checks the stored arrays against it.
    pub fn from_record(r: &PatchRecord) -> Result<GeneralizedPatch, OpError> {
        let n = r.rotation.len();
        if r.vertices > n || r.rotation.iter().flatten().any(|&w| w >= n) {
            return Err(OpError::Infeasible("vertex id out of range".into()));
        }
        let d = Draft {
            rot: r.rotation.clone(),
            leaf: (0..n).map(|v| v >= r.vertices).collect(),
            marker: r.marker_index.map(|m| r.vertices + m),
        };
        let p = d.finish()?;
        if p.gaps() != r.distance_array || p.min_array() != r.min_distance_array || p.pentagons() != r.f5 {
            return Err(OpError::Infeasible("stored arrays do not match the rotation".into()));
        }
        Ok(p)
    }

    /// Real vertices matched by a perfect matching of the real subgraph;
    /// used by callers that track forcing edges.
    pub fn real_adjacency(&self) -> Adjacency {
        Adjacency::from_plane(&self.real_graph())
    }
}

fn component_of(g: &PlaneGraph, x: usize) -> Vec<usize> {
    let mut seen = vec![false; g.order()];
    let mut stack = vec![x];
    seen[x] = true;
    let mut out = Vec::new();
    while let Some(v) = stack.pop() {
        out.push(v);
        for &w in g.rotation(v) {
            if !seen[w] {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    out.sort_unstable();
    out
}

/// Extracts the component on one side of an edge cut of a cubic plane graph.
pub fn patch_from_cut(host: &PlaneGraph, cut: &crate::plane::EdgeCut, side_a: bool) -> Result<GeneralizedPatch, OpError> {
    GeneralizedPatch::from_side(host, cut.side(side_a))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::plane::named;

    #[test]
    fn small_arrays() {
        assert_eq!(GeneralizedPatch::single_vertex().gaps().0, vec![1, 1, 1]);
        assert_eq!(GeneralizedPatch::single_vertex().sprout(0).unwrap().min_array().to_string(), "[1212]");
        let pent = GeneralizedPatch::ring(5);
        assert_eq!(pent.gaps().0, vec![2; 5]);
        assert_eq!(pent.interior_faces().len(), 1);
        assert_eq!(pent.boundary_formula_check(), Some(true));
        let j1 = pent.sprout(0).unwrap();
        assert!(j1.gaps().representatives().contains(&vec![1, 3, 2, 2, 2, 3]));
    }

    #[test]
    fn cut_sides_satisfy_boundary_formula() {
        let g = named::f24();
        for cut in crate::plane::edge_cuts_up_to(&g, 6).unwrap() {
            for side in [true, false] {
                let p = patch_from_cut(&g, &cut, side).unwrap();
                assert_eq!(p.stub_count(), cut.size());
                if p.structural_predicates().is_patch {
                    assert_eq!(p.gaps().sum(), p.outer_length() + p.n2());
                }
                if let Some(ok) = p.boundary_formula_check() {
                    assert!(ok);
                }
            }
        }
    }

    #[test]
    fn glue_two_rings_is_rejected_or_closed() {
        // two pentagon rings glued directly give 4-faces
        let p = GeneralizedPatch::ring(5);
        assert!(matches!(p.glue(&p, 0, false), Err(OpError::BadFace { .. })));
    }

    #[test]
    fn glue_then_recut() {
        let g = named::f24();
        let cut = crate::plane::edge_cuts_up_to(&g, 6)
            .unwrap()
            .into_iter()
            .find(|c| c.size() == 6 && c.kind.cyclic)
            .unwrap();
        let a = patch_from_cut(&g, &cut, true).unwrap();
        let b = patch_from_cut(&g, &cut, false).unwrap();
        let mut found = false;
        for off in 0..6 {
            for flip in [false, true] {
                if let Ok(h) = a.glue(&b, off, flip) {
                    if crate::plane::canonical_form(&h) == crate::plane::canonical_form(&g) {
                        found = true;
                    }
                }
            }
        }
        assert!(found);
    }
}
