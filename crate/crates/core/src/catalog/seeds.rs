//! Seed patches around a forcing set of three edges.
//!
//! The induced subgraph on the forcing set is grown step by step. A step
//! adds either a vertex `w` with two neighbours in the current subgraph
//! together with its forced partner `z`, or a pendent pentagon with the
//! partner of its attaching vertex. The first connected subgraph met on a
//! branch is a seed.
//!
//! Free placements of `w` are tried in a fixed order, and later branches
//! remember the stub pairs already tried as pairs that do not share an
//! outside vertex. A gap of five forces a vertex and is expanded first.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::families::{CatalogEntry, Family};
use crate::patch::{Draft, GeneralizedPatch, MinDistanceArray};
use crate::plane::{edge, CanonicalForm, Edge};

/// The three shapes of the subgraph induced by the forcing set.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum SeedCase {
    /// A path on six vertices.
    Path,
    /// A path on four vertices and an edge.
    PathAndEdge,
    /// Three independent edges.
    ThreeEdges,
}

/// One connected component of the grown subgraph.
#[derive(Clone, Debug)]
pub struct Piece {
    pub patch: GeneralizedPatch,
    /// Forcing edges inside this piece.
    pub s: Vec<Edge>,
    /// Edges matched by propagation so far.
    pub m: Vec<Edge>,
}

/// A stub named by its piece and leaf vertex.
type StubRef = (usize, usize);

#[derive(Clone, Debug)]
pub struct SeedState {
    pub pieces: Vec<Piece>,
    pub case: SeedCase,
    /// For three independent edges: the type of the first joining vertex.
    pub join_type: u8,
    pub steps: usize,
    /// Arrays of the pieces after every step.
    pub history: Vec<String>,
    /// Stub pairs whose outside ends are known to be distinct vertices.
    pub apart: Vec<(StubRef, StubRef)>,
}

type StateKey = (SeedCase, u8, Vec<CanonicalForm>, Vec<(usize, usize, usize, usize)>);

impl SeedState {
    fn key(&self) -> StateKey {
        // per piece: canonical code and the position of every vertex
        let mut coded: Vec<(CanonicalForm, Vec<usize>, usize)> = Vec::new();
        for (i, p) in self.pieces.iter().enumerate() {
            let labs = p.patch.labellings_colored(&[(&p.s, 1), (&p.m, 2)]);
            let inner: Vec<(usize, usize)> =
                self.apart.iter().filter(|(a, b)| a.0 == i && b.0 == i).map(|(a, b)| (a.1, b.1)).collect();
            let best = labs
                .iter()
                .map(|l| {
                    let mut pos = vec![0; l.order.len()];
                    for (k, &v) in l.order.iter().enumerate() {
                        pos[v] = k;
                    }
                    let mut pairs: Vec<(usize, usize)> =
                        inner.iter().map(|&(a, b)| (pos[a].min(pos[b]), pos[a].max(pos[b]))).collect();
                    pairs.sort_unstable();
                    (pairs, pos)
                })
                .min()
                .map(|x| x.1)
                .unwrap_or_default();
            coded.push((CanonicalForm(labs.first().map(|l| l.code.clone()).unwrap_or_default()), best, i));
        }
        coded.sort_by(|a, b| a.0.cmp(&b.0));
        let mut rank = vec![0; self.pieces.len()];
        for (r, c) in coded.iter().enumerate() {
            rank[c.2] = r;
        }
        let at = |(p, v): StubRef| (rank[p], coded[rank[p]].1[v]);
        let mut apart: Vec<(usize, usize, usize, usize)> = self
            .apart
            .iter()
            .map(|&(a, b)| {
                let (x, y) = (at(a), at(b));
                let (x, y) = if x <= y { (x, y) } else { (y, x) };
                (x.0, x.1, y.0, y.1)
            })
            .collect();
        apart.sort_unstable();
        apart.dedup();
        (self.case, self.join_type, coded.into_iter().map(|c| c.0).collect(), apart)
    }
}

/// A derived seed.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Seed {
    pub patch: GeneralizedPatch,
    pub forcing: Vec<Edge>,
    pub matched: Vec<Edge>,
    pub min_array: MinDistanceArray,
    pub case: SeedCase,
    pub join_type: u8,
    /// Growth steps taken before the subgraph became connected.
    pub steps: usize,
    /// Arrays of the pieces after every step.
    pub history: Vec<String>,
}

/// Limits of the seed search.
#[derive(Clone, Copy, Debug)]
pub struct SeedBounds {
    pub max_steps: usize,
    pub max_stubs: usize,
}

impl Default for SeedBounds {
    fn default() -> Self {
        SeedBounds { max_steps: 12, max_stubs: 12 }
    }
}

/// All pieces in one draft, with global vertex ids.
struct Union {
    draft: Draft,
    s: Vec<Edge>,
    m: Vec<Edge>,
    apart: BTreeSet<Edge>,
}

impl Union {
    fn of(st: &SeedState) -> Union {
        let mut draft = Draft { rot: Vec::new(), leaf: Vec::new(), marker: None };
        let mut s = Vec::new();
        let mut m = Vec::new();
        let mut offs = Vec::new();
        for p in &st.pieces {
            let off = draft.rot.len();
            offs.push(off);
            let real = p.patch.real_order();
            for (v, r) in p.patch.graph().rotations().iter().enumerate() {
                draft.rot.push(r.iter().map(|&w| w + off).collect());
                draft.leaf.push(v >= real);
            }
            s.extend(p.s.iter().map(|&(a, b)| (a + off, b + off)));
            m.extend(p.m.iter().map(|&(a, b)| (a + off, b + off)));
        }
        let apart = st.apart.iter().map(|&(a, b)| edge(offs[a.0] + a.1, offs[b.0] + b.1)).collect();
        Union { draft, s, m, apart }
    }

    /// Attaches leaf `l` to `v` in place of the leaf; returns its anchor.
    fn fuse(&mut self, l: usize, v: usize) -> usize {
        let a = self.draft.rot[l][0];
        self.draft.replace(a, l, v);
        self.draft.kill_leaf(l);
        a
    }

    /// Gives `v` the neighbours named by the slots, in order.
    fn fill(&mut self, v: usize, slots: &[Slot]) -> Vec<usize> {
        slots
            .iter()
            .map(|s| match *s {
                Slot::New => self.draft.new_leaf(v),
                Slot::Stub(l) => self.fuse(l, v),
            })
            .collect()
    }

    fn stub_pair_ok(&self, slots: &[Slot]) -> bool {
        match slots {
            [Slot::Stub(x), Slot::Stub(y)] => x != y && !self.apart.contains(&edge(*x, *y)),
            _ => true,
        }
    }
}

/// Splits a draft into connected pieces and validates each one.
fn split(u: Union, bounds: &SeedBounds) -> Option<(Vec<Piece>, Vec<(StubRef, StubRef)>)> {
    let n = u.draft.rot.len();
    let mut comp = vec![usize::MAX; n];
    let mut groups: Vec<Vec<usize>> = Vec::new();
    for v in 0..n {
        if comp[v] != usize::MAX || u.draft.rot[v].is_empty() {
            continue;
        }
        let c = groups.len();
        let mut stack = vec![v];
        comp[v] = c;
        let mut g = Vec::new();
        while let Some(x) = stack.pop() {
            g.push(x);
            for &y in &u.draft.rot[x] {
                if comp[y] == usize::MAX {
                    comp[y] = c;
                    stack.push(y);
                }
            }
        }
        g.sort_unstable();
        groups.push(g);
    }
    let mut place: Vec<Option<StubRef>> = vec![None; n];
    let mut pieces = Vec::new();
    let mut stubs = 0;
    for (c, g) in groups.iter().enumerate() {
        let local: HashMap<usize, usize> = g.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let d = Draft {
            rot: g.iter().map(|&v| u.draft.rot[v].iter().map(|w| local[w]).collect()).collect(),
            leaf: g.iter().map(|&v| u.draft.leaf[v]).collect(),
            marker: None,
        };
        let (patch, id) = d.finish_with_map().ok()?;
        if !piece_ok(&patch) {
            return None;
        }
        for (i, &v) in g.iter().enumerate() {
            place[v] = Some((c, id[i]));
        }
        let map = |(a, b): Edge| -> Option<Edge> {
            let (la, lb) = (local.get(&a)?, local.get(&b)?);
            Some(edge(id[*la], id[*lb]))
        };
        let s: Vec<Edge> = u.s.iter().filter_map(|&e| map(e)).collect();
        let m: Vec<Edge> = u.m.iter().filter_map(|&e| map(e)).collect();
        stubs += patch.stub_count();
        pieces.push(Piece { patch, s, m });
    }
    if stubs > bounds.max_stubs {
        return None;
    }
    let apart = u
        .apart
        .iter()
        .filter(|&&(a, b)| u.draft.leaf[a] && u.draft.leaf[b] && !u.draft.rot[a].is_empty() && !u.draft.rot[b].is_empty())
        .map(|&(a, b)| (place[a].unwrap(), place[b].unwrap()))
        .collect();
    Some((pieces, apart))
}

/// Local feasibility inside a fullerene: faces of size five or six, no
/// gap that would need a face of seven, and no outside vertex forced to
/// have all three neighbours inside.
fn piece_ok(p: &GeneralizedPatch) -> bool {
    if p.interior_faces().iter().any(|f| f.len() != 5 && f.len() != 6) {
        return false;
    }
    let g = p.gaps().0;
    let k = g.len();
    if g.iter().any(|&a| a > 5) {
        return false;
    }
    if k >= 3 && (0..k).any(|i| g[i] == 5 && g[(i + 1) % k] == 5) {
        return false;
    }
    true
}

/// True if some forcing edge is implied by the other two through vertices
/// whose neighbourhood is completely known.
pub fn redundant_forcing_edge(pieces: &[Piece]) -> bool {
    pieces.iter().any(|p| {
        p.s.iter().any(|e| {
            let others: Vec<Edge> = p.s.iter().copied().filter(|f| f != e).collect();
            unit_propagation(&p.patch, &others).is_some_and(|forced| forced.contains(e))
        })
    })
}

/// Repeatedly matches an interior vertex (one without stubs) that has a
/// single unmatched neighbour. Returns `s` with the edges matched this
/// way, or `None` once an interior vertex is left without a partner.
fn unit_propagation(p: &GeneralizedPatch, s: &[Edge]) -> Option<Vec<Edge>> {
    let real = p.real_order();
    let g = p.graph();
    let mut mate = vec![usize::MAX; real];
    for &(a, b) in s {
        mate[a] = b;
        mate[b] = a;
    }
    let mut out: Vec<Edge> = s.to_vec();
    loop {
        let mut changed = false;
        for v in 0..real {
            if mate[v] != usize::MAX || p.stubs_at(v) > 0 {
                continue;
            }
            let free: Vec<usize> = g.rotation(v).iter().copied().filter(|&w| w < real && mate[w] == usize::MAX).collect();
            match free.len() {
                0 => return None,
                1 => {
                    mate[v] = free[0];
                    mate[free[0]] = v;
                    out.push(edge(v, free[0]));
                    changed = true;
                }
                _ => {}
            }
        }
        if !changed {
            break;
        }
    }
    Some(out)
}

/// The unique way to extend the matching `s` so that every interior
/// vertex (one without half-edges) is matched inside the patch. Vertices
/// with half-edges may stay exposed, and added edges always have an
/// interior end. `None` when there is no such extension or more than one.
pub fn propagation_forces(p: &GeneralizedPatch, s: &[Edge]) -> Option<Vec<Edge>> {
    let real = p.real_order();
    let g = p.graph();
    let mut mate = vec![usize::MAX; real];
    for &(a, b) in s {
        if mate[a] != usize::MAX || mate[b] != usize::MAX {
            return None;
        }
        mate[a] = b;
        mate[b] = a;
    }
    let interior: Vec<usize> = (0..real).filter(|&v| p.stubs_at(v) == 0).collect();
    let mut found: Vec<Vec<Edge>> = Vec::new();
    let mut added = Vec::new();
    extend(g, real, &interior, &mut mate, &mut added, &mut found);
    if found.len() != 1 {
        return None;
    }
    let mut out: Vec<Edge> = s.iter().map(|&(a, b)| edge(a, b)).collect();
    out.extend(found.pop().unwrap());
    out.sort_unstable();
    Some(out)
}

/// Depth-first extension, stopping after two complete extensions.
fn extend(
    g: &crate::plane::PlaneGraph,
    real: usize,
    interior: &[usize],
    mate: &mut [usize],
    added: &mut Vec<Edge>,
    found: &mut Vec<Vec<Edge>>,
) {
    if found.len() >= 2 {
        return;
    }
    let Some(&v) = interior.iter().find(|&&v| mate[v] == usize::MAX) else {
        found.push(added.clone());
        return;
    };
    for &w in g.rotation(v) {
        if w >= real || mate[w] != usize::MAX {
            continue;
        }
        mate[v] = w;
        mate[w] = v;
        added.push(edge(v, w));
        extend(g, real, interior, mate, added, found);
        added.pop();
        mate[v] = usize::MAX;
        mate[w] = usize::MAX;
    }
}

const JOIN_ARRAYS: [(&str, u8); 3] = [("[12313215]", 1), ("[12321414]", 2), ("[12314124]", 3)];

/// Types of the vertices joining two forcing edges, read from the
/// six-vertex tree they span with their partners.
fn join_types(pieces: &[Piece]) -> Vec<u8> {
    let mut out = Vec::new();
    for p in pieces {
        let real = p.patch.real_order();
        let g = p.patch.graph();
        let mut s_of = vec![usize::MAX; real];
        let mut mate = vec![usize::MAX; real];
        for (i, &(a, b)) in p.s.iter().enumerate() {
            s_of[a] = i;
            s_of[b] = i;
        }
        for &(a, b) in p.s.iter().chain(p.m.iter()) {
            mate[a] = b;
            mate[b] = a;
        }
        for v in 0..real {
            if s_of[v] != usize::MAX || mate[v] == usize::MAX {
                continue;
            }
            let nbr: Vec<usize> = g.rotation(v).iter().copied().filter(|&w| w < real && s_of[w] != usize::MAX).collect();
            if nbr.len() != 2 || s_of[nbr[0]] == s_of[nbr[1]] {
                continue;
            }
            let mut side = vec![v, mate[v]];
            for &x in &nbr {
                side.push(x);
                side.push(mate[x]);
            }
            side.sort_unstable();
            side.dedup();
            if side.len() != 6 {
                continue;
            }
            let Ok(sub) = GeneralizedPatch::from_side(g, &side) else { continue };
            let a = sub.min_array().to_string();
            if let Some((_, t)) = JOIN_ARRAYS.iter().find(|(x, _)| *x == a) {
                out.push(*t);
            }
        }
    }
    out
}

#[derive(Clone, Copy, Debug)]
enum Slot {
    New,
    Stub(usize),
}

/// Adds `w` on leaves `l1`, `l2` and its partner `z`.
fn add_pair(st: &SeedState, apart: &[Edge], l1: usize, l2: usize, flip: bool, slots: [Slot; 2], b: &SeedBounds) -> Option<SeedState> {
    let mut u = Union::of(st);
    u.apart.extend(apart.iter().copied());
    if u.apart.contains(&edge(l1, l2)) || !u.stub_pair_ok(&slots) {
        return None;
    }
    let w = u.draft.add_vertex(false);
    let z = u.draft.add_vertex(false);
    let a1 = u.fuse(l1, w);
    let a2 = u.fuse(l2, w);
    u.draft.rot[w] = if flip { vec![a2, a1, z] } else { vec![a1, a2, z] };
    let mut zr = vec![w];
    zr.extend(u.fill(z, &slots));
    u.draft.rot[z] = zr;
    u.m.push(edge(w, z));
    finish_step(st, u, b)
}

/// Adds a pentagon whose vertices `p1..p4` take the given leaves, and the
/// partner `y` of the fifth vertex `p0`.
fn add_pentagon(st: &SeedState, apart: &[Edge], ls: [usize; 4], flip: bool, slots: [Slot; 2], b: &SeedBounds) -> Option<SeedState> {
    let mut u = Union::of(st);
    u.apart.extend(apart.iter().copied());
    if !u.stub_pair_ok(&slots) {
        return None;
    }
    let p: Vec<usize> = (0..5).map(|_| u.draft.add_vertex(false)).collect();
    let y = u.draft.add_vertex(false);
    for i in 0..5 {
        let (prev, next) = (p[(i + 4) % 5], p[(i + 1) % 5]);
        let out = if i == 0 { y } else { u.fuse(ls[i - 1], p[i]) };
        u.draft.rot[p[i]] = if flip { vec![next, prev, out] } else { vec![prev, next, out] };
    }
    let mut yr = vec![p[0]];
    yr.extend(u.fill(y, &slots));
    u.draft.rot[y] = yr;
    u.m.extend([edge(p[0], y), edge(p[1], p[2]), edge(p[3], p[4])]);
    finish_step(st, u, b)
}

fn finish_step(st: &SeedState, u: Union, b: &SeedBounds) -> Option<SeedState> {
    let (pieces, apart) = split(u, b)?;
    if redundant_forcing_edge(&pieces) {
        return None;
    }
    let mut join_type = st.join_type;
    if st.case == SeedCase::ThreeEdges {
        let types = join_types(&pieces);
        if join_type == 0 {
            join_type = types.iter().copied().min().unwrap_or(0);
        }
        if types.iter().any(|&t| t < join_type) {
            return None;
        }
    }
    let mut history = st.history.clone();
    history.push(pieces.iter().map(|p| p.patch.min_array().to_string()).collect::<Vec<_>>().join("+"));
    Some(SeedState { pieces, case: st.case, join_type, steps: st.steps + 1, apart, history })
}

/// `(global leaf id, piece, stub index)` for every stub.
fn leaves(st: &SeedState) -> Vec<(usize, usize, usize)> {
    let mut out = Vec::new();
    let mut off = 0;
    for (c, p) in st.pieces.iter().enumerate() {
        for i in 0..p.patch.stub_count() {
            out.push((off + p.patch.stub(i), c, i));
        }
        off += p.patch.graph().order();
    }
    out
}

/// Neighbour choices for the partner of a new vertex, each paired with a
/// flag telling whether some fused stub only closes a face, that is lies
/// in a piece already touched by the step.
fn slot_options(ls: &[(usize, usize, usize)], used: &[usize]) -> Vec<([Slot; 2], bool)> {
    let touched: Vec<usize> = ls.iter().filter(|x| used.contains(&x.0)).map(|x| x.1).collect();
    let mut one = vec![(Slot::New, usize::MAX)];
    one.extend(ls.iter().filter(|x| !used.contains(&x.0)).map(|x| (Slot::Stub(x.0), x.1)));
    let mut out = Vec::new();
    for &(a, pa) in &one {
        for &(b, pb) in &one {
            if let (Slot::Stub(x), Slot::Stub(y)) = (a, b) {
                if x == y {
                    continue;
                }
            }
            let closing = (pa != usize::MAX && touched.contains(&pa))
                || (pb != usize::MAX && (touched.contains(&pb) || pb == pa));
            out.push(([a, b], closing));
        }
    }
    out
}

/// A connected result whose partner closed a face is dropped: the same
/// step with that stub left open is also connected and is the seed.
fn keep(child: &SeedState, closing: bool) -> bool {
    !(closing && child.pieces.len() == 1)
}

fn expand_w(st: &SeedState, ls: &[(usize, usize, usize)], apart: &[Edge], l1: usize, l2: usize, b: &SeedBounds) -> Vec<SeedState> {
    let mut out = Vec::new();
    for (slots, closing) in slot_options(ls, &[l1, l2]) {
        for flip in [false, true] {
            out.extend(add_pair(st, apart, l1, l2, flip, slots, b).filter(|c| keep(c, closing)));
        }
    }
    out
}

fn expand_pentagon(st: &SeedState, ls: &[(usize, usize, usize)], apart: &[Edge], b: &SeedBounds) -> Vec<SeedState> {
    // consecutive pentagon vertices meet either neighbouring stubs of one
    // piece or stubs of different pieces
    let step_ok = |x: &(usize, usize, usize), y: &(usize, usize, usize)| {
        if x.1 != y.1 {
            return true;
        }
        let k = st.pieces[x.1].patch.stub_count();
        (x.2 + 1) % k == y.2 || (y.2 + 1) % k == x.2
    };
    let mut out = Vec::new();
    let n = ls.len();
    for i in 0..n {
        for j in 0..n {
            if j == i || !step_ok(&ls[i], &ls[j]) {
                continue;
            }
            for k in 0..n {
                if k == i || k == j || !step_ok(&ls[j], &ls[k]) {
                    continue;
                }
                for l in 0..n {
                    if l == i || l == j || l == k || !step_ok(&ls[k], &ls[l]) {
                        continue;
                    }
                    let quad = [ls[i].0, ls[j].0, ls[k].0, ls[l].0];
                    // the pentagon always meets the piece of every forcing
                    // edge, so only connected results are kept
                    for (slots, _) in slot_options(ls, &quad) {
                        for flip in [false, true] {
                            out.extend(add_pentagon(st, apart, quad, flip, slots, b).filter(|c| c.pieces.len() == 1));
                        }
                    }
                }
            }
        }
    }
    out
}

fn successors(st: &SeedState, b: &SeedBounds) -> Vec<SeedState> {
    let ls = leaves(st);
    for (c, p) in st.pieces.iter().enumerate() {
        let g = p.patch.gaps().0;
        let k = g.len();
        if let Some(i) = (0..k).find(|&i| g[i] == 5) {
            let f = |j: usize| ls.iter().find(|x| x.1 == c && x.2 == j).unwrap().0;
            return expand_w(st, &ls, &[], f(i), f((i + 1) % k), b);
        }
    }
    let first_join = st.case == SeedCase::ThreeEdges && st.steps == 0;
    let mut out = Vec::new();
    let mut tried: Vec<Edge> = Vec::new();
    // vertices joining two pieces are tried before those on one piece
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for i in 0..ls.len() {
        for j in i + 1..ls.len() {
            pairs.push((i, j));
        }
    }
    pairs.sort_by_key(|&(i, j)| ls[i].1 == ls[j].1);
    {
        for (i, j) in pairs {
            let (l1, l2) = (ls[i].0, ls[j].0);
            // earlier pairs were tried and host no such vertex here
            let apart: &[Edge] = if first_join { &[] } else { &tried };
            out.extend(expand_w(st, &ls, apart, l1, l2, b));
            tried.push(edge(l1, l2));
        }
    }
    // no vertex with two neighbours inside: a pendent pentagon
    out.extend(expand_pentagon(st, &ls, &tried, b));
    out
}

fn path_piece(sides: &[bool]) -> Option<Piece> {
    // path v0..v_{n-1}; an inner vertex's leaf is left of the path when
    // its flag is set
    let n = sides.len() + 2;
    let mut d = Draft { rot: vec![Vec::new(); n], leaf: vec![false; n], marker: None };
    for v in 0..n {
        if v == 0 || v == n - 1 {
            let nb = if v == 0 { 1 } else { n - 2 };
            let a = d.new_leaf(v);
            let b2 = d.new_leaf(v);
            d.rot[v] = vec![nb, a, b2];
        } else {
            let l = d.new_leaf(v);
            let (p, q) = (v - 1, v + 1);
            d.rot[v] = if sides[v - 1] { vec![p, l, q] } else { vec![p, q, l] };
        }
    }
    let (patch, id) = d.finish_with_map().ok()?;
    let s = (0..n / 2).map(|i| edge(id[2 * i], id[2 * i + 1])).collect();
    Some(Piece { patch, s, m: Vec::new() })
}

fn edge_piece() -> Piece {
    path_piece(&[]).expect("edge")
}

/// Starting configurations for the three cases.
pub fn initial_states() -> Vec<SeedState> {
    let state = |pieces, case| SeedState { pieces, case, join_type: 0, steps: 0, apart: Vec::new(), history: Vec::new() };
    let mut out = Vec::new();
    for mask in 0..16u32 {
        let sides: Vec<bool> = (0..4).map(|i| mask >> i & 1 == 1).collect();
        if let Some(p) = path_piece(&sides) {
            out.push(state(vec![p], SeedCase::Path));
        }
    }
    for mask in 0..4u32 {
        let sides: Vec<bool> = (0..2).map(|i| mask >> i & 1 == 1).collect();
        if let Some(p) = path_piece(&sides) {
            out.push(state(vec![p, edge_piece()], SeedCase::PathAndEdge));
        }
    }
    out.push(state(vec![edge_piece(), edge_piece(), edge_piece()], SeedCase::ThreeEdges));
    out.retain(|st| st.pieces.iter().all(|p| piece_ok(&p.patch)) && !redundant_forcing_edge(&st.pieces));
    out
}

/// Result of the seed search.
#[derive(Clone, Debug, Default)]
pub struct SeedSearch {
    pub seeds: Vec<Seed>,
    /// Open states left when the step bound was hit.
    pub truncated: usize,
    pub states: usize,
}

/// Breadth-first search over grown subgraphs; connected ones are seeds.
pub fn search_seeds(b: &SeedBounds) -> SeedSearch {
    let mut level: BTreeMap<StateKey, SeedState> = BTreeMap::new();
    for st in initial_states() {
        level.entry(st.key()).or_insert(st);
    }
    let mut found: BTreeMap<CanonicalForm, Seed> = BTreeMap::new();
    let mut res = SeedSearch::default();
    while !level.is_empty() {
        let cur: Vec<SeedState> = level.into_values().collect();
        res.states += cur.len();
        let mut open = Vec::new();
        for st in cur {
            if st.pieces.len() == 1 {
                let p = &st.pieces[0];
                let key = p.patch.canonical_form_colored(&[(&p.s, 1)]);
                found.entry(key).or_insert_with(|| Seed {
                    patch: p.patch.clone(),
                    forcing: p.s.clone(),
                    matched: p.m.clone(),
                    min_array: p.patch.min_array(),
                    case: st.case,
                    join_type: st.join_type,
                    steps: st.steps,
                    history: st.history.clone(),
                });
            } else if st.steps >= b.max_steps {
                res.truncated += 1;
            } else {
                open.push(st);
            }
        }
        log::info!("seed level: {} open, {} seeds so far", open.len(), found.len());
        let next: Vec<SeedState> = open.par_iter().flat_map_iter(|st| successors(st, b)).collect();
        level = BTreeMap::new();
        for st in next {
            level.entry(st.key()).or_insert(st);
        }
    }
    res.seeds = found.into_values().collect();
    res
}

/// The seed family `L`, one entry per seed with its forcing edges.
#[derive(Clone, Debug)]
pub struct SeedCatalog {
    pub entries: Vec<CatalogEntry>,
    pub seeds: Vec<Seed>,
    pub truncated: usize,
    pub states: usize,
}

impl SeedCatalog {
    /// Distinct minimum arrays, sorted.
    pub fn arrays(&self) -> Vec<MinDistanceArray> {
        let set: BTreeSet<MinDistanceArray> = self.entries.iter().map(|e| e.min_array.clone()).collect();
        set.into_iter().collect()
    }
}

/// Runs the seed search and packages the seeds as catalog entries, sorted
/// by minimum array and then by id.
pub fn derive_seeds(b: &SeedBounds) -> SeedCatalog {
    let search = search_seeds(b);
    let mut pairs: Vec<(CatalogEntry, Seed)> = search
        .seeds
        .into_iter()
        .map(|sd| {
            let mut cond = vec!["grown from a forcing set of three edges", "no forcing edge implied by the others", "at most 12 half-edges"];
            if propagation_forces(&sd.patch, &sd.forcing).is_some() {
                cond.push("interior matched uniquely");
            }
            let mut e = CatalogEntry::with_forcing(Family::L, sd.patch.clone(), sd.forcing.clone(), &cond);
            let quoted = QUOTED_SEEDS.iter().find(|(a, _)| *a == e.min_array.to_string());
            e.alias = quoted.map(|(_, n)| n.to_string());
            (e, sd)
        })
        .collect();
    pairs.sort_by(|x, y| (&x.0.min_array, &x.0.id).cmp(&(&y.0.min_array, &y.0.id)));
    let (entries, seeds) = pairs.into_iter().unzip();
    SeedCatalog { entries, seeds, truncated: search.truncated, states: search.states }
}

/// Seed arrays that are quoted with a name.
pub const QUOTED_SEEDS: [(&str, &str); 5] =
    [("[12223125]", "L1"), ("[12232134]", "L2"), ("[12241224]", "L3"), ("[12331233]", "L4"), ("[12433335]", "L95")];

#[cfg(test)]
mod tests {
    use super::*;
    use crate::plane::PlaneGraph;

    #[test]
    fn propagation_on_small_patches() {
        let st = initial_states();
        // a single edge forces itself
        let e = edge_piece();
        assert_eq!(propagation_forces(&e.patch, &e.s), Some(e.s.clone()));
        // a six-vertex path with its alternate edges is fully matched
        let p = st.iter().find(|s| s.case == SeedCase::Path && s.pieces[0].patch.min_array().to_string() == "[12241224]").unwrap();
        let p = &p.pieces[0];
        let m = propagation_forces(&p.patch, &p.s).unwrap();
        assert_eq!(m.len(), 3);
        assert!(p.patch.real_graph().edges().iter().all(|&(a, b)| m.iter().any(|&(x, y)| x == a || x == b || y == a || y == b)));
    }

    #[test]
    fn propagation_is_ambiguous_around_a_free_hexagon() {
        // hexagonal prism: every vertex interior, both hexagon matchings fit
        let mut rot = Vec::new();
        for i in 0..6 {
            rot.push(vec![(i + 1) % 6, 6 + i, (i + 5) % 6]);
        }
        for i in 0..6 {
            rot.push(vec![6 + (i + 5) % 6, i, 6 + (i + 1) % 6]);
        }
        let g = PlaneGraph::new(rot).unwrap();
        let p = GeneralizedPatch::from_side(&g, &(0..12).collect::<Vec<_>>()).unwrap();
        assert_eq!(propagation_forces(&p, &[]), None);
        // fixing one spoke still leaves the two alternating ways open on
        // the rest of the prism
        let spokes: Vec<Edge> = (0..6).map(|i| edge(i, 6 + i)).collect();
        assert_eq!(propagation_forces(&p, &spokes).map(|m| m.len()), Some(6));
        assert_eq!(propagation_forces(&p, &[(0, 1), (6, 7)]), None);
    }

    #[test]
    fn initial_configurations() {
        let st = initial_states();
        let count = |c| st.iter().filter(|s| s.case == c).count();
        assert_eq!(count(SeedCase::ThreeEdges), 1);
        assert!(count(SeedCase::Path) >= 5);
        let arrays: BTreeSet<String> =
            st.iter().filter(|s| s.case == SeedCase::Path).map(|s| s.pieces[0].patch.min_array().to_string()).collect();
        for a in ["[12223125]", "[12232134]", "[12241224]", "[12331233]"] {
            assert!(arrays.contains(a), "{a}");
        }
    }
}
