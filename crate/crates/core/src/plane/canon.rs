//! Canonical codes for connected plane graphs.
//!
//! A code is produced by a breadth-first numbering that starts from a dart
//! and lists every rotation beginning at the edge through which the vertex
//! was discovered. The minimum over all start darts and both orientations
//! is a complete invariant of the embedded graph up to orientation-reversing
//! isomorphism. Vertex and edge colours can be folded into the code, which
//! is how patches mark their half-edges and seeds mark their forcing edges.

use std::cmp::Ordering;
use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::plane::{edge, Dart, Edge, PlaneGraph};

/// Certificate of a plane graph; equal iff isomorphic up to mirror.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CanonicalForm(pub Vec<u32>);

impl CanonicalForm {
    /// Short stable hexadecimal digest, used as a content-addressed id.
    pub fn digest(&self) -> String {
        // FNV-1a, 64 bit
        let mut h: u64 = 0xcbf29ce484222325;
        for &x in &self.0 {
            for b in x.to_le_bytes() {
                h ^= b as u64;
                h = h.wrapping_mul(0x100000001b3);
            }
        }
        format!("{h:016x}")
    }
}

/// Options for [`canonical_code`].
#[derive(Clone, Debug, Default)]
pub struct CodeOptions<'a> {
    /// Per-vertex colour (defaults to 0).
    pub vertex_colors: Option<&'a [u32]>,
    /// Colour of selected edges (others are 0).
    pub edge_colors: Option<&'a HashMap<Edge, u32>>,
    /// Restrict start darts; all darts when `None`.
    pub starts: Option<&'a [Dart]>,
    /// Also try the mirror orientation.
    pub mirror: bool,
}

/// Result of a canonical labelling.
#[derive(Clone, Debug)]
pub struct Labelling {
    pub code: Vec<u32>,
    /// `order[i]` is the vertex that received number `i`.
    pub order: Vec<usize>,
    pub start: Dart,
    pub mirrored: bool,
}

/// Canonical form of a connected plane graph, mirror images identified.
pub fn canonical_form(g: &PlaneGraph) -> CanonicalForm {
    CanonicalForm(
        canonical_code(g, &CodeOptions { mirror: true, ..Default::default() })
            .first()
            .map(|l| l.code.clone())
            .unwrap_or_default(),
    )
}

/// All labellings achieving the minimum code. Their number is the order of
/// the (colour-preserving) automorphism group restricted to the start set.
pub fn canonical_code(g: &PlaneGraph, opts: &CodeOptions<'_>) -> Vec<Labelling> {
    let n = g.order();
    if n == 0 {
        return vec![Labelling { code: vec![], order: vec![], start: (0, 0), mirrored: false }];
    }
    let all: Vec<Dart>;
    let starts: &[Dart] = match opts.starts {
        Some(s) => s,
        None => {
            all = g.darts().collect();
            &all
        }
    };
    if starts.is_empty() {
        // isolated vertex
        let c = opts.vertex_colors.map_or(0, |c| c[0]);
        return vec![Labelling { code: vec![c, 0], order: vec![0], start: (0, 0), mirrored: false }];
    }
    let mut best: Vec<Labelling> = Vec::new();
    let mut scratch = Scratch::new(n);
    let orientations: &[bool] = if opts.mirror { &[false, true] } else { &[false] };
    for &mirrored in orientations {
        for &d in starts {
            let bound = best.first().map(|l| l.code.as_slice());
            if let Some((code, order)) = scratch.run(g, d, mirrored, opts, bound) {
                match best.first().map(|b| code.cmp(&b.code)) {
                    None | Some(Ordering::Less) => {
                        best.clear();
                        best.push(Labelling { code, order, start: d, mirrored });
                    }
                    Some(Ordering::Equal) => {
                        best.push(Labelling { code, order, start: d, mirrored })
                    }
                    Some(Ordering::Greater) => {}
                }
            }
        }
    }
    best
}

/// Vertex orbits under the automorphisms found by [`canonical_code`].
/// Returns `orbit[v]` = smallest vertex in the orbit of `v`.
pub fn vertex_orbits(g: &PlaneGraph, opts: &CodeOptions<'_>) -> Vec<usize> {
    let labs = canonical_code(g, opts);
    let n = g.order();
    let mut orbit: Vec<usize> = (0..n).collect();
    fn find(o: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while o[r] != r {
            r = o[r];
        }
        let mut y = x;
        while o[y] != r {
            let nx = o[y];
            o[y] = r;
            y = nx;
        }
        r
    }
    if let Some(first) = labs.first() {
        for l in &labs[1..] {
            for i in 0..l.order.len() {
                let (a, b) = (find(&mut orbit, first.order[i]), find(&mut orbit, l.order[i]));
                if a != b {
                    let (lo, hi) = if a < b { (a, b) } else { (b, a) };
                    orbit[hi] = lo;
                }
            }
        }
    }
    (0..n).map(|v| find(&mut orbit, v)).collect()
}

struct Scratch {
    number: Vec<u32>,
    order: Vec<usize>,
    parent: Vec<usize>,
}

impl Scratch {
    fn new(n: usize) -> Self {
        Scratch { number: vec![u32::MAX; n], order: Vec::with_capacity(n), parent: vec![0; n] }
    }

    /// Builds the code from dart `d`; aborts with `None` as soon as the code
    /// exceeds `bound`.
    fn run(
        &mut self,
        g: &PlaneGraph,
        (u, v): Dart,
        mirrored: bool,
        opts: &CodeOptions<'_>,
        bound: Option<&[u32]>,
    ) -> Option<(Vec<u32>, Vec<usize>)> {
        for &x in &self.order {
            self.number[x] = u32::MAX;
        }
        self.order.clear();
        let mut code: Vec<u32> = Vec::with_capacity(4 * g.order());
        let mut equal_so_far = bound.is_some();
        // returns false when the code is already larger than the bound
        let push = |code: &mut Vec<u32>, x: u32, eq: &mut bool| -> bool {
            if *eq {
                let b = bound.unwrap();
                let i = code.len();
                match b.get(i).map(|&y| x.cmp(&y)) {
                    Some(Ordering::Less) => *eq = false,
                    Some(Ordering::Greater) | None => return false,
                    Some(Ordering::Equal) => {}
                }
            }
            code.push(x);
            true
        };
        self.number[u] = 0;
        self.order.push(u);
        self.parent[u] = v;
        let mut head = 0;
        while head < self.order.len() {
            let x = self.order[head];
            head += 1;
            let rot = g.rotation(x);
            let deg = rot.len();
            let color = opts.vertex_colors.map_or(0, |c| c[x]);
            if !push(&mut code, color, &mut equal_so_far) || !push(&mut code, deg as u32, &mut equal_so_far) {
                return None;
            }
            if deg == 0 {
                continue;
            }
            let p = self.parent[x];
            let s = rot.iter().position(|&w| w == p).unwrap_or(0);
            for k in 0..deg {
                let idx = if mirrored { (s + deg - k) % deg } else { (s + k) % deg };
                let w = rot[idx];
                if self.number[w] == u32::MAX {
                    self.number[w] = self.order.len() as u32;
                    self.order.push(w);
                    self.parent[w] = x;
                }
                let mut sym = self.number[w] + 1;
                if let Some(ec) = opts.edge_colors {
                    if let Some(&c) = ec.get(&edge(x, w)) {
                        sym += c << 16;
                    }
                }
                if !push(&mut code, sym, &mut equal_so_far) {
                    return None;
                }
            }
        }
        Some((code, self.order.clone()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::plane::named;

    #[test]
    fn relabel_and_mirror_invariance() {
        let g = named::f24();
        let n = g.order();
        let perm: Vec<usize> = (0..n).map(|i| (i * 7 + 3) % n).collect();
        let c = canonical_form(&g);
        assert_eq!(c, canonical_form(&g.relabel(&perm)));
        assert_eq!(c, canonical_form(&g.mirror()));
        assert_ne!(c, canonical_form(&named::dodecahedron()));
    }

    #[test]
    fn dodecahedron_has_120_automorphisms() {
        let g = named::dodecahedron();
        let labs = canonical_code(&g, &CodeOptions { mirror: true, ..Default::default() });
        assert_eq!(labs.len(), 120);
        let orbits = vertex_orbits(&g, &CodeOptions { mirror: true, ..Default::default() });
        assert!(orbits.iter().all(|&o| o == 0));
    }
}
