//! Realization of digraph walks on patches.
//!
//! The forcing edges of the seed keep their vertex ids throughout: every
//! patch operation appends new real vertices after the existing ones.

use std::collections::HashMap;

use rand::seq::SliceRandom;
use rand::Rng;
use serde::{Deserialize, Serialize};

use super::construct::ConstructionDigraph;
use super::ops::{all_applications, OpApplication};
use crate::catalog::CatalogEntry;
use crate::error::OpError;
use crate::matching::{is_forcing_set, unique_pm_avoiding, Adjacency, Matching};
use crate::patch::{GeneralizedPatch, MinDistanceArray};
use crate::plane::{validate_fullerene, Edge, PlaneGraph};

/// A fullerene built along a walk, with the seed's forcing edges.
#[derive(Clone, Debug)]
pub struct BuiltFullerene {
    pub graph: PlaneGraph,
    pub forcing: Vec<Edge>,
    /// The perfect matching forced by `forcing`, when it is one.
    pub matching: Option<Matching>,
    pub forcing_verified: bool,
    /// Arrays of the intermediate patches, seed first.
    pub arrays: Vec<MinDistanceArray>,
}

/// Per-walk verification record.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BuildReport {
    pub seed: String,
    pub steps: usize,
    pub order: usize,
    pub valid_fullerene: bool,
    pub forcing_verified: bool,
}

enum Stage {
    Open(GeneralizedPatch),
    Closed(PlaneGraph),
}

/// Gap index in the patch for position `i` of the reading `(s, rev)`.
fn gap_of(k: usize, s: usize, rev: bool, i: usize) -> usize {
    if rev {
        (s + 2 * k - 1 - i % k) % k
    } else {
        (s + i) % k
    }
}

/// Readings of the patch boundary equal to the node's representative.
fn matching_readings(p: &GeneralizedPatch, node: &MinDistanceArray) -> Vec<(usize, bool)> {
    p.gaps().readings().into_iter().filter(|r| r.2 == node.entries()).map(|r| (r.0, r.1)).collect()
}

fn seam_matches(p: &GeneralizedPatch, q: &GeneralizedPatch, offset: usize, flip: bool, app: &OpApplication, partner: &MinDistanceArray) -> bool {
    let k = p.stub_count();
    let q = if flip { q.mirror() } else { q.clone() };
    let a = p.gaps().0;
    let b = q.gaps().0;
    let pairs: Vec<(u8, u8)> = (0..k).map(|i| (a[i], b[(offset + 2 * k - 1 - i) % k])).collect();
    let src = p.min_array().as_array().readings();
    let want = &src[app.position + if app.flip { k } else { 0 }].2;
    for s in 0..k {
        for rev in [false, true] {
            let ok = (0..k).all(|t| {
                let (x, y) = pairs[gap_of(k, s, rev, t)];
                x == want[t] && y == partner.entries()[t]
            });
            if ok {
                return true;
            }
        }
    }
    false
}

/// Applies one arc to a patch.
fn apply(p: &GeneralizedPatch, app: &OpApplication, partners: &HashMap<String, GeneralizedPatch>) -> Result<Stage, OpError> {
    let node = p.min_array();
    let k = p.stub_count();
    match app.op {
        1 | 2 | 6 => {
            let mut last = OpError::Infeasible(format!("no reading of {node} supports O{}", app.op));
            for (s, rev) in matching_readings(p, &node) {
                let g = gap_of(k, s, rev, app.position);
                let r = match app.op {
                    1 => p.add_vertex_pair(g),
                    2 => p.add_face(g, p.gap_walk(g).len()),
                    _ => p.attach_pendent_pentagon(if rev { (g + k - 2) % k } else { g }),
                };
                match r {
                    Ok(q) if q.min_array() == app.result => return Ok(Stage::Open(q)),
                    Ok(q) => last = OpError::Infeasible(format!("O{} gave {} instead of {}", app.op, q.min_array(), app.result)),
                    Err(e) => last = e,
                }
            }
            Err(last)
        }
        3 => {
            let q = p.add_face(0, p.gap_walk(0).len())?;
            Ok(Stage::Closed(q.graph().clone()))
        }
        4 | 5 | 7 => {
            let id = app.partner.as_ref().ok_or_else(|| OpError::Precondition("terminal arc without partner".into()))?;
            let q = partners.get(id).ok_or_else(|| OpError::Precondition(format!("unknown partner {id}")))?;
            let qa = q.min_array();
            let mut last = OpError::Infeasible(format!("no gluing of {id} fits"));
            for flip in [false, true] {
                for offset in 0..k {
                    if !seam_matches(p, q, offset, flip, app, &qa) {
                        continue;
                    }
                    match p.glue(q, offset, flip) {
                        Ok(g) => return Ok(Stage::Closed(g)),
                        Err(e) => last = e,
                    }
                }
            }
            Err(last)
        }
        op => Err(OpError::Precondition(format!("unknown operation {op}"))),
    }
}

/// Checks the closed graph and the forcing edges.
fn finish(g: PlaneGraph, forcing: &[Edge], arrays: Vec<MinDistanceArray>) -> Result<BuiltFullerene, OpError> {
    if let Err(v) = validate_fullerene(&g) {
        return Err(OpError::Infeasible(format!("not a fullerene: {v:?}")));
    }
    let adj = Adjacency::from_plane(&g);
    let mut deleted = vec![false; g.order()];
    for &(a, b) in forcing {
        deleted[a] = true;
        deleted[b] = true;
    }
    let (matching, verified) = match unique_pm_avoiding(&adj, &deleted) {
        Some(rest) => {
            let m = Matching::new(rest.into_iter().chain(forcing.iter().copied()).collect());
            let ok = is_forcing_set(&g, &m, forcing).unwrap_or(false);
            (Some(m), ok)
        }
        None => (None, false),
    };
    Ok(BuiltFullerene { graph: g, forcing: forcing.to_vec(), matching, forcing_verified: verified, arrays })
}

/// Realizes the arcs of `walk` one after another on the seed patch.
pub fn build_fullerene(
    seed: &CatalogEntry,
    walk: &[OpApplication],
    partners: &HashMap<String, GeneralizedPatch>,
) -> Result<BuiltFullerene, OpError> {
    let mut p = seed.patch.clone();
    let mut arrays = vec![p.min_array()];
    for (n, app) in walk.iter().enumerate() {
        match apply(&p, app, partners)? {
            Stage::Open(q) => {
                arrays.push(q.min_array());
                p = q;
            }
            Stage::Closed(g) => {
                if n + 1 != walk.len() {
                    return Err(OpError::Infeasible("walk continues after closing".into()));
                }
                arrays.push(MinDistanceArray::empty());
                return finish(g, &seed.forcing, arrays);
            }
        }
    }
    Err(OpError::Infeasible(format!("walk ends at {} before closing", p.min_array())))
}

/// Realizes a walk given only by its node arrays. Every step tries all
/// arcs between the two nodes, backtracking when a choice dead-ends.
pub fn build_along_arrays(
    seed: &CatalogEntry,
    nodes: &[MinDistanceArray],
    cats: &super::TerminalCatalogs,
    partners: &HashMap<String, GeneralizedPatch>,
) -> Result<BuiltFullerene, OpError> {
    if nodes.first() != Some(&seed.min_array) {
        return Err(OpError::Precondition("walk does not start at the seed".into()));
    }
    let mut budget = 10_000usize;
    let walk = search_arcs(&seed.patch, &nodes[1..], cats, partners, &mut budget)
        .ok_or_else(|| OpError::Infeasible("no arc choice realizes the walk".into()))?;
    build_fullerene(seed, &walk, partners)
}

fn search_arcs(
    p: &GeneralizedPatch,
    rest: &[MinDistanceArray],
    cats: &super::TerminalCatalogs,
    partners: &HashMap<String, GeneralizedPatch>,
    budget: &mut usize,
) -> Option<Vec<OpApplication>> {
    let (next, tail) = rest.split_first()?;
    let apps = all_applications(&p.min_array(), &cats.j2, &cats.t10, &cats.t12);
    for app in apps.into_iter().filter(|a| &a.result == next) {
        if *budget == 0 {
            return None;
        }
        *budget -= 1;
        match apply(p, &app, partners) {
            Ok(Stage::Open(q)) if !tail.is_empty() => {
                if let Some(mut w) = search_arcs(&q, tail, cats, partners, budget) {
                    w.insert(0, app);
                    return Some(w);
                }
            }
            Ok(Stage::Closed(g)) if tail.is_empty() && validate_fullerene(&g).is_ok() => return Some(vec![app]),
            _ => {}
        }
    }
    None
}

/// A random walk from `start` to `[]` with at most `max_len` arcs. Only
/// arcs after which `[]` stays within reach are taken.
pub fn sample_walk<R: Rng>(d: &ConstructionDigraph, start: &MinDistanceArray, max_len: usize, rng: &mut R) -> Option<Vec<OpApplication>> {
    let dist = d.distance_to_empty();
    let mut v = d.index_of(start)?;
    if dist[v] > max_len {
        return None;
    }
    let mut out = Vec::new();
    while !d.nodes[v].is_empty() {
        let left = max_len - out.len();
        let arcs: Vec<_> = d.out_arcs(v).filter(|a| dist[a.to] < left).collect();
        let a = arcs.choose(rng)?;
        out.push(a.app.clone());
        v = a.to;
    }
    Some(out)
}
