//! The patch families: J1, J2, P, the white-vertex family of 7-cut
//! patches, and the terminal patches of arity 10 and 12.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::complete::{complete, Completion, CompletionBudget};
use super::grow::{grow_discs, GrowthBounds};
use crate::matching::has_unique_pm;
use crate::patch::{GeneralizedPatch, MinDistanceArray};
use crate::plane::{CanonicalForm, Edge};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Family {
    J,
    PP,
    P,
    D,
    T10,
    T12,
    L,
    W,
}

/// A derived catalog member.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CatalogEntry {
    /// Content-addressed id (digest of the canonical form).
    pub id: String,
    /// Conventional name when a quoted array pins it down.
    pub alias: Option<String>,
    pub family: Family,
    pub patch: GeneralizedPatch,
    pub min_array: MinDistanceArray,
    /// Forcing edges of a seed; empty for the other families.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub forcing: Vec<Edge>,
    /// Conditions that were checked for membership.
    pub derivation: Vec<String>,
}

impl CatalogEntry {
    pub fn new(family: Family, patch: GeneralizedPatch, derivation: &[&str]) -> Self {
        Self::with_forcing(family, patch, Vec::new(), derivation)
    }

    /// An entry whose forcing edges are part of its identity.
    pub fn with_forcing(family: Family, patch: GeneralizedPatch, forcing: Vec<Edge>, derivation: &[&str]) -> Self {
        let cf = patch.canonical_form(&forcing);
        CatalogEntry {
            id: format!("{:?}-{}", family, &cf.digest()[..12]).to_lowercase(),
            alias: None,
            family,
            min_array: patch.min_array(),
            patch,
            forcing,
            derivation: derivation.iter().map(|s| s.to_string()).collect(),
        }
    }

    pub fn canonical_form(&self) -> CanonicalForm {
        self.patch.canonical_form(&self.forcing)
    }
}

/// Search limits shared by the derivations.
#[derive(Clone, Copy, Debug)]
pub struct CatalogBudget {
    pub max_faces: usize,
    pub max_stubs: usize,
    pub completion: CompletionBudget,
}

impl Default for CatalogBudget {
    fn default() -> Self {
        CatalogBudget { max_faces: 12, max_stubs: 10, completion: CompletionBudget { max_order: 100, max_nodes: 200_000 } }
    }
}

/// Whether the patch occurs as an induced subgraph of some fullerene.
/// Only a found completion counts.
pub fn realizable(p: &GeneralizedPatch, b: &CatalogBudget) -> bool {
    p.gaps().0.iter().all(|&a| a <= 5) && matches!(complete(p, b.completion), Completion::Found(_))
}

fn dedup(entries: Vec<CatalogEntry>) -> Vec<CatalogEntry> {
    let mut m: BTreeMap<CanonicalForm, CatalogEntry> = BTreeMap::new();
    for e in entries {
        m.entry(e.canonical_form()).or_insert(e);
    }
    m.into_values().collect()
}

fn white_vertices(p: &GeneralizedPatch) -> Vec<usize> {
    let g = p.real_graph();
    (0..p.stub_count())
        .filter(|&i| {
            let x = p.anchor(i);
            let keep: Vec<usize> = (0..g.order()).filter(|&v| v != x).collect();
            has_unique_pm(&g.induced(&keep).0)
        })
        .collect()
}

/// Generalized patches grown from a vertex by adding faces and pendant
/// vertices, with unique perfect matching, `k` half-edges and a cycle.
pub fn derive_unique_pm_small(k: usize, b: &CatalogBudget) -> Vec<CatalogEntry> {
    let mut level: BTreeMap<CanonicalForm, GeneralizedPatch> = BTreeMap::new();
    let v = GeneralizedPatch::single_vertex();
    level.insert(v.canonical_form(&[]), v);
    let mut all = Vec::new();
    let max_real = 2 * k + 2;
    while !level.is_empty() {
        let cur: Vec<GeneralizedPatch> = level.into_values().collect();
        let next: Vec<GeneralizedPatch> = cur
            .par_iter()
            .flat_map_iter(|p| {
                let mut c = Vec::new();
                for i in 0..p.stub_count() {
                    c.extend(p.sprout(i));
                    for s in [5, 6] {
                        c.extend(p.add_face(i, s));
                    }
                }
                c.into_iter().filter(|c| c.real_order() <= max_real && c.stub_count() <= k + 2 && !c.is_closed())
            })
            .collect();
        all.extend(cur);
        level = next.into_iter().map(|p| (p.canonical_form(&[]), p)).collect();
    }
    let found: Vec<CatalogEntry> = all
        .into_par_iter()
        .filter(|p| {
            let g = p.real_graph();
            p.stub_count() == k
                && g.size() >= g.order()
                && (k != 8 || p.n1() == 0)
                && has_unique_pm(&g)
                && realizable(p, b)
        })
        .map(|p| CatalogEntry::new(Family::J, p, &["unique perfect matching", "cyclic boundary", "realizable"]))
        .collect();
    let mut out = dedup(found);
    for e in &mut out {
        e.alias = Some(if k == 6 { "J1" } else { "J2" }.to_string());
    }
    out
}

/// 7-cut and 6-cut disc patches with at most five pentagons.
fn discs(k: usize, b: &CatalogBudget) -> Vec<GeneralizedPatch> {
    grow_discs(GrowthBounds { max_pentagons: 5, max_stubs: b.max_stubs, max_faces: b.max_faces, max_gap: 6 })
        .into_iter()
        .flatten()
        .filter(|p| p.stub_count() == k && p.gaps().0.iter().all(|&a| a <= 5))
        .collect()
}

/// Patches bounded by a degenerate cyclic 6-edge-cut with five pentagons
/// or at least 14 vertices.
pub fn derive_p_family(b: &CatalogBudget) -> Vec<CatalogEntry> {
    let found: Vec<CatalogEntry> = discs(6, b)
        .into_par_iter()
        .filter(|p| (p.pentagons() == 5 || p.real_order() >= 14) && realizable(p, b))
        .map(|p| CatalogEntry::new(Family::P, p, &["disc", "6 half-edges", "f5 <= 5", "f5 = 5 or order >= 14", "realizable"]))
        .collect();
    let mut out = dedup(found);
    for e in &mut out {
        e.alias = match e.min_array.to_string().as_str() {
            "[233324]" => Some("P1".into()),
            "[233333]" => Some("P2".into()),
            _ => None,
        };
    }
    out
}

const D_ALIASES: [(&str, &str); 8] = [
    ("[2223223]", "D05"),
    ("[2232323]", "D08"),
    ("[2233224]", "D09"),
    ("[2233233]", "D12"),
    ("[2242324]", "D13"),
    ("[2233324]", "D18"),
    ("[2243234]", "D19"),
    ("[2242424]", "D29"),
];

/// Disc patches bounded by a degenerate cyclic 7-edge-cut with at most
/// five pentagons and a white vertex: a degree-two vertex whose removal
/// leaves a unique perfect matching.
pub fn derive_d_family(b: &CatalogBudget) -> Vec<CatalogEntry> {
    let found: Vec<CatalogEntry> = discs(7, b)
        .into_par_iter()
        .filter(|p| !white_vertices(p).is_empty() && realizable(p, b))
        .map(|p| CatalogEntry::new(Family::D, p, &["disc", "7 half-edges", "f5 <= 5", "white vertex", "realizable"]))
        .collect();
    let mut out = dedup(found);
    for e in &mut out {
        let s = e.min_array.to_string();
        e.alias = D_ALIASES.iter().find(|(a, _)| *a == s).map(|(_, n)| n.to_string());
    }
    out
}

/// Members of the D family with a marked white vertex, one per orbit.
pub fn white_types(d: &[CatalogEntry]) -> Vec<GeneralizedPatch> {
    let mut m: BTreeMap<CanonicalForm, GeneralizedPatch> = BTreeMap::new();
    for e in d {
        for i in white_vertices(&e.patch) {
            let t = e.patch.clone().with_marker(Some(i));
            m.entry(t.canonical_form(&[])).or_insert(t);
        }
    }
    m.into_values().collect()
}

/// Pentagon, a vertex, and J1 through its pendant vertex, with the two
/// middle half-edges on opposite sides.
pub fn pp_candidates() -> Vec<GeneralizedPatch> {
    let j1 = GeneralizedPatch::ring(5).sprout(0).expect("J1");
    let mut out = Vec::new();
    for i in (0..j1.stub_count()).filter(|&i| j1.stubs_at(j1.anchor(i)) == 2) {
        let a = j1.sprout(i).expect("sprout");
        for j in (0..a.stub_count()).filter(|&j| a.stubs_at(a.anchor(j)) == 2) {
            out.push(a.bridge(j, &GeneralizedPatch::ring(5), 0).expect("bridge"));
        }
    }
    out
}

pub fn derive_pp(b: &CatalogBudget) -> Vec<CatalogEntry> {
    let found = pp_candidates()
        .into_iter()
        .filter(|p| has_unique_pm(&p.real_graph()) && realizable(p, b))
        .map(|p| CatalogEntry::new(Family::PP, p, &["pentagon-vertex-J1 chain", "unique perfect matching", "realizable"]))
        .collect();
    let mut out = dedup(found);
    for e in &mut out {
        e.alias = Some("PP".into());
    }
    out
}

/// A pentagon joined by an edge to a white vertex of a D-family patch.
pub fn derive_terminal10(types: &[GeneralizedPatch], b: &CatalogBudget) -> Vec<CatalogEntry> {
    let pent = GeneralizedPatch::ring(5);
    let found: Vec<CatalogEntry> = types
        .par_iter()
        .filter_map(|t| pent.bridge(0, t, t.marker()?).ok())
        .filter(|p| p.stub_count() == 10 && has_unique_pm(&p.real_graph()) && realizable(p, b))
        .map(|p| CatalogEntry::new(Family::T10, p, &["pentagon + D patch", "unique perfect matching", "10 half-edges", "realizable"]))
        .collect();
    dedup(found)
}

/// Two D-family patches joined by an edge between white vertices.
pub fn derive_terminal12(types: &[GeneralizedPatch], b: &CatalogBudget) -> Vec<CatalogEntry> {
    let mut pairs = Vec::new();
    for (i, x) in types.iter().enumerate() {
        for y in &types[i..] {
            pairs.push((x, y.clone()));
            pairs.push((x, y.mirror()));
        }
    }
    let found: Vec<CatalogEntry> = pairs
        .par_iter()
        .filter_map(|(x, y)| x.bridge(x.marker()?, y, y.marker()?).ok())
        .filter(|p| {
            p.stub_count() == 12
                && has_unique_pm(&p.real_graph())
                && !p.structural_predicates().has_pendent_pentagon
                && realizable(p, b)
        })
        .map(|p| CatalogEntry::new(Family::T12, p, &["two D patches", "unique perfect matching", "no pendent pentagon", "12 half-edges", "realizable"]))
        .collect();
    dedup(found)
}
