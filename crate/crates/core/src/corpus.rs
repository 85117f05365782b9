//! Named fullerenes built from patches: nanotubes of type (4,2) and (6,1),
//! plus the test corpus assembled from them.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::catalog::grow::{grow_discs, GrowthBounds};
use crate::catalog::{CatalogEntry, Catalogs};
use crate::digraph::{build_along_arrays, BuiltFullerene};
use crate::error::OpError;
use crate::patch::{GeneralizedPatch, MinDistanceArray};
use crate::plane::{canonical_form, named, validate_fullerene, PlaneGraph};

/// Cap boundaries of (4,2) nanotubes.
pub const CAP_ARRAYS_42: [&str; 3] = ["[234234]", "[233424]", "[233343]"];

/// Hexagons in one layer of a (4,2) tube.
pub const LAYER_HEXAGONS_42: usize = 6;

/// The (6,1) walk from the seed `[123151323135]`; the loop node repeats
/// seven times per hexagon layer.
pub const WALK_61_HEAD: [&str; 9] = [
    "123151323135",
    "1323142315",
    "1323314315",
    "1323331515",
    "13332325",
    "13333234",
    "13333325",
    "13333334",
    "13333335",
];
pub const WALK_61_LOOP: &str = "13333335";
pub const WALK_61_TAIL: [&str; 7] = ["333334", "153335", "135335", "3435", "1555", "56", ""];

/// A fullerene that can be built by name.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum NamedFullerene {
    F20,
    F24,
    Gk(usize),
    /// Cap array and number of hexagon layers.
    Nanotube42(MinDistanceArray, usize),
    /// Number of hexagon layers; both caps come from the (6,1) walk.
    Nanotube61(usize),
}

impl fmt::Display for NamedFullerene {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NamedFullerene::F20 => write!(f, "F20"),
            NamedFullerene::F24 => write!(f, "F24"),
            NamedFullerene::Gk(k) => write!(f, "G{k}"),
            NamedFullerene::Nanotube42(a, l) => {
                let digits: String = a.entries().iter().map(|d| d.to_string()).collect();
                write!(f, "nanotube42:{digits}:{l}")
            }
            NamedFullerene::Nanotube61(l) => write!(f, "nanotube61:{l}"),
        }
    }
}

impl FromStr for NamedFullerene {
    type Err = OpError;

    /// Accepts `F20`, `F24`, `G<k>`, `nanotube42:<cap>:<layers>` and
    /// `nanotube61:<layers>`.
    fn from_str(s: &str) -> Result<Self, OpError> {
        let bad = || OpError::Precondition(format!("unknown fullerene name {s:?}"));
        let num = |t: &str| t.parse::<usize>().map_err(|_| bad());
        let parts: Vec<&str> = s.split(':').collect();
        match parts.as_slice() {
            ["F20"] => Ok(NamedFullerene::F20),
            ["F24"] => Ok(NamedFullerene::F24),
            [g] if g.starts_with('G') => Ok(NamedFullerene::Gk(num(&g[1..])?)),
            ["nanotube42", cap, l] => {
                let a: MinDistanceArray = cap.parse().map_err(|_| bad())?;
                if !CAP_ARRAYS_42.contains(&a.to_string().as_str()) {
                    return Err(OpError::Precondition(format!("{a} is not a (4,2) cap array")));
                }
                Ok(NamedFullerene::Nanotube42(a, num(l)?))
            }
            ["nanotube61", l] => Ok(NamedFullerene::Nanotube61(num(l)?)),
            _ => Err(bad()),
        }
    }
}

/// Catalogs needed by the walk-built nanotubes.
pub struct WalkContext<'a> {
    pub catalogs: &'a Catalogs,
    pub seeds: &'a [CatalogEntry],
}

pub fn construct_named(name: &NamedFullerene, ctx: Option<&WalkContext<'_>>) -> Result<PlaneGraph, OpError> {
    match name {
        NamedFullerene::F20 => Ok(named::dodecahedron()),
        NamedFullerene::F24 => Ok(named::f24()),
        NamedFullerene::Gk(0) => Err(OpError::Precondition("G^k needs k >= 1".into())),
        NamedFullerene::Gk(k) => Ok(named::gk(*k)),
        NamedFullerene::Nanotube42(a, l) => nanotube42(a, *l),
        NamedFullerene::Nanotube61(l) => {
            let ctx = ctx.ok_or_else(|| OpError::Precondition("nanotube61 needs the seed catalogs".into()))?;
            Ok(nanotube61(ctx, *l)?.graph)
        }
    }
}

/// The smallest cap (six pentagons, six half-edges) for every (4,2) array.
pub fn minimal_caps_42() -> BTreeMap<MinDistanceArray, GeneralizedPatch> {
    let levels = grow_discs(GrowthBounds { max_pentagons: 6, max_stubs: 10, max_faces: 8, max_gap: 5 });
    let mut out = BTreeMap::new();
    for p in levels.iter().flatten() {
        if p.pentagons() != 6 || p.stub_count() != 6 {
            continue;
        }
        let a = p.min_array();
        if CAP_ARRAYS_42.contains(&a.to_string().as_str()) {
            out.entry(a).or_insert_with(|| p.clone());
        }
    }
    out
}

/// All caps of a (4,2) array up to one layer above the minimal one. Caps
/// differing by a whole layer are not distinct, so this lists each cap
/// once.
pub fn caps_42() -> Vec<GeneralizedPatch> {
    let mut out = Vec::new();
    for (_, cap) in minimal_caps_42() {
        let mut p = cap;
        for _ in 0..LAYER_HEXAGONS_42 / 2 {
            out.push(p.clone());
            p = hexagon_step(&p).expect("caps extend");
        }
    }
    out
}

/// Two hexagons added to a cap so that its boundary array is unchanged.
fn hexagon_step(p: &GeneralizedPatch) -> Option<GeneralizedPatch> {
    let want = p.min_array();
    for i in 0..p.stub_count() {
        let Ok(q) = p.add_face(i, 6) else { continue };
        for j in 0..q.stub_count() {
            let Ok(r) = q.add_face(j, 6) else { continue };
            if r.stub_count() == p.stub_count() && r.min_array() == want {
                return Some(r);
            }
        }
    }
    None
}

/// Extends a cap by `layers` rings of hexagons.
pub fn extend_cap(cap: &GeneralizedPatch, layers: usize) -> Result<GeneralizedPatch, OpError> {
    let mut p = cap.clone();
    for _ in 0..layers * LAYER_HEXAGONS_42 / 2 {
        p = hexagon_step(&p).ok_or_else(|| OpError::Infeasible(format!("no hexagon layer fits {}", p.min_array())))?;
    }
    Ok(p)
}

/// Two minimal caps with array `cap` and `layers` hexagon layers between
/// them. Among the admissible seams the one with the least canonical form
/// is taken.
pub fn nanotube42(cap: &MinDistanceArray, layers: usize) -> Result<PlaneGraph, OpError> {
    let caps = minimal_caps_42();
    let c = caps.get(cap).ok_or_else(|| OpError::Precondition(format!("{cap} is not a (4,2) cap array")))?;
    let long = extend_cap(c, layers)?;
    let mut best: Option<(crate::plane::CanonicalForm, PlaneGraph)> = None;
    for flip in [false, true] {
        for offset in 0..c.stub_count() {
            let Ok(g) = long.glue(c, offset, flip) else { continue };
            if validate_fullerene(&g).is_err() {
                continue;
            }
            let key = canonical_form(&g);
            if best.as_ref().map_or(true, |(b, _)| key < *b) {
                best = Some((key, g));
            }
        }
    }
    best.map(|(_, g)| g).ok_or_else(|| OpError::Infeasible(format!("no seam closes two {cap} caps")))
}

/// Node arrays of the (6,1) walk with `layers` extra loop turns per layer.
pub fn walk_61(layers: usize) -> Vec<MinDistanceArray> {
    let mut w: Vec<&str> = WALK_61_HEAD.to_vec();
    w.extend(std::iter::repeat(WALK_61_LOOP).take(7 * layers));
    w.extend(WALK_61_TAIL);
    w.iter().map(|s| if s.is_empty() { MinDistanceArray::empty() } else { s.parse().expect("fixed walk") }).collect()
}

/// Realizes the (6,1) walk from the first seed with the starting array.
pub fn nanotube61(ctx: &WalkContext<'_>, layers: usize) -> Result<BuiltFullerene, OpError> {
    let nodes = walk_61(layers);
    let tc = ctx.catalogs.terminal();
    let partners = ctx.catalogs.partner_patches();
    let mut last = OpError::Precondition(format!("no seed with array {}", nodes[0]));
    for s in ctx.seeds.iter().filter(|s| s.min_array == nodes[0]) {
        match build_along_arrays(s, &nodes, &tc, &partners) {
            Ok(b) => return Ok(b),
            Err(e) => last = e,
        }
    }
    Err(last)
}

/// One member of the test corpus.
#[derive(Clone, Debug)]
pub struct CorpusGraph {
    pub id: String,
    pub graph: PlaneGraph,
}

/// The named part of the corpus: `G^1` to `G^4`, (4,2) tubes with 0 to 2
/// layers on each cap array, and the (6,1) tubes for one and two layers
/// when the catalogs are at hand.
pub fn named_corpus(ctx: Option<&WalkContext<'_>>) -> Result<Vec<CorpusGraph>, OpError> {
    let mut names: Vec<NamedFullerene> = (1..=4).map(NamedFullerene::Gk).collect();
    for a in CAP_ARRAYS_42 {
        for l in 0..=2 {
            names.push(NamedFullerene::Nanotube42(a.parse().expect("fixed array"), l));
        }
    }
    if ctx.is_some() {
        names.extend([NamedFullerene::Nanotube61(1), NamedFullerene::Nanotube61(2)]);
    }
    names
        .iter()
        .map(|n| Ok(CorpusGraph { id: n.to_string(), graph: construct_named(n, ctx)? }))
        .collect()
}

/// Structural and matching properties of one corpus fullerene.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PropertyReport {
    pub id: String,
    pub order: usize,
    pub f: usize,
    pub af: usize,
    pub resonant: bool,
    pub cyclic_edge_connectivity: Option<usize>,
    pub three_cuts_trivial: bool,
    pub four_cuts_isolate_edge: bool,
    /// Components of cuts with at most seven edges checked against the
    /// boundary identity, and how many of them failed it.
    pub patches_checked: usize,
    pub patch_identity_failures: usize,
}

impl PropertyReport {
    /// Every property holds; the forcing bound is 2 on 24 vertices and 3
    /// otherwise.
    pub fn ok(&self) -> bool {
        let f_ok = if self.order == 24 { self.f == 2 } else { self.f >= 3 };
        f_ok && self.af >= 4
            && self.resonant
            && self.cyclic_edge_connectivity == Some(5)
            && self.three_cuts_trivial
            && self.four_cuts_isolate_edge
            && self.patch_identity_failures == 0
    }
}

pub fn property_report(c: &CorpusGraph, budget: usize) -> Result<PropertyReport, crate::SearchError> {
    use crate::matching::{anti_forcing_number, is_1_resonant, min_forcing_number};
    use crate::patch::patch_from_cut;
    use crate::plane::{cuts, edge_cuts_up_to};

    let g = &c.graph;
    let f = min_forcing_number(g, budget)?.value;
    let af = anti_forcing_number(g, budget)?.value;
    let small = cuts::small_cut_report(g);
    let mut checked = 0;
    let mut failures = 0;
    for cut in edge_cuts_up_to(g, cuts::MAX_CUT)? {
        for side in [true, false] {
            let Ok(p) = patch_from_cut(g, &cut, side) else {
                failures += 1;
                continue;
            };
            match p.boundary_formula_check() {
                Some(true) => checked += 1,
                Some(false) => {
                    checked += 1;
                    failures += 1;
                }
                None => {}
            }
        }
    }
    Ok(PropertyReport {
        id: c.id.clone(),
        order: g.order(),
        f,
        af,
        resonant: is_1_resonant(g),
        cyclic_edge_connectivity: small.cyclic_edge_connectivity,
        three_cuts_trivial: small.three_cuts_trivial,
        four_cuts_isolate_edge: small.four_cuts_isolate_edge,
        patches_checked: checked,
        patch_identity_failures: failures,
    })
}

/// Reads a planar-code file as corpus members named `<stem>#<index>`.
pub fn read_planar_code_corpus(path: &std::path::Path) -> std::io::Result<Vec<CorpusGraph>> {
    let bytes = std::fs::read(path)?;
    let gs = crate::plane::planar_code::from_planar_code(&bytes)
        .map_err(|e| std::io::Error::new(std::io::ErrorKind::InvalidData, e))?;
    let stem = path.file_stem().and_then(|s| s.to_str()).unwrap_or("graph");
    Ok(gs.into_iter().enumerate().map(|(i, graph)| CorpusGraph { id: format!("{stem}#{i}"), graph }).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::patch::patch_from_cut;
    use crate::plane::edge_cuts_up_to;

    #[test]
    fn names_round_trip() {
        for s in ["F20", "F24", "G3", "nanotube42:234234:1", "nanotube61:2"] {
            assert_eq!(s.parse::<NamedFullerene>().unwrap().to_string(), s);
        }
        assert!("nanotube42:123:1".parse::<NamedFullerene>().is_err());
        assert!("C60".parse::<NamedFullerene>().is_err());
    }

    #[test]
    fn one_minimal_cap_per_array_and_nine_caps() {
        let caps = minimal_caps_42();
        let sizes: Vec<(String, usize)> = caps.iter().map(|(a, p)| (a.to_string(), p.real_order())).collect();
        assert_eq!(sizes, [("[233343]".into(), 20), ("[233424]".into(), 18), ("[234234]".into(), 16)]);
        assert_eq!(caps_42().len(), 9);
    }

    #[test]
    fn nanotube42_has_requested_cap() {
        let a: MinDistanceArray = "234234".parse().unwrap();
        let g = nanotube42(&a, 1).unwrap();
        assert_eq!(g.order(), 44);
        assert!(validate_fullerene(&g).is_ok());
        let found = edge_cuts_up_to(&g, 6).unwrap().iter().filter(|c| c.size() == 6 && c.kind.cyclic).any(|c| {
            [true, false].iter().any(|&side| {
                patch_from_cut(&g, c, side).map_or(false, |p| p.pentagons() == 6 && p.min_array() == a)
            })
        });
        assert!(found);
    }
}
