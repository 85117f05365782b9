//! Face-by-face growth of disc patches, deduplicated by canonical form.

use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::patch::GeneralizedPatch;
use crate::plane::CanonicalForm;

/// Bounds for [`grow_discs`].
#[derive(Clone, Copy, Debug)]
pub struct GrowthBounds {
    pub max_pentagons: usize,
    pub max_stubs: usize,
    pub max_faces: usize,
    /// Largest gap allowed in an intermediate patch.
    pub max_gap: u8,
}

/// All disc patches reachable by adding one face at a time, level by level.
/// Level `i` of the result holds the patches with `i + 1` faces.
pub fn grow_discs(bounds: GrowthBounds) -> Vec<Vec<GeneralizedPatch>> {
    let mut levels = Vec::new();
    let mut cur: BTreeMap<CanonicalForm, GeneralizedPatch> = BTreeMap::new();
    for s in [5, 6] {
        if s == 5 && bounds.max_pentagons == 0 {
            continue;
        }
        let p = GeneralizedPatch::ring(s);
        cur.insert(p.canonical_form(&[]), p);
    }
    while !cur.is_empty() {
        let patches: Vec<GeneralizedPatch> = cur.into_values().collect();
        if levels.len() + 1 >= bounds.max_faces {
            levels.push(patches);
            break;
        }
        let children: Vec<(CanonicalForm, GeneralizedPatch)> = patches
            .par_iter()
            .flat_map_iter(|p| children(p, &bounds).into_iter().map(|c| (c.canonical_form(&[]), c)))
            .collect();
        let mut next = BTreeMap::new();
        for (k, c) in children {
            next.entry(k).or_insert(c);
        }
        levels.push(patches);
        cur = next;
    }
    levels
}

fn children(p: &GeneralizedPatch, b: &GrowthBounds) -> Vec<GeneralizedPatch> {
    let f5 = p.pentagons();
    let mut out = Vec::new();
    for i in 0..p.stub_count() {
        for s in [5usize, 6] {
            if s == 5 && f5 >= b.max_pentagons {
                continue;
            }
            let Ok(c) = p.add_face(i, s) else { continue };
            if c.is_closed() || c.stub_count() > b.max_stubs {
                continue;
            }
            if c.gaps().0.iter().any(|&a| a > b.max_gap) {
                continue;
            }
            out.push(c);
        }
    }
    out
}
