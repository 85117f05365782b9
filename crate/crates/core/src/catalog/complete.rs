//! Closing a patch into a fullerene by adding faces around it.

use crate::patch::GeneralizedPatch;
use crate::plane::{validate_fullerene, PlaneGraph};

/// Limits for [`complete`].
#[derive(Clone, Copy, Debug)]
pub struct CompletionBudget {
    pub max_order: usize,
    pub max_nodes: usize,
}

impl Default for CompletionBudget {
    fn default() -> Self {
        CompletionBudget { max_order: 120, max_nodes: 2_000_000 }
    }
}

/// Outcome of a completion attempt.
#[derive(Clone, Debug)]
pub enum Completion {
    Found(PlaneGraph),
    /// The search space was exhausted.
    None,
    Budget,
}

/// Depth-first search for a fullerene containing `p` as the subgraph
/// spanned by its real vertices. The most constrained gap (largest) is
/// always filled first, with a pentagon or a hexagon. No edge is added
/// between two vertices of `p`, so `p` stays an induced subgraph.
pub fn complete(p: &GeneralizedPatch, budget: CompletionBudget) -> Completion {
    let mut nodes = 0usize;
    let f5 = p.pentagons();
    if f5 > 12 || p.gaps().0.iter().any(|&a| a > 6) {
        return Completion::None;
    }
    match dfs(p, f5, p.real_order(), &budget, &mut nodes) {
        Some(g) => Completion::Found(g),
        None if nodes >= budget.max_nodes => Completion::Budget,
        None => Completion::None,
    }
}

fn dfs(p: &GeneralizedPatch, f5: usize, protect: usize, b: &CompletionBudget, nodes: &mut usize) -> Option<PlaneGraph> {
    *nodes += 1;
    if *nodes >= b.max_nodes {
        return None;
    }
    let gaps = p.gaps().0;
    let k = gaps.len();
    if k == 2 {
        if p.anchor(0).max(p.anchor(1)) >= protect && gaps.iter().all(|&a| a == 5 || a == 6) && f5 + gaps.iter().filter(|&&a| a == 5).count() == 12 {
            if let Ok(c) = p.add_face(0, gaps[0] as usize) {
                let g = c.graph().clone();
                if validate_fullerene(&g).is_ok() {
                    return Some(g);
                }
            }
        }
        return None;
    }
    if k < 2 {
        return None;
    }
    let i = (0..k).max_by_key(|&i| (gaps[i], std::cmp::Reverse(i))).unwrap();
    for s in [5usize, 6] {
        let nf5 = f5 + usize::from(s == 5);
        if nf5 > 12 || s < gaps[i] as usize {
            continue;
        }
        if s == gaps[i] as usize && p.anchor(i).max(p.anchor((i + 1) % k)) < protect {
            continue;
        }
        let Ok(c) = p.add_face(i, s) else { continue };
        if c.real_order() > b.max_order {
            continue;
        }
        if c.gaps().0.iter().any(|&a| a > 6) {
            continue;
        }
        if let Some(g) = dfs(&c, nf5, protect, b, nodes) {
            return Some(g);
        }
        if *nodes >= b.max_nodes {
            return None;
        }
    }
    None
}
