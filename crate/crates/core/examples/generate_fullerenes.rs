//! Generates every fullerene isomer in an order range by face spirals and
//! writes them as planar code.
//!
//! ```text
//! cargo run --release --example generate_fullerenes -- 20 36 data/generated-20-36.pc
//! ```
//!
//! A spiral lists the faces so that each one touches its predecessor and the
//! oldest face that still has a free side. The windup builds the dual
//! triangulation; since a fullerene dual has no separating triangles, its
//! triangles are exactly the vertices of the fullerene.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::collections::VecDeque;
use std::fs;

use forcing_lab::plane::planar_code::to_planar_code_many;
use forcing_lab::plane::{canonical_form, validate_fullerene, PlaneGraph};

/// Dual adjacency from a spiral of face sizes, or `None` if it does not
/// close up.
fn windup(spiral: &[u8]) -> Option<Vec<Vec<usize>>> {
    let n = spiral.len();
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut rem: Vec<i32> = spiral.iter().map(|&s| s as i32).collect();
    let link = |a: usize, b: usize, adj: &mut Vec<Vec<usize>>, rem: &mut Vec<i32>| -> bool {
        if a == b || adj[a].contains(&b) {
            return false;
        }
        adj[a].push(b);
        adj[b].push(a);
        rem[a] -= 1;
        rem[b] -= 1;
        rem[a] >= 0 && rem[b] >= 0
    };
    let mut open: VecDeque<usize> = VecDeque::from([0]);
    for k in 1..n {
        let back = *open.back()?;
        if !link(k, back, &mut adj, &mut rem) {
            return None;
        }
        if k > 1 {
            let front = *open.front()?;
            if front != back && !link(k, front, &mut adj, &mut rem) {
                return None;
            }
        }
        // a face that just filled up closes the triangle with its neighbour
        loop {
            let front = *open.front()?;
            if rem[front] != 0 || open.len() < 2 {
                break;
            }
            open.pop_front();
            let next = *open.front()?;
            if !adj[k].contains(&next) && !link(k, next, &mut adj, &mut rem) {
                return None;
            }
        }
        loop {
            let back = *open.back()?;
            if rem[back] != 0 || open.len() < 2 {
                break;
            }
            open.pop_back();
            let prev = *open.back()?;
            if !adj[k].contains(&prev) && !link(k, prev, &mut adj, &mut rem) {
                return None;
            }
        }
        open.retain(|&f| rem[f] != 0);
        if rem[k] > 0 {
            open.push_back(k);
        }
        if open.is_empty() && k + 1 < n {
            return None;
        }
    }
    rem.iter().all(|&r| r == 0).then_some(adj)
}

/// The cubic plane graph dual to a triangulation given by adjacency.
fn primal(adj: &[Vec<usize>]) -> Option<PlaneGraph> {
    let sets: Vec<HashSet<usize>> = adj.iter().map(|a| a.iter().copied().collect()).collect();
    let mut tris = Vec::new();
    for a in 0..adj.len() {
        for &b in &adj[a] {
            for &c in &adj[b] {
                if a < b && b < c && sets[a].contains(&c) {
                    tris.push([a, b, c]);
                }
            }
        }
    }
    // each dual edge lies in exactly two triangles
    let mut by_edge: HashMap<(usize, usize), Vec<usize>> = HashMap::new();
    for (t, &[a, b, c]) in tris.iter().enumerate() {
        for (x, y) in [(a, b), (b, c), (a, c)] {
            by_edge.entry((x, y)).or_default().push(t);
        }
    }
    if by_edge.values().any(|ts| ts.len() != 2) {
        return None;
    }
    // orient the triangles coherently: neighbours traverse a shared edge
    // in opposite directions
    let mut orient: Vec<Option<[usize; 3]>> = vec![None; tris.len()];
    orient[0] = Some(tris[0]);
    let mut queue = VecDeque::from([0]);
    while let Some(t) = queue.pop_front() {
        let o = orient[t].expect("queued triangles are oriented");
        for i in 0..3 {
            let (x, y) = (o[i], o[(i + 1) % 3]);
            let key = (x.min(y), x.max(y));
            for &u in &by_edge[&key] {
                if u == t {
                    continue;
                }
                let z = tris[u].iter().copied().find(|&z| z != x && z != y).expect("third corner");
                let want = [y, x, z];
                match orient[u] {
                    None => {
                        orient[u] = Some(want);
                        queue.push_back(u);
                    }
                    Some(have) => {
                        let same = (0..3).any(|r| (0..3).all(|j| have[(j + r) % 3] == want[j]));
                        if !same {
                            return None;
                        }
                    }
                }
            }
        }
    }
    let rotation: Vec<Vec<usize>> = orient
        .iter()
        .enumerate()
        .map(|(t, o)| {
            let o = o.expect("dual is connected");
            (0..3)
                .map(|i| {
                    let (x, y) = (o[i], o[(i + 1) % 3]);
                    let ts = &by_edge[&(x.min(y), x.max(y))];
                    if ts[0] == t { ts[1] } else { ts[0] }
                })
                .collect()
        })
        .collect();
    let g = PlaneGraph::new(rotation).ok()?;
    g.check_plane().ok()?;
    Some(g)
}

/// Every spiral with twelve pentagons among `faces` faces, in lexicographic
/// order of pentagon positions.
fn spirals(faces: usize, mut visit: impl FnMut(&[u8])) {
    fn rec(pos: usize, left: usize, s: &mut Vec<u8>, faces: usize, visit: &mut dyn FnMut(&[u8])) {
        if s.len() == faces {
            if left == 0 {
                visit(s);
            }
            return;
        }
        if faces - pos < left {
            return;
        }
        for size in [5u8, 6] {
            if size == 5 && left == 0 {
                continue;
            }
            s.push(size);
            rec(pos + 1, left - (size == 5) as usize, s, faces, visit);
            s.pop();
        }
    }
    rec(0, 12, &mut Vec::new(), faces, &mut visit);
}

fn isomers(n: usize) -> Vec<PlaneGraph> {
    let mut found = BTreeMap::new();
    spirals(n / 2 + 2, |s| {
        let Some(g) = windup(s).and_then(|adj| primal(&adj)) else { return };
        if validate_fullerene(&g).is_ok() {
            found.entry(canonical_form(&g)).or_insert(g);
        }
    });
    found.into_values().collect()
}

fn main() -> anyhow::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let lo: usize = args.first().map_or(Ok(20), |s| s.parse())?;
    let hi: usize = args.get(1).map_or(Ok(36), |s| s.parse())?;
    let out = args.get(2).cloned().unwrap_or_else(|| format!("target/generated-{lo}-{hi}.pc"));
    let mut all = Vec::new();
    for n in (lo..=hi).filter(|n| n % 2 == 0) {
        let gs = isomers(n);
        println!("order {n}: {} isomers", gs.len());
        all.extend(gs);
    }
    if let Some(dir) = std::path::Path::new(&out).parent() {
        fs::create_dir_all(dir)?;
    }
    fs::write(&out, to_planar_code_many(&all)?)?;
    println!("wrote {} graphs to {out}", all.len());
    Ok(())
}
