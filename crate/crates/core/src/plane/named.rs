//! Fullerenes with a fixed combinatorial description.
//!
//! Everything here is produced from a planar straight-line drawing: the
//! rotation at a vertex is the clockwise angular order of its neighbours.
//! Each constructor is checked against Euler's formula.

use crate::plane::PlaneGraph;

/// Rotation system from a planar straight-line drawing.
///
/// Panics if the drawing does not give a connected plane graph; callers only
/// pass fixed drawings.
pub fn from_drawing(points: &[(f64, f64)], edges: &[(usize, usize)]) -> PlaneGraph {
    let n = points.len();
    let mut nbrs = vec![Vec::new(); n];
    for &(u, v) in edges {
        nbrs[u].push(v);
        nbrs[v].push(u);
    }
    let rotation = nbrs
        .into_iter()
        .enumerate()
        .map(|(v, mut ns)| {
            let (x0, y0) = points[v];
            // clockwise = decreasing angle
            ns.sort_by(|&a, &b| {
                let ta = (points[a].1 - y0).atan2(points[a].0 - x0);
                let tb = (points[b].1 - y0).atan2(points[b].0 - x0);
                tb.partial_cmp(&ta).unwrap()
            });
            ns
        })
        .collect();
    let g = PlaneGraph::new(rotation).expect("drawing gives a simple graph");
    g.check_plane().expect("drawing is planar");
    g
}

fn polar(r: f64, turns: f64) -> (f64, f64) {
    let t = turns * std::f64::consts::TAU;
    (r * t.cos(), r * t.sin())
}

/// Concentric rings of five vertices; consecutive rings alternate between
/// radial and zig-zag connections, the first and last ring are 5-cycles.
fn pentagonal_tube(rings: usize) -> PlaneGraph {
    assert!(rings >= 4 && rings % 2 == 0);
    let id = |j: usize, i: usize| 5 * j + (i % 5);
    let mut points = Vec::new();
    let mut offset = 0.0;
    for j in 0..rings {
        if j > 0 && j % 2 == 0 {
            offset += 0.5;
        }
        for i in 0..5 {
            points.push(polar(2f64.powi(j as i32), (i as f64 + offset) / 5.0));
        }
    }
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((id(0, i), id(0, i + 1)));
        edges.push((id(rings - 1, i), id(rings - 1, i + 1)));
    }
    for j in 0..rings - 1 {
        for i in 0..5 {
            if j % 2 == 0 {
                edges.push((id(j, i), id(j + 1, i)));
            } else {
                edges.push((id(j, i), id(j + 1, i)));
                edges.push((id(j, i + 1), id(j + 1, i)));
            }
        }
    }
    from_drawing(&points, &edges)
}

/// The dodecahedron, the unique fullerene on 20 vertices.
pub fn dodecahedron() -> PlaneGraph {
    pentagonal_tube(4)
}

/// `G^k`: two pentacaps with `k` layers of hexagons, `20 + 10k` vertices.
/// The pentacaps of `G^1` are glued directly, their seam forming the single
/// hexagon layer.
pub fn gk(k: usize) -> PlaneGraph {
    assert!(k >= 1, "G^k is defined for k >= 1");
    pentagonal_tube(4 + 2 * k)
}

/// The fullerene on 24 vertices: two hexagons separated by a belt of twelve
/// pentagons.
pub fn f24() -> PlaneGraph {
    let mut points = Vec::new();
    for i in 0..6 {
        points.push(polar(1.0, i as f64 / 6.0));
    }
    for j in 0..12 {
        points.push(polar(2.0, j as f64 / 12.0));
    }
    for i in 0..6 {
        points.push(polar(4.0, (2 * i + 1) as f64 / 12.0));
    }
    let (t, m, b) = (0, 6, 18);
    let mut edges = Vec::new();
    for i in 0..6 {
        edges.push((t + i, t + (i + 1) % 6));
        edges.push((b + i, b + (i + 1) % 6));
        edges.push((t + i, m + 2 * i));
        edges.push((b + i, m + 2 * i + 1));
    }
    for j in 0..12 {
        edges.push((m + j, m + (j + 1) % 12));
    }
    from_drawing(&points, &edges)
}

/// The cube, a cubic plane graph that is not a fullerene.
pub fn cube() -> PlaneGraph {
    let mut points = Vec::new();
    for i in 0..4 {
        points.push(polar(1.0, (i as f64 + 0.5) / 4.0));
    }
    for i in 0..4 {
        points.push(polar(3.0, (i as f64 + 0.5) / 4.0));
    }
    let mut edges = Vec::new();
    for i in 0..4 {
        edges.push((i, (i + 1) % 4));
        edges.push((4 + i, 4 + (i + 1) % 4));
        edges.push((i, 4 + i));
    }
    from_drawing(&points, &edges)
}

/// A cycle on `n` vertices.
pub fn cycle(n: usize) -> PlaneGraph {
    let points: Vec<_> = (0..n).map(|i| polar(1.0, i as f64 / n as f64)).collect();
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    from_drawing(&points, &edges)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn face_counts() {
        let d = dodecahedron();
        assert_eq!(d.order(), 20);
        assert_eq!(d.face_size_counts().into_iter().collect::<Vec<_>>(), vec![(5, 12)]);
        let f = f24();
        assert_eq!(f.face_size_counts().into_iter().collect::<Vec<_>>(), vec![(5, 12), (6, 2)]);
        for k in 1..5 {
            let g = gk(k);
            assert_eq!(g.order(), 20 + 10 * k);
            assert_eq!(
                g.face_size_counts().into_iter().collect::<Vec<_>>(),
                vec![(5, 12), (6, 5 * k)]
            );
        }
        assert_eq!(cube().face_size_counts().into_iter().collect::<Vec<_>>(), vec![(4, 6)]);
    }
}
