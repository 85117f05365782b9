//! Fullerene validation.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::plane::PlaneGraph;

/// A plane graph known to be a fullerene.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fullerene {
    graph: PlaneGraph,
    face_sizes: BTreeMap<usize, usize>,
}

impl Fullerene {
    pub fn graph(&self) -> &PlaneGraph {
        &self.graph
    }

    pub fn into_graph(self) -> PlaneGraph {
        self.graph
    }

    pub fn order(&self) -> usize {
        self.graph.order()
    }

    /// Face size histogram: always `{5: 12, 6: h}`.
    pub fn face_sizes(&self) -> &BTreeMap<usize, usize> {
        &self.face_sizes
    }

    pub fn hexagons(&self) -> usize {
        self.face_sizes.get(&6).copied().unwrap_or(0)
    }
}

/// One violated fullerene condition.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum Violation {
    NotPlane { euler_characteristic: i64 },
    Disconnected,
    NotCubic { vertex: usize, degree: usize },
    BadFace { size: usize },
    PentagonCount { pentagons: usize },
    NotThreeConnected,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::NotPlane { euler_characteristic } => {
                write!(f, "not a plane embedding (V-E+F = {euler_characteristic})")
            }
            Violation::Disconnected => write!(f, "disconnected"),
            Violation::NotCubic { vertex, degree } => write!(f, "vertex {vertex} has degree {degree}"),
            Violation::BadFace { size } => write!(f, "face of size {size}"),
            Violation::PentagonCount { pentagons } => write!(f, "{pentagons} pentagons instead of 12"),
            Violation::NotThreeConnected => write!(f, "not 3-connected"),
        }
    }
}

/// Checks every fullerene condition and reports all that fail.
pub fn validate_fullerene(g: &PlaneGraph) -> Result<Fullerene, Vec<Violation>> {
    let mut bad = Vec::new();
    if !g.is_connected() {
        bad.push(Violation::Disconnected);
        return Err(bad);
    }
    let chi = g.euler_characteristic();
    if chi != 2 {
        bad.push(Violation::NotPlane { euler_characteristic: chi });
    }
    for v in 0..g.order() {
        if g.degree(v) != 3 {
            bad.push(Violation::NotCubic { vertex: v, degree: g.degree(v) });
        }
    }
    let face_sizes = g.face_size_counts();
    for (&size, &count) in &face_sizes {
        if size != 5 && size != 6 {
            for _ in 0..count {
                bad.push(Violation::BadFace { size });
            }
        }
    }
    let pentagons = face_sizes.get(&5).copied().unwrap_or(0);
    if pentagons != 12 {
        bad.push(Violation::PentagonCount { pentagons });
    }
    if bad.is_empty() && !g.is_3_connected() {
        bad.push(Violation::NotThreeConnected);
    }
    if bad.is_empty() {
        Ok(Fullerene { graph: g.clone(), face_sizes })
    } else {
        Err(bad)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::plane::named;

    #[test]
    fn named_graphs() {
        assert!(validate_fullerene(&named::dodecahedron()).is_ok());
        assert!(validate_fullerene(&named::f24()).is_ok());
        let err = validate_fullerene(&named::cube()).unwrap_err();
        assert!(err.contains(&Violation::BadFace { size: 4 }));
        assert!(err.contains(&Violation::PentagonCount { pentagons: 0 }));
    }

    #[test]
    fn counting_identities() {
        for g in [named::dodecahedron(), named::f24(), named::gk(3)] {
            let f = validate_fullerene(&g).unwrap();
            let n = f.order();
            assert_eq!(n % 2, 0);
            assert_eq!(g.size(), 3 * n / 2);
            assert_eq!(g.faces().len(), n / 2 + 2);
        }
    }
}
