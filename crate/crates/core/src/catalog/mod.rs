//! Catalogs of small patches and seeds.

pub mod complete;
pub mod families;
pub mod grow;
pub mod io;
pub mod seeds;

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

pub use families::{CatalogBudget, CatalogEntry, Family};
pub use seeds::{derive_seeds, propagation_forces, SeedBounds, SeedCatalog};

use crate::digraph::{Partner, TerminalCatalogs};
use crate::patch::GeneralizedPatch;

/// The patch families needed by the construction.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Catalogs {
    pub j1: Vec<CatalogEntry>,
    pub j2: Vec<CatalogEntry>,
    pub p: Vec<CatalogEntry>,
    pub d: Vec<CatalogEntry>,
    pub pp: Vec<CatalogEntry>,
    pub t10: Vec<CatalogEntry>,
    pub t12: Vec<CatalogEntry>,
}

/// One line of a count comparison.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CountCheck {
    pub family: String,
    pub found: usize,
    pub expected: usize,
}

impl CountCheck {
    pub fn ok(&self) -> bool {
        self.found == self.expected
    }
}

/// Counts the families are expected to have.
pub const EXPECTED_COUNTS: [(&str, usize); 7] =
    [("J1", 1), ("J2", 1), ("P", 2), ("D", 11), ("PP", 1), ("T10", 16), ("T12", 164)];

impl Catalogs {
    /// Derives every family. The terminal families are built from the
    /// white vertices of the D family.
    pub fn derive(b: &CatalogBudget) -> Catalogs {
        let j1 = families::derive_unique_pm_small(6, b);
        let j2 = families::derive_unique_pm_small(8, b);
        let p = families::derive_p_family(b);
        let d = families::derive_d_family(b);
        let types = families::white_types(&d);
        let pp = families::derive_pp(b);
        let t10 = families::derive_terminal10(&types, b);
        let t12 = families::derive_terminal12(&types, b);
        Catalogs { j1, j2, p, d, pp, t10, t12 }
    }

    pub fn families(&self) -> [(&'static str, &[CatalogEntry]); 7] {
        [
            ("J1", &self.j1),
            ("J2", &self.j2),
            ("P", &self.p),
            ("D", &self.d),
            ("PP", &self.pp),
            ("T10", &self.t10),
            ("T12", &self.t12),
        ]
    }

    pub fn counts(&self) -> Vec<CountCheck> {
        self.families()
            .iter()
            .zip(EXPECTED_COUNTS)
            .map(|((name, es), (_, expected))| CountCheck { family: name.to_string(), found: es.len(), expected })
            .collect()
    }

    /// Closing partners for O4 (J2), O5 (terminal-10 and PP) and O7.
    pub fn terminal(&self) -> TerminalCatalogs {
        let p = |e: &CatalogEntry| Partner { id: e.id.clone(), array: e.min_array.clone() };
        TerminalCatalogs {
            j2: p(self.j2.first().expect("J2 derived")),
            t10: self.t10.iter().chain(&self.pp).map(p).collect(),
            t12: self.t12.iter().map(p).collect(),
        }
    }

    /// Patches of all closing partners, by id.
    pub fn partner_patches(&self) -> HashMap<String, GeneralizedPatch> {
        self.j2
            .iter()
            .chain(&self.t10)
            .chain(&self.pp)
            .chain(&self.t12)
            .map(|e| (e.id.clone(), e.patch.clone()))
            .collect()
    }
}
