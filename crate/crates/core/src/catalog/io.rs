//! Catalog files: one JSON array of patch records per family and a
//! manifest with counts and checksums.

use std::fs;
use std::io;
use std::path::Path;

use serde::{Deserialize, Serialize};

use super::{CatalogEntry, Catalogs, CountCheck, Family, SeedCatalog};
use crate::patch::{GeneralizedPatch, MinDistanceArray, PatchRecord};
use crate::plane::Edge;

/// A catalog entry as stored on disk.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct EntryRecord {
    pub id: String,
    pub alias: Option<String>,
    pub family: Family,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub forcing: Vec<Edge>,
    pub derivation: Vec<String>,
    #[serde(flatten)]
    pub patch: PatchRecord,
}

impl From<&CatalogEntry> for EntryRecord {
    fn from(e: &CatalogEntry) -> Self {
        EntryRecord {
            id: e.id.clone(),
            alias: e.alias.clone(),
            family: e.family,
            forcing: e.forcing.clone(),
            derivation: e.derivation.clone(),
            patch: e.patch.to_record(),
        }
    }
}

impl EntryRecord {
    pub fn to_entry(&self) -> io::Result<CatalogEntry> {
        let patch = GeneralizedPatch::from_record(&self.patch).map_err(|e| io::Error::new(io::ErrorKind::InvalidData, e))?;
        Ok(CatalogEntry {
            id: self.id.clone(),
            alias: self.alias.clone(),
            family: self.family,
            min_array: patch.min_array(),
            patch,
            forcing: self.forcing.clone(),
            derivation: self.derivation.clone(),
        })
    }
}

/// Per-family line of the manifest.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilySummary {
    pub family: String,
    pub count: usize,
    pub expected: usize,
    pub status: String,
    /// Digest over the sorted ids and membership conditions.
    pub checksum: String,
    pub arrays: Vec<String>,
}

/// Summary of the seed family.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeedSummary {
    pub count: usize,
    pub expected: usize,
    pub distinct_arrays: usize,
    pub quoted_present: Vec<String>,
    pub quoted_missing: Vec<String>,
    pub truncated_states: usize,
    pub checksum: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogManifest {
    pub families: Vec<FamilySummary>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seeds: Option<SeedSummary>,
    /// One line per count that differs from the expected value.
    pub diff: Vec<String>,
}

fn digest(entries: &[CatalogEntry]) -> String {
    let mut h: u64 = 0xcbf29ce484222325;
    let mut lines: Vec<String> = entries.iter().map(|e| format!("{}:{}", e.id, e.derivation.join(","))).collect();
    lines.sort();
    for b in lines.join("\n").bytes() {
        h ^= b as u64;
        h = h.wrapping_mul(0x100000001b3);
    }
    format!("{h:016x}")
}

fn status(c: &CountCheck) -> String {
    if c.ok() {
        "ok".into()
    } else {
        format!("mismatch: found {} expected {}", c.found, c.expected)
    }
}

/// Builds the manifest, including the diff report.
pub fn manifest(cats: &Catalogs, seeds: Option<&SeedCatalog>) -> CatalogManifest {
    let mut families = Vec::new();
    let mut diff = Vec::new();
    for ((name, es), c) in cats.families().iter().zip(cats.counts()) {
        if !c.ok() {
            diff.push(format!("{name}: found {} expected {}", c.found, c.expected));
        }
        families.push(FamilySummary {
            family: name.to_string(),
            count: c.found,
            expected: c.expected,
            status: status(&c),
            checksum: digest(es),
            arrays: es.iter().map(|e| e.min_array.to_string()).collect(),
        });
    }
    let seeds = seeds.map(|s| {
        let arrays: Vec<MinDistanceArray> = s.arrays();
        let (present, missing): (Vec<&str>, Vec<&str>) = super::seeds::QUOTED_SEEDS
            .iter()
            .map(|(a, _)| *a)
            .partition(|a| arrays.iter().any(|x| x.to_string() == *a));
        let c = CountCheck { family: "L".into(), found: s.entries.len(), expected: 95 };
        if !c.ok() {
            diff.push(format!("L: found {} expected {}", c.found, c.expected));
        }
        for m in &missing {
            diff.push(format!("L: quoted array {m} missing"));
        }
        SeedSummary {
            count: s.entries.len(),
            expected: 95,
            distinct_arrays: arrays.len(),
            quoted_present: present.iter().map(|s| s.to_string()).collect(),
            quoted_missing: missing.iter().map(|s| s.to_string()).collect(),
            truncated_states: s.truncated,
            checksum: digest(&s.entries),
        }
    });
    CatalogManifest { families, seeds, diff }
}

/// Writes `catalog-<family>.json` for every family, `catalog-L.json` when
/// seeds are given, and `catalog-manifest.json`.
pub fn write_catalogs(dir: &Path, cats: &Catalogs, seeds: Option<&SeedCatalog>) -> io::Result<CatalogManifest> {
    fs::create_dir_all(dir)?;
    let mut all: Vec<(&str, &[CatalogEntry])> = cats.families().to_vec();
    if let Some(s) = seeds {
        all.push(("L", &s.entries));
    }
    for (name, es) in all {
        let recs: Vec<EntryRecord> = es.iter().map(EntryRecord::from).collect();
        fs::write(dir.join(format!("catalog-{name}.json")), serde_json::to_string_pretty(&recs)? + "\n")?;
    }
    let m = manifest(cats, seeds);
    fs::write(dir.join("catalog-manifest.json"), serde_json::to_string_pretty(&m)? + "\n")?;
    Ok(m)
}

/// Reads one family file back, re-validating every patch.
pub fn read_family(path: &Path) -> io::Result<Vec<CatalogEntry>> {
    let recs: Vec<EntryRecord> = serde_json::from_slice(&fs::read(path)?)?;
    recs.iter().map(EntryRecord::to_entry).collect()
}

/// Reads the families written by [`write_catalogs`].
pub fn read_catalogs(dir: &Path) -> io::Result<Catalogs> {
    let f = |n: &str| read_family(&dir.join(format!("catalog-{n}.json")));
    Ok(Catalogs { j1: f("J1")?, j2: f("J2")?, p: f("P")?, d: f("D")?, pp: f("PP")?, t10: f("T10")?, t12: f("T12")? })
}
