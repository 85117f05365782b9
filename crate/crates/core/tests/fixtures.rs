//! Checks of the files under `data/`.

use std::collections::BTreeMap;
use std::path::PathBuf;

use forcing_lab::catalog::io::{read_catalogs, read_family, CatalogManifest};
use forcing_lab::corpus::read_planar_code_corpus;
use forcing_lab::plane::{canonical_form, named, validate_fullerene};

fn data(p: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data").join(p)
}

#[test]
fn f24_fixture_is_the_named_f24() {
    let gs = read_planar_code_corpus(&data("f24.pc")).unwrap();
    assert_eq!(gs.len(), 1);
    assert_eq!(canonical_form(&gs[0].graph), canonical_form(&named::f24()));
}

#[test]
fn generated_isomer_counts() {
    let gs = read_planar_code_corpus(&data("generated-20-36.pc")).unwrap();
    let mut by_order: BTreeMap<usize, usize> = BTreeMap::new();
    for g in &gs {
        assert!(validate_fullerene(&g.graph).is_ok(), "{}", g.id);
        *by_order.entry(g.graph.order()).or_default() += 1;
    }
    // isomer counts of fullerenes on 20..=36 vertices (there is none on 22)
    let want: BTreeMap<usize, usize> = [(20, 1), (24, 1), (26, 1), (28, 2), (30, 3), (32, 6), (34, 6), (36, 15)].into_iter().collect();
    assert_eq!(by_order, want);
    let mut forms: Vec<_> = gs.iter().map(|g| canonical_form(&g.graph)).collect();
    forms.sort();
    forms.dedup();
    assert_eq!(forms.len(), gs.len());
    assert_eq!(canonical_form(&gs[0].graph), canonical_form(&named::dodecahedron()));
}

#[test]
fn stored_catalogs_match_their_manifest() {
    let dir = data("catalogs");
    let cats = read_catalogs(&dir).unwrap();
    let seeds = read_family(&dir.join("catalog-L.json")).unwrap();
    let m: CatalogManifest = serde_json::from_slice(&std::fs::read(dir.join("catalog-manifest.json")).unwrap()).unwrap();
    let fresh = forcing_lab::catalog::io::manifest(&cats, None);
    assert_eq!(fresh.families, m.families);
    assert_eq!(seeds.len(), m.seeds.as_ref().unwrap().count);
    for e in seeds.iter() {
        assert_eq!(e.forcing.len(), 3, "{}", e.id);
    }
}
