//! The distance-array digraph from the stored catalogs: counts, loops, the
//! sub-digraph of one seed, and the files written by `gen-digraph`.
//!
//! `cargo run --release --example construction_digraph -- [catalog_dir] [out_dir]`

use std::path::PathBuf;

use forcing_lab::catalog::io::{read_catalogs, read_family};
use forcing_lab::digraph::io::{manifest, write_digraph};
use forcing_lab::digraph::{generate_digraph, ArcReading, DigraphConfig};
use forcing_lab::patch::MinDistanceArray;

fn main() -> anyhow::Result<()> {
    let mut args = std::env::args().skip(1);
    let dir = PathBuf::from(args.next().unwrap_or_else(|| "data/catalogs".into()));
    let out = PathBuf::from(args.next().unwrap_or_else(|| "target/digraph".into()));
    let cats = read_catalogs(&dir)?;
    let seeds = read_family(&dir.join("catalog-L.json"))?;
    let tc = cats.terminal();
    let mut arrays: Vec<MinDistanceArray> = seeds.iter().map(|s| s.min_array.clone()).collect();
    arrays.sort();
    arrays.dedup();

    let d = generate_digraph(&arrays, &tc, &DigraphConfig::default())?;
    let mut m = manifest(&d, &arrays, ArcReading::Primary);
    let alt = generate_digraph(&arrays, &tc, &DigraphConfig { reading: ArcReading::EveryApplication, ..DigraphConfig::default() })?;
    m.alternate = Some(alt.summary());
    println!("{} seed arrays, {} of them reach []", arrays.len(), d.valid_seeds.len());
    println!("primary reading: {} nodes, {} arcs", d.nodes.len(), d.arcs.len());
    println!("one arc per application: {} nodes, {} arcs", alt.nodes.len(), alt.arcs.len());
    println!("loops: {:?}", m.summary.loops);
    write_digraph(&out, &d, &m)?;
    println!("wrote {}", out.display());

    let l40: MinDistanceArray = "123151323135".parse()?;
    let sub = generate_digraph(&[l40], &tc, &DigraphConfig::default())?;
    let empty = MinDistanceArray::empty();
    println!("sub-digraph of [123151323135]: {} nodes, {} arcs", sub.nodes.len(), sub.arcs.len());
    for n in &sub.nodes {
        let b = sub.bundle(n, &empty);
        if b > 1 {
            println!("  {n} -> []: {b} arcs");
        }
    }
    Ok(())
}
