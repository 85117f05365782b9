//! Fullerenes realized along walks of the digraph, each with the seed's
//! three forcing edges checked on the result.
//!
//! `cargo run --release --example build_fullerenes -- [walks]`

use std::collections::BTreeMap;
use std::path::Path;

use forcing_lab::catalog::io::{read_catalogs, read_family};
use forcing_lab::corpus::{nanotube61, WalkContext};
use forcing_lab::digraph::{build_fullerene, generate_digraph, sample_walk, DigraphConfig};
use forcing_lab::matching::{min_forcing_number, DEFAULT_BUDGET};
use rand::seq::SliceRandom;
use rand::SeedableRng;

fn main() -> anyhow::Result<()> {
    let walks: usize = std::env::args().nth(1).map_or(Ok(20), |s| s.parse())?;
    let dir = Path::new("data/catalogs");
    let cats = read_catalogs(dir)?;
    let seeds = read_family(&dir.join("catalog-L.json"))?;

    let ctx = WalkContext { catalogs: &cats, seeds: &seeds };
    for layers in 0..=2 {
        let b = nanotube61(&ctx, layers)?;
        let f = min_forcing_number(&b.graph, DEFAULT_BUDGET)?.value;
        println!("(6,1) tube, {layers} layers: {} vertices, forcing set {:?} verified {}, f = {f}", b.graph.order(), b.forcing, b.forcing_verified);
    }

    let arrays: Vec<_> = seeds.iter().map(|s| s.min_array.clone()).collect();
    let d = generate_digraph(&arrays, &cats.terminal(), &DigraphConfig::default())?;
    let partners = cats.partner_patches();
    let valid: Vec<_> = seeds.iter().filter(|s| d.index_of(&s.min_array).is_some()).collect();
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(1);
    let mut by_order: BTreeMap<usize, usize> = BTreeMap::new();
    let mut built = 0;
    while built < walks {
        let s = valid.choose(&mut rng).expect("valid seeds");
        let Some(w) = sample_walk(&d, &s.min_array, 30, &mut rng) else { continue };
        let b = build_fullerene(s, &w, &partners)?;
        assert!(b.forcing_verified);
        *by_order.entry(b.graph.order()).or_default() += 1;
        built += 1;
    }
    println!("{walks} random walks, all forcing sets verified; orders {by_order:?}");
    Ok(())
}
