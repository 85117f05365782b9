//! Derives every patch family and the seed family, writes them as JSON
//! catalog files and prints the counts next to the expected ones.
//!
//! `cargo run --release --example derive_catalogs -- [out_dir]`

use std::path::PathBuf;

use forcing_lab::catalog::io::write_catalogs;
use forcing_lab::catalog::{derive_seeds, CatalogBudget, Catalogs, SeedBounds};

fn main() -> std::io::Result<()> {
    env_logger::init();
    let dir = PathBuf::from(std::env::args().nth(1).unwrap_or_else(|| "target/catalogs".into()));
    let cats = Catalogs::derive(&CatalogBudget::default());
    for c in cats.counts() {
        println!("{:<4} {:>4} (expected {})", c.family, c.found, c.expected);
    }
    let seeds = derive_seeds(&SeedBounds::default());
    let m = write_catalogs(&dir, &cats, Some(&seeds))?;
    let s = m.seeds.as_ref().expect("seeds summarized");
    println!("L    {:>4} (expected {}), {} distinct arrays", s.count, s.expected, s.distinct_arrays);
    println!("quoted seed arrays present: {}", s.quoted_present.join(" "));
    for d in &m.diff {
        println!("diff: {d}");
    }
    println!("written to {}", dir.display());
    Ok(())
}
