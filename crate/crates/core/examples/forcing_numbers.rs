//! Forcing and anti-forcing numbers with their witnesses.
//!
//! `cargo run --release --example forcing_numbers`

use forcing_lab::matching::{anti_forcing_number, count_perfect_matchings, is_1_resonant, is_forcing_set, min_forcing_number, DEFAULT_BUDGET};
use forcing_lab::plane::dot::to_dot;
use forcing_lab::plane::named;

fn main() -> anyhow::Result<()> {
    for (name, g) in [("F20", named::dodecahedron()), ("F24", named::f24()), ("G1", named::gk(1))] {
        let f = min_forcing_number(&g, DEFAULT_BUDGET)?;
        let af = anti_forcing_number(&g, DEFAULT_BUDGET)?;
        println!(
            "{name}: {} perfect matchings, f = {} by {:?} (forcing: {}), af = {} by {:?}, 1-resonant {}",
            count_perfect_matchings(&g),
            f.value,
            f.witness,
            is_forcing_set(&g, &f.matching, &f.witness)?,
            af.value,
            af.witness,
            is_1_resonant(&g)
        );
    }
    // the two forcing edges of F24 drawn bold
    let g = named::f24();
    let f = min_forcing_number(&g, DEFAULT_BUDGET)?;
    std::fs::create_dir_all("target")?;
    std::fs::write("target/f24.dot", to_dot(&g, "F24", &f.witness))?;
    println!("wrote target/f24.dot");
    Ok(())
}
