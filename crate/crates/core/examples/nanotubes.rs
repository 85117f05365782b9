//! Caps of (4,2) nanotubes and the tubes built from them.
//!
//! `cargo run --release --example nanotubes`

use forcing_lab::corpus::{caps_42, minimal_caps_42, nanotube42};
use forcing_lab::matching::{min_forcing_number, DEFAULT_BUDGET};

fn main() -> anyhow::Result<()> {
    for (a, cap) in minimal_caps_42() {
        println!("smallest cap with array {a}: {} vertices, {} faces", cap.real_order(), cap.interior_faces().len());
    }
    let caps = caps_42();
    println!("{} caps up to one hexagon layer", caps.len());
    for a in ["234234", "233424", "233343"] {
        for layers in 0..=2 {
            let g = nanotube42(&a.parse()?, layers)?;
            let f = min_forcing_number(&g, DEFAULT_BUDGET)?.value;
            println!("cap [{a}], {layers} layers: {} vertices, f = {f}", g.order());
        }
    }
    Ok(())
}
