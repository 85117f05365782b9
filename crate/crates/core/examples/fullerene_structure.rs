//! Named fullerenes, validation, small edge cuts and planar code.
//!
//! `cargo run --example fullerene_structure`

use forcing_lab::plane::cuts::small_cut_report;
use forcing_lab::plane::planar_code::{from_planar_code, to_planar_code};
use forcing_lab::plane::{canonical_form, classify_gk, named, validate_fullerene};

fn main() -> anyhow::Result<()> {
    let graphs = [
        ("F20", named::dodecahedron()),
        ("F24", named::f24()),
        ("G1", named::gk(1)),
        ("G2", named::gk(2)),
        ("cube", named::cube()),
    ];
    for (name, g) in &graphs {
        match validate_fullerene(g) {
            Ok(f) => {
                let cuts = small_cut_report(g);
                println!(
                    "{name}: {} vertices, {} hexagons, cyclic edge-connectivity {:?}, 3-cuts trivial {}, 4-cuts isolate an edge {}, G^k index {:?}",
                    f.order(),
                    f.hexagons(),
                    cuts.cyclic_edge_connectivity,
                    cuts.three_cuts_trivial,
                    cuts.four_cuts_isolate_edge,
                    classify_gk(g)
                );
            }
            Err(v) => println!("{name}: not a fullerene: {v:?}"),
        }
    }

    // planar code keeps the embedding, so the canonical form survives a
    // round trip, and mirror images are identified
    let g = named::f24();
    let back = from_planar_code(&to_planar_code(&g)?)?;
    println!("F24 round trip equal: {}", canonical_form(&back[0]) == canonical_form(&g));
    println!("F24 equals its mirror: {}", canonical_form(&g.mirror()) == canonical_form(&g));
    Ok(())
}
