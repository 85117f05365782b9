//! Patches cut out of a fullerene, their distance-arrays and the array
//! operations.
//!
//! `cargo run --example patches_and_arrays`

use forcing_lab::digraph::{apply_o1, apply_o2, apply_o6};
use forcing_lab::patch::{patch_from_cut, DistanceArray, GeneralizedPatch};
use forcing_lab::plane::{edge_cuts_up_to, named};

fn main() -> anyhow::Result<()> {
    println!("normalize [3516] -> {}", DistanceArray::new(vec![3, 5, 1, 6]).normalize());

    // every cyclic 6-cut of G^2 and the arrays of its two sides
    let g = named::gk(2);
    for cut in edge_cuts_up_to(&g, 6)?.iter().filter(|c| c.size() == 6 && c.kind.cyclic).take(4) {
        for side in [true, false] {
            let p = patch_from_cut(&g, cut, side)?;
            println!(
                "cut {:?}: side with {} vertices, {} pentagons, array {}, boundary identity {:?}",
                cut.edges,
                p.real_order(),
                p.pentagons(),
                p.min_array(),
                p.boundary_formula_check()
            );
        }
    }

    // growing a pentagon into a generalized patch
    let pent = GeneralizedPatch::ring(5);
    let grown = pent.add_face(0, 6)?.add_vertex_pair(1)?;
    println!("pentagon {} -> {} after a hexagon and a vertex pair", pent.min_array(), grown.min_array());

    let a = DistanceArray::new(vec![1, 3, 3, 3, 3, 3, 3, 5]);
    println!("O1 at 7 on {a:?}: {:?}", apply_o1(&a, 7).map(|r| r.normalize().to_string()));
    println!("O2 at 7 on {a:?}: {:?}", apply_o2(&a, 7).map(|r| r.normalize().to_string()));
    // O6 needs twelve half-edges
    let b = DistanceArray::new(vec![1, 3, 3, 3, 1, 3, 2, 3, 1, 3, 2, 3]);
    for j in 0..b.len() {
        if let Ok(r) = apply_o6(&b, j) {
            println!("O6 at {j} on {b:?}: {}", r.normalize());
        }
    }
    Ok(())
}
