//! Short cycles, class membership and the paths that split a cycle.
//!
//!     cargo run --example cycles

use dpcolor::cycles::{check_splitting_lemma, enumerate_cycles, outer_cycle, sides, splitting_paths};
use dpcolor::fixtures;
use dpcolor::{classify, PlaneGraph};

pub fn main() -> Result<(), Box<dyn std::error::Error>> {
    for (name, g) in [("K4", fixtures::k4()), ("H", fixtures::special_h()), ("dodecahedron", fixtures::dodecahedron())] {
        let r = classify(&g);
        let lens: Vec<usize> = enumerate_cycles(&g, 9).iter().map(|c| c.len()).collect();
        println!("{name}: cycles up to 9 have lengths {lens:?}");
        println!("  in class: {}, forbidden cycles found: {}", r.in_class_g, r.forbidden_cycles_found.len());
    }

    // a 12-cycle with a 3-edge path inside
    let g = fixtures::c12_with_three_path();
    let u = outer_cycle(&g).expect("outer face is a cycle");
    let s = sides(&g, &u)?;
    println!("\nC12 plus path: {} inside, {} outside", s.interior.len(), s.exterior.len());
    for p in splitting_paths(&g, &u, 5)? {
        println!("  path {:?} splits it into lengths {:?}", p.path, p.lengths);
    }
    let report = check_splitting_lemma(&g, &u)?;
    println!("  paths breaking the length window: {}", report.violated.len());

    let c5 = PlaneGraph::cycle(5);
    println!("\nC5 has {} splitting paths", splitting_paths(&c5, &outer_cycle(&c5).unwrap(), 5)?.len());
    Ok(())
}
