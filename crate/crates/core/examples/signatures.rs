//! Permutation labellings: monodromy around cycles, switching at vertices,
//! and the finite set of labellings every other one switches to.
//!
//!     cargo run --example signatures

use dpcolor::cycles::enumerate_cycles;
use dpcolor::fixtures;
use dpcolor::labelling::{signature_classes, LabelledGraph};
use dpcolor::Perm;

pub fn main() -> Result<(), Box<dyn std::error::Error>> {
    let g = fixtures::special_h();
    let mut lg = LabelledGraph::identity(g.clone(), 3)?;
    lg.set_arc(0, 1, "231".parse()?)?;
    lg.set_arc(1, 5, "213".parse()?)?;

    let show = |lg: &LabelledGraph| {
        for c in enumerate_cycles(lg.graph(), 6) {
            let m = lg.monodromy(&c, c.vertices()[0]).unwrap();
            println!("  cycle {:?}: monodromy {m}, positive {}", c.vertices(), m.is_identity());
        }
    };
    println!("before switching:");
    show(&lg);

    let switched = lg.replay(&[(1, "312".parse::<Perm>()?), (4, "132".parse()?)])?;
    println!("after switching at 2 and 5:");
    show(&switched);

    // push everything off a spanning tree
    let (normal, steps) = lg.normalize()?;
    println!("normalised with {} switches; non-identity arcs:", steps.len());
    for a in normal.arcs().iter().filter(|a| !a.perm.is_identity()) {
        println!("  {} -> {}: {}", a.tail + 1, a.head + 1, a.perm);
    }

    let classes = signature_classes(g, 3)?;
    println!("\n{} labellings up to switching ({} free edges)", classes.len(), classes.free_edges().len());
    Ok(())
}
