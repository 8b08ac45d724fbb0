//! Claws and biclaws: the configurations that make a short cycle bad.
//!
//!     cargo run --example bad_cycles

use dpcolor::cycles::outer_cycle;
use dpcolor::fixtures;
use dpcolor::structure::{classify_bad_cycle, find_biclaws, find_claws, is_good_cycle, Side};

pub fn main() -> Result<(), Box<dyn std::error::Error>> {
    let shapes = [
        ("claw 3,5,10", fixtures::claw_3_5_10()),
        ("claw 5,5,8", fixtures::claw_5_5_8()),
        ("claw 6,6,6", fixtures::claw_6_6_6()),
        ("claw 3,5,11", fixtures::claw_3_5_11()),
        ("biclaw 5,5,5,8", fixtures::biclaw_5_5_5_8()),
    ];
    for (name, g) in shapes {
        let u = outer_cycle(&g).expect("boundary cycle");
        println!("{name}: |C| = {}, good {}", u.len(), is_good_cycle(&g, &u)?);
        for c in find_claws(&g, &u, Side::Interior)? {
            println!("  claw at {} touching {:?}, cells {:?}", c.center, c.attachments, c.cells);
        }
        for b in find_biclaws(&g, &u, Side::Interior)? {
            println!("  biclaw at {:?}, cells {:?}", b.centers, b.cells);
        }
        println!("  shape {:?}", classify_bad_cycle(&g, &u)?);
    }

    // the same 12-cycle seen from outside has nothing attached
    let g = fixtures::claw_5_5_8();
    let u = outer_cycle(&g).unwrap();
    println!("\nexterior claws on the 5,5,8 cycle: {}", find_claws(&g, &u, Side::Exterior)?.len());
    Ok(())
}
