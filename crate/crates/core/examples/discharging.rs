//! Run the discharging rules with exact rational charges and print the
//! ledger: initial charge, every transfer, final charge.
//!
//!     cargo run --example discharging

use dpcolor::discharging::{discharge, initial_charges, Element};
use dpcolor::fixtures;
use dpcolor::labelling::LabelledGraph;

pub fn main() -> Result<(), Box<dyn std::error::Error>> {
    let g = fixtures::special_h();
    let start = initial_charges(&g);
    println!("initial total {}", start.total_initial());

    let led = discharge(&LabelledGraph::identity(g, 3)?)?;
    print!("{}", led.to_text());
    for s in &led.specials {
        println!("special subgraph on {:?}: {} -> {}", s.subgraph.vertices, s.ch, s.ch_star);
    }
    for c in &led.counters {
        if c.r1 + c.r2 + c.r3 + c.b + c.h + c.t > 0 {
            println!("{c:?}");
        }
    }

    let g = fixtures::pentagon_with_outer_two_vertex();
    let led = discharge(&LabelledGraph::identity(g, 3)?)?;
    println!("\n2-vertex on a pentagon ends at {}", led.ch_star(Element::Vertex(0)));
    Ok(())
}
