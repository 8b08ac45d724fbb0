//! Reduce a configuration: delete internal vertices, then identify two
//! survivors or join them by a new arc, and check the result stays safe.
//!
//!     cargo run --example surgery

use dpcolor::fixtures;
use dpcolor::format::write_plan;
use dpcolor::labelling::LabelledGraph;
use dpcolor::surgery::{apply, check_safety, Action, Slot, SurgeryPlan};
use dpcolor::{PlaneGraph, Perm};

pub fn main() -> Result<(), Box<dyn std::error::Error>> {
    let lp = fixtures::light_pentagon();
    let lg = LabelledGraph::identity(lp.graph.clone(), 3)?;
    let plan = SurgeryPlan {
        deletions: lp.ring.to_vec(),
        action: Action::InsertArc {
            u: lp.outer[1],
            w: lp.outer[4],
            perm: Perm::identity(3),
            slot: Slot::Auto,
        },
    };
    print!("plan:\n{}", write_plan(&plan));
    let out = apply(&lg, &plan)?;
    let g = out.graph.graph();
    println!("{} -> {} vertices, faces {:?}", lp.graph.n_vertices(), g.n_vertices(), g.face_sizes());
    println!("{:?}", check_safety(&lg, &plan)?);

    let b = fixtures::bad_path();
    let lg = LabelledGraph::identity(b.graph.clone(), 3)?;
    let plan = SurgeryPlan {
        deletions: vec![b.u, b.v, b.x, b.y, b.z],
        action: Action::Identify(b.x_out, b.u_out),
    };
    print!("\nplan:\n{}", write_plan(&plan));
    println!("{:?}", check_safety(&lg, &plan)?);

    // identifying two vertices with a common neighbour would double an edge
    let lg = LabelledGraph::identity(PlaneGraph::cycle(6), 3)?;
    let plan = SurgeryPlan {
        deletions: vec![],
        action: Action::Identify(0, 2),
    };
    println!("\nC6, identify 1 and 3: {}", apply(&lg, &plan).unwrap_err());
    Ok(())
}
