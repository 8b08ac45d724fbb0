//! Colour a labelled graph, extend a fixed boundary colouring, and decide
//! DP-colourability over all labellings.
//!
//!     cargo run --example coloring

use dpcolor::coloring::{extend_boundary, is_dp_k_colorable, solve, Coloring};
use dpcolor::fixtures;
use dpcolor::labelling::LabelledGraph;
use dpcolor::PlaneGraph;

pub fn main() -> Result<(), Box<dyn std::error::Error>> {
    // K3 needs 3 colours, but twisting one edge makes 2 enough
    for twisted in [false, true] {
        let mut lg = LabelledGraph::identity(fixtures::k3(), 2)?;
        if twisted {
            lg.set_arc(0, 1, dpcolor::Perm::transposition(2, 0, 1))?;
        }
        let r = solve(&lg, &Coloring::empty(3, 2))?;
        println!("K3, 2 colours, twisted {twisted}: {:?} after {} nodes", r.status, r.nodes);
    }

    // pin vertex 1 to colour 1 and vertex 2 to colour 2
    let lg = LabelledGraph::identity(PlaneGraph::cycle(5), 3)?;
    let mut pre = Coloring::empty(5, 3);
    pre.set(0, 0);
    pre.set(1, 1);
    let r = solve(&lg, &pre)?;
    let colours: Vec<u8> = (0..5).map(|v| r.witness.as_ref().unwrap().get(v).unwrap() + 1).collect();
    println!("C5 with two pinned vertices: {colours:?}");

    // every 3-colouring of the outer 12-cycle of the light pentagon that
    // comes from a full colouring extends again
    let lp = fixtures::light_pentagon();
    let lg = LabelledGraph::identity(lp.graph.clone(), 3)?;
    let full = solve(&lg, &Coloring::empty(lp.graph.n_vertices(), 3))?.witness.unwrap();
    let mut boundary = Coloring::empty(lp.graph.n_vertices(), 3);
    for v in lp.graph.face_vertices(0) {
        boundary.set(v, full.get(v).unwrap());
    }
    println!("boundary colouring extends: {}", extend_boundary(&lg, &boundary)?.found());

    for (name, g, k) in [("C4", fixtures::c4(), 2), ("C4", fixtures::c4(), 3), ("K4", fixtures::k4(), 3)] {
        let r = is_dp_k_colorable(g, k, 2)?;
        println!("{name} DP-{k}-colourable: {} ({} labellings checked)", r.colorable, r.classes);
    }
    Ok(())
}
