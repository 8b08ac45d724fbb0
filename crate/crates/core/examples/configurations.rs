//! Local configurations: special triangle/pentagon pairs, strings of
//! 2-vertices, light faces, and the structural predicates that a smallest
//! counterexample would satisfy.
//!
//!     cargo run --example configurations

use dpcolor::fixtures;
use dpcolor::labelling::LabelledGraph;
use dpcolor::structure::{
    all_strings, bad_3_faces, bad_path_violations, lemma_predicates, light_faces, special_subgraphs,
};

pub fn main() -> Result<(), Box<dyn std::error::Error>> {
    let h = fixtures::special_h();
    for s in special_subgraphs(&h) {
        println!("H: triangle f{} + pentagon f{} on {:?}", s.triangle_face, s.five_face, s.vertices);
    }

    for k in [5, 8, 12] {
        let g = fixtures::string_face(k, 1);
        for s in all_strings(&g) {
            println!("{k}-face family: string {:?} on f{} anchored at {:?}", s.path, s.face, s.anchors);
        }
    }

    let lp = fixtures::light_pentagon();
    println!("\nlight pentagon: light faces {:?}", light_faces(&lp.graph));
    let lg = LabelledGraph::identity(lp.graph, 3)?;
    for (p, holds) in lemma_predicates(&lg)?.values {
        println!("  {:<28} {holds}", p.name());
    }

    let b = fixtures::bad_path();
    let lg = LabelledGraph::identity(b.graph.clone(), 3)?;
    println!("\nbad path: bad triangles {:?}", bad_3_faces(&lg));
    println!("  offending paths {:?}", bad_path_violations(&lg));
    let mut twisted = lg.clone();
    twisted.set_arc(b.u, b.v, "213".parse()?)?;
    println!("  with a negative triangle: bad triangles {:?}", bad_3_faces(&twisted));
    Ok(())
}
