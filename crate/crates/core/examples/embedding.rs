//! Build a plane graph from clockwise rotations, walk its faces and round-trip
//! it through the `.pg` text format.
//!
//!     cargo run --example embedding

use dpcolor::format::{parse_pg, write_pg};
use dpcolor::PlaneGraph;

pub fn main() -> Result<(), Box<dyn std::error::Error>> {
    // a 6-cycle with the chord 1-5: a triangle glued to a pentagon
    let g = PlaneGraph::build(
        vec![vec![1, 5], vec![2, 0, 5], vec![3, 1], vec![4, 2], vec![5, 3], vec![0, 4, 1]],
        (1, 0),
    )?;
    println!("V = {}, E = {}, F = {}", g.n_vertices(), g.n_edges(), g.n_faces());
    for f in 0..g.n_faces() {
        let vs: Vec<usize> = g.face_vertices(f).iter().map(|v| v + 1).collect();
        let tag = if f == 0 { " (outer)" } else { "" };
        println!("face {f}{tag}: {vs:?}");
    }
    for v in g.vertices() {
        println!("vertex {}: degree {}, faces {:?}", v + 1, g.degree(v), g.face_sizes_at(v)?);
    }

    let text = write_pg(&g);
    print!("\n{text}");
    let back = parse_pg(&text)?;
    assert_eq!(back.canonical_code(), g.canonical_code());

    // the same graph drawn with the triangle outside
    let flipped = g.with_outer(0, 1)?;
    println!("\nouter face after flipping: {:?}", flipped.face_vertices(0));
    Ok(())
}
