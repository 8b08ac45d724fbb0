//! Generate small graphs without 4-, 7- and 9-cycles and check each one is
//! DP-3-colourable by sweeping every labelling.
//!
//!     cargo run --release --example theorem_check

use dpcolor::coloring::verify_theorem;
use dpcolor::generate::{generate, GenConfig};

pub fn main() -> Result<(), Box<dyn std::error::Error>> {
    let jobs = std::thread::available_parallelism().map_or(1, |n| n.get()).min(4);
    let mut checked = 0;
    for seed in 0..40 {
        let g = generate(&GenConfig::new(6 + seed as usize % 7, seed))?;
        if g.cycle_space_dimension() > 5 {
            continue;
        }
        let r = verify_theorem(g.clone(), jobs)?;
        println!(
            "seed {seed:>2}: {:>2} vertices, {:>5} labellings, colourable {}",
            g.n_vertices(),
            r.classes,
            r.colorable
        );
        assert!(r.colorable);
        checked += 1;
    }
    println!("{checked} graphs checked");
    Ok(())
}
