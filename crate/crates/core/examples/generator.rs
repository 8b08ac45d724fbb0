//! Random plane graphs avoiding chosen cycle lengths.
//!
//!     cargo run --example generator

use dpcolor::classify;
use dpcolor::cycles::enumerate_cycles;
use dpcolor::generate::{generate, GenConfig};

pub fn main() -> Result<(), Box<dyn std::error::Error>> {
    for seed in 0..5 {
        let g = generate(&GenConfig::new(15, seed))?;
        println!(
            "seed {seed}: {} edges, faces {:?}, in class {}",
            g.n_edges(),
            g.face_sizes(),
            classify(&g).in_class_g
        );
    }

    // girth at least 6 and no 8-cycles
    let mut cfg = GenConfig::new(20, 42);
    cfg.forbidden_lengths = [3, 4, 5, 8].into_iter().collect();
    cfg.pendant_rate = 0.1;
    let g = generate(&cfg)?;
    let lens: std::collections::BTreeSet<usize> = enumerate_cycles(&g, 13).iter().map(|c| c.len()).collect();
    println!("\nforbidding 3, 4, 5, 8: cycle lengths up to 13 are {lens:?}");
    print!("{}", g.to_pg());
    Ok(())
}
