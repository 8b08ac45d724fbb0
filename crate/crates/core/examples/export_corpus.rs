//! Writes the fixture corpus as `.pg` files, plus the surgery plans,
//! a sample signature and a boundary precolouring used by the CLI docs.
//!
//!     cargo run --example export_corpus -- crates/core/fixtures

use std::fs;
use std::path::PathBuf;

use dpcolor::coloring::{solve, Coloring};
use dpcolor::fixtures;
use dpcolor::format::{write_pg, write_plan, write_precoloring, write_sig};
use dpcolor::labelling::LabelledGraph;
use dpcolor::perm::Perm;
use dpcolor::surgery::{Action, Slot, SurgeryPlan};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let dir: PathBuf = std::env::args().nth(1).unwrap_or_else(|| "fixtures".into()).into();
    fs::create_dir_all(&dir)?;
    for (name, g) in fixtures::corpus() {
        fs::write(dir.join(format!("{name}.pg")), write_pg(&g))?;
    }

    let lp = fixtures::light_pentagon();
    let pentagon = SurgeryPlan {
        deletions: lp.ring.to_vec(),
        action: Action::InsertArc {
            u: lp.outer[1],
            w: lp.outer[4],
            perm: Perm::identity(3),
            slot: Slot::Auto,
        },
    };
    fs::write(dir.join("light_pentagon.plan"), write_plan(&pentagon))?;

    let bp = fixtures::bad_path();
    let path = SurgeryPlan {
        deletions: vec![bp.u, bp.v, bp.x, bp.y, bp.z],
        action: Action::Identify(bp.x_out, bp.u_out),
    };
    fs::write(dir.join("bad_path.plan"), write_plan(&path))?;

    let h = fixtures::special_h();
    let mut lg = LabelledGraph::identity(h, 3)?;
    lg.set_arc(0, 1, "231".parse()?)?;
    lg.set_arc(1, 5, "213".parse()?)?;
    fs::write(dir.join("h.sig"), write_sig(&lg))?;

    // a boundary colouring of the light pentagon that extends inward
    let lg = LabelledGraph::identity(lp.graph.clone(), 3)?;
    let total = solve(&lg, &Coloring::empty(lp.graph.n_vertices(), 3))?
        .witness
        .expect("3-colourable");
    let mut phi = Coloring::empty(lp.graph.n_vertices(), 3);
    for v in lp.graph.face_vertices(0) {
        phi.set(v, total.get(v).expect("total"));
    }
    fs::write(dir.join("light_pentagon.precolor"), write_precoloring(&phi))?;

    println!("wrote corpus to {}", dir.display());
    Ok(())
}
