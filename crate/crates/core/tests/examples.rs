//! Runs every example so they stay in step with the library.

#[path = "../examples/audit.rs"]
mod audit;
#[path = "../examples/bad_cycles.rs"]
mod bad_cycles;
#[path = "../examples/coloring.rs"]
mod coloring;
#[path = "../examples/configurations.rs"]
mod configurations;
#[path = "../examples/cycles.rs"]
mod cycles;
#[path = "../examples/discharging.rs"]
mod discharging;
#[path = "../examples/embedding.rs"]
mod embedding;
#[path = "../examples/generator.rs"]
mod generator;
#[path = "../examples/signatures.rs"]
mod signatures;
#[path = "../examples/surgery.rs"]
mod surgery;
#[path = "../examples/theorem_check.rs"]
mod theorem_check;

#[test]
fn audit_runs() {
    audit::main().unwrap();
}

#[test]
fn bad_cycles_runs() {
    bad_cycles::main().unwrap();
}

#[test]
fn coloring_runs() {
    coloring::main().unwrap();
}

#[test]
fn configurations_runs() {
    configurations::main().unwrap();
}

#[test]
fn cycles_runs() {
    cycles::main().unwrap();
}

#[test]
fn discharging_runs() {
    discharging::main().unwrap();
}

#[test]
fn embedding_runs() {
    embedding::main().unwrap();
}

#[test]
fn generator_runs() {
    generator::main().unwrap();
}

#[test]
fn signatures_runs() {
    signatures::main().unwrap();
}

#[test]
fn surgery_runs() {
    surgery::main().unwrap();
}

#[test]
fn theorem_check_runs() {
    theorem_check::main().unwrap();
}
