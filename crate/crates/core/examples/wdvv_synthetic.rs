//! Seed, solve and verify the ten-class WDVV system on the built-in
//! associative fixture, then write the fixture files.
//!
//! `cargo run --example wdvv_synthetic -- crates/core/fixtures`

use std::path::PathBuf;

use symgw::wdvv::synthetic::{fixture_files, synthetic_complete, synthetic_known};
use symgw::wdvv::{pivot_claims, seed_table, solve_with_order, verify_all_relations, SolveOrder};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let seeded = seed_table(&synthetic_known()?, 4)?;
    println!("{} unknown entries after seeding", seeded.unknown().len());
    for claim in pivot_claims() {
        println!("  pivot: {claim}");
    }
    let (solved, report) = solve_with_order(&seeded, SolveOrder::Canonical)?;
    for step in &report.steps {
        println!("step {}: {} solved", step.step, step.solved.len());
    }
    let full = synthetic_complete(4)?;
    let same = solved.entries().all(|(t, _, v)| v == full.value(t));
    println!("matches withheld entries: {same}");
    let rep = verify_all_relations(&solved)?;
    println!("{} relations checked, {} violations", rep.relations_checked, rep.violations.len());
    if let Some(dir) = std::env::args().nth(1).map(PathBuf::from) {
        std::fs::create_dir_all(&dir)?;
        for (name, json) in fixture_files()? {
            std::fs::write(dir.join(name), json)?;
            println!("wrote {}", dir.join(name).display());
        }
    }
    Ok(())
}
