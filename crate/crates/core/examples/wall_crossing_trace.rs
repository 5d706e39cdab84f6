//! Runs the recharge engine across every wall and prints the graded
//! character at each stage. The last stage is the Kostka-Foulkes table,
//! shifted by the length of each weight.

use crystal_charge::atoms::AtomDecomposition;
use crystal_charge::charge::charge2;
use crystal_charge::crystal::Crystal;
use crystal_charge::wallcross::Engine;
use crystal_charge::rootlat::length;
use crystal_charge::Result;

fn main() -> Result<()> {
    let c = Crystal::build(2, &[3, 1])?;
    let atoms = AtomDecomposition::new(&c);
    let engine = Engine::new(&c, &atoms)?;
    let walls: Vec<String> = engine.walls().walls().iter().map(|w| w.to_string()).collect();
    println!("walls in crossing order: {}", walls.join(", "));

    let trace = engine.run()?;
    for step in &trace.steps {
        let wall = step.wall.map(|w| format!(" across {w}")).unwrap_or_default();
        println!("{} m={:?}{}", step.stage, step.m, wall);
        for wp in step.h.iter().filter(|wp| wp.weight.is_dominant()) {
            println!("    {}  {}", wp.weight, wp.h);
        }
    }
    let last = trace.final_state();
    let agrees = (0..c.len()).all(|t| last.r2[t] == charge2(&c, t) - length(c.weight(t)));
    println!("final recharge equals 2*charge - length: {agrees}, all checks: {}", trace.ok);
    Ok(())
}
