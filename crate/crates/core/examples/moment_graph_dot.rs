//! Writes the moment graph of the adjoint weight and its twisted versions as
//! DOT, and lists the affine labels on its edges.
//!
//!     cargo run --example moment_graph_dot | dot -Tsvg > g.svg

use crystal_charge::rootlat::edge_label;
use crystal_charge::wallcross::{MomentGraph, WallSequence};
use crystal_charge::{Result, Weight};

fn main() -> Result<()> {
    let g = MomentGraph::new(&Weight::new(vec![2, 1, 0]))?;
    let walls = WallSequence::new(&g);
    eprintln!("{} vertices, {} edges, {} walls", g.vertices().len(), g.edges().len(), walls.len());
    for e in g.edges() {
        let (a, b) = (&g.vertices()[e.src], &g.vertices()[e.dst]);
        debug_assert_eq!(edge_label(a, b), Some(e.label));
        eprintln!("  {a} -> {b}  {}", e.label);
    }
    for m in 0..=walls.len() {
        let tw = g.twisted(&walls, m);
        eprintln!("m={m} in-degrees {:?}", tw.in_degrees());
        println!("{}", tw.to_dot());
    }
    Ok(())
}
