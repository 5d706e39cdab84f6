//! Kostka-Foulkes table for a shape given on the command line, checked
//! against the two independent formulas.
//!
//!     cargo run --example kostka_table -- 3 3,2,1

use crystal_charge::charge::{kostant_oracle, kostka_table, llt_charge2_all};
use crystal_charge::crystal::Crystal;
use crystal_charge::Result;

fn main() -> Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let rank: usize = args.first().map_or(2, |s| s.parse().expect("rank"));
    let lambda: Vec<i64> = args
        .get(1)
        .map_or("3,1".into(), |s| s.clone())
        .split(',')
        .map(|p| p.parse().expect("part"))
        .collect();

    let c = Crystal::build(rank, &lambda)?;
    // forces the exact-division check on every orbit
    llt_charge2_all(&c)?;
    for (mu, k) in kostka_table(&c)? {
        let alt = kostant_oracle(rank, c.lambda(), &mu)?;
        let mark = if alt == k { "" } else { "  MISMATCH" };
        println!("{:<14} {:<24} {}{}", mu.to_string(), k.to_q_string(), k, mark);
    }
    Ok(())
}
