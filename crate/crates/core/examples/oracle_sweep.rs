//! Compares the charge-based Kostka-Foulkes polynomials with the Lusztig
//! q-analogue over every shape up to a given size.
//!
//!     cargo run --release --example oracle_sweep -- 3 7

use crystal_charge::charge::{kostant_oracle, kostka_table};
use crystal_charge::crystal::Crystal;
use crystal_charge::rootlat::partitions;
use crystal_charge::Result;

fn main() -> Result<()> {
    let args: Vec<usize> = std::env::args().skip(1).map(|s| s.parse().expect("integer")).collect();
    let rank = args.first().copied().unwrap_or(2);
    let max = args.get(1).copied().unwrap_or(6) as i64;

    let (mut checked, mut bad) = (0, 0);
    for size in 0..=max {
        for lambda in partitions(size, rank + 1) {
            let c = Crystal::build(rank, &lambda)?;
            for (mu, k) in kostka_table(&c)? {
                checked += 1;
                if kostant_oracle(rank, c.lambda(), &mu)? != k {
                    bad += 1;
                    println!("mismatch at {} {}", c.lambda(), mu);
                }
            }
        }
    }
    println!("rank {rank}, |lambda| <= {max}: {checked} polynomials, {bad} mismatches");
    Ok(())
}
