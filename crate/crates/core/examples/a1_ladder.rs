//! The rank-one ladder B(4): every weight space is one-dimensional, so the
//! atom decomposition is trivial and the charges are easy to read off.

use crystal_charge::atoms::{atomic_number2, AtomDecomposition};
use crystal_charge::charge::charge2;
use crystal_charge::crystal::Crystal;
use crystal_charge::Result;

fn main() -> Result<()> {
    let c = Crystal::build(1, &[4])?;
    let atoms = AtomDecomposition::new(&c);
    println!("{} elements, {} atoms", c.len(), atoms.len());
    for t in 0..c.len() {
        println!(
            "{:>6}  wt {}  2Z = {:>2}  2*charge = {:>2}",
            c.tableau(t).to_string(),
            c.weight(t),
            atomic_number2(&c, t),
            charge2(&c, t),
        );
    }
    let mut t = c.highest();
    let mut path = vec![c.tableau(t).to_string()];
    while let Some(next) = c.f(1, t) {
        t = next;
        path.push(c.tableau(t).to_string());
    }
    println!("f_1 string: {}", path.join(" -> "));
    Ok(())
}
