//! The adjoint crystal of GL3. The zero weight space has two elements which
//! land in different atoms.

use crystal_charge::atoms::AtomDecomposition;
use crystal_charge::charge::{charge2, kostka_foulkes};
use crystal_charge::crystal::Crystal;
use crystal_charge::rootlat::Root;
use crystal_charge::{Result, Weight};

fn main() -> Result<()> {
    let c = Crystal::build(2, &[2, 1])?;
    let atoms = AtomDecomposition::new(&c);
    atoms.verify(&c)?;
    print!("{}", c.to_dot());

    let zero = Weight::new(vec![1, 1, 1]);
    for &t in c.of_weight(&zero) {
        let a = atoms.atom_of(t);
        println!(
            "{}  atom top {}  size {}  2*charge {}",
            c.tableau(t),
            a.highest_weight(),
            a.len(),
            charge2(&c, t)
        );
    }
    println!("K = {}", kostka_foulkes(&c, &zero)?);

    let theta = Root::highest(2);
    for t in 0..c.len() {
        if let Some(u) = c.f_alpha(&theta, t)? {
            println!("f_theta: {} -> {}", c.tableau(t), c.tableau(u));
        }
    }
    Ok(())
}
