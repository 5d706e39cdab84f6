//! Atom decomposition of B(3,2,1) in GL4, with the axioms checked and the
//! Kazhdan-Lusztig basis element written in the N basis.

use crystal_charge::atoms::AtomDecomposition;
use crystal_charge::charge::kl_in_n_basis;
use crystal_charge::crystal::Crystal;
use crystal_charge::Result;

fn main() -> Result<()> {
    let c = Crystal::build(3, &[3, 2, 1])?;
    let atoms = AtomDecomposition::new(&c);
    atoms.verify(&c)?;
    println!("{} elements in {} atoms", c.len(), atoms.len());

    let mut sizes = std::collections::BTreeMap::<usize, usize>::new();
    for a in atoms.atoms() {
        *sizes.entry(a.len()).or_default() += 1;
    }
    for (size, count) in sizes {
        println!("  {count} atoms of size {size}");
    }
    for a in atoms.atoms().iter().take(4) {
        let t = a.members()[0];
        println!("  top {} first member {}", a.highest_weight(), c.tableau(t));
    }
    println!("{}", kl_in_n_basis(&c, &atoms)?);
    Ok(())
}
