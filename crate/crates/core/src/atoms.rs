//! Atomic decomposition of `B(λ)` and the atomic number.
//!
//! Atoms are the connected components of the graph joining `T` to `s_i(T)`
//! for every `i` and to `f_n(T)`. Each atom has one element of every weight
//! in a lower Bruhat interval.

use std::collections::HashSet;

use serde::Serialize;

use crate::crystal::{Crystal, Tableau};
use crate::error::{Error, Result};
use crate::rootlat::{bruhat_leq, rho_pair2, weights_below, Root, Weight};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Atom {
    highest_weight: Weight,
    members: Vec<usize>,
}

impl Atom {
    pub fn highest_weight(&self) -> &Weight {
        &self.highest_weight
    }

    /// Element indices, ascending.
    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// The member of weight `μ`, if any.
    pub fn member_of_weight(&self, c: &Crystal, mu: &Weight) -> Option<usize> {
        self.members.iter().copied().find(|&t| c.weight(t) == mu)
    }
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.0[r] != r {
            r = self.0[r];
        }
        let mut y = x;
        while self.0[y] != r {
            let next = self.0[y];
            self.0[y] = r;
            y = next;
        }
        r
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.0[ra.max(rb)] = ra.min(rb);
        }
    }
}

#[derive(Clone, Debug)]
pub struct AtomDecomposition {
    atoms: Vec<Atom>,
    atom_of: Vec<usize>,
}

impl AtomDecomposition {
    /// Atoms are ordered by their smallest member, so atom 0 holds the
    /// highest weight element.
    pub fn new(c: &Crystal) -> Self {
        let n = c.rank();
        let mut uf = UnionFind((0..c.len()).collect());
        for t in 0..c.len() {
            for i in 1..=n {
                uf.union(t, c.s_act(i, t));
            }
            if let Some(u) = c.f(n, t) {
                uf.union(t, u);
            }
        }
        let mut root_to_atom = vec![usize::MAX; c.len()];
        let mut atoms: Vec<Vec<usize>> = Vec::new();
        let mut atom_of = vec![0; c.len()];
        for t in 0..c.len() {
            let r = uf.find(t);
            if root_to_atom[r] == usize::MAX {
                root_to_atom[r] = atoms.len();
                atoms.push(Vec::new());
            }
            atom_of[t] = root_to_atom[r];
            atoms[root_to_atom[r]].push(t);
        }
        let atoms = atoms
            .into_iter()
            .map(|members| {
                let top = members
                    .iter()
                    .map(|&t| c.weight(t))
                    .filter(|w| w.is_dominant())
                    .max_by_key(|w| rho_pair2(w))
                    .expect("every atom meets the dominant chamber")
                    .clone();
                Atom {
                    highest_weight: top,
                    members,
                }
            })
            .collect();
        AtomDecomposition { atoms, atom_of }
    }

    pub fn atoms(&self) -> &[Atom] {
        &self.atoms
    }

    pub fn len(&self) -> usize {
        self.atoms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.atoms.is_empty()
    }

    pub fn atom_index(&self, t: usize) -> usize {
        self.atom_of[t]
    }

    pub fn atom_of(&self, t: usize) -> &Atom {
        &self.atoms[self.atom_of[t]]
    }

    /// Checks the atom axioms: distinct weights filling the lower interval of
    /// the highest weight, closure under `W` and `f_n`, and the string-length
    /// criterion for `f_β` with `β = α_{k,n}`.
    pub fn verify(&self, c: &Crystal) -> Result<()> {
        let n = c.rank();
        for (a, atom) in self.atoms.iter().enumerate() {
            let fail = |why: String| Error::Internal(format!("atom {a}: {why}"));
            let mut got: Vec<Weight> = atom.members.iter().map(|&t| c.weight(t).clone()).collect();
            got.sort();
            if got.windows(2).any(|w| w[0] == w[1]) {
                return Err(fail("repeated weight".into()));
            }
            let want = weights_below(&atom.highest_weight)?;
            if got != want {
                return Err(fail(format!(
                    "weights do not form the interval below {}",
                    atom.highest_weight
                )));
            }
            let members: HashSet<usize> = atom.members.iter().copied().collect();
            for &t in &atom.members {
                let closed = (1..=n).all(|i| members.contains(&c.s_act(i, t)))
                    && c.f(n, t).map_or(true, |u| members.contains(&u));
                if !closed {
                    return Err(fail(format!("not closed at {}", c.tableau(t))));
                }
                for k in 1..=n {
                    let beta = Root::new(n, k, n)?;
                    let phi = c.phi_alpha(&beta, t)?;
                    if let Some(u) = c.f_alpha(&beta, t)? {
                        if !members.contains(&u) {
                            return Err(fail(format!("f_{beta} leaves the atom")));
                        }
                    }
                    // f_β^j(T) ≠ 0 exactly when wt T − jβ stays in the interval
                    for j in 0..=phi + 1 {
                        let inside =
                            bruhat_leq(&c.weight(t).plus_root(-(j as i64), &beta), &atom.highest_weight)?;
                        if inside != (j <= phi) {
                            return Err(fail(format!(
                                "string of f_{beta} at {} disagrees with the interval",
                                c.tableau(t)
                            )));
                        }
                    }
                }
            }
            let z = atomic_number2(c, atom.members[0]);
            if atom.members.iter().any(|&t| atomic_number2(c, t) != z) {
                return Err(fail("atomic number not constant".into()));
            }
        }
        Ok(())
    }

    pub fn to_json(&self, c: &Crystal) -> serde_json::Value {
        #[derive(Serialize)]
        struct Row<'a> {
            highest_weight: &'a Weight,
            members: Vec<&'a Tableau>,
            atomic_number2: i64,
        }
        let rows: Vec<Row> = self
            .atoms
            .iter()
            .map(|a| Row {
                highest_weight: &a.highest_weight,
                members: a.members.iter().map(|&t| c.tableau(t)).collect(),
                atomic_number2: atomic_number2(c, a.members[0]),
            })
            .collect();
        serde_json::to_value(rows).expect("atoms serialize")
    }
}

/// `2·Z(T) = −2⟨wt T, ρ∨⟩ + 2·Σ_{β>0} φ_β(T)`.
pub fn atomic_number2(c: &Crystal, t: usize) -> i64 {
    -rho_pair2(c.weight(t)) + 2 * c.phi_total(t)
}

/// The same number computed from the `ε` side.
pub fn atomic_number2_eps(c: &Crystal, t: usize) -> i64 {
    rho_pair2(c.weight(t)) + 2 * c.eps_total(t)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootlat::{partitions, WeylElement};

    #[test]
    fn ladder_is_one_atom() {
        let c = Crystal::build(1, &[4]).unwrap();
        let d = AtomDecomposition::new(&c);
        assert_eq!(d.len(), 1);
        assert_eq!(d.atoms()[0].len(), 5);
        assert_eq!(d.atoms()[0].highest_weight(), c.lambda());
        for t in 0..5 {
            assert_eq!(atomic_number2(&c, t), 4);
            assert_eq!(atomic_number2_eps(&c, t), 4);
        }
        let c = Crystal::build(1, &[1]).unwrap();
        assert_eq!(AtomDecomposition::new(&c).atoms()[0].len(), 2);
    }

    #[test]
    fn adjoint_atoms() {
        let c = Crystal::build(2, &[2, 1]).unwrap();
        let d = AtomDecomposition::new(&c);
        let sizes: Vec<usize> = d.atoms().iter().map(Atom::len).collect();
        assert_eq!(sizes, vec![7, 1]);
        assert_eq!(d.atom_of(c.highest()).highest_weight(), c.lambda());
        let zero = Weight::new(vec![1, 1, 1]);
        assert_eq!(d.atoms()[1].highest_weight(), &zero);
        let zs = c.of_weight(&zero);
        assert_eq!(zs.iter().filter(|&&t| d.atom_index(t) == 1).count(), 1);
        let single = d.atoms()[1].members()[0];
        assert_eq!(atomic_number2(&c, single), 2);
        assert_eq!(atomic_number2(&c, c.highest()), 4);
        d.verify(&c).unwrap();
    }

    #[test]
    fn weyl_action_stays_in_atom() {
        let c = Crystal::build(3, &[2, 1, 1]).unwrap();
        let d = AtomDecomposition::new(&c);
        for g in WeylElement::all(3) {
            for t in 0..c.len() {
                assert_eq!(d.atom_index(c.w_act(&g, t)), d.atom_index(t));
            }
        }
    }

    #[test]
    fn axioms_small_cases() {
        for n in 1..=3usize {
            for size in 0..=5 {
                for lam in partitions(size, n + 1) {
                    let c = Crystal::build(n, &lam).unwrap();
                    let d = AtomDecomposition::new(&c);
                    d.verify(&c).unwrap();
                    let total: usize = d.atoms().iter().map(Atom::len).sum();
                    assert_eq!(total, c.len());
                    for t in 0..c.len() {
                        assert_eq!(atomic_number2(&c, t), atomic_number2_eps(&c, t));
                    }
                }
            }
        }
    }

    #[test]
    fn json_export() {
        let c = Crystal::build(2, &[2, 1]).unwrap();
        let v = AtomDecomposition::new(&c).to_json(&c);
        assert_eq!(v[1]["highest_weight"], serde_json::json!([1, 1, 1]));
        assert_eq!(v[1]["atomic_number2"], 2);
        assert_eq!(v[0]["members"].as_array().unwrap().len(), 7);
    }
}
