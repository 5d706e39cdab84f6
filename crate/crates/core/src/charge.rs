//! Charge, Kostka-Foulkes polynomials and two independent referees for them.
//!
//! Exponents are doubled throughout: `charge2(T) = 2·c(T)` and Kostka-Foulkes
//! polynomials are stored in `v` with `q = v²`.

use std::fmt;

use crate::atoms::{atomic_number2, AtomDecomposition};
use crate::crystal::Crystal;
use crate::error::{Error, Result};
use crate::poly::LaurentPoly;
use crate::rootlat::{bruhat_leq, dominant_below, length, rho_pair2, Root, Weight, WeylElement};

/// `2·c(T) = 2·Z(T) − ℓ(wt T)`.
pub fn charge2(c: &Crystal, t: usize) -> i64 {
    atomic_number2(c, t) - length(c.weight(t))
}

fn check_target(c: &Crystal, mu: &Weight) -> Result<()> {
    mu.check_rank(c.rank())?;
    if !mu.is_dominant() {
        return Err(Error::NotDominant(mu.content().to_vec()));
    }
    if !mu.same_coset(c.lambda()) {
        return Err(Error::CosetMismatch(
            mu.content().to_vec(),
            c.lambda().content().to_vec(),
        ));
    }
    if !bruhat_leq(mu, c.lambda())? {
        return Err(Error::NotBelow {
            mu: mu.content().to_vec(),
            lambda: c.lambda().content().to_vec(),
        });
    }
    Ok(())
}

/// `K_{λ,μ}` in `v`: the sum of `v^{charge2(T)}` over `T` of weight `μ`.
pub fn kostka_foulkes(c: &Crystal, mu: &Weight) -> Result<LaurentPoly> {
    check_target(c, mu)?;
    Ok(c.of_weight(mu)
        .iter()
        .map(|&t| LaurentPoly::monomial(1, charge2(c, t)))
        .sum())
}

/// `K_{λ,μ}` for every dominant `μ ≤ λ`, largest `μ` first.
pub fn kostka_table(c: &Crystal) -> Result<Vec<(Weight, LaurentPoly)>> {
    dominant_below(c.lambda())?
        .into_iter()
        .map(|mu| {
            let k = kostka_foulkes(c, &mu)?;
            Ok((mu, k))
        })
        .collect()
}

// The image of every element under every Weyl group element.
fn weyl_orbit_tables(c: &Crystal) -> Vec<Vec<usize>> {
    WeylElement::all(c.rank())
        .iter()
        .map(|g| {
            let word = g.reduced_word();
            (0..c.len()).map(|t| c.act_word(&word, t)).collect()
        })
        .collect()
}

/// Doubled `γ_n` for every element, averaging `Σ_i i·min(ε_i, φ_i)` over
/// the Weyl orbit.
pub fn llt_charge2_all(c: &Crystal) -> Result<Vec<i64>> {
    let n = c.rank();
    let d: Vec<i64> = (0..c.len())
        .map(|t| {
            (1..=n)
                .map(|i| i as i64 * c.eps(i, t).min(c.phi(i, t)) as i64)
                .sum()
        })
        .collect();
    let tables = weyl_orbit_tables(c);
    let order: i64 = (1..=n as i64 + 1).product();
    (0..c.len())
        .map(|t| {
            let s: i64 = tables.iter().map(|tab| d[tab[t]]).sum();
            if (2 * s) % order != 0 {
                return Err(Error::Internal(format!(
                    "orbit sum {s} at {} is not divisible by {order}/2",
                    c.tableau(t)
                )));
            }
            Ok(2 * s / order)
        })
        .collect()
}

pub fn llt_charge2(c: &Crystal, t: usize) -> Result<i64> {
    Ok(llt_charge2_all(c)?[t])
}

/// Lusztig's `q`-analogue of Kostant's multiplicity formula, in `v`.
///
/// Shares no code with the crystal side: it only needs the root system.
pub fn kostant_oracle(rank: usize, lambda: &Weight, mu: &Weight) -> Result<LaurentPoly> {
    lambda.check_rank(rank)?;
    mu.check_rank(rank)?;
    for w in [lambda, mu] {
        if !w.is_dominant() {
            return Err(Error::NotDominant(w.content().to_vec()));
        }
    }
    if !lambda.same_coset(mu) {
        return Err(Error::CosetMismatch(
            mu.content().to_vec(),
            lambda.content().to_vec(),
        ));
    }
    let rho = Weight::new((0..=rank as i64).rev().collect());
    let lr = lambda + &rho;
    let mr = mu + &rho;

    // simple-root coordinates of w(λ+ρ) − (μ+ρ) for every w
    let mut targets = Vec::new();
    for g in WeylElement::all(rank) {
        let diff = &lr.apply(&g) - &mr;
        let mut coords = Vec::with_capacity(rank);
        let mut acc = 0;
        for &x in &diff.content()[..rank] {
            acc += x;
            coords.push(acc);
        }
        if coords.iter().all(|&x| x >= 0) {
            let sign = if g.length() % 2 == 0 { 1 } else { -1 };
            targets.push((sign, coords));
        }
    }
    if targets.is_empty() {
        return Ok(LaurentPoly::zero());
    }
    let bound: Vec<usize> = (0..rank)
        .map(|j| targets.iter().map(|(_, c)| c[j] as usize).max().unwrap())
        .collect();
    let table = PartitionTable::new(rank, &bound);
    let mut out = LaurentPoly::zero();
    for (sign, coords) in targets {
        for (k, &m) in table.get(&coords).iter().enumerate() {
            out.add_term(sign * m, 2 * k as i64);
        }
    }
    Ok(out)
}

// q-Kostant partition function on a box of simple-root coordinates:
// entry x holds the coefficients of Σ q^{#parts} over ways to write x as a
// sum of positive roots.
struct PartitionTable {
    radix: Vec<usize>,
    cells: Vec<Vec<i64>>,
}

impl PartitionTable {
    fn new(rank: usize, bound: &[usize]) -> Self {
        let radix: Vec<usize> = bound.iter().map(|b| b + 1).collect();
        let total: usize = radix.iter().product();
        let mut cells = vec![Vec::new(); total];
        cells[0] = vec![1];
        for beta in Root::positive_roots(rank) {
            // α_{j,k} adds one to coordinates j..=k
            let step: usize = (beta.lo() - 1..beta.hi())
                .map(|j| radix[..j].iter().product::<usize>())
                .sum();
            for idx in 0..total {
                let fits = (beta.lo() - 1..beta.hi()).all(|j| Self::digit(&radix, idx, j) >= 1);
                if !fits || cells[idx - step].is_empty() {
                    continue;
                }
                let prev = cells[idx - step].clone();
                let cur = &mut cells[idx];
                if cur.len() < prev.len() + 1 {
                    cur.resize(prev.len() + 1, 0);
                }
                for (k, m) in prev.into_iter().enumerate() {
                    cur[k + 1] += m;
                }
            }
        }
        PartitionTable { radix, cells }
    }

    fn digit(radix: &[usize], idx: usize, j: usize) -> usize {
        let below: usize = radix[..j].iter().product();
        (idx / below) % radix[j]
    }

    fn get(&self, coords: &[i64]) -> &[i64] {
        let mut idx = 0;
        let mut mult = 1;
        for (j, &x) in coords.iter().enumerate() {
            idx += x as usize * mult;
            mult *= self.radix[j];
        }
        &self.cells[idx]
    }
}

/// An expansion `Σ v^{e} N_{λ'}` in the basis dual to the atoms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisExpansion {
    pub terms: Vec<(Weight, i64)>,
}

impl BasisExpansion {
    /// The coefficient of `H_μ` after writing each `N_{λ'}` as
    /// `Σ_{μ ≤ λ'} v^{2⟨λ'−μ, ρ∨⟩} H_μ`.
    pub fn coefficient_of_h(&self, mu: &Weight) -> Result<LaurentPoly> {
        let mut out = LaurentPoly::zero();
        for (top, e) in &self.terms {
            if bruhat_leq(mu, top)? {
                out.add_term(1, e + rho_pair2(&(top - mu)));
            }
        }
        Ok(out)
    }
}

impl fmt::Display for BasisExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (w, e)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            match e {
                0 => write!(f, "N_{w}")?,
                1 => write!(f, "v N_{w}")?,
                _ => write!(f, "v^{e} N_{w}")?,
            }
        }
        Ok(())
    }
}

/// One term per atom: its highest weight `λ'` with exponent
/// `2·Z − 2⟨λ', ρ∨⟩`.
pub fn kl_in_n_basis(c: &Crystal, atoms: &AtomDecomposition) -> Result<BasisExpansion> {
    let mut terms = Vec::with_capacity(atoms.len());
    for atom in atoms.atoms() {
        let top = atom.highest_weight();
        let e = atomic_number2(c, atom.members()[0]) - rho_pair2(top);
        if e < 0 || e % 2 != 0 {
            return Err(Error::Internal(format!(
                "atom with highest weight {top} has exponent {e}"
            )));
        }
        terms.push((top.clone(), e));
    }
    Ok(BasisExpansion { terms })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootlat::partitions;

    fn w(c: &[i64]) -> Weight {
        Weight::new(c.to_vec())
    }

    fn v(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    #[test]
    fn ladder_charges() {
        let c = Crystal::build(1, &[4]).unwrap();
        // by A = c₁ − c₂
        let mut got: Vec<(i64, i64)> = (0..c.len())
            .map(|t| (c.weight(t).content()[0] - c.weight(t).content()[1], charge2(&c, t)))
            .collect();
        got.sort();
        assert_eq!(got, vec![(-4, 1), (-2, 3), (0, 4), (2, 2), (4, 0)]);
        assert_eq!(kostka_foulkes(&c, &w(&[3, 1])).unwrap(), v("v^2"));
        assert_eq!(kostka_foulkes(&c, &w(&[4, 0])).unwrap(), LaurentPoly::one());
    }

    #[test]
    fn adjoint_kostka() {
        let c = Crystal::build(2, &[2, 1]).unwrap();
        let zero = w(&[1, 1, 1]);
        assert_eq!(kostka_foulkes(&c, &zero).unwrap(), v("v^2 + v^4"));
        let mut zs: Vec<i64> = c.of_weight(&zero).iter().map(|&t| charge2(&c, t)).collect();
        zs.sort();
        assert_eq!(zs, vec![2, 4]);
        assert_eq!(kostant_oracle(2, c.lambda(), &zero).unwrap(), v("v^2 + v^4"));
        let llt = llt_charge2_all(&c).unwrap();
        let mut lz: Vec<i64> = c.of_weight(&zero).iter().map(|&t| llt[t]).collect();
        lz.sort();
        assert_eq!(lz, vec![2, 4]);
    }

    #[test]
    fn preconditions() {
        let c = Crystal::build(2, &[2, 1]).unwrap();
        assert!(matches!(
            kostka_foulkes(&c, &w(&[1, 2, 0])),
            Err(Error::NotDominant(_))
        ));
        assert!(matches!(
            kostka_foulkes(&c, &w(&[3, 0, 0])),
            Err(Error::NotBelow { .. })
        ));
        assert!(matches!(
            kostka_foulkes(&c, &w(&[1, 1, 0])),
            Err(Error::CosetMismatch(..))
        ));
        assert_eq!(
            kostant_oracle(2, &w(&[2, 1, 0]), &w(&[3, 0, 0])).unwrap(),
            LaurentPoly::zero()
        );
        assert_eq!(
            kostant_oracle(2, &w(&[2, 1, 0]), &w(&[2, 1, 0])).unwrap(),
            LaurentPoly::one()
        );
    }

    #[test]
    fn ladder_llt() {
        let c = Crystal::build(1, &[4]).unwrap();
        let llt = llt_charge2_all(&c).unwrap();
        let zero = c.of_weight(&w(&[2, 2]))[0];
        assert_eq!(llt[zero], 4);
        assert_eq!(llt[c.highest()], 0);
    }

    #[test]
    fn n_basis_examples() {
        let c = Crystal::build(2, &[2, 1]).unwrap();
        let atoms = AtomDecomposition::new(&c);
        let b = kl_in_n_basis(&c, &atoms).unwrap();
        assert_eq!(b.terms, vec![(w(&[2, 1, 0]), 0), (w(&[1, 1, 1]), 2)]);
        assert_eq!(b.to_string(), "N_(2,1,0) + v^2 N_(1,1,1)");
        assert_eq!(b.coefficient_of_h(&w(&[1, 1, 1])).unwrap(), v("v^2 + v^4"));
        let c = Crystal::build(1, &[4]).unwrap();
        let b = kl_in_n_basis(&c, &AtomDecomposition::new(&c)).unwrap();
        assert_eq!(b.terms, vec![(w(&[4, 0]), 0)]);
    }

    #[test]
    fn oracles_agree_small() {
        for n in 1..=3usize {
            for size in 0..=5 {
                for lam in partitions(size, n + 1) {
                    let c = Crystal::build(n, &lam).unwrap();
                    let atoms = AtomDecomposition::new(&c);
                    let basis = kl_in_n_basis(&c, &atoms).unwrap();
                    let llt = llt_charge2_all(&c).unwrap();
                    for (mu, k) in kostka_table(&c).unwrap() {
                        assert_eq!(k, kostant_oracle(n, c.lambda(), &mu).unwrap());
                        assert_eq!(k, basis.coefficient_of_h(&mu).unwrap());
                        assert_eq!(k.eval_one() as usize, c.of_weight(&mu).len());
                        for &t in c.of_weight(&mu) {
                            assert_eq!(llt[t], charge2(&c, t));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn charge_shifts_along_atoms() {
        let c = Crystal::build(3, &[3, 2, 1]).unwrap();
        let atoms = AtomDecomposition::new(&c);
        for atom in atoms.atoms() {
            let dom: Vec<usize> = atom
                .members()
                .iter()
                .copied()
                .filter(|&t| c.weight(t).is_dominant())
                .collect();
            for &a in &dom {
                for &b in &dom {
                    let shift = rho_pair2(&(c.weight(a) - c.weight(b)));
                    assert_eq!(charge2(&c, b) - charge2(&c, a), shift);
                }
            }
        }
    }
}
