//! Moment graphs, twisted Bruhat graphs and the wall-crossing recharge engine.
//!
//! The engine starts from the parabolic chamber and crosses the walls
//! `cδ − α_{k,n}∨` one at a time until it reaches the Kazhdan-Lusztig chamber.
//! States are indexed by the number `m` of walls still to be crossed, so the
//! parabolic state is `m = M` and the final one is `m = 0`.

use std::collections::{HashMap, HashSet};

use num_rational::Rational64;
use serde::Serialize;

use crate::atoms::{atomic_number2, AtomDecomposition};
use crate::crystal::Crystal;
use crate::error::{Error, Result};
use crate::poly::LaurentPoly;
use crate::rootlat::{
    bruhat_leq, edge_label, length_along, reflect, reflection_lowers, rho_pair2, wall_value,
    weights_below, AffineRoot, Cocharacter, Root, Weight,
};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Edge {
    /// The Bruhat-smaller endpoint.
    pub src: usize,
    pub dst: usize,
    pub label: AffineRoot,
}

/// The moment graph on `{μ ≤ λ'}`: an edge for every pair of weights differing
/// by a root multiple, pointing towards the larger one.
#[derive(Clone, Debug)]
pub struct MomentGraph {
    top: Weight,
    vertices: Vec<Weight>,
    index: HashMap<Weight, usize>,
    edges: Vec<Edge>,
}

impl MomentGraph {
    pub fn new(top: &Weight) -> Result<Self> {
        let vertices = weights_below(top)?;
        let index: HashMap<Weight, usize> = vertices
            .iter()
            .enumerate()
            .map(|(i, w)| (w.clone(), i))
            .collect();
        let mut edges = Vec::new();
        for a in 0..vertices.len() {
            for b in a + 1..vertices.len() {
                let Some(label) = edge_label(&vertices[a], &vertices[b]) else {
                    continue;
                };
                // s_label swaps the two endpoints; the one it lowers is larger
                let (src, dst) = if reflection_lowers(&vertices[b], &label) {
                    (a, b)
                } else {
                    (b, a)
                };
                edges.push(Edge { src, dst, label });
            }
        }
        Ok(MomentGraph {
            top: top.clone(),
            vertices,
            index,
            edges,
        })
    }

    pub fn top(&self) -> &Weight {
        &self.top
    }

    pub fn vertices(&self) -> &[Weight] {
        &self.vertices
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn vertex(&self, mu: &Weight) -> Option<usize> {
        self.index.get(mu).copied()
    }

    /// Distinct edge labels, sorted.
    pub fn labels(&self) -> Vec<AffineRoot> {
        let mut l: Vec<AffineRoot> = self.edges.iter().map(|e| e.label).collect();
        l.sort();
        l.dedup();
        l
    }

    pub fn in_degrees(&self) -> Vec<usize> {
        let mut d = vec![0; self.vertices.len()];
        for e in &self.edges {
            d[e.dst] += 1;
        }
        d
    }

    /// `Γ^m`: reverse the edges whose label is among the first `m` roots of
    /// the reflection order, i.e. the last `m` walls of `walls`.
    pub fn twisted<'a>(&'a self, walls: &WallSequence, m: usize) -> TwistedGraph<'a> {
        let reversed: HashSet<AffineRoot> = walls.uncrossed(m).iter().copied().collect();
        TwistedGraph {
            base: self,
            m,
            reversed,
        }
    }
}

/// Walls `cδ − α_{k,n}∨` in the order they are crossed: level from high to
/// low, and for each level `k` from `n` down to 1.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WallSequence {
    walls: Vec<AffineRoot>,
}

impl WallSequence {
    pub fn new(graph: &MomentGraph) -> Self {
        let n = graph.top.rank();
        let mut walls: Vec<AffineRoot> = graph
            .labels()
            .into_iter()
            .filter(|a| a.has_negative_finite_part() && a.level() > 0 && a.root().hi() == n)
            .collect();
        walls.sort_by(|a, b| {
            b.level()
                .cmp(&a.level())
                .then(b.root().lo().cmp(&a.root().lo()))
        });
        WallSequence { walls }
    }

    pub fn walls(&self) -> &[AffineRoot] {
        &self.walls
    }

    pub fn len(&self) -> usize {
        self.walls.len()
    }

    pub fn is_empty(&self) -> bool {
        self.walls.is_empty()
    }

    /// The wall crossed when going from state `m + 1` to state `m`.
    pub fn crossed_into(&self, m: usize) -> AffineRoot {
        self.walls[self.walls.len() - 1 - m]
    }

    /// The walls still ahead in state `m`.
    pub fn uncrossed(&self, m: usize) -> &[AffineRoot] {
        &self.walls[self.walls.len() - m..]
    }

    /// Orders the walls by the time `s` at which `η + s·d` meets them, for a
    /// parabolic cocharacter `η`. Ties keep the listed order.
    pub fn probe_order(&self, eta: &Cocharacter) -> Vec<AffineRoot> {
        let mut timed: Vec<(Rational64, AffineRoot)> = self
            .walls
            .iter()
            .map(|a| (-wall_value(eta, a) / Rational64::from_integer(a.level()), *a))
            .collect();
        timed.sort_by(|x, y| x.0.cmp(&y.0));
        timed.into_iter().map(|(_, a)| a).collect()
    }
}

/// The first `count` roots `cδ − β∨` of the reflection order of the infinite
/// word `(s_0 s_1 ⋯ s_n)^∞`.
pub fn reflection_order(rank: usize, count: usize) -> Vec<AffineRoot> {
    // affine roots as (level, finite content vector); δ pairs trivially
    type Aff = (i64, Vec<i64>);
    let simple = |i: usize| -> Aff {
        let mut v = vec![0; rank + 1];
        if i == 0 {
            v[0] = -1;
            v[rank] = 1;
            (1, v)
        } else {
            v[i - 1] = 1;
            v[i] = -1;
            (0, v)
        }
    };
    let refl = |i: usize, x: &Aff| -> Aff {
        let a = simple(i);
        let p: i64 = x.1.iter().zip(&a.1).map(|(p, q)| p * q).sum();
        (
            x.0 - p * a.0,
            x.1.iter().zip(&a.1).map(|(xv, av)| xv - p * av).collect(),
        )
    };
    let word = |k: usize| k % (rank + 1);
    (0..count)
        .map(|k| {
            let mut x = simple(word(k));
            for j in (0..k).rev() {
                x = refl(word(j), &x);
            }
            let lo = x.1.iter().position(|&c| c != 0).unwrap();
            let hi = x.1.iter().rposition(|&c| c != 0).unwrap();
            let root = Root::new(rank, lo + 1, hi).expect("type A root");
            let root = if x.1[lo] > 0 { root } else { root.negated() };
            AffineRoot::new(x.0, root).expect("inversions are positive")
        })
        .collect()
}

pub struct TwistedGraph<'a> {
    base: &'a MomentGraph,
    m: usize,
    reversed: HashSet<AffineRoot>,
}

impl TwistedGraph<'_> {
    pub fn m(&self) -> usize {
        self.m
    }

    pub fn is_reversed(&self, e: &Edge) -> bool {
        self.reversed.contains(&e.label)
    }

    pub fn in_degrees(&self) -> Vec<usize> {
        let mut d = vec![0; self.base.vertices.len()];
        for e in &self.base.edges {
            if self.is_reversed(e) {
                d[e.src] += 1;
            } else {
                d[e.dst] += 1;
            }
        }
        d
    }

    pub fn in_degree(&self, mu: &Weight) -> Option<usize> {
        self.base.vertex(mu).map(|v| self.in_degrees()[v])
    }

    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph moment {\n");
        for (i, w) in self.base.vertices.iter().enumerate() {
            out.push_str(&format!("  v{i} [label=\"{w}\"];\n"));
        }
        for e in &self.base.edges {
            if self.is_reversed(e) {
                out.push_str(&format!(
                    "  v{} -> v{} [label=\"{}\", reversed=true, style=dashed];\n",
                    e.dst, e.src, e.label
                ));
            } else {
                out.push_str(&format!(
                    "  v{} -> v{} [label=\"{}\"];\n",
                    e.src, e.dst, e.label
                ));
            }
        }
        out.push_str("}\n");
        out
    }
}

/// Doubled recharge values of every crystal element. `m` is `None` for the
/// MV chamber, which lies before the engine's first state.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RechargeState {
    pub m: Option<usize>,
    pub r2: Vec<i64>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Report {
    pub failures: Vec<String>,
}

impl Report {
    pub fn is_ok(&self) -> bool {
        self.failures.is_empty()
    }
}

// A moment graph with in-degrees precomputed for every state m.
struct AtomGraph {
    graph: MomentGraph,
    indeg: Vec<Vec<usize>>,
}

impl AtomGraph {
    fn new(graph: MomentGraph, walls: &WallSequence) -> Self {
        let indeg = (0..=walls.len())
            .map(|m| graph.twisted(walls, m).in_degrees())
            .collect();
        AtomGraph { graph, indeg }
    }
}

pub struct Engine<'a> {
    crystal: &'a Crystal,
    atoms: &'a AtomDecomposition,
    walls: WallSequence,
    global: AtomGraph,
    per_top: HashMap<Weight, AtomGraph>,
    z2: Vec<i64>,
}

impl<'a> Engine<'a> {
    pub fn new(crystal: &'a Crystal, atoms: &'a AtomDecomposition) -> Result<Self> {
        let global_graph = MomentGraph::new(crystal.lambda())?;
        let walls = WallSequence::new(&global_graph);
        let global = AtomGraph::new(global_graph, &walls);
        let mut per_top = HashMap::new();
        for atom in atoms.atoms() {
            let top = atom.highest_weight();
            if !per_top.contains_key(top) {
                let g = AtomGraph::new(MomentGraph::new(top)?, &walls);
                per_top.insert(top.clone(), g);
            }
        }
        let z2 = (0..crystal.len()).map(|t| atomic_number2(crystal, t)).collect();
        Ok(Engine {
            crystal,
            atoms,
            walls,
            global,
            per_top,
            z2,
        })
    }

    pub fn walls(&self) -> &WallSequence {
        &self.walls
    }

    /// `M`, the number of walls.
    pub fn steps(&self) -> usize {
        self.walls.len()
    }

    pub fn global_graph(&self) -> &MomentGraph {
        &self.global.graph
    }

    pub fn atom_graph(&self, top: &Weight) -> Option<&MomentGraph> {
        self.per_top.get(top).map(|g| &g.graph)
    }

    /// `Arr_m(T)`: in-degree of `wt T` in `Γ^m` of its atom's highest weight.
    pub fn arr(&self, t: usize, m: usize) -> usize {
        let g = &self.per_top[self.atoms.atom_of(t).highest_weight()];
        let v = g.graph.vertex(self.crystal.weight(t)).expect("atom weights lie in the interval");
        g.indeg[m][v]
    }

    /// The closed form of `Arr_M(T)`: `Σ φ_β` over roots `α_{k,n}` plus the
    /// lengths along the roots of the Levi `Φ_{n−1}`.
    pub fn arr_stable(&self, t: usize) -> i64 {
        let n = self.crystal.rank();
        let mut total = 0;
        for beta in self.crystal.positive_roots() {
            if beta.in_levi(n - 1) {
                total += length_along(self.crystal.weight(t), beta).unwrap();
            } else {
                total += self.crystal.phi_alpha(beta, t).unwrap() as i64;
            }
        }
        total
    }

    pub fn init_mv(&self) -> RechargeState {
        RechargeState {
            m: None,
            r2: (0..self.crystal.len())
                .map(|t| -rho_pair2(self.crystal.weight(t)))
                .collect(),
        }
    }

    /// `r = Z − Arr_M`, checked against the closed form
    /// `−⟨wt, ρ∨⟩ + Σ_{β ∈ Φ_{n−1}} (φ_β − ℓ^β)`.
    pub fn init_parabolic(&self) -> Result<RechargeState> {
        let c = self.crystal;
        let n = c.rank();
        let big_m = self.steps();
        let mut r2 = Vec::with_capacity(c.len());
        for t in 0..c.len() {
            let from_graph = self.z2[t] - 2 * self.arr(t, big_m) as i64;
            let mut closed = -rho_pair2(c.weight(t));
            for beta in c.positive_roots().iter().filter(|b| b.in_levi(n - 1)) {
                closed += 2 * (c.phi_alpha(beta, t)? as i64 - length_along(c.weight(t), beta)?);
            }
            if from_graph != closed {
                return Err(Error::Internal(format!(
                    "parabolic recharge of {}: in-degree form {from_graph}, closed form {closed}",
                    c.tableau(t)
                )));
            }
            r2.push(from_graph);
        }
        Ok(RechargeState { m: Some(big_m), r2 })
    }

    /// `ψ(T) = e_β^{⟨μ,β∨⟩ + c}(T)` for `T` whose weight the wall lowers to `μ`.
    pub fn psi(&self, wall: &AffineRoot, t: usize) -> Result<Option<usize>> {
        let nu = self.crystal.weight(t);
        if !reflection_lowers(nu, wall) {
            return Ok(None);
        }
        let beta = wall.root().abs();
        let mu = reflect(nu, wall);
        let k = crate::rootlat::pairing(&mu, &beta)? + wall.level();
        self.crystal.e_alpha_pow(&beta, k as u32, t)
    }

    /// Crosses the wall between `state.m` and `state.m − 1`.
    pub fn cross_wall(&self, state: &RechargeState) -> Result<RechargeState> {
        let c = self.crystal;
        let from = state
            .m
            .filter(|&m| m >= 1)
            .ok_or_else(|| Error::Internal("no wall left to cross".into()))?;
        let m = from - 1;
        let wall = self.walls.crossed_into(m);
        let engine_err = |atom: usize, reason: String| Error::Engine {
            wall: wall.to_string(),
            atom,
            reason,
        };

        // ψ over all elements whose weight the wall lowers
        let mut image: HashMap<usize, usize> = HashMap::new();
        for s in 0..c.len() {
            let nu = c.weight(s);
            if !reflection_lowers(nu, &wall) {
                continue;
            }
            let atom = self.atoms.atom_index(s);
            let mu = reflect(nu, &wall);
            let Some(u) = self.psi(&wall, s)? else {
                return Err(engine_err(atom, format!("ψ undefined at {}", c.tableau(s))));
            };
            if c.weight(u) != &mu {
                return Err(engine_err(atom, format!("ψ({}) has the wrong weight", c.tableau(s))));
            }
            if self.atoms.atom_index(u) != atom {
                return Err(engine_err(atom, format!("ψ({}) leaves the atom", c.tableau(s))));
            }
            if image.insert(u, s).is_some() {
                return Err(engine_err(atom, format!("ψ is not injective at {}", c.tableau(u))));
            }
            if state.r2[u] != state.r2[s] - 2 {
                return Err(engine_err(
                    atom,
                    format!("ψ({}) does not drop the recharge by one", c.tableau(s)),
                ));
            }
        }

        let mut r2 = state.r2.clone();
        for t in 0..c.len() {
            let mu = c.weight(t);
            let atom = self.atoms.atom_index(t);
            let top = self.atoms.atom_of(t).highest_weight();
            let up = {
                let tmu = reflect(mu, &wall);
                tmu != *mu && !reflection_lowers(mu, &wall) && bruhat_leq(&tmu, top)?
            };
            if up != image.contains_key(&t) {
                return Err(engine_err(
                    atom,
                    format!("image of ψ disagrees with the interval at {}", c.tableau(t)),
                ));
            }
            if reflection_lowers(mu, &wall) {
                r2[t] -= 2;
            } else if up {
                r2[t] += 2;
            }
            let expect = self.z2[t] - 2 * self.arr(t, m) as i64;
            if r2[t] != expect {
                return Err(engine_err(
                    atom,
                    format!(
                        "recharge {} at {} differs from 2Z − 2Arr = {expect}",
                        r2[t],
                        c.tableau(t)
                    ),
                ));
            }
        }
        Ok(RechargeState { m: Some(m), r2 })
    }

    /// `Σ v^{r2(T)}` over elements of weight `μ`.
    pub fn eta_kl(&self, state: &RechargeState, mu: &Weight) -> LaurentPoly {
        self.crystal
            .of_weight(mu)
            .iter()
            .map(|&t| LaurentPoly::monomial(1, state.r2[t]))
            .sum()
    }

    /// The change of graded dimensions across a wall: for `μ < ν = tμ ≤ λ`,
    /// `h̃'_ν = v⁻²h̃_ν` and `h̃'_μ = h̃_μ + (1 − v⁻²)h̃_ν`; all other
    /// weights are untouched.
    pub fn check_crossing_recurrence(
        &self,
        before: &RechargeState,
        after: &RechargeState,
    ) -> Result<Report> {
        let m = after.m.ok_or_else(|| Error::Internal("MV state has no wall".into()))?;
        let wall = self.walls.crossed_into(m);
        let lambda = self.crystal.lambda();
        let factor = &LaurentPoly::one() - &LaurentPoly::monomial(1, -2);
        let mut report = Report::default();
        for mu in self.crystal.weights() {
            let t_mu = reflect(&mu, &wall);
            let h1 = self.eta_kl(before, &mu);
            let h2 = self.eta_kl(after, &mu);
            let ok = if reflection_lowers(&mu, &wall) {
                h2 == h1.shift(-2)
            } else if t_mu != mu && bruhat_leq(&t_mu, lambda)? {
                let partner = self.eta_kl(before, &t_mu);
                h2 == &h1 + &(&factor * &partner)
            } else {
                h2 == h1
            };
            if !ok {
                report
                    .failures
                    .push(format!("weight {mu}, partner {t_mu}, wall {wall}"));
            }
        }
        Ok(report)
    }

    /// In `Γ^m`, with `t` the wall crossed into state `m`, every `μ < tμ ≤ λ'`
    /// has one arrow fewer than `tμ`. Checked on the global graph and on every
    /// atom's graph.
    pub fn check_gammam(&self, m: usize) -> Result<Report> {
        let wall = self.walls.crossed_into(m);
        let mut report = Report::default();
        let mut graphs: Vec<&AtomGraph> = vec![&self.global];
        let mut tops: Vec<&Weight> = self.per_top.keys().collect();
        tops.sort();
        graphs.extend(tops.into_iter().map(|w| &self.per_top[w]));
        for g in graphs {
            let deg = &g.indeg[m];
            for (i, mu) in g.graph.vertices.iter().enumerate() {
                let t_mu = reflect(mu, &wall);
                if t_mu == *mu || reflection_lowers(mu, &wall) {
                    continue;
                }
                let Some(j) = g.graph.vertex(&t_mu) else {
                    continue;
                };
                if deg[i] + 1 != deg[j] {
                    report.failures.push(format!(
                        "in Γ^{m} of {}: μ = {mu} has {} arrows, {t_mu} has {}",
                        g.graph.top, deg[i], deg[j]
                    ));
                }
            }
        }
        Ok(report)
    }

    /// Runs the whole engine and records every state.
    pub fn run(&self) -> Result<Trace> {
        let weights = self.crystal.weights();
        let table = |state: &RechargeState| -> Vec<WeightPoly> {
            weights
                .iter()
                .map(|mu| WeightPoly {
                    weight: mu.clone(),
                    h: self.eta_kl(state, mu),
                })
                .collect()
        };
        let mv = self.init_mv();
        let mut steps = vec![TraceStep {
            stage: "mv".into(),
            m: None,
            wall: None,
            h: table(&mv),
            recurrence_ok: None,
            gammam_ok: None,
        }];
        let mut state = self.init_parabolic()?;
        steps.push(TraceStep {
            stage: "parabolic".into(),
            m: state.m,
            wall: None,
            h: table(&state),
            recurrence_ok: None,
            gammam_ok: None,
        });
        let mut ok = true;
        let mut states = vec![mv, state.clone()];
        while state.m.unwrap() > 0 {
            let next = self.cross_wall(&state)?;
            let m = next.m.unwrap();
            let rec = self.check_crossing_recurrence(&state, &next)?;
            let gam = self.check_gammam(m)?;
            ok &= rec.is_ok() && gam.is_ok();
            steps.push(TraceStep {
                stage: "cross".into(),
                m: Some(m),
                wall: Some(self.walls.crossed_into(m)),
                h: table(&next),
                recurrence_ok: Some(rec.is_ok()),
                gammam_ok: Some(gam.is_ok()),
            });
            states.push(next.clone());
            state = next;
        }
        Ok(Trace { steps, states, ok })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WeightPoly {
    pub weight: Weight,
    pub h: LaurentPoly,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TraceStep {
    pub stage: String,
    pub m: Option<usize>,
    pub wall: Option<AffineRoot>,
    pub h: Vec<WeightPoly>,
    pub recurrence_ok: Option<bool>,
    pub gammam_ok: Option<bool>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Trace {
    pub steps: Vec<TraceStep>,
    /// MV state, parabolic state, then one state per wall.
    #[serde(skip)]
    pub states: Vec<RechargeState>,
    pub ok: bool,
}

impl Trace {
    pub fn final_state(&self) -> &RechargeState {
        self.states.last().expect("trace has at least two states")
    }
}
