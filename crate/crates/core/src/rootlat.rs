//! Root and weight lattice arithmetic for type `A_n`.
//!
//! Weights are stored as GL-style content vectors of length `n + 1`. Two
//! content vectors describe the same SL weight coset exactly when their
//! coordinate sums agree, and the root lattice is the sum-zero sublattice.
//! With this encoding pairings, the Weyl action and dominance are plain index
//! arithmetic.

use std::fmt;
use std::ops::{Add, Sub};

use num_rational::Rational64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A weight of `SL_{n+1}` given by its content vector.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Weight(Vec<i64>);

impl Weight {
    pub fn new(content: Vec<i64>) -> Self {
        assert!(!content.is_empty(), "a weight needs at least one coordinate");
        Weight(content)
    }

    pub fn zero(rank: usize) -> Self {
        Weight(vec![0; rank + 1])
    }

    /// The weight of a partition, padded with zeros to `rank + 1` parts.
    pub fn from_partition(rank: usize, parts: &[i64]) -> Result<Self> {
        let trimmed: Vec<i64> = parts.iter().copied().filter(|&p| p != 0).collect();
        if parts.iter().any(|&p| p < 0) {
            return Err(Error::InvalidPartition(parts.to_vec(), "negative part"));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(parts.to_vec(), "parts must weakly decrease"));
        }
        if trimmed.len() > rank + 1 {
            return Err(Error::TooManyParts {
                rank,
                parts: parts.to_vec(),
            });
        }
        let mut content = trimmed;
        content.resize(rank + 1, 0);
        Ok(Weight(content))
    }

    /// The `i`-th fundamental weight `ϖ_i` (content `1^i 0^{n+1-i}`).
    pub fn fundamental(rank: usize, i: usize) -> Self {
        let mut c = vec![0; rank + 1];
        c[..i].iter_mut().for_each(|x| *x = 1);
        Weight(c)
    }

    pub fn content(&self) -> &[i64] {
        &self.0
    }

    pub fn rank(&self) -> usize {
        self.0.len() - 1
    }

    pub fn sum(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn is_dominant(&self) -> bool {
        self.0.windows(2).all(|w| w[0] >= w[1])
    }

    /// Same rank and same class modulo the root lattice.
    pub fn same_coset(&self, other: &Weight) -> bool {
        self.0.len() == other.0.len() && self.sum() == other.sum()
    }

    pub fn check_rank(&self, rank: usize) -> Result<()> {
        if self.0.len() != rank + 1 {
            return Err(Error::RankMismatch {
                rank,
                got: self.0.len(),
            });
        }
        Ok(())
    }

    /// `self + k·β`.
    pub fn plus_root(&self, k: i64, beta: &Root) -> Weight {
        let mut c = self.0.clone();
        let s = if beta.positive { k } else { -k };
        c[beta.lo - 1] += s;
        c[beta.hi] -= s;
        Weight(c)
    }

    pub fn scale(&self, k: i64) -> Weight {
        Weight(self.0.iter().map(|x| x * k).collect())
    }

    pub fn apply(&self, w: &WeylElement) -> Weight {
        assert_eq!(w.perm.len(), self.0.len());
        let mut c = vec![0; self.0.len()];
        for (i, &x) in self.0.iter().enumerate() {
            c[w.perm[i]] = x;
        }
        Weight(c)
    }
}

impl Add for &Weight {
    type Output = Weight;
    fn add(self, rhs: &Weight) -> Weight {
        assert_eq!(self.0.len(), rhs.0.len());
        Weight(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &Weight {
    type Output = Weight;
    fn sub(self, rhs: &Weight) -> Weight {
        assert_eq!(self.0.len(), rhs.0.len());
        Weight(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

/// The root `±α_{lo,hi} = ±(α_lo + … + α_hi)`, indices 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Root {
    lo: usize,
    hi: usize,
    positive: bool,
}

impl Root {
    pub fn new(rank: usize, lo: usize, hi: usize) -> Result<Root> {
        if lo == 0 || lo > hi {
            return Err(Error::IndexOutOfRange { rank, index: lo });
        }
        if hi > rank {
            return Err(Error::IndexOutOfRange { rank, index: hi });
        }
        Ok(Root {
            lo,
            hi,
            positive: true,
        })
    }

    pub fn simple(i: usize) -> Root {
        assert!(i >= 1);
        Root {
            lo: i,
            hi: i,
            positive: true,
        }
    }

    /// The highest root `θ = α_{1,n}`.
    pub fn highest(rank: usize) -> Root {
        Root {
            lo: 1,
            hi: rank,
            positive: true,
        }
    }

    pub fn negated(self) -> Root {
        Root {
            positive: !self.positive,
            ..self
        }
    }

    pub fn lo(&self) -> usize {
        self.lo
    }

    pub fn hi(&self) -> usize {
        self.hi
    }

    pub fn is_positive(&self) -> bool {
        self.positive
    }

    pub fn is_simple(&self) -> bool {
        self.lo == self.hi
    }

    pub fn abs(self) -> Root {
        Root {
            positive: true,
            ..self
        }
    }

    /// Content vector of the root: `±(e_lo − e_{hi+1})`.
    pub fn vector(&self, rank: usize) -> Weight {
        Weight::zero(rank).plus_root(1, self)
    }

    /// All positive roots, ordered by `(lo, hi)`.
    pub fn positive_roots(rank: usize) -> Vec<Root> {
        let mut out = Vec::with_capacity(rank * (rank + 1) / 2);
        for lo in 1..=rank {
            for hi in lo..=rank {
                out.push(Root {
                    lo,
                    hi,
                    positive: true,
                });
            }
        }
        out
    }

    /// Is `self` a root of the Levi subsystem spanned by `α_1, …, α_k`?
    pub fn in_levi(&self, k: usize) -> bool {
        self.hi <= k
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if !self.positive {
            write!(f, "-")?;
        }
        if self.lo == self.hi {
            write!(f, "α_{}", self.lo)
        } else {
            write!(f, "α_{{{},{}}}", self.lo, self.hi)
        }
    }
}

/// `⟨μ, β∨⟩`.
pub fn pairing(mu: &Weight, beta: &Root) -> Result<i64> {
    let rank = mu.rank();
    if beta.lo == 0 || beta.hi > rank || beta.lo > beta.hi {
        return Err(Error::IndexOutOfRange {
            rank,
            index: beta.hi.max(beta.lo),
        });
    }
    Ok(pair(mu, beta))
}

// Unchecked pairing for internal hot loops.
pub(crate) fn pair(mu: &Weight, beta: &Root) -> i64 {
    let c = mu.content();
    let v = c[beta.lo - 1] - c[beta.hi];
    if beta.positive {
        v
    } else {
        -v
    }
}

/// `2⟨μ, ρ∨⟩`, always an integer.
pub fn rho_pair2(mu: &Weight) -> i64 {
    let n = mu.rank() as i64;
    mu.content()
        .iter()
        .enumerate()
        .map(|(i, &x)| x * (n + 2 - 2 * (i as i64 + 1)))
        .sum()
}

/// Length of `μ` along the positive root `β`.
pub fn length_along(mu: &Weight, beta: &Root) -> Result<i64> {
    if !beta.positive {
        return Err(Error::NotPositive);
    }
    let p = pairing(mu, beta)?;
    Ok(if p >= 0 { p } else { -p - 1 })
}

/// Length of the minimal coset representative of `μ`.
pub fn length(mu: &Weight) -> i64 {
    let c = mu.content();
    let mut total = 0;
    for a in 0..c.len() {
        for b in a + 1..c.len() {
            let p = c[a] - c[b];
            total += if p >= 0 { p } else { -p - 1 };
        }
    }
    total
}

/// Sorts `μ` into its dominant representative and returns a Weyl element
/// taking `μ` there.
pub fn dominant_rep(mu: &Weight) -> (Weight, WeylElement) {
    let c = mu.content();
    let mut order: Vec<usize> = (0..c.len()).collect();
    order.sort_by(|&a, &b| c[b].cmp(&c[a]));
    let mut perm = vec![0; c.len()];
    for (p, &i) in order.iter().enumerate() {
        perm[i] = p;
    }
    let w = WeylElement { perm };
    (mu.apply(&w), w)
}

// Dominance order: λ − μ is a nonnegative combination of simple roots.
pub(crate) fn dominance_leq(mu: &Weight, lambda: &Weight) -> bool {
    if !mu.same_coset(lambda) {
        return false;
    }
    let mut acc = 0;
    for (a, b) in mu.content().iter().zip(lambda.content()) {
        acc += b - a;
        if acc < 0 {
            return false;
        }
    }
    true
}

/// Bruhat order `μ ≤ λ` on `X` for dominant `λ`: `μ` lies in the convex hull
/// of `W·λ` and in the same coset.
pub fn bruhat_leq(mu: &Weight, lambda: &Weight) -> Result<bool> {
    if !lambda.is_dominant() {
        return Err(Error::NotDominant(lambda.content().to_vec()));
    }
    if mu.content().len() != lambda.content().len() {
        return Err(Error::RankMismatch {
            rank: lambda.rank(),
            got: mu.content().len(),
        });
    }
    let (dom, _) = dominant_rep(mu);
    Ok(dominance_leq(&dom, lambda))
}

/// Partitions of `total` with at most `max_parts` parts, in reverse
/// lexicographic order (largest first).
pub fn partitions(total: i64, max_parts: usize) -> Vec<Vec<i64>> {
    fn go(rest: i64, cap: i64, slots: usize, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if rest == 0 {
            out.push(cur.clone());
            return;
        }
        if slots == 0 {
            return;
        }
        for p in (1..=cap.min(rest)).rev() {
            cur.push(p);
            go(rest - p, p, slots - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if total >= 0 {
        go(total, total, max_parts, &mut Vec::new(), &mut out);
    }
    out
}

/// Dominant weights `μ ≤ λ`, largest first.
pub fn dominant_below(lambda: &Weight) -> Result<Vec<Weight>> {
    if !lambda.is_dominant() {
        return Err(Error::NotDominant(lambda.content().to_vec()));
    }
    let len = lambda.content().len();
    let low = *lambda.content().last().unwrap();
    let shifted = lambda.sum() - low * len as i64;
    Ok(partitions(shifted, len)
        .into_iter()
        .map(|mut p| {
            p.resize(len, 0);
            Weight::new(p.into_iter().map(|x| x + low).collect())
        })
        .filter(|mu| dominance_leq(mu, lambda))
        .collect())
}

/// Every weight `μ ≤ λ` in the Bruhat order, sorted.
pub fn weights_below(lambda: &Weight) -> Result<Vec<Weight>> {
    let mut out = Vec::new();
    for mu in dominant_below(lambda)? {
        out.extend(orbit(&mu));
    }
    out.sort();
    Ok(out)
}

/// The distinct elements of `W·μ`.
pub fn orbit(mu: &Weight) -> Vec<Weight> {
    let mut c = mu.content().to_vec();
    c.sort();
    let mut out = vec![Weight::new(c.clone())];
    // next lexicographic permutation skips duplicates automatically
    loop {
        let Some(i) = (0..c.len().saturating_sub(1)).rev().find(|&i| c[i] < c[i + 1]) else {
            break;
        };
        let j = (i + 1..c.len()).rev().find(|&j| c[j] > c[i]).unwrap();
        c.swap(i, j);
        c[i + 1..].reverse();
        out.push(Weight::new(c.clone()));
    }
    out
}

/// A positive real affine root `level·δ + root∨`.
///
/// The root carries its own sign, so `δ − α_1∨` has level 1 and root `−α_1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AffineRoot {
    level: i64,
    root: Root,
}

impl AffineRoot {
    pub fn new(level: i64, root: Root) -> Result<AffineRoot> {
        if level < 0 || (level == 0 && !root.positive) {
            return Err(Error::NotPositive);
        }
        Ok(AffineRoot { level, root })
    }

    /// `level·δ − β∨` for a positive `β`.
    pub fn minus(level: i64, beta: Root) -> Result<AffineRoot> {
        if !beta.positive {
            return Err(Error::NotPositive);
        }
        AffineRoot::new(level, beta.negated())
    }

    pub fn level(&self) -> i64 {
        self.level
    }

    pub fn root(&self) -> Root {
        self.root
    }

    /// True for labels `cδ − β∨` with `c > 0` and `β > 0`.
    pub fn has_negative_finite_part(&self) -> bool {
        !self.root.positive
    }
}

impl fmt::Display for AffineRoot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let r = self.root.abs();
        let body = if r.lo == r.hi {
            format!("α_{}∨", r.lo)
        } else {
            format!("α_{{{},{}}}∨", r.lo, r.hi)
        };
        let sign = if self.root.positive { '+' } else { '-' };
        match self.level {
            0 => write!(f, "{body}"),
            1 => write!(f, "δ{sign}{body}"),
            c => write!(f, "{c}δ{sign}{body}"),
        }
    }
}

#[derive(Serialize, Deserialize)]
struct AffineRootRepr {
    level: i64,
    lo: usize,
    hi: usize,
    sign: String,
}

impl Serialize for AffineRoot {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        AffineRootRepr {
            level: self.level,
            lo: self.root.lo,
            hi: self.root.hi,
            sign: if self.root.positive { "+" } else { "-" }.to_string(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for AffineRoot {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let r = AffineRootRepr::deserialize(d)?;
        let positive = match r.sign.as_str() {
            "+" => true,
            "-" => false,
            other => return Err(D::Error::custom(format!("bad sign {other:?}"))),
        };
        if r.lo == 0 || r.lo > r.hi {
            return Err(D::Error::custom("invalid root interval"));
        }
        AffineRoot::new(
            r.level,
            Root {
                lo: r.lo,
                hi: r.hi,
                positive,
            },
        )
        .map_err(D::Error::custom)
    }
}

/// Affine reflection of `μ` in the hyperplane of `a`.
pub fn reflect(mu: &Weight, a: &AffineRoot) -> Weight {
    // a = cδ + γ∨ acts by μ ↦ μ + (c − ⟨μ,γ∨⟩)γ
    let k = a.level - pair(mu, &a.root);
    mu.plus_root(k, &a.root)
}

/// Whether `s_a(μ) < μ` in the Bruhat order on `X`.
pub fn reflection_lowers(mu: &Weight, a: &AffineRoot) -> bool {
    pair(mu, &a.root) > a.level
}

/// The positive affine root relating `μ₁` and `μ₂`, if their difference is a
/// nonzero multiple of a root.
pub fn edge_label(mu1: &Weight, mu2: &Weight) -> Option<AffineRoot> {
    if !mu1.same_coset(mu2) {
        return None;
    }
    let diff = mu2 - mu1;
    let nz: Vec<usize> = (0..diff.content().len())
        .filter(|&i| diff.content()[i] != 0)
        .collect();
    if nz.len() != 2 || diff.content()[nz[0]] != -diff.content()[nz[1]] {
        return None;
    }
    let beta = Root {
        lo: nz[0] + 1,
        hi: nz[1],
        positive: true,
    };
    let s = pair(&(mu1 + mu2), &beta);
    debug_assert!(s % 2 == 0);
    let m = -s / 2;
    // label mδ − β∨, normalized to the positive representative
    let label = if m > 0 {
        AffineRoot {
            level: m,
            root: beta.negated(),
        }
    } else {
        AffineRoot {
            level: -m,
            root: beta,
        }
    };
    Some(label)
}

/// A rational cocharacter `η = Σ A_i ϖ_i∨ + C d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cocharacter {
    pub fundamental: Vec<Rational64>,
    pub d: Rational64,
}

impl Cocharacter {
    pub fn new(fundamental: Vec<Rational64>, d: Rational64) -> Self {
        Cocharacter { fundamental, d }
    }
}

/// `⟨η, cδ ± β∨⟩ = c·C ± Σ_{lo ≤ i ≤ hi} A_i`.
pub fn wall_value(eta: &Cocharacter, a: &AffineRoot) -> Rational64 {
    let r = a.root;
    let s: Rational64 = eta.fundamental[r.lo - 1..r.hi].iter().copied().sum();
    let finite = if r.positive { s } else { -s };
    Rational64::from_integer(a.level) * eta.d + finite
}

/// An element of the symmetric group `S_{n+1}`, stored as the images
/// `perm[i] = w(i)` of 0-based positions.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeylElement {
    perm: Vec<usize>,
}

impl WeylElement {
    pub fn identity(rank: usize) -> Self {
        WeylElement {
            perm: (0..=rank).collect(),
        }
    }

    pub fn from_perm(perm: Vec<usize>) -> Result<Self> {
        let mut seen = vec![false; perm.len()];
        for &p in &perm {
            if p >= perm.len() || seen[p] {
                return Err(Error::Parse(format!("{perm:?} is not a permutation")));
            }
            seen[p] = true;
        }
        Ok(WeylElement { perm })
    }

    /// The simple reflection `s_i`, `1 ≤ i ≤ rank`.
    pub fn simple(rank: usize, i: usize) -> Self {
        let mut perm: Vec<usize> = (0..=rank).collect();
        perm.swap(i - 1, i);
        WeylElement { perm }
    }

    /// `s_{i_1} s_{i_2} ⋯ s_{i_k}`.
    pub fn from_word(rank: usize, word: &[usize]) -> Self {
        word.iter().fold(WeylElement::identity(rank), |acc, &i| {
            acc.compose(&WeylElement::simple(rank, i))
        })
    }

    pub fn perm(&self) -> &[usize] {
        &self.perm
    }

    pub fn rank(&self) -> usize {
        self.perm.len() - 1
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &WeylElement) -> WeylElement {
        WeylElement {
            perm: other.perm.iter().map(|&i| self.perm[i]).collect(),
        }
    }

    pub fn inverse(&self) -> WeylElement {
        let mut perm = vec![0; self.perm.len()];
        for (i, &p) in self.perm.iter().enumerate() {
            perm[p] = i;
        }
        WeylElement { perm }
    }

    /// Coxeter length (number of inversions).
    pub fn length(&self) -> usize {
        let p = &self.perm;
        (0..p.len())
            .flat_map(|a| (a + 1..p.len()).map(move |b| (a, b)))
            .filter(|&(a, b)| p[a] > p[b])
            .count()
    }

    /// A reduced word `[i_1, …, i_k]` with `self = s_{i_1} ⋯ s_{i_k}`.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut w = self.perm.clone();
        let mut rev = Vec::new();
        // peel off right descents: w = (w s_i) s_i
        while let Some(i) = (0..w.len() - 1).find(|&i| w[i] > w[i + 1]) {
            w.swap(i, i + 1);
            rev.push(i + 1);
        }
        rev.reverse();
        rev
    }

    /// All elements of `S_{rank+1}` in lexicographic order of `perm`.
    pub fn all(rank: usize) -> Vec<WeylElement> {
        let mut out = Vec::new();
        let mut cur: Vec<usize> = (0..=rank).collect();
        loop {
            out.push(WeylElement { perm: cur.clone() });
            // next lexicographic permutation
            let Some(i) = (0..cur.len().saturating_sub(1)).rev().find(|&i| cur[i] < cur[i + 1])
            else {
                break;
            };
            let j = (i + 1..cur.len()).rev().find(|&j| cur[j] > cur[i]).unwrap();
            cur.swap(i, j);
            cur[i + 1..].reverse();
        }
        out
    }
}
