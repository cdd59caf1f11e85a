//! Permutations of ℕ = {1, 2, ...} and the infinite Bruhat order.
//!
//! A [`Permutation`] is a finite patch laid over a computable [`TailRule`].
//! With the identity tail this is exactly the finitely supported group; the
//! other builtin rule is the shift-like permutation
//! `3, 1, 5, 2, 7, 4, 9, 6, 11, ...` and its inverse.
//!
//! Bruhat comparisons use the region criterion: `σ ≤ τ` iff
//! `r_{i,j}(σ) ≥ r_{i,j}(τ)` for all `i, j`, where `r_{i,j}` counts the ones
//! of the permutation matrix in the first `i` rows and `j` columns. For
//! identity tails with supports inside `[1, M]` it is enough to look at
//! `i, j ≤ M`. For any other tail the answer is only verified up to an
//! explicit bound.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Builtin rule giving `σ(n)` for positions outside the patch.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum TailRule {
    Identity,
    /// Odd `n ↦ n + 2`, even `m ≠ 2 ↦ m − 2`, `2 ↦ 1`.
    #[serde(rename = "paper-rho")]
    Rho,
    #[serde(rename = "paper-rho-inverse")]
    RhoInverse,
}

impl TailRule {
    pub fn forward(self, n: usize) -> usize {
        match self {
            TailRule::Identity => n,
            TailRule::Rho => rho(n),
            TailRule::RhoInverse => rho_inverse(n),
        }
    }

    pub fn backward(self, n: usize) -> usize {
        self.inverse().forward(n)
    }

    pub fn inverse(self) -> TailRule {
        match self {
            TailRule::Identity => TailRule::Identity,
            TailRule::Rho => TailRule::RhoInverse,
            TailRule::RhoInverse => TailRule::Rho,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            TailRule::Identity => "identity",
            TailRule::Rho => "paper-rho",
            TailRule::RhoInverse => "paper-rho-inverse",
        }
    }
}

fn rho(n: usize) -> usize {
    match n {
        2 => 1,
        n if n % 2 == 1 => n + 2,
        n => n - 2,
    }
}

fn rho_inverse(n: usize) -> usize {
    match n {
        1 => 2,
        n if n % 2 == 1 => n - 2,
        n => n + 2,
    }
}

/// A bijection of ℕ given by a finite patch over a tail rule.
///
/// The patch is normalized (entries agreeing with the tail are dropped), so
/// structural equality is equality of permutations.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    patch: BTreeMap<usize, usize>,
    tail: TailRule,
}

impl Permutation {
    pub fn identity() -> Permutation {
        Permutation {
            patch: BTreeMap::new(),
            tail: TailRule::Identity,
        }
    }

    /// The builtin `ρ` with one-line notation `3, 1, 5, 2, 7, 4, ...`.
    pub fn rho() -> Permutation {
        Permutation {
            patch: BTreeMap::new(),
            tail: TailRule::Rho,
        }
    }

    /// Finitely supported permutation from one-line notation
    /// `σ(1), ..., σ(n)`, which must be a rearrangement of `1..=n`.
    pub fn from_one_line(values: &[usize]) -> Result<Permutation> {
        let n = values.len();
        let mut seen = vec![false; n + 1];
        for &v in values {
            if v == 0 || v > n || seen[v] {
                return Err(Error::InvalidPermutation(format!(
                    "{values:?} is not a rearrangement of 1..={n}"
                )));
            }
            seen[v] = true;
        }
        let patch = values.iter().enumerate().map(|(i, &v)| (i + 1, v)).collect();
        Permutation::new(patch, TailRule::Identity)
    }

    /// Build from an explicit patch. The patch must permute the tail values
    /// it displaces: `{patch[k]} = {tail(k)}` over its keys.
    pub fn new(patch: BTreeMap<usize, usize>, tail: TailRule) -> Result<Permutation> {
        if patch.contains_key(&0) || patch.values().any(|&v| v == 0) {
            return Err(Error::InvalidPermutation("positions are 1-based".into()));
        }
        let values: BTreeSet<usize> = patch.values().copied().collect();
        if values.len() != patch.len() {
            return Err(Error::InvalidPermutation("patch is not injective".into()));
        }
        let displaced: BTreeSet<usize> = patch.keys().map(|&k| tail.forward(k)).collect();
        if values != displaced {
            return Err(Error::InvalidPermutation(format!(
                "patch values {values:?} differ from the displaced tail values {displaced:?}"
            )));
        }
        let patch = patch
            .into_iter()
            .filter(|&(k, v)| tail.forward(k) != v)
            .collect();
        Ok(Permutation { patch, tail })
    }

    pub fn tail(&self) -> TailRule {
        self.tail
    }

    pub fn patch(&self) -> &BTreeMap<usize, usize> {
        &self.patch
    }

    pub fn is_finitely_supported(&self) -> bool {
        self.tail == TailRule::Identity
    }

    /// `σ(n)`. Positions start at 1.
    pub fn apply(&self, n: usize) -> usize {
        debug_assert!(n >= 1, "positions are 1-based");
        self.patch
            .get(&n)
            .copied()
            .unwrap_or_else(|| self.tail.forward(n))
    }

    pub fn inverse(&self) -> Permutation {
        Permutation {
            patch: self.patch.iter().map(|(&k, &v)| (v, k)).collect(),
            tail: self.tail.inverse(),
        }
    }

    /// `Supp(σ)`, available only for the identity tail.
    pub fn support(&self) -> Option<BTreeSet<usize>> {
        self.is_finitely_supported()
            .then(|| self.patch.keys().copied().collect())
    }

    /// Largest position the patch touches; 0 when the patch is empty.
    pub fn patch_extent(&self) -> usize {
        self.patch.keys().next_back().copied().unwrap_or(0)
    }

    /// `σ(1), ..., σ(len)`.
    pub fn one_line(&self, len: usize) -> Vec<usize> {
        (1..=len).map(|n| self.apply(n)).collect()
    }

    /// One-line notation up to the largest moved point (empty for the
    /// identity). `None` for non-identity tails.
    pub fn trimmed_one_line(&self) -> Option<Vec<usize>> {
        self.is_finitely_supported()
            .then(|| self.one_line(self.patch_extent()))
    }

    /// `σ ∘ τ`. Both must be finitely supported.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if !self.is_finitely_supported() || !other.is_finitely_supported() {
            return Err(Error::InvalidPermutation(
                "composition is only supported for finitely supported permutations".into(),
            ));
        }
        let n = self.patch_extent().max(other.patch_extent());
        Permutation::from_one_line(
            &(1..=n).map(|k| self.apply(other.apply(k))).collect::<Vec<_>>(),
        )
    }

    /// `σ · (p, q)`: the values at positions `p` and `q` swapped.
    pub fn swap_positions(&self, p: usize, q: usize) -> Permutation {
        let (a, b) = (self.apply(p), self.apply(q));
        let mut patch = self.patch.clone();
        patch.insert(p, b);
        patch.insert(q, a);
        patch.retain(|&k, v| self.tail.forward(k) != *v);
        Permutation {
            patch,
            tail: self.tail,
        }
    }

    /// `r_{p,q}(σ) = |{n ≤ q : σ(n) ≤ p}|`.
    pub fn rank_nw(&self, p: usize, q: usize) -> usize {
        (1..=q).filter(|&n| self.apply(n) <= p).count()
    }

    /// `r_{≥p,q}(σ) = |{n ≤ q : σ(n) ≥ p}|`.
    pub fn rank_sw(&self, p: usize, q: usize) -> usize {
        (1..=q).filter(|&n| self.apply(n) >= p).count()
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.trimmed_one_line() {
            Some(line) if line.is_empty() => write!(f, "id"),
            Some(line) => {
                let parts: Vec<String> = line.iter().map(|v| v.to_string()).collect();
                write!(f, "[{}]", parts.join(","))
            }
            None => {
                let shown = self.patch_extent().max(6) + 2;
                let parts: Vec<String> = self.one_line(shown).iter().map(|v| v.to_string()).collect();
                write!(f, "[{}, ...] ({})", parts.join(","), self.tail.name())
            }
        }
    }
}

/// Outcome of a Bruhat comparison.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BruhatVerdict {
    pub holds: bool,
    /// `None` when the answer is exact. `Some(b)` when no violation of the
    /// region criterion was found for `i, j ≤ b` but the tails keep the
    /// comparison open beyond `b`.
    pub verified_up_to: Option<usize>,
}

impl BruhatVerdict {
    pub fn is_exact(&self) -> bool {
        self.verified_up_to.is_none()
    }
}

/// Largest position either permutation moves; the finite region the Bruhat
/// comparison of two identity-tailed permutations has to inspect.
pub fn reduction_bound(sigma: &Permutation, tau: &Permutation) -> usize {
    sigma.patch_extent().max(tau.patch_extent())
}

/// Checks `r_{i,j}(σ) ≥ r_{i,j}(τ)` for every `i, j ≤ bound` literally.
pub fn region_criterion_within(sigma: &Permutation, tau: &Permutation, bound: usize) -> bool {
    // counts[i] = r_{i, j}(·) for the current column j
    let mut counts_sigma = vec![0usize; bound + 1];
    let mut counts_tau = vec![0usize; bound + 1];
    for j in 1..=bound {
        let (s, t) = (sigma.apply(j), tau.apply(j));
        for i in 1..=bound {
            if s <= i {
                counts_sigma[i] += 1;
            }
            if t <= i {
                counts_tau[i] += 1;
            }
            if counts_sigma[i] < counts_tau[i] {
                return false;
            }
        }
    }
    true
}

/// Exact Bruhat comparison `σ ≤ τ` for identity-tailed permutations.
pub fn bruhat_leq(sigma: &Permutation, tau: &Permutation) -> Result<bool> {
    if !sigma.is_finitely_supported() || !tau.is_finitely_supported() {
        return Err(Error::UndecidableWithoutBound(format!(
            "{} vs {}",
            sigma.tail.name(),
            tau.tail.name()
        )));
    }
    Ok(region_criterion_within(sigma, tau, reduction_bound(sigma, tau)))
}

/// Bruhat comparison with an explicit verification bound for non-identity
/// tails. Identity-tailed inputs get an exact answer regardless of `bound`.
pub fn bruhat_leq_bounded(sigma: &Permutation, tau: &Permutation, bound: usize) -> BruhatVerdict {
    if sigma.is_finitely_supported() && tau.is_finitely_supported() {
        return BruhatVerdict {
            holds: region_criterion_within(sigma, tau, reduction_bound(sigma, tau)),
            verified_up_to: None,
        };
    }
    let bound = bound.max(reduction_bound(sigma, tau));
    if region_criterion_within(sigma, tau, bound) {
        BruhatVerdict {
            holds: true,
            verified_up_to: Some(bound),
        }
    } else {
        // a violation inside the bound is a proof
        BruhatVerdict {
            holds: false,
            verified_up_to: None,
        }
    }
}

/// Tableau form of the order: for each `n ≤ depth`, the sorted prefix
/// `{σ(1..n)}` is entrywise at most the sorted prefix `{τ(1..n)}`.
pub fn bruhat_leq_tableau(sigma: &Permutation, tau: &Permutation, depth: usize) -> bool {
    let mut row_sigma: Vec<usize> = Vec::with_capacity(depth);
    let mut row_tau: Vec<usize> = Vec::with_capacity(depth);
    for n in 1..=depth {
        let s = sigma.apply(n);
        let t = tau.apply(n);
        row_sigma.insert(row_sigma.partition_point(|&x| x < s), s);
        row_tau.insert(row_tau.partition_point(|&x| x < t), t);
        if row_sigma.iter().zip(&row_tau).any(|(a, b)| a > b) {
            return false;
        }
    }
    true
}

/// `d(σ, τ)`: the least position where `σ` and `τ` differ.
pub fn first_difference(sigma: &Permutation, tau: &Permutation) -> Result<usize> {
    if sigma.tail == tau.tail {
        return sigma
            .patch
            .keys()
            .chain(tau.patch.keys())
            .copied()
            .filter(|&n| sigma.apply(n) != tau.apply(n))
            .min()
            .ok_or(Error::EqualPermutations);
    }
    // Distinct builtin tails disagree at every position, so the scan stops
    // at the latest one past both patches.
    let limit = reduction_bound(sigma, tau) + 1;
    (1..=limit)
        .find(|&n| sigma.apply(n) != tau.apply(n))
        .ok_or_else(|| {
            Error::InternalContradiction(format!(
                "tails {} and {} agree at {limit}",
                sigma.tail.name(),
                tau.tail.name()
            ))
        })
}

/// Result of watching a finite prefix of a sequence of permutations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Convergence {
    /// 1-based index `N` such that every supplied term from `N` on agrees
    /// with the limit on `[1, m]`.
    StableFrom(usize),
    NotYet,
}

/// Least `N` with `σ_n(ℓ) = σ(ℓ)` for all `ℓ ≤ m` and all supplied `n ≥ N`.
pub fn converges_prefix(seq: &[Permutation], limit: &Permutation, m: usize) -> Convergence {
    let agrees = |s: &Permutation| (1..=m).all(|l| s.apply(l) == limit.apply(l));
    match seq.iter().rposition(|s| !agrees(s)) {
        None if seq.is_empty() => Convergence::NotYet,
        None => Convergence::StableFrom(1),
        Some(last) if last + 1 == seq.len() => Convergence::NotYet,
        Some(last) => Convergence::StableFrom(last + 2),
    }
}

#[derive(Serialize, Deserialize)]
struct PatchForm {
    patch: BTreeMap<String, usize>,
    #[serde(default = "identity_tail")]
    tail: TailRule,
}

fn identity_tail() -> TailRule {
    TailRule::Identity
}

#[derive(Deserialize)]
#[serde(untagged)]
enum PermutationForm {
    OneLine(Vec<usize>),
    Patch(PatchForm),
}

impl Serialize for Permutation {
    /// Identity-tailed permutations are written in trimmed one-line form;
    /// others as `{"patch": {...}, "tail": ...}`.
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        match self.trimmed_one_line() {
            Some(line) => line.serialize(serializer),
            None => PatchForm {
                patch: self.patch.iter().map(|(k, v)| (k.to_string(), *v)).collect(),
                tail: self.tail,
            }
            .serialize(serializer),
        }
    }
}

impl<'de> Deserialize<'de> for Permutation {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        match PermutationForm::deserialize(deserializer)? {
            PermutationForm::OneLine(values) => {
                Permutation::from_one_line(&values).map_err(D::Error::custom)
            }
            PermutationForm::Patch(form) => {
                let mut patch = BTreeMap::new();
                for (k, v) in form.patch {
                    let k: usize = k
                        .parse()
                        .map_err(|_| D::Error::custom(format!("bad position {k:?}")))?;
                    patch.insert(k, v);
                }
                Permutation::new(patch, form.tail).map_err(D::Error::custom)
            }
        }
    }
}
