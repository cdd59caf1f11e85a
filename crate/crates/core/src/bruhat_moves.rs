//! Walking down the Bruhat order by transpositions.
//!
//! Given `σ < τ`, one step replaces `τ` by `τ·(p, q)` where `p = d(σ, τ)` and
//! `q` is the least `n > p` with `σ(p) ≤ τ(n) < τ(p)`. The new permutation
//! still lies above `σ`, sits strictly below `τ`, and agrees with `τ` before
//! `p`. Repeating until position `p` is fixed pushes `d(σ, ·)` forward; for
//! finitely supported inputs the walk ends at `σ`, otherwise it converges to
//! `σ` position by position.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::permutation::{
    bruhat_leq_bounded, first_difference, reduction_bound, Permutation,
};

/// One move `τ ↦ τ·(p, q)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DescentStep {
    pub p: usize,
    pub q: usize,
    pub result: Permutation,
}

/// A materialized walk from `start` toward `target`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DescentChain {
    pub start: Permutation,
    pub target: Permutation,
    pub steps: Vec<DescentStep>,
    /// The last result equals the target.
    pub terminated: bool,
    /// Set when `target < start` was only verified up to this bound
    /// (non-identity tails).
    pub verified_up_to: Option<usize>,
}

impl DescentChain {
    /// `τ, τt₁, τt₁t₂, ...`, starting with `start`.
    pub fn sequence(&self) -> Vec<Permutation> {
        std::iter::once(self.start.clone())
            .chain(self.steps.iter().map(|s| s.result.clone()))
            .collect()
    }

    pub fn last(&self) -> &Permutation {
        self.steps.last().map(|s| &s.result).unwrap_or(&self.start)
    }
}

fn check_pair(p: usize, q: usize) -> Result<()> {
    if p == 0 || p >= q {
        Err(Error::InvalidPair { p, q })
    } else {
        Ok(())
    }
}

/// Whether `τ·(p, q) < τ`, which happens exactly when `τ(p) > τ(q)`.
pub fn descent_test(tau: &Permutation, p: usize, q: usize) -> Result<bool> {
    check_pair(p, q)?;
    Ok(tau.apply(p) > tau.apply(q))
}

/// Establishes `σ < τ`, returning the verification bound used when the tails
/// make the comparison bound-limited.
fn require_strictly_below(
    sigma: &Permutation,
    tau: &Permutation,
    bound: Option<usize>,
) -> Result<Option<usize>> {
    let not_comparable = || Error::NotComparable(format!("{sigma} is not strictly below {tau}"));
    if sigma == tau {
        return Err(not_comparable());
    }
    let verdict = if sigma.is_finitely_supported() && tau.is_finitely_supported() {
        bruhat_leq_bounded(sigma, tau, 0)
    } else {
        let bound = bound.ok_or_else(|| {
            Error::UndecidableWithoutBound(format!(
                "comparing {} with {} needs a bound",
                sigma.tail().name(),
                tau.tail().name()
            ))
        })?;
        bruhat_leq_bounded(sigma, tau, bound + reduction_bound(sigma, tau))
    };
    if verdict.holds {
        Ok(verdict.verified_up_to)
    } else {
        Err(not_comparable())
    }
}

// Assumes σ < τ has been established.
fn step_below(sigma: &Permutation, tau: &Permutation) -> Result<DescentStep> {
    let p = first_difference(sigma, tau)?;
    let low = sigma.apply(p);
    let high = tau.apply(p);
    if low >= high {
        return Err(Error::NotComparable(format!(
            "{sigma} vs {tau}: at the first difference {p}, {low} >= {high}"
        )));
    }
    // τ⁻¹(σ(p)) lies past p and belongs to the candidate set, so it caps the search
    let cap = tau.inverse().apply(low);
    let q = (p + 1..=cap)
        .find(|&n| {
            let v = tau.apply(n);
            low <= v && v < high
        })
        .ok_or_else(|| {
            Error::InternalContradiction(format!("no admissible q for {sigma} < {tau} at p = {p}"))
        })?;
    Ok(DescentStep {
        p,
        q,
        result: tau.swap_positions(p, q),
    })
}

/// One transposition step from `τ` toward `σ`. `bound` is required when
/// either permutation has a non-identity tail.
pub fn going_down_step(
    sigma: &Permutation,
    tau: &Permutation,
    bound: Option<usize>,
) -> Result<DescentStep> {
    require_strictly_below(sigma, tau, bound)?;
    step_below(sigma, tau)
}

fn reduce_segment(sigma: &Permutation, tau: &Permutation) -> Result<Vec<DescentStep>> {
    let p = first_difference(sigma, tau)?;
    let target = sigma.apply(p);
    let mut steps = Vec::new();
    let mut current = tau.clone();
    while current.apply(p) != target {
        let step = step_below(sigma, &current)?;
        current = step.result.clone();
        steps.push(step);
    }
    Ok(steps)
}

/// Steps from `τ` until the first position where the result differs from
/// `σ` has moved strictly past `d(σ, τ)`.
pub fn reduce_first_difference(
    sigma: &Permutation,
    tau: &Permutation,
    bound: Option<usize>,
) -> Result<Vec<DescentStep>> {
    require_strictly_below(sigma, tau, bound)?;
    reduce_segment(sigma, tau)
}

/// Walks down from `τ` toward `σ` for at most `max_steps` transpositions.
pub fn chain_toward(
    sigma: &Permutation,
    tau: &Permutation,
    max_steps: usize,
    bound: Option<usize>,
) -> Result<DescentChain> {
    let verified_up_to = require_strictly_below(sigma, tau, bound)?;
    let mut steps: Vec<DescentStep> = Vec::new();
    let mut current = tau.clone();
    while steps.len() < max_steps && &current != sigma {
        let step = step_below(sigma, &current)?;
        current = step.result.clone();
        steps.push(step);
    }
    Ok(DescentChain {
        start: tau.clone(),
        target: sigma.clone(),
        terminated: &current == sigma,
        steps,
        verified_up_to,
    })
}
