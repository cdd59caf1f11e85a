//! Membership in the closed locus `Y_σ` and the Ehresmann closure relation.
//!
//! `g ∈ Y_σ` when every lower-left block `g_{≥p, ≤q}` has all minors of size
//! `ℓ > r_{≥p,q}(σ)` vanishing, i.e. rank at most `r_{≥p,q}(σ)`. The rank
//! form is what [`y_sigma_contains`] evaluates; [`minors_vanish`] keeps the
//! literal minor form around for cross-checks.
//!
//! For `g` with window `N` and `σ` moving nothing past `M`, only
//! `p, q ≤ max(N, M) + 1` need checking: beyond that both sides grow in
//! lockstep with the identity tail.

use serde::Serialize;

use crate::colmat::ColMatrix;
use crate::decomp::coset_label;
use crate::error::{Error, Result};
use crate::permutation::{bruhat_leq, Permutation};
use crate::scalar::{Ring, Scalar};

/// All `ℓ × ℓ` minors of the lower-left block (rows `≥ p`, columns `≤ q`)
/// must vanish.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MinorCondition {
    pub p: usize,
    pub q: usize,
    pub ell: usize,
}

fn require_finite(sigma: &Permutation) -> Result<()> {
    if sigma.is_finitely_supported() {
        Ok(())
    } else {
        Err(Error::InvalidPermutation(format!("{sigma} is not finitely supported")))
    }
}

/// Largest `p, q` that [`y_sigma_contains`] inspects.
pub fn region_bound(sigma: &Permutation, g: &ColMatrix) -> usize {
    g.window().max(sigma.patch_extent()) + 1
}

/// Minimal violated-size conditions `ℓ = r_{≥p,q}(σ) + 1` for `p, q ≤ bound`
/// (larger `ℓ` follow from these). Skips conditions that no block of that
/// shape can violate.
pub fn minor_conditions(sigma: &Permutation, bound: usize) -> Vec<MinorCondition> {
    let mut out = Vec::new();
    for p in 1..=bound {
        for q in 1..=bound {
            let ell = sigma.rank_sw(p, q) + 1;
            if ell <= q {
                out.push(MinorCondition { p, q, ell });
            }
        }
    }
    out
}

/// Rank test over `p, q ≤ bound`.
pub fn y_sigma_contains_within(sigma: &Permutation, g: &ColMatrix, bound: usize) -> Result<bool> {
    require_finite(sigma)?;
    g.ring().require_field()?;
    for q in 1..=bound {
        for p in 1..=bound {
            if g.rank_lower_left(p, q)? > sigma.rank_sw(p, q) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Whether `g ∈ Y_σ`.
pub fn y_sigma_contains(sigma: &Permutation, g: &ColMatrix) -> Result<bool> {
    g.ring().require_field()?;
    g.require_invertible()?;
    y_sigma_contains_within(sigma, g, region_bound(sigma, g))
}

fn determinant(ring: Ring, m: &[Vec<Scalar>]) -> Scalar {
    // cofactor expansion along the first row; only used on small minors
    match m.len() {
        0 => ring.one(),
        1 => m[0][0].clone(),
        n => (0..n).fold(ring.zero(), |acc, j| {
            if m[0][j].is_zero() {
                return acc;
            }
            let minor: Vec<Vec<Scalar>> = m[1..]
                .iter()
                .map(|row| row.iter().enumerate().filter(|&(k, _)| k != j).map(|(_, x)| x.clone()).collect())
                .collect();
            let term = &m[0][j] * &determinant(ring, &minor);
            if j % 2 == 0 {
                &acc + &term
            } else {
                &acc - &term
            }
        }),
    }
}

fn subsets(items: &[usize], k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    if items.len() < k {
        return Vec::new();
    }
    let mut with_first: Vec<Vec<usize>> = subsets(&items[1..], k - 1)
        .into_iter()
        .map(|mut s| {
            s.insert(0, items[0]);
            s
        })
        .collect();
    with_first.extend(subsets(&items[1..], k));
    with_first
}

/// Evaluates a [`MinorCondition`] by enumerating every minor. Rows past
/// `max(window, q)` are zero on columns `≤ q` and are left out.
pub fn minors_vanish(g: &ColMatrix, cond: MinorCondition) -> bool {
    let last_row = g.window().max(cond.q);
    let rows: Vec<usize> = (cond.p..=last_row).collect();
    let cols: Vec<usize> = (1..=cond.q).collect();
    let row_sets = subsets(&rows, cond.ell);
    let col_sets = subsets(&cols, cond.ell);
    row_sets.iter().all(|rs| {
        col_sets.iter().all(|cs| {
            let minor: Vec<Vec<Scalar>> =
                rs.iter().map(|&i| cs.iter().map(|&j| g.entry(i, j)).collect()).collect();
            determinant(g.ring(), &minor).is_zero()
        })
    })
}

/// `g ∈ Y_σ` evaluated literally through minors over `p, q ≤ bound`.
pub fn y_sigma_contains_by_minors(sigma: &Permutation, g: &ColMatrix, bound: usize) -> Result<bool> {
    require_finite(sigma)?;
    Ok(minor_conditions(sigma, bound).into_iter().all(|c| minors_vanish(g, c)))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClosureVerdict {
    pub in_closure: bool,
    /// The cell `BτB` containing `g`.
    pub coset: Permutation,
}

/// Locates `g` in its cell `BτB` and decides membership of `g` in `Y_σ`;
/// the two must agree with `τ ≤ σ`.
pub fn closure_cover_check(sigma: &Permutation, g: &ColMatrix) -> Result<ClosureVerdict> {
    require_finite(sigma)?;
    let tau = coset_label(g)?;
    let in_closure = y_sigma_contains(sigma, g)?;
    let below = bruhat_leq(&tau, sigma)?;
    if in_closure != below {
        return Err(Error::InternalContradiction(format!(
            "g in Y_{sigma} is {in_closure} but {tau} <= {sigma} is {below}"
        )));
    }
    Ok(ClosureVerdict {
        in_closure,
        coset: tau,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: Ring = Ring::Rationals;

    fn perm(line: &[usize]) -> Permutation {
        Permutation::from_one_line(line).unwrap()
    }

    fn pm(line: &[usize]) -> ColMatrix {
        ColMatrix::permutation_matrix(Q, &perm(line)).unwrap()
    }

    #[test]
    fn membership_examples() {
        let s = perm(&[3, 1, 2]);
        assert!(y_sigma_contains(&s, &pm(&[3, 1, 2])).unwrap());
        assert!(y_sigma_contains(&perm(&[2, 1]), &ColMatrix::identity(Q)).unwrap());
        assert!(!y_sigma_contains(&Permutation::identity(), &pm(&[2, 1])).unwrap());
    }

    #[test]
    fn closure_examples() {
        let g =ColMatrix::from_i64(Ring::PrimeField(2), &[&[0, 1, 1], &[1, 0, 1], &[1, 1, 1]]).unwrap();
        let v = closure_cover_check(&perm(&[3, 2, 1]), &g).unwrap();
        assert!(v.in_closure);
        assert_eq!(v.coset, coset_label(&g).unwrap());

        let v = closure_cover_check(&Permutation::identity(), &ColMatrix::identity(Q)).unwrap();
        assert!(v.in_closure);
        assert_eq!(v.coset, Permutation::identity());

        let v = closure_cover_check(&Permutation::identity(), &pm(&[2, 1])).unwrap();
        assert!(!v.in_closure);
        assert_eq!(v.coset, perm(&[2, 1]));
    }

    #[test]
    fn refuses_non_fields_and_infinite_tails() {
        let g = ColMatrix::from_i64(Ring::Integers, &[&[0, 1], &[1, 0]]).unwrap();
        assert_eq!(y_sigma_contains(&perm(&[2, 1]), &g), Err(Error::NotAField(Ring::Integers)));
        assert!(y_sigma_contains(&Permutation::rho(), &ColMatrix::identity(Q)).is_err());
    }

    #[test]
    fn minors_match_rank_test_on_s3() {
        let all = [[1, 2, 3], [1, 3, 2], [2, 1, 3], [2, 3, 1], [3, 1, 2], [3, 2, 1]];
        for s in &all {
            for t in &all {
                let sigma = perm(s);
                let g = pm(t);
                assert_eq!(
                    y_sigma_contains_within(&sigma, &g, 4).unwrap(),
                    y_sigma_contains_by_minors(&sigma, &g, 4).unwrap(),
                    "{s:?} {t:?}"
                );
            }
        }
    }

    #[test]
    fn determinant_small_cases() {
        let m = vec![
            vec![Scalar::from_i64(Q, 2), Scalar::from_i64(Q, 1)],
            vec![Scalar::from_i64(Q, 5), Scalar::from_i64(Q, 3)],
        ];
        assert_eq!(determinant(Q, &m), Q.one());
        assert_eq!(subsets(&[1, 2, 3, 4], 2).len(), 6);
    }
}
