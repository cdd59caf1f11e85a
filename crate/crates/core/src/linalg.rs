//! Dense exact elimination over ℚ and F_p.
//!
//! Matrices here are plain row lists of [`Scalar`]s sharing one ring. Rank
//! over ℚ runs fraction-free (Bareiss) on an integer matrix obtained by
//! clearing each row's denominators; everything else is ordinary
//! Gauss–Jordan elimination.

use num::bigint::BigInt;
use num::integer::Integer;
use num::{One, Zero};

use crate::error::{Error, Result};
use crate::scalar::{Ring, Scalar};

pub type Rows = Vec<Vec<Scalar>>;

/// Exact rank of `rows` (all of length `ncols`) over a field.
pub fn rank(ring: Ring, rows: &[Vec<Scalar>]) -> Result<usize> {
    ring.require_field()?;
    match ring {
        Ring::Rationals => Ok(bareiss_rank(rows)),
        _ => Ok(rref(ring, rows)?.len()),
    }
}

fn integer_row(row: &[Scalar]) -> Vec<BigInt> {
    let denoms = row.iter().fold(BigInt::one(), |acc, s| match s {
        Scalar::Rational(r) => acc.lcm(r.denom()),
        _ => unreachable!("integer_row on a non-rational row"),
    });
    row.iter()
        .map(|s| match s {
            Scalar::Rational(r) => r.numer() * (&denoms / r.denom()),
            _ => unreachable!(),
        })
        .collect()
}

fn bareiss_rank(rows: &[Vec<Scalar>]) -> usize {
    let mut m: Vec<Vec<BigInt>> = rows.iter().map(|r| integer_row(r)).collect();
    let nrows = m.len();
    let ncols = m.first().map_or(0, Vec::len);
    let mut prev = BigInt::one();
    let mut r = 0;
    for c in 0..ncols {
        if r == nrows {
            break;
        }
        let Some(pivot) = (r..nrows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, pivot);
        for i in r + 1..nrows {
            for j in c + 1..ncols {
                // exact division: the Sylvester identity guarantees divisibility
                let v = &m[r][c] * &m[i][j] - &m[i][c] * &m[r][j];
                m[i][j] = v / &prev;
            }
            m[i][c] = BigInt::zero();
        }
        prev = m[r][c].clone();
        r += 1;
    }
    r
}

/// Reduced row echelon form; zero rows are dropped.
pub fn rref(ring: Ring, rows: &[Vec<Scalar>]) -> Result<Rows> {
    ring.require_field()?;
    let mut m: Rows = rows.to_vec();
    let nrows = m.len();
    let ncols = m.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..ncols {
        if r == nrows {
            break;
        }
        let Some(pivot) = (r..nrows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, pivot);
        let inv = m[r][c].invert()?;
        for x in m[r].iter_mut() {
            *x = &*x * &inv;
        }
        for i in 0..nrows {
            if i != r && !m[i][c].is_zero() {
                let factor = m[i][c].clone();
                for j in c..ncols {
                    let delta = &factor * &m[r][j];
                    m[i][j] = &m[i][j] - &delta;
                }
            }
        }
        r += 1;
    }
    m.truncate(r);
    Ok(m)
}

/// Column index of the leading one of each row of an RREF matrix.
pub fn pivot_columns(rref_rows: &[Vec<Scalar>]) -> Vec<usize> {
    rref_rows
        .iter()
        .map(|row| row.iter().position(|x| !x.is_zero()).expect("rref rows are nonzero"))
        .collect()
}

/// Basis of `{x : A x = 0}` for `A` given by `rows` with `ncols` columns.
pub fn nullspace(ring: Ring, rows: &[Vec<Scalar>], ncols: usize) -> Result<Rows> {
    let reduced = rref(ring, rows)?;
    let pivots = pivot_columns(&reduced);
    let mut basis = Vec::new();
    for free in (0..ncols).filter(|c| !pivots.contains(c)) {
        let mut v = vec![ring.zero(); ncols];
        v[free] = ring.one();
        for (row, &pc) in reduced.iter().zip(&pivots) {
            v[pc] = -&row[free];
        }
        basis.push(v);
    }
    Ok(basis)
}

/// Inverse of a square matrix over a field, by Gauss–Jordan on `[A | I]`.
pub fn inverse(ring: Ring, rows: &[Vec<Scalar>]) -> Result<Rows> {
    let n = rows.len();
    let augmented: Rows = rows
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { ring.one() } else { ring.zero() }));
            r
        })
        .collect();
    let reduced = rref(ring, &augmented)?;
    if reduced.len() < n || pivot_columns(&reduced).iter().any(|&c| c >= n) {
        return Err(Error::NotInvertible { index: None });
    }
    Ok(reduced.into_iter().map(|r| r[n..].to_vec()).collect())
}

/// `a` and `b` have the same ring; otherwise a mismatch error.
pub fn same_ring(a: Ring, b: Ring) -> Result<()> {
    if a == b {
        Ok(())
    } else {
        Err(Error::RingMismatch { left: a, right: b })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q_rows(rows: &[&[i64]]) -> Rows {
        rows.iter()
            .map(|r| r.iter().map(|&x| Scalar::from_i64(Ring::Rationals, x)).collect())
            .collect()
    }

    #[test]
    fn rank_over_rationals_and_fp() {
        let m = q_rows(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        assert_eq!(rank(Ring::Rationals, &m).unwrap(), 2);
        let f3: Rows = m
            .iter()
            .map(|r| r.iter().map(|x| Scalar::parse(Ring::PrimeField(3), &x.to_string()).unwrap()).collect())
            .collect();
        assert_eq!(rank(Ring::PrimeField(3), &f3).unwrap(), 2);
        // rank drops mod 2: rows (1,0,1) and (1,2,3) ≡ (1,0,1)
        let f2: Rows = m
            .iter()
            .map(|r| r.iter().map(|x| Scalar::parse(Ring::PrimeField(2), &x.to_string()).unwrap()).collect())
            .collect();
        assert_eq!(rank(Ring::PrimeField(2), &f2).unwrap(), 1);
    }

    #[test]
    fn fractions_are_cleared_before_bareiss() {
        let half = Scalar::from_ratio(1, 2);
        let third = Scalar::from_ratio(1, 3);
        let one = Ring::Rationals.one();
        let m = vec![vec![half.clone(), third.clone()], vec![one.clone(), Scalar::from_ratio(2, 3)]];
        assert_eq!(rank(Ring::Rationals, &m).unwrap(), 1);
        let m = vec![vec![half, third], vec![one.clone(), one]];
        assert_eq!(rank(Ring::Rationals, &m).unwrap(), 2);
    }

    #[test]
    fn integers_are_refused() {
        let m = vec![vec![Scalar::from_i64(Ring::Integers, 1)]];
        assert_eq!(rank(Ring::Integers, &m), Err(Error::NotAField(Ring::Integers)));
    }

    #[test]
    fn nullspace_is_annihilated() {
        let m = q_rows(&[&[1, 2, 3, 4], &[0, 1, 1, 1]]);
        let ns = nullspace(Ring::Rationals, &m, 4).unwrap();
        assert_eq!(ns.len(), 2);
        for v in &ns {
            for row in &m {
                let dot = row.iter().zip(v).fold(Ring::Rationals.zero(), |acc, (a, b)| &acc + &(a * b));
                assert!(dot.is_zero());
            }
        }
    }

    #[test]
    fn inverse_round_trip() {
        let m = q_rows(&[&[2, 1, 0], &[1, 1, 0], &[0, 3, 1]]);
        let inv = inverse(Ring::Rationals, &m).unwrap();
        for i in 0..3 {
            for j in 0..3 {
                let v = (0..3).fold(Ring::Rationals.zero(), |acc, k| &acc + &(&m[i][k] * &inv[k][j]));
                assert_eq!(v.is_one(), i == j);
                assert_eq!(v.is_zero(), i != j);
            }
        }
        assert!(inverse(Ring::Rationals, &q_rows(&[&[1, 2], &[2, 4]])).is_err());
    }

    #[test]
    fn empty_inputs() {
        assert_eq!(rank(Ring::Rationals, &[]).unwrap(), 0);
        assert_eq!(nullspace(Ring::Rationals, &[], 2).unwrap().len(), 2);
    }
}
