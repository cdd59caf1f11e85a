//! Bruhat factorization `g = bσc` over a field and the degeneration
//! identity that moves a one-parameter family into a larger cell.
//!
//! Only `σ` is canonical. It is read off the table of lower-left ranks
//! `rank g_{≥p, ≤q}`, which is unchanged by multiplying with upper triangular
//! matrices on either side and equals `r_{≥p,q}(σ)`. The factors `b` and `c`
//! come from an elimination and are checked by re-multiplying.

use serde::Serialize;

use crate::colmat::{ColMatrix, TriangularMatrix};
use crate::error::{Error, Result};
use crate::permutation::Permutation;
use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BruhatFactorization {
    #[serde(serialize_with = "serialize_triangular")]
    pub b: TriangularMatrix,
    pub sigma: Permutation,
    #[serde(serialize_with = "serialize_triangular")]
    pub c: TriangularMatrix,
}

fn serialize_triangular<S: serde::Serializer>(
    m: &TriangularMatrix,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    m.as_matrix().serialize(s)
}

impl BruhatFactorization {
    /// `b · σ · c`.
    pub fn product(&self) -> Result<ColMatrix> {
        let ring = self.b.as_matrix().ring();
        let sigma = ColMatrix::permutation_matrix(ring, &self.sigma)?;
        self.b.as_matrix().multiply(&sigma)?.multiply(self.c.as_matrix())
    }

    pub fn reproduces(&self, g: &ColMatrix) -> bool {
        self.product().is_ok_and(|p| &p == g)
    }
}

/// Table `t[p][q] = rank g_{≥p, ≤q}` for `1 ≤ p ≤ n + 1`, `0 ≤ q ≤ n`.
fn lower_left_rank_table(g: &ColMatrix) -> Result<Vec<Vec<usize>>> {
    let n = g.window();
    let mut table = vec![vec![0usize; n + 1]; n + 2];
    for p in 1..=n {
        for q in 1..=n {
            table[p][q] = g.rank_lower_left(p, q)?;
        }
    }
    Ok(table)
}

/// The permutation `σ` with `g ∈ BσB`.
pub fn coset_label(g: &ColMatrix) -> Result<Permutation> {
    g.ring().require_field()?;
    g.require_invertible()?;
    let n = g.window();
    let t = lower_left_rank_table(g)?;
    let mut line = Vec::with_capacity(n);
    for q in 1..=n {
        let jumps: Vec<usize> = (1..=n)
            .filter(|&p| t[p][q] + t[p + 1][q - 1] == t[p][q - 1] + t[p + 1][q] + 1)
            .collect();
        match jumps.as_slice() {
            [p] => line.push(*p),
            _ => {
                return Err(Error::InternalContradiction(format!(
                    "column {q} of {g} has rank jumps at {jumps:?}"
                )))
            }
        }
    }
    Permutation::from_one_line(&line)
}

/// Factor an invertible `g` over a field as `b σ c`.
///
/// Column by column, the lowest nonzero entry becomes the pivot; entries
/// above it are cleared with lower rows (left upper-triangular operations)
/// and entries to its right with the pivot column (right upper-triangular
/// operations). What remains is a scaled permutation matrix.
pub fn bruhat_decompose(g: &ColMatrix) -> Result<BruhatFactorization> {
    let ring = g.ring();
    ring.require_field()?;
    g.require_invertible()?;
    let n = g.window();
    let mut m = g.rows();
    // r_inv and c_inv accumulate the inverses of the applied row and
    // column operations
    let mut r_inv = ColMatrix::identity(ring).block_rows(n);
    let mut c_inv = r_inv.clone();
    let mut line = vec![0usize; n];

    for j in 0..n {
        let i = (0..n)
            .rev()
            .find(|&i| !m[i][j].is_zero())
            .ok_or(Error::NotInvertible { index: Some(j + 1) })?;
        line[j] = i + 1;
        let pivot_inv = m[i][j].invert()?;
        for k in 0..i {
            if m[k][j].is_zero() {
                continue;
            }
            let f = &m[k][j] * &pivot_inv;
            for col in j..n {
                let delta = &f * &m[i][col];
                m[k][col] = &m[k][col] - &delta;
            }
            for row in r_inv.iter_mut() {
                let delta = &f * &row[k];
                row[i] = &row[i] + &delta;
            }
        }
        for l in j + 1..n {
            if m[i][l].is_zero() {
                continue;
            }
            let f = &m[i][l] * &pivot_inv;
            m[i][l] = ring.zero();
            let (upper, lower) = c_inv.split_at_mut(l);
            for (x, y) in upper[j].iter_mut().zip(&lower[0]) {
                *x = &*x + &(&f * y);
            }
        }
    }

    // m = D'·P_σ; fold the diagonal into b by scaling column σ(j) of r_inv
    for (j, &i) in line.iter().enumerate() {
        let d = m[i - 1][j].clone();
        for row in r_inv.iter_mut() {
            row[i - 1] = &row[i - 1] * &d;
        }
    }

    let factorization = BruhatFactorization {
        b: TriangularMatrix::try_from(ColMatrix::from_rows(ring, r_inv)?)?,
        sigma: Permutation::from_one_line(&line)?,
        c: TriangularMatrix::try_from(ColMatrix::from_rows(ring, c_inv)?)?,
    };
    if !factorization.reproduces(g) {
        return Err(Error::InternalContradiction(format!(
            "b·σ·c does not reproduce {g}"
        )));
    }
    let label = coset_label(g)?;
    if label != factorization.sigma {
        return Err(Error::InternalContradiction(format!(
            "elimination found {} but the rank table gives {label}",
            factorization.sigma
        )));
    }
    Ok(factorization)
}

/// Witness that `σ·L_{q,p}(r)` lies in the cell `BτB`, where `σ = τ·(p, q)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Degeneration {
    pub sigma: Permutation,
    /// `σ · L_{q,p}(r)`.
    pub matrix: ColMatrix,
    pub b: TriangularMatrix,
    pub c: TriangularMatrix,
}

/// For a descent `τ(p) > τ(q)` and a unit `r`, returns `b, c` upper
/// triangular with `σ·L_{q,p}(r) = b·τ·c`, where
/// `b = (L_{σ(p),σ(q)}(r)·D_{σ(p)}(−r)·D_{σ(q)}(r⁻¹))⁻¹` and
/// `c = L_{p,q}(−r⁻¹)⁻¹`.
pub fn degenerate_to_cell(tau: &Permutation, p: usize, q: usize, r: &Scalar) -> Result<Degeneration> {
    if p == 0 || p >= q {
        return Err(Error::InvalidPair { p, q });
    }
    if !tau.is_finitely_supported() {
        return Err(Error::InvalidPermutation(format!("{tau} is not finitely supported")));
    }
    let (tau_p, tau_q) = (tau.apply(p), tau.apply(q));
    if tau_p <= tau_q {
        return Err(Error::NotADescent { p, q, tau_p, tau_q });
    }
    let r_inv = r.invert()?;
    let ring = r.ring();
    let sigma = tau.swap_positions(p, q);
    let (sp, sq) = (sigma.apply(p), sigma.apply(q));

    let b_inv = ColMatrix::product(
        ring,
        &[
            ColMatrix::add_multiple(ring, sp, sq, r.clone())?,
            ColMatrix::scale(ring, sp, -r)?,
            ColMatrix::scale(ring, sq, r_inv.clone())?,
        ],
    )?;
    let b = TriangularMatrix::try_from(b_inv)?.triangular_inverse()?;
    let c = TriangularMatrix::try_from(ColMatrix::add_multiple(ring, p, q, -&r_inv)?)?
        .triangular_inverse()?;
    let matrix = ColMatrix::permutation_matrix(ring, &sigma)?
        .multiply(&ColMatrix::add_multiple(ring, q, p, r.clone())?)?;
    Ok(Degeneration { sigma, matrix, b, c })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Ring;

    const Q: Ring = Ring::Rationals;

    fn perm(line: &[usize]) -> Permutation {
        Permutation::from_one_line(line).unwrap()
    }

    fn m(ring: Ring, rows: &[&[i64]]) -> ColMatrix {
        ColMatrix::from_i64(ring, rows).unwrap()
    }

    #[test]
    fn coset_label_examples() {
        assert_eq!(coset_label(&ColMatrix::identity(Q)).unwrap(), Permutation::identity());
        assert_eq!(coset_label(&m(Q, &[&[1, 1], &[1, 0]])).unwrap(), perm(&[2, 1]));
        assert_eq!(coset_label(&m(Q, &[&[2, 7, 1], &[0, -1, 3], &[0, 0, 5]])).unwrap(), Permutation::identity());
        assert_eq!(coset_label(&m(Q, &[&[1, 1], &[1, 1]])), Err(Error::NotInvertible { index: None }));
        assert_eq!(coset_label(&m(Ring::Integers, &[&[0, 1], &[1, 0]])), Err(Error::NotAField(Ring::Integers)));
    }

    #[test]
    fn decompose_examples() {
        let f = bruhat_decompose(&ColMatrix::identity(Q)).unwrap();
        assert_eq!(f.sigma, Permutation::identity());
        assert_eq!(f.b.as_matrix(), &ColMatrix::identity(Q));
        assert_eq!(f.c.as_matrix(), &ColMatrix::identity(Q));

        let g = m(Q, &[&[1, 1], &[1, 0]]);
        let f = bruhat_decompose(&g).unwrap();
        assert_eq!(f.sigma, perm(&[2, 1]));
        assert_eq!(f.product().unwrap(), g);

        let g = m(Q, &[&[0, 2, 1], &[3, 1, 0], &[1, 1, 1]]);
        let f = bruhat_decompose(&g).unwrap();
        assert!(f.reproduces(&g));
        assert_eq!(f.sigma, coset_label(&g).unwrap());
    }

    #[test]
    fn decompose_refuses_integers() {
        let g = m(Ring::Integers, &[&[0, 1], &[1, 0]]);
        assert_eq!(bruhat_decompose(&g), Err(Error::NotAField(Ring::Integers)));
    }

    #[test]
    fn degeneration_example() {
        let d = degenerate_to_cell(&perm(&[2, 1]), 1, 2, &Q.one()).unwrap();
        assert_eq!(d.b.as_matrix(), &m(Q, &[&[-1, 1], &[0, 1]]));
        assert_eq!(d.c.as_matrix(), &m(Q, &[&[1, 1], &[0, 1]]));
        let tau = ColMatrix::permutation_matrix(Q, &perm(&[2, 1])).unwrap();
        let btc = d.b.as_matrix().multiply(&tau).unwrap().multiply(d.c.as_matrix()).unwrap();
        assert_eq!(btc, ColMatrix::add_multiple(Q, 2, 1, Q.one()).unwrap());
        assert_eq!(btc, d.matrix);
    }

    #[test]
    fn degeneration_errors() {
        let tau = perm(&[2, 1]);
        assert!(matches!(degenerate_to_cell(&tau, 1, 2, &Q.zero()), Err(Error::NotAUnit { .. })));
        assert!(matches!(
            degenerate_to_cell(&Permutation::identity(), 1, 2, &Q.one()),
            Err(Error::NotADescent { .. })
        ));
        assert!(matches!(degenerate_to_cell(&tau, 2, 1, &Q.one()), Err(Error::InvalidPair { .. })));
    }

    #[test]
    fn degeneration_over_integers_with_unit() {
        let z = Ring::Integers;
        let tau = perm(&[3, 1, 2]);
        let r = Scalar::from_i64(z, -1);
        let d = degenerate_to_cell(&tau, 1, 3, &r).unwrap();
        let t = ColMatrix::permutation_matrix(z, &tau).unwrap();
        let btc = d.b.as_matrix().multiply(&t).unwrap().multiply(d.c.as_matrix()).unwrap();
        assert_eq!(btc, d.matrix);
    }
}
