//! Column-finite ℕ×ℕ matrices that equal the identity outside a finite
//! leading window.
//!
//! This class is closed under products and under inversion when the inverse
//! exists, and it contains every finitely supported permutation matrix.
//! Windows are normalized by trimming trailing rows/columns that already
//! agree with the identity, so `==` is equality of infinite matrices.

use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::linalg;
use crate::permutation::Permutation;
use crate::scalar::{Ring, Scalar};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ColMatrix {
    ring: Ring,
    window: usize,
    /// Row-major `window × window` block.
    block: Vec<Scalar>,
}

/// A set of row or column positions (1-based).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum IndexSet {
    /// `[start, end]`, both inclusive.
    Range { start: usize, end: usize },
    /// `[start, ∞)`; only meaningful for rows.
    From(usize),
    Explicit(Vec<usize>),
}

impl IndexSet {
    /// `[1, n]`.
    pub fn prefix(n: usize) -> IndexSet {
        IndexSet::Range { start: 1, end: n }
    }

    fn materialize(&self, infinite_cap: usize) -> Vec<usize> {
        match self {
            IndexSet::Range { start, end } => (*start.max(&1)..=*end).collect(),
            IndexSet::From(start) => (*start.max(&1)..=infinite_cap).collect(),
            IndexSet::Explicit(v) => v.clone(),
        }
    }
}

/// Elementary matrices used by the degeneration identity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Elementary {
    /// Identity plus `x` at entry `(row, col)`, `row ≠ col`.
    AddMultiple { row: usize, col: usize, x: Scalar },
    /// Identity with the unit `r` at `(index, index)`.
    Scale { index: usize, r: Scalar },
    /// Permutation matrix with entry `(i, j) = [i = σ(j)]`.
    Permutation(Permutation),
}

impl ColMatrix {
    pub fn identity(ring: Ring) -> ColMatrix {
        ColMatrix {
            ring,
            window: 0,
            block: Vec::new(),
        }
    }

    /// Matrix equal to `rows` on the leading square block and to the
    /// identity elsewhere.
    pub fn from_rows(ring: Ring, rows: Vec<Vec<Scalar>>) -> Result<ColMatrix> {
        let n = rows.len();
        let mut block = Vec::with_capacity(n * n);
        for row in rows {
            if row.len() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: row.len(),
                });
            }
            for x in row {
                linalg::same_ring(ring, x.ring())?;
                block.push(x);
            }
        }
        Ok(ColMatrix {
            ring,
            window: n,
            block,
        }
        .normalized())
    }

    /// Convenience constructor from small integers.
    pub fn from_i64(ring: Ring, rows: &[&[i64]]) -> Result<ColMatrix> {
        ColMatrix::from_rows(
            ring,
            rows.iter()
                .map(|r| r.iter().map(|&x| Scalar::from_i64(ring, x)).collect())
                .collect(),
        )
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn window(&self) -> usize {
        self.window
    }

    /// Entry `(i, j)`, 1-based; the Kronecker delta outside the window.
    pub fn entry(&self, i: usize, j: usize) -> Scalar {
        if i <= self.window && j <= self.window && i >= 1 && j >= 1 {
            self.block[(i - 1) * self.window + (j - 1)].clone()
        } else if i == j {
            self.ring.one()
        } else {
            self.ring.zero()
        }
    }

    fn entry_ref(&self, i: usize, j: usize) -> Option<&Scalar> {
        (i <= self.window && j <= self.window).then(|| &self.block[(i - 1) * self.window + (j - 1)])
    }

    /// The leading `n × n` block, `n ≥ 0` (may exceed the window).
    pub fn block_rows(&self, n: usize) -> Vec<Vec<Scalar>> {
        (1..=n).map(|i| (1..=n).map(|j| self.entry(i, j)).collect()).collect()
    }

    /// Rows of the window block.
    pub fn rows(&self) -> Vec<Vec<Scalar>> {
        self.block_rows(self.window)
    }

    fn normalized(mut self) -> ColMatrix {
        while self.window > 0 {
            let n = self.window;
            let last_is_identity = (1..=n).all(|k| {
                let expect_one = k == n;
                let row = self.entry_ref(n, k).unwrap();
                let col = self.entry_ref(k, n).unwrap();
                if expect_one {
                    row.is_one()
                } else {
                    row.is_zero() && col.is_zero()
                }
            });
            if !last_is_identity {
                break;
            }
            let m = n - 1;
            let mut block = Vec::with_capacity(m * m);
            for i in 0..m {
                block.extend_from_slice(&self.block[i * n..i * n + m]);
            }
            self.block = block;
            self.window = m;
        }
        self
    }

    pub fn multiply(&self, other: &ColMatrix) -> Result<ColMatrix> {
        linalg::same_ring(self.ring, other.ring)?;
        let n = self.window.max(other.window);
        let a = self.block_rows(n);
        let b = other.block_rows(n);
        let zero = self.ring.zero();
        let rows = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        (0..n).fold(zero.clone(), |acc, k| {
                            if a[i][k].is_zero() || b[k][j].is_zero() {
                                acc
                            } else {
                                &acc + &(&a[i][k] * &b[k][j])
                            }
                        })
                    })
                    .collect()
            })
            .collect();
        ColMatrix::from_rows(self.ring, rows)
    }

    /// Product of a sequence of matrices, left to right.
    pub fn product<'a>(ring: Ring, factors: impl IntoIterator<Item = &'a ColMatrix>) -> Result<ColMatrix> {
        factors
            .into_iter()
            .try_fold(ColMatrix::identity(ring), |acc, m| acc.multiply(m))
    }

    pub fn is_upper_triangular(&self) -> bool {
        (1..=self.window).all(|i| (1..i).all(|j| self.entry_ref(i, j).unwrap().is_zero()))
    }

    /// Invertibility of the window block over a field.
    pub fn is_invertible(&self) -> Result<bool> {
        Ok(linalg::rank(self.ring, &self.rows())? == self.window)
    }

    pub fn require_invertible(&self) -> Result<()> {
        if self.is_invertible()? {
            Ok(())
        } else {
            Err(Error::NotInvertible { index: None })
        }
    }

    pub fn elementary(ring: Ring, kind: &Elementary) -> Result<ColMatrix> {
        match kind {
            Elementary::AddMultiple { row, col, x } => {
                if row == col || *row == 0 || *col == 0 {
                    return Err(Error::InvalidPair { p: *row, q: *col });
                }
                linalg::same_ring(ring, x.ring())?;
                let n = *row.max(col);
                let mut rows = ColMatrix::identity(ring).block_rows(n);
                rows[row - 1][col - 1] = x.clone();
                ColMatrix::from_rows(ring, rows)
            }
            Elementary::Scale { index, r } => {
                linalg::same_ring(ring, r.ring())?;
                if !r.is_unit() {
                    return Err(Error::NotAUnit {
                        value: r.to_string(),
                        ring,
                    });
                }
                let mut rows = ColMatrix::identity(ring).block_rows(*index);
                rows[index - 1][index - 1] = r.clone();
                ColMatrix::from_rows(ring, rows)
            }
            Elementary::Permutation(sigma) => ColMatrix::permutation_matrix(ring, sigma),
        }
    }

    /// `L_{row,col}(x)`: identity plus `x` at `(row, col)`.
    pub fn add_multiple(ring: Ring, row: usize, col: usize, x: Scalar) -> Result<ColMatrix> {
        ColMatrix::elementary(ring, &Elementary::AddMultiple { row, col, x })
    }

    /// `D_index(r)`.
    pub fn scale(ring: Ring, index: usize, r: Scalar) -> Result<ColMatrix> {
        ColMatrix::elementary(ring, &Elementary::Scale { index, r })
    }

    /// Matrix of a finitely supported `σ`: entry `(i, j) = [i = σ(j)]`.
    pub fn permutation_matrix(ring: Ring, sigma: &Permutation) -> Result<ColMatrix> {
        let line = sigma.trimmed_one_line().ok_or_else(|| {
            Error::InvalidPermutation(format!("{sigma} is not finitely supported"))
        })?;
        let n = line.len();
        let mut rows = vec![vec![ring.zero(); n]; n];
        for (j, &i) in line.iter().enumerate() {
            rows[i - 1][j] = ring.one();
        }
        ColMatrix::from_rows(ring, rows)
    }

    /// Exact rank of the submatrix on `rows × cols` over a field. Row sets
    /// of the form `[p, ∞)` are cut at `max(window, max col)`: past that,
    /// rows of the identity tail vanish on the chosen columns.
    pub fn submatrix_rank(&self, rows: &IndexSet, cols: &IndexSet) -> Result<usize> {
        self.ring.require_field()?;
        if matches!(cols, IndexSet::From(_)) {
            return Err(Error::Parse("column sets must be finite".into()));
        }
        let col_idx = cols.materialize(0);
        let max_col = col_idx.iter().copied().max().unwrap_or(0);
        let row_idx = rows.materialize(self.window.max(max_col));
        let sub: Vec<Vec<Scalar>> = row_idx
            .iter()
            .map(|&i| col_idx.iter().map(|&j| self.entry(i, j)).collect())
            .collect();
        if sub.is_empty() || col_idx.is_empty() {
            return Ok(0);
        }
        linalg::rank(self.ring, &sub)
    }

    /// Rank of the lower-left block: rows `≥ p`, columns `≤ q`.
    pub fn rank_lower_left(&self, p: usize, q: usize) -> Result<usize> {
        self.submatrix_rank(&IndexSet::From(p), &IndexSet::prefix(q))
    }
}

impl fmt::Display for ColMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.window == 0 {
            return write!(f, "I");
        }
        let rows: Vec<String> = self
            .rows()
            .iter()
            .map(|r| {
                let cells: Vec<String> = r.iter().map(|x| x.to_string()).collect();
                format!("[{}]", cells.join(", "))
            })
            .collect();
        write!(f, "[{}]", rows.join(", "))
    }
}

/// An upper triangular [`ColMatrix`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TriangularMatrix(ColMatrix);

impl TryFrom<ColMatrix> for TriangularMatrix {
    type Error = Error;

    fn try_from(m: ColMatrix) -> Result<TriangularMatrix> {
        for i in 1..=m.window {
            for j in 1..i {
                if !m.entry_ref(i, j).unwrap().is_zero() {
                    return Err(Error::NotTriangular { row: i, col: j });
                }
            }
        }
        Ok(TriangularMatrix(m))
    }
}

impl TriangularMatrix {
    pub fn as_matrix(&self) -> &ColMatrix {
        &self.0
    }

    pub fn into_matrix(self) -> ColMatrix {
        self.0
    }

    /// First diagonal index whose entry is not a unit.
    pub fn first_non_unit_diagonal(&self) -> Option<usize> {
        (1..=self.0.window).find(|&i| !self.0.entry_ref(i, i).unwrap().is_unit())
    }

    fn diagonal_inverses(&self) -> Result<Vec<Scalar>> {
        if let Some(index) = self.first_non_unit_diagonal() {
            return Err(Error::NotInvertible { index: Some(index) });
        }
        (1..=self.0.window)
            .map(|i| self.0.entry_ref(i, i).unwrap().invert())
            .collect()
    }

    /// Right inverse `c` (`bc = I`), filled column by column from the
    /// diagonal upward: `c_{j,n} = −b_{j,j}⁻¹ Σ_{k=j+1..n} b_{j,k} c_{k,n}`.
    pub fn right_inverse_recursion(&self) -> Result<TriangularMatrix> {
        let inv_diag = self.diagonal_inverses()?;
        let b = &self.0;
        let n = b.window;
        let ring = b.ring;
        let mut c = vec![vec![ring.zero(); n]; n];
        for col in 1..=n {
            c[col - 1][col - 1] = inv_diag[col - 1].clone();
            for j in (1..col).rev() {
                let sum = (j + 1..=col).fold(ring.zero(), |acc, k| {
                    &acc + &(b.entry_ref(j, k).unwrap() * &c[k - 1][col - 1])
                });
                c[j - 1][col - 1] = -(&inv_diag[j - 1] * &sum);
            }
        }
        Ok(TriangularMatrix(ColMatrix::from_rows(ring, c)?))
    }

    /// Left inverse `a` (`ab = I`), filled row by row from the diagonal
    /// rightward: `a_{n,j} = −b_{j,j}⁻¹ Σ_{k=n..j−1} a_{n,k} b_{k,j}`.
    pub fn left_inverse_recursion(&self) -> Result<TriangularMatrix> {
        let inv_diag = self.diagonal_inverses()?;
        let b = &self.0;
        let n = b.window;
        let ring = b.ring;
        let mut a = vec![vec![ring.zero(); n]; n];
        for row in 1..=n {
            a[row - 1][row - 1] = inv_diag[row - 1].clone();
            for j in row + 1..=n {
                let sum = (row..j).fold(ring.zero(), |acc, k| {
                    &acc + &(&a[row - 1][k - 1] * b.entry_ref(k, j).unwrap())
                });
                a[row - 1][j - 1] = -(&inv_diag[j - 1] * &sum);
            }
        }
        Ok(TriangularMatrix(ColMatrix::from_rows(ring, a)?))
    }

    /// Two-sided inverse. Both recursions run and must agree.
    pub fn triangular_inverse(&self) -> Result<TriangularMatrix> {
        let right = self.right_inverse_recursion()?;
        let left = self.left_inverse_recursion()?;
        if left != right {
            return Err(Error::InternalContradiction(format!(
                "left inverse {} differs from right inverse {}",
                left.0, right.0
            )));
        }
        Ok(right)
    }
}

#[derive(Serialize, Deserialize)]
struct MatrixForm {
    #[serde(skip_serializing_if = "Option::is_none")]
    field: Option<Ring>,
    window: usize,
    block: Vec<Vec<String>>,
}

impl Serialize for ColMatrix {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        MatrixForm {
            field: Some(self.ring),
            window: self.window,
            block: self
                .rows()
                .iter()
                .map(|r| r.iter().map(|x| x.to_string()).collect())
                .collect(),
        }
        .serialize(serializer)
    }
}

impl ColMatrix {
    /// Reads the JSON form `{"field": .., "window": .., "block": [[..]]}`,
    /// falling back to `default_ring` when the document has no `"field"`.
    pub fn from_json(value: &serde_json::Value, default_ring: Option<Ring>) -> Result<ColMatrix> {
        let form: MatrixForm =
            serde_json::from_value(value.clone()).map_err(|e| Error::Parse(e.to_string()))?;
        let ring = match (form.field, default_ring) {
            (Some(r), _) => r,
            (None, Some(r)) => r,
            (None, None) => return Err(Error::Parse("matrix has no \"field\"".into())),
        };
        if form.block.len() != form.window {
            return Err(Error::Parse(format!(
                "window {} but block has {} rows",
                form.window,
                form.block.len()
            )));
        }
        let rows = form
            .block
            .iter()
            .map(|r| r.iter().map(|x| Scalar::parse(ring, x)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        ColMatrix::from_rows(ring, rows)
    }
}

impl<'de> Deserialize<'de> for ColMatrix {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let value = serde_json::Value::deserialize(deserializer)?;
        ColMatrix::from_json(&value, None).map_err(serde::de::Error::custom)
    }
}
