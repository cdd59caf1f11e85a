//! Filtrations, (almost) gradations, flags and relative position.
//!
//! Everything lives inside a finite ambient space `k^D` over an exact field.
//! A [`Flag`] is the chain `F_0 ⊂ F_1 ⊂ ... ⊂ F_D` spanned by the leading
//! columns of an invertible matrix; beyond `D` it continues with the
//! standard basis vectors, so the window-scale data determines it.
//!
//! Subspaces are kept as reduced row echelon bases, so equal subspaces have
//! equal representations.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::colmat::ColMatrix;
use crate::decomp::coset_label;
use crate::error::{Error, Result};
use crate::linalg::{self, Rows};
use crate::permutation::Permutation;
use crate::scalar::{Ring, Scalar};

/// A subspace of `k^D` in canonical (RREF) form.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    ring: Ring,
    ambient: usize,
    basis: Rows,
}

impl Subspace {
    pub fn span(ring: Ring, ambient: usize, vectors: &[Vec<Scalar>]) -> Result<Subspace> {
        for v in vectors {
            if v.len() != ambient {
                return Err(Error::DimensionMismatch {
                    expected: ambient,
                    found: v.len(),
                });
            }
            if let Some(x) = v.iter().find(|x| x.ring() != ring) {
                return Err(Error::RingMismatch {
                    left: ring,
                    right: x.ring(),
                });
            }
        }
        Ok(Subspace {
            ring,
            ambient,
            basis: linalg::rref(ring, vectors)?,
        })
    }

    pub fn zero(ring: Ring, ambient: usize) -> Subspace {
        Subspace {
            ring,
            ambient,
            basis: Vec::new(),
        }
    }

    /// `span(e_1, ..., e_i)`.
    pub fn standard(ring: Ring, ambient: usize, i: usize) -> Subspace {
        Subspace {
            ring,
            ambient,
            basis: (0..i).map(|k| unit_vector(ring, ambient, k)).collect(),
        }
    }

    pub fn full(ring: Ring, ambient: usize) -> Subspace {
        Subspace::standard(ring, ambient, ambient)
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn basis(&self) -> &[Vec<Scalar>] {
        &self.basis
    }

    fn check_compatible(&self, other: &Subspace) -> Result<()> {
        linalg::same_ring(self.ring, other.ring)?;
        if self.ambient != other.ambient {
            return Err(Error::DimensionMismatch {
                expected: self.ambient,
                found: other.ambient,
            });
        }
        Ok(())
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check_compatible(other)?;
        let mut vectors = self.basis.clone();
        vectors.extend(other.basis.iter().cloned());
        Subspace::span(self.ring, self.ambient, &vectors)
    }

    pub fn intersection(&self, other: &Subspace) -> Result<Subspace> {
        self.check_compatible(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Subspace::zero(self.ring, self.ambient));
        }
        // Σ x_a u_a − Σ y_b v_b = 0, one equation per coordinate
        let (a, b) = (self.dim(), other.dim());
        let system: Rows = (0..self.ambient)
            .map(|k| {
                self.basis
                    .iter()
                    .map(|u| u[k].clone())
                    .chain(other.basis.iter().map(|v| -&v[k]))
                    .collect()
            })
            .collect();
        let kernel = linalg::nullspace(self.ring, &system, a + b)?;
        let vectors: Rows = kernel
            .iter()
            .map(|coeffs| {
                (0..self.ambient)
                    .map(|k| {
                        (0..a).fold(self.ring.zero(), |acc, i| &acc + &(&coeffs[i] * &self.basis[i][k]))
                    })
                    .collect()
            })
            .collect();
        Subspace::span(self.ring, self.ambient, &vectors)
    }

    pub fn contains_vector(&self, v: &[Scalar]) -> Result<bool> {
        let mut vectors = self.basis.clone();
        vectors.push(v.to_vec());
        Ok(linalg::rank(self.ring, &vectors)? == self.dim())
    }

    pub fn contains(&self, other: &Subspace) -> Result<bool> {
        Ok(self.sum(other)?.dim() == self.dim())
    }

    /// A complement of `inner` inside `self`: the basis vectors of `self`
    /// (in echelon order) that are not already in the span of `inner` and
    /// the vectors chosen before them.
    pub fn complement_of(&self, inner: &Subspace) -> Result<Subspace> {
        self.check_compatible(inner)?;
        let mut acc = inner.clone();
        let mut chosen: Rows = Vec::new();
        for v in &self.basis {
            if !acc.contains_vector(v)? {
                chosen.push(v.clone());
                acc = acc.sum(&Subspace::span(self.ring, self.ambient, std::slice::from_ref(v))?)?;
            }
        }
        Subspace::span(self.ring, self.ambient, &chosen)
    }
}

fn unit_vector(ring: Ring, ambient: usize, k: usize) -> Vec<Scalar> {
    (0..ambient).map(|i| if i == k { ring.one() } else { ring.zero() }).collect()
}

/// Index posets used for filtrations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IndexPoset {
    /// `0 < 1 < ... < len − 1`.
    Chain(usize),
    /// Product order on `[0, a) × [0, b)`; element `(i, j)` has index
    /// `i·b + j`.
    Product(usize, usize),
}

impl IndexPoset {
    pub fn len(self) -> usize {
        match self {
            IndexPoset::Chain(n) => n,
            IndexPoset::Product(a, b) => a * b,
        }
    }

    pub fn is_empty(self) -> bool {
        self.len() == 0
    }

    pub fn pair(self, i: usize, j: usize) -> usize {
        match self {
            IndexPoset::Product(_, b) => i * b + j,
            IndexPoset::Chain(_) => panic!("pair index on a chain"),
        }
    }

    fn coords(self, x: usize) -> (usize, usize) {
        match self {
            IndexPoset::Chain(_) => (x, 0),
            IndexPoset::Product(_, b) => (x / b, x % b),
        }
    }

    pub fn leq(self, x: usize, y: usize) -> bool {
        let (a, b) = (self.coords(x), self.coords(y));
        a.0 <= b.0 && a.1 <= b.1
    }

    /// Elements covered by `x`.
    pub fn predecessors(self, x: usize) -> Vec<usize> {
        match self {
            IndexPoset::Chain(_) => x.checked_sub(1).into_iter().collect(),
            IndexPoset::Product(_, b) => {
                let (i, j) = self.coords(x);
                let mut out = Vec::new();
                if i > 0 {
                    out.push((i - 1) * b + j);
                }
                if j > 0 {
                    out.push(i * b + j - 1);
                }
                out
            }
        }
    }
}

/// An order-preserving map from a finite poset to subspaces of `k^D` that
/// reaches both `0` and `k^D`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Filtration {
    poset: IndexPoset,
    ring: Ring,
    ambient: usize,
    modules: Vec<Subspace>,
}

impl Filtration {
    pub fn new(poset: IndexPoset, modules: Vec<Subspace>) -> Result<Filtration> {
        if modules.len() != poset.len() || modules.is_empty() {
            return Err(Error::DimensionMismatch {
                expected: poset.len(),
                found: modules.len(),
            });
        }
        let ring = modules[0].ring;
        let ambient = modules[0].ambient;
        for m in &modules {
            m.check_compatible(&modules[0])?;
        }
        if !modules.iter().any(Subspace::is_zero) {
            return Err(Error::InvalidFiltration("no index maps to 0".into()));
        }
        if !modules.iter().any(|m| m.dim() == ambient) {
            return Err(Error::InvalidFiltration("no index maps to the whole space".into()));
        }
        for x in 0..modules.len() {
            for y in poset.predecessors(x) {
                if !modules[x].contains(&modules[y])? {
                    return Err(Error::InvalidFiltration(format!(
                        "not order-preserving between indices {y} and {x}"
                    )));
                }
            }
        }
        Ok(Filtration {
            poset,
            ring,
            ambient,
            modules,
        })
    }

    pub fn poset(&self) -> IndexPoset {
        self.poset
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn module(&self, x: usize) -> &Subspace {
        &self.modules[x]
    }

    /// `F_{<x}`, the sum of `F_y` over `y < x`.
    pub fn below(&self, x: usize) -> Result<Subspace> {
        self.poset
            .predecessors(x)
            .into_iter()
            .try_fold(Subspace::zero(self.ring, self.ambient), |acc, y| acc.sum(&self.modules[y]))
    }

    /// `A_i ∩ B_j` over the product of the two chains.
    pub fn intersect_chains(a: &Filtration, b: &Filtration) -> Result<Filtration> {
        let (IndexPoset::Chain(la), IndexPoset::Chain(lb)) = (a.poset, b.poset) else {
            return Err(Error::InvalidFiltration("intersect_chains needs two chains".into()));
        };
        let mut modules = Vec::with_capacity(la * lb);
        for ai in &a.modules {
            for bj in &b.modules {
                modules.push(ai.intersection(bj)?);
            }
        }
        Filtration::new(IndexPoset::Product(la, lb), modules)
    }

    /// The intersections `F_i ∩ E_j` indexed by `[0, D] × [0, D]`.
    pub fn intersection_of_flags(f: &Flag, e: &Flag) -> Result<Filtration> {
        check_same_space(f, e)?;
        Filtration::intersect_chains(&f.filtration()?, &e.filtration()?)
    }
}

/// Candidate graded pieces `C_x` for the indices of a filtration.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradationTable {
    pub poset: IndexPoset,
    pub cells: Vec<Subspace>,
}

impl GradationTable {
    pub fn cell(&self, x: usize) -> &Subspace {
        &self.cells[x]
    }
}

fn check_table(f: &Filtration, c: &GradationTable) -> Result<()> {
    if f.poset != c.poset || c.cells.len() != f.modules.len() {
        return Err(Error::DimensionMismatch {
            expected: f.modules.len(),
            found: c.cells.len(),
        });
    }
    for cell in &c.cells {
        cell.check_compatible(&f.modules[0])?;
    }
    Ok(())
}

/// `F_x = F_{<x} ⊕ C_x` for every index `x`.
pub fn is_almost_gradation(f: &Filtration, c: &GradationTable) -> Result<bool> {
    check_table(f, c)?;
    for x in 0..f.modules.len() {
        let below = f.below(x)?;
        let cx = &c.cells[x];
        if !below.intersection(cx)?.is_zero() || below.sum(cx)? != f.modules[x] {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The pieces `C_x` are linearly independent: their bases together stay
/// independent.
pub fn is_independent(c: &GradationTable) -> Result<bool> {
    let Some(first) = c.cells.first() else {
        return Ok(true);
    };
    let total: usize = c.cells.iter().map(Subspace::dim).sum();
    let all: Rows = c.cells.iter().flat_map(|s| s.basis.iter().cloned()).collect();
    if all.is_empty() {
        return Ok(true);
    }
    Ok(linalg::rank(first.ring, &all)? == total)
}

/// `F_x = Σ_{y ≤ x} C_y` for every `x`.
pub fn spans(f: &Filtration, c: &GradationTable) -> Result<bool> {
    check_table(f, c)?;
    for x in 0..f.modules.len() {
        let generated = (0..f.modules.len())
            .filter(|&y| f.poset.leq(y, x))
            .try_fold(Subspace::zero(f.ring, f.ambient), |acc, y| acc.sum(&c.cells[y]))?;
        if generated != f.modules[x] {
            return Ok(false);
        }
    }
    Ok(true)
}

/// With `f_k = e_k − e_{k+1}`, checks `e_1 ∉ span(f_1, ..., f_b)` over ℚ for
/// every `b ≤ bound`: the pieces `span(f_k)` form an almost gradation of the
/// standard chain that never spans `e_1` at any finite stage.
pub fn nonspanning_demo(bound: usize) -> Result<bool> {
    let ring = Ring::Rationals;
    for b in 1..=bound {
        let ambient = b + 1;
        let fs: Rows = (0..b)
            .map(|k| {
                let mut v = unit_vector(ring, ambient, k);
                v[k + 1] = -ring.one();
                v
            })
            .collect();
        let span = Subspace::span(ring, ambient, &fs)?;
        if span.contains_vector(&unit_vector(ring, ambient, 0))? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// A complete flag in `k^D`, given by the columns of an invertible matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Flag {
    ring: Ring,
    /// Column `j` is the `j`-th basis vector of the flag.
    columns: Rows,
}

#[derive(Serialize, Deserialize)]
struct FlagForm {
    #[serde(skip_serializing_if = "Option::is_none")]
    field: Option<Ring>,
    columns: Vec<Vec<String>>,
}

impl Flag {
    pub fn standard(ring: Ring, dim: usize) -> Flag {
        Flag {
            ring,
            columns: (0..dim).map(|k| unit_vector(ring, dim, k)).collect(),
        }
    }

    pub fn from_columns(ring: Ring, columns: Rows) -> Result<Flag> {
        ring.require_field()?;
        let d = columns.len();
        for c in &columns {
            if c.len() != d {
                return Err(Error::DimensionMismatch {
                    expected: d,
                    found: c.len(),
                });
            }
            for x in c {
                linalg::same_ring(ring, x.ring())?;
            }
        }
        if linalg::rank(ring, &columns)? != d {
            return Err(Error::NotInvertible { index: None });
        }
        Ok(Flag { ring, columns })
    }

    /// The flag `gE` in `k^dim`, `dim ≥ window(g)`.
    pub fn from_matrix(g: &ColMatrix, dim: usize) -> Result<Flag> {
        if dim < g.window() {
            return Err(Error::DimensionMismatch {
                expected: g.window(),
                found: dim,
            });
        }
        let rows = g.block_rows(dim);
        let columns = (0..dim).map(|j| rows.iter().map(|r| r[j].clone()).collect()).collect();
        Flag::from_columns(g.ring(), columns)
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn dim(&self) -> usize {
        self.columns.len()
    }

    pub fn columns(&self) -> &[Vec<Scalar>] {
        &self.columns
    }

    /// The matrix whose columns span the flag.
    pub fn matrix(&self) -> Result<ColMatrix> {
        let d = self.dim();
        ColMatrix::from_rows(
            self.ring,
            (0..d).map(|i| (0..d).map(|j| self.columns[j][i].clone()).collect()).collect(),
        )
    }

    /// `F_i = span(first i columns)`.
    pub fn step(&self, i: usize) -> Result<Subspace> {
        Subspace::span(self.ring, self.dim(), &self.columns[..i])
    }

    /// `F_0, ..., F_D`.
    pub fn steps(&self) -> Result<Vec<Subspace>> {
        (0..=self.dim()).map(|i| self.step(i)).collect()
    }

    /// The chain filtration `F_0 ⊂ ... ⊂ F_D`.
    pub fn filtration(&self) -> Result<Filtration> {
        Filtration::new(IndexPoset::Chain(self.dim() + 1), self.steps()?)
    }

    /// `g · F`.
    pub fn act(&self, g: &ColMatrix) -> Result<Flag> {
        linalg::same_ring(self.ring, g.ring())?;
        if g.window() > self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: g.window(),
            });
        }
        let moved = g.multiply(&self.matrix()?)?;
        Flag::from_matrix(&moved, self.dim())
    }

    /// Same chain of subspaces, regardless of the chosen basis.
    pub fn same_flag(&self, other: &Flag) -> Result<bool> {
        check_same_space(self, other)?;
        Ok(self.steps()? == other.steps()?)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(FlagForm {
            field: Some(self.ring),
            columns: self
                .columns
                .iter()
                .map(|c| c.iter().map(|x| x.to_string()).collect())
                .collect(),
        })
        .expect("flag serializes")
    }

    /// Reads `{"field": .., "columns": [[..], ..]}`.
    pub fn from_json(value: &serde_json::Value, default_ring: Option<Ring>) -> Result<Flag> {
        let form: FlagForm =
            serde_json::from_value(value.clone()).map_err(|e| Error::Parse(e.to_string()))?;
        let ring = form
            .field
            .or(default_ring)
            .ok_or_else(|| Error::Parse("flag has no \"field\"".into()))?;
        let columns = form
            .columns
            .iter()
            .map(|c| c.iter().map(|x| Scalar::parse(ring, x)).collect::<Result<Vec<_>>>())
            .collect::<Result<Rows>>()?;
        Flag::from_columns(ring, columns)
    }
}

impl fmt::Display for Flag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.matrix() {
            Ok(m) => write!(f, "flag({m})"),
            Err(_) => write!(f, "flag(?)"),
        }
    }
}

fn check_same_space(f: &Flag, e: &Flag) -> Result<()> {
    linalg::same_ring(f.ring, e.ring)?;
    if f.dim() != e.dim() {
        return Err(Error::DimensionMismatch {
            expected: e.dim(),
            found: f.dim(),
        });
    }
    Ok(())
}

/// `w_{F,E}` through the cell of the transition matrix `G_E⁻¹ G_F`.
pub fn relative_position_by_decomposition(f: &Flag, e: &Flag) -> Result<Permutation> {
    check_same_space(f, e)?;
    let ge_inv = linalg::inverse(e.ring, &e.matrix()?.block_rows(e.dim()))?;
    let transition = ColMatrix::from_rows(e.ring, ge_inv)?.multiply(&f.matrix()?)?;
    coset_label(&transition)
}

/// `w_{F,E}` from `d(i, j) = dim(F_i ∩ E_j)`: `w(i)` is the unique `j`
/// where the mixed second difference of `d` is 1.
pub fn relative_position_by_dimensions(f: &Flag, e: &Flag) -> Result<Permutation> {
    check_same_space(f, e)?;
    let n = f.dim();
    let (fs, es) = (f.steps()?, e.steps()?);
    let mut d = vec![vec![0usize; n + 1]; n + 1];
    for i in 1..=n {
        for j in 1..=n {
            d[i][j] = fs[i].intersection(&es[j])?.dim();
        }
    }
    let mut line = Vec::with_capacity(n);
    for i in 1..=n {
        let hits: Vec<usize> = (1..=n)
            .filter(|&j| d[i][j] + d[i - 1][j - 1] == d[i - 1][j] + d[i][j - 1] + 1)
            .collect();
        match hits.as_slice() {
            [j] => line.push(*j),
            _ => {
                return Err(Error::InternalContradiction(format!(
                    "row {i} of the intersection table jumps at {hits:?}"
                )))
            }
        }
    }
    Permutation::from_one_line(&line)
}

/// Relative position `w_{F,E}`, computed by both routes; they must agree.
pub fn relative_position(f: &Flag, e: &Flag) -> Result<Permutation> {
    let by_cells = relative_position_by_decomposition(f, e)?;
    let by_dims = relative_position_by_dimensions(f, e)?;
    if by_cells != by_dims {
        return Err(Error::InternalContradiction(format!(
            "relative position: decomposition gives {by_cells}, dimensions give {by_dims}"
        )));
    }
    Ok(by_cells)
}

/// A gradation of the intersection filtration `F_i ∩ E_j`: `C_{(i,j)}` is a
/// complement of `F_{i−1} ∩ E_j + F_i ∩ E_{j−1}` in `F_i ∩ E_j`.
pub fn intersection_gradation(f: &Flag, e: &Flag) -> Result<GradationTable> {
    let inter = Filtration::intersection_of_flags(f, e)?;
    let cells = (0..inter.modules.len())
        .map(|x| inter.modules[x].complement_of(&inter.below(x)?))
        .collect::<Result<Vec<_>>>()?;
    Ok(GradationTable {
        poset: inter.poset,
        cells,
    })
}

/// Whether `gE_i = E_i` for all `i ≤ window(g)`.
pub fn stabilizes_standard_flag(g: &ColMatrix) -> Result<bool> {
    g.require_invertible()?;
    let n = g.window();
    let flag = Flag::from_matrix(g, n)?;
    for i in 1..=n {
        if flag.step(i)? != Subspace::standard(g.ring(), n, i) {
            return Ok(false);
        }
    }
    Ok(true)
}
