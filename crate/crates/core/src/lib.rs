//! Bruhat order on finitary and infinite permutations, Bruhat cells of
//! column-finite matrices, Schubert closures and relative positions of
//! flags, all over exact scalars.

#![allow(clippy::needless_range_loop)]

pub mod bruhat_moves;
pub mod colmat;
pub mod decomp;
pub mod error;
pub mod flags;
pub mod linalg;
pub mod oracle;
pub mod permutation;
pub mod scalar;
pub mod schubert;

pub use bruhat_moves::{chain_toward, descent_test, going_down_step, reduce_first_difference, DescentChain, DescentStep};
pub use colmat::{ColMatrix, Elementary, IndexSet, TriangularMatrix};
pub use decomp::{bruhat_decompose, coset_label, degenerate_to_cell, BruhatFactorization, Degeneration};
pub use error::{Error, Result};
pub use flags::{relative_position, Filtration, Flag, GradationTable, IndexPoset, Subspace};
pub use permutation::{bruhat_leq, bruhat_leq_bounded, first_difference, BruhatVerdict, Permutation, TailRule};
pub use scalar::{Ring, Scalar};
pub use schubert::{closure_cover_check, y_sigma_contains, ClosureVerdict};
