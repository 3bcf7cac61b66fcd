//! Exact super linear algebra for divided powers, Clifford and Sergeev
//! superalgebras, and the Schur superalgebras `S(m|n,d)` and `Q(n,d)`.
//!
//! All arithmetic is exact, over GF(p) for an odd prime `p` or over ℚ.

pub mod algebras;
pub mod centralizer;
pub mod classify;
pub mod duality;
pub mod error;
pub mod gamma_cat;
pub mod json;
pub mod linalg;
pub mod modules_actions;
pub mod perm;
pub mod scalars;
pub mod super_linear;
pub mod sym_action;

pub use algebras::{
    clifford, diagonal_algebra, group_algebra, minus_algebra, sergeev, wreath, AlgebraMap,
    SuperAlgebra,
};
pub use centralizer::{
    commutant, double_centralizer, schur_i, schur_ii, weight_decomposition, Commutant,
};
pub use classify::{labels_type_i, labels_type_ii, weight_compositions, Partition};
pub use duality::{cosalg_duality_check, double_dual_algebra_check, gamma_sym_pairing, Pairing};
pub use error::{Error, Result};
pub use gamma_cat::{gamma_hom, surjectivity_report, GammaHom};
pub use linalg::{Matrix, Span, SparseMatrix, Vector};
pub use modules_actions::{ModuleAction, Side};
pub use perm::Permutation;
pub use scalars::{make_field, Field, Scalar};
pub use super_linear::{Parity, SuperMap, SuperSpace};
pub use sym_action::{
    gamma_invariants, symmetric_power, GammaBasis, GammaLabel, SymmetricPower, TensorPower,
};
