//! Certified lower bounds on the information ratio of secret-sharing access
//! structures, computed from linear programs over entropy-vector coordinates.
//!
//! The toolkit assembles, for an access structure on `r` parties, the
//! minimization program
//!
//! ```text
//! min x
//!   x >= h_{i}                    for every share i
//!   elemental Shannon inequalities over all 2^n - 1 coordinates
//!   scheme equalities (secret determined by authorized sets,
//!                      independent of unauthorized ones)
//!   h_{secret} = 1
//!   copy-lemma equalities for each ground-set extension
//!   optional symmetry equalities or orbit quotient
//! ```
//!
//! whose optimum bounds the information ratio from below. Everything is
//! exact: coefficients are arbitrary-precision rationals, the built-in
//! simplex solver pivots over rationals, and every reported bound is backed
//! by a dual certificate that [`solver::verify_certificate`] re-checks by
//! pure arithmetic.
//!
//! The crate is `no_std` (with `alloc`); IO, file formats and the command
//! line live in the companion `entrolp` crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod access;
pub mod copy;
pub mod expr;
pub mod ground;
pub mod lp;
pub mod rat;
pub mod shannon;
pub mod solver;
pub mod symmetry;

pub use access::AccessStructure;
pub use copy::CopySpec;
pub use expr::{Constraint, LinExpr, Provenance, Relation};
pub use ground::{GroundSet, SubsetMask};
pub use lp::{Certificate, LpProblem, SymmetryMode};
pub use rat::Rat;
pub use symmetry::{Group, Permutation};
