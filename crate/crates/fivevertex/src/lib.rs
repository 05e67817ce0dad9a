//! Exact symbolic engine for the GL(n) asymmetric five-vertex model.
//!
//! The crate builds, entirely in exact arithmetic:
//!
//! - sparse multivariate polynomials over arbitrary-precision rationals and
//!   structured fractions with ∏(1+β·v) denominators ([`algebra`]);
//! - permutations, β-divided differences and the double β-Grothendieck
//!   polynomial family with its Cauchy/interpolation calculus ([`groth`]);
//! - the GL(n) five-vertex R-matrix, Yang–Baxter checks, monodromy-matrix
//!   operators and B-operator expansions ([`vertex`]);
//! - nested Bethe ansatz equations, transfer-matrix eigenvalues, a numeric
//!   solver, and the Vieta conversion to quantum Whitney relations
//!   ([`bethe`]).
//!
//! A narrative guide with runnable snippets lives in `book/`; the snippets
//! are compiled as doc-tests through [`book`].

pub mod algebra;
pub mod bethe;
pub mod book;
pub mod groth;
pub mod vertex;
