//! Algebraic shifting of simplicial complexes over exact rational arithmetic.
//!
//! The crate computes with finite simplicial complexes on `[n] = {1, .., n}`
//! and their Stanley-Reisner ideals. Around that bridge it provides:
//!
//! * [`simplex`] — face combinatorics, `f`/`h`-vectors, shiftedness, reduced
//!   homology over the rationals, enumeration and sampling of shifted complexes;
//! * [`monom`] — monomials, degree-refining term orders (lex / revlex / plug-in),
//!   the squarefree operator and its inverse, monomial ideals with stability
//!   predicates, Hilbert data and ideal comparison;
//! * [`betti`] — Eliahou-Kervaire Betti tables for (squarefree) strongly stable
//!   ideals, `B`-sequences by three independent routes, and the `B -> k` recursion;
//! * [`usli`] — universal squarefree lexsegment ideals: construction from a
//!   `k`-sequence, recognition, almost-USLIs and facet formulas;
//! * [`gin`] — an exact Buchberger engine over `BigRational`, seeded generic
//!   upper-triangular coordinate changes, certified generic initial ideals and a
//!   degreewise Gaussian oracle;
//! * [`shift`] — the shifting operators `delta_rl` and `delta_lex`, orbit
//!   iteration with stabilization certificates, the analytic limit USLI, the
//!   Pardue witness monomial, and the shifting-axioms verifier.
//!
//! Everything is exact: coefficients are arbitrary-precision rationals and all
//! reported equalities are integer/monomial identities, not approximations.

pub mod betti;
pub mod error;
pub mod gin;
mod linalg;
pub mod monom;
pub mod shift;
pub mod simplex;
pub mod usli;
mod util;

pub use error::{Error, Result};
