//! Exact evaluation of two-point extended connected Gromov–Witten invariants
//! of the symmetric product stacks `[Sym^n(A_r)]`, together with the double
//! Hurwitz numbers they are built from and a WDVV elimination solver for
//! three-point functions of `[Sym^3(A_1)]`.
//!
//! All arithmetic is exact. Equivariant quantities live in `Q(t1, t2)`
//! ([`exactalg::EqScalar`]); generating functions are truncated series.

pub mod argeom;
pub mod cli;
pub mod error;
pub mod exactalg;
pub mod hurwitz;
pub mod invariants;
pub mod orbibasis;
pub mod partitions;
pub mod wdvv;

pub use error::{Error, Result};
pub use exactalg::{EqScalar, Rational, TruncatedSeries};
