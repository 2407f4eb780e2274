//! Finite algebraic structures for concurrency semantics: relational monoids
//! and their lax n-fold variants, catoids and n-catoids, word and pomset
//! models, partially ordered monoids, and modules/algebras/coalgebras over
//! the boolean semiring.
//!
//! Everything here is desk-scale and exhaustively checkable: carriers are
//! explicit finite sets, axioms are decidable law checks that report
//! witnesses on failure, and the enumeration routines are deterministic so
//! counterexamples are reproducible across runs.

pub mod catoid;
pub mod coalg;
pub mod concur;
pub mod error;
pub mod format;
pub mod poset;
pub mod posetmon;
pub mod proto;
pub mod relmon;
pub mod report;
pub mod semilattice;

pub use error::Error;
pub use report::{LawCheck, Report, Verdict};
