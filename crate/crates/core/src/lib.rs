//! Exact computation of stable rational Betti numbers of universal
//! PGL/SL/GL character varieties over moduli of curves.
//!
//! The crate is organized around the pipeline
//!
//! ```text
//! partition  ->  tensor   ->  graded          ->  oracle             ->  assembler
//! (indexing)    (LR / NL)    (coefficient        (stable twisted        (Betti series,
//!                             systems)            cohomology)            reports)
//! ```
//!
//! - [`partition`]: integer partitions, enumeration, conjugation.
//! - [`series`]: degree-truncated Poincaré series over big integers.
//! - [`tensor`]: Littlewood–Richardson coefficients and the stable symplectic
//!   tensor rule (Newell–Littlewood numbers), with a persistent memo cache.
//! - [`graded`]: graded sums of shifted symplectic irreducibles and the
//!   coefficient systems for each group.
//! - [`oracle`]: stable cohomology of the moduli of curves (closed or
//!   once-marked) with irreducible symplectic coefficients.
//! - [`assembler`]: the final Betti series, the independent rank-2 closed
//!   forms, and validity-range bookkeeping.
//! - [`figure1`]: the reference table of published Betti numbers embedded at
//!   build time, used by the verification command.
//! - [`validation`]: brute-force oracles (tableau enumeration, Weyl dimension
//!   formula, exact character evaluation) used by the test suite.

pub mod assembler;
pub mod cache;
pub mod error;
pub mod figure1;
pub mod graded;
pub mod oracle;
pub mod partition;
pub mod series;
pub mod tensor;
pub mod validation;

pub use assembler::{betti_report, betti_series, closed_form_n2, min_valid_genus, BettiReport, Group};
pub use error::{AssembleError, CoreError, OracleError, ValidationError};
pub use graded::GradedIrrepSum;
pub use oracle::{BaseSpace, ColumnOnlyOracle, StableOracle, TwistedCohomologyOracle};
pub use partition::{enumerate_partitions, Partition};
pub use series::PoincareSeries;
pub use tensor::{sp_tensor_columns, TensorRules};
