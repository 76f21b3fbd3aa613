//! Exact arithmetic for integer partitions, content tabloids and Schur
//! polynomial specializations, with verifiers for the dimension identities
//! relating z-asymmetric partitions to their conjugates.
//!
//! Everything is computed over arbitrary-precision integers. Closed-form
//! products are cross-checked against brute-force enumeration wherever the
//! enumeration is small enough.

pub mod cli;
pub mod content;
pub mod error;
pub mod laurent;
pub mod multivariate;
pub mod partition;
pub mod report;
pub mod schur;
pub mod tabloid;
pub mod verify;

pub use content::{ContentSequence, DiagonalLabel};
pub use error::{Error, Result};
pub use laurent::LaurentPolynomial;
pub use multivariate::TruncatedMultiPolynomial;
pub use partition::{CellStats, FrobeniusCoords, Partition};
pub use report::{Status, SweepSummary, VerificationReport};
pub use schur::{Dimension, Ssyt};
pub use tabloid::{Tabloid, TabloidKind};

/// Default limit on the number of objects any enumeration may produce.
pub const DEFAULT_CAP: u64 = 10_000_000;
