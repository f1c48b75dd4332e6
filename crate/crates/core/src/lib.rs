//! Exact analysis of binary linear codes on the binary erasure channel.
//!
//! The crate computes weight, incorrigible-set, stopping-set and dead-end-set
//! enumerators for arbitrary parity-check matrices, decodes erasures both by
//! peeling and exhaustively, and builds parity-check matrices with good or
//! deliberately bad stopping behaviour.
//!
//! Everything is exact and exhaustive, so lengths are capped at 64 and the
//! subset enumerations at `n ≤ 28` (override with `STOPSET_MAX_N`).
//!
//! ```
//! use stopset_core::{catalog, stopsets};
//!
//! let h4 = catalog::matrix("H4").unwrap();
//! let s = stopsets::stopping_set_enumerator(&h4).unwrap();
//! assert_eq!(s.to_string(), "1+2x^3+24x^4+40x^5+28x^6+8x^7+x^8");
//! ```

pub mod catalog;
pub mod code;
pub mod construct;
pub mod decoder;
pub mod enumerator;
pub mod error;
pub mod gf2;
pub mod harness;
pub mod stopsets;

pub use code::{Distance, LinearCode};
pub use decoder::{DecodeOutcome, ReceivedWord, Symbol};
pub use enumerator::Enumerator;
pub use error::{Error, Result};
pub use gf2::{BitMatrix, BitVector, Permutation};
pub use stopsets::{Decomposition, StoppingDistance, StoppingProfile, Subset};
