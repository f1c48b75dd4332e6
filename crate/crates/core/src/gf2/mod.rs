//! Exact GF(2) linear algebra on bit-packed words.

mod matrix;
mod permutation;
mod text;
mod vector;

pub use matrix::{BitMatrix, Echelon, RowSpace, Solution, ROW_SPACE_RANK_LIMIT};
pub use permutation::Permutation;
pub use vector::{BitVector, MAX_LEN};

pub(crate) use vector::{low_mask, reading_order_key, BitIter};
