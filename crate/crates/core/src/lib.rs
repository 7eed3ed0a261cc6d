//! Exact computations with the integral Burau representation of the braid
//! groups and its congruence subgroups.
//!
//! The crate is organized bottom-up:
//!
//! * [`braid`]: braid words, permutations, linking numbers, strand deletion
//!   and an exact word-problem oracle;
//! * [`laurent`] and [`matrix`]: exact Laurent polynomial and integer matrices;
//! * [`burau`]: the unreduced Burau representation, its value at t = -1 and
//!   the change of coordinates into the symplectic group;
//! * [`symplectic`]: transvections, the mod-2 symplectic Lie algebra and the
//!   level-two generating sets;
//! * [`finite_group`]: breadth-first closure of matrix groups over ℤ/2, ℤ/4, ℤ/8;
//! * [`oracles`]: membership tests for the level-2 and level-4 congruence
//!   subgroups and the square subgroup of the pure braid group;
//! * [`verify`]: the verification suite driven by the `braidcong` binary.

pub mod braid;
pub mod burau;
pub mod error;
pub mod finite_group;
pub mod laurent;
pub mod matrix;
pub mod oracles;
pub mod symplectic;
pub mod verify;

pub use braid::BraidWord;
pub use error::{Error, Result};
