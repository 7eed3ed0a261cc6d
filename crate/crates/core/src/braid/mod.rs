//! Braid words and their combinatorics.
//!
//! A [`BraidWord`] is the universal input: a word in σ_1 … σ_{n-1} read left
//! to right. Everything here works on words directly; the exact word problem
//! goes through the Artin action on a free group.

mod construct;
mod free;
mod strands;
mod word;

pub use construct::{
    artin_generator, artin_generators, brunnian_sample, push_generator, push_generators,
    random_word, round_twist,
};
pub(crate) use construct::{random_word_with, rng_for};
pub use free::{
    artin_images, braids_equal, is_trivial, is_trivial_by_action, is_trivial_with_limit,
    FreeGroupWord,
    DEFAULT_LENGTH_LIMIT,
};
pub use strands::{
    delete_strand, delete_strands, final_position, is_pure, linking_numbers, permutation_of,
    LinkingMatrix, Permutation,
};
pub use word::BraidWord;
