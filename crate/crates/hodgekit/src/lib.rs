//! Combinatorics of period domains: from Hodge numbers to root systems, block
//! decompositions of the graded pieces `g^{-p,p}`, Hodge triples and abelian
//! subspaces of the horizontal tangent space, each checked against an exact
//! matrix realization of the Lie algebra.

// Index loops mirror the labels k = 0..=m used throughout.
#![allow(clippy::needless_range_loop)]

pub mod abelian;
pub mod basepoint;
pub mod blocks;
pub mod error;
pub mod hodge;
pub mod matrixrep;
pub mod roots;
pub mod triples;
pub mod verify;

pub use error::{HodgeError, Result};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/hodge-numbers.md")]
    mod hodge_numbers {}
    #[doc = include_str!("../../../book/src/base-point.md")]
    mod base_point {}
    #[doc = include_str!("../../../book/src/blocks.md")]
    mod blocks {}
    #[doc = include_str!("../../../book/src/triples.md")]
    mod triples {}
    #[doc = include_str!("../../../book/src/abelian.md")]
    mod abelian {}
    #[doc = include_str!("../../../book/src/verification.md")]
    mod verification {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
