//! Exact state-closed (self-similar) representations of the wreath products
//! `G_{p,d} = C_p wr Z^d` on rooted trees.
//!
//! The library works entirely in exact arithmetic over GF(p). Group elements
//! of `G_{p,d}` are pairs of a Laurent polynomial (the lamp configuration,
//! written additively) and an exponent vector (the mover). A similarity pair
//! — a finite-index subgroup together with a virtual endomorphism — compiles
//! into a [`engine::RepContext`], which drives wreath recursion: Schreier
//! decomposition, vertex actions, portraits, exact state closures and kernel
//! scans. Finite state closures materialize as Mealy automata with incidence
//! matrices, DOT and CSV exports.

pub mod automaton;
pub mod context;
pub mod engine;
pub mod error;
pub mod families;
pub mod ideal;
pub mod lattice;
pub mod pair;
pub mod perm;
pub mod poly;
pub mod simplicity;
pub mod verify;
pub mod wreath;

mod endo;
mod exec;

pub use context::Context;
pub use endo::{MuSpec, VirtualEndo};
pub use error::{Error, Result};
pub use lattice::Lattice;
pub use pair::SimilarityPair;
pub use poly::{ExpVec, LaurentPoly};
pub use wreath::{GeneratorWord, Letter, WreathElement};
