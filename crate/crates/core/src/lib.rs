//! Finite combinatorics around homomorphisms from regular trees into
//! Kneser-type graphs.
//!
//! * [`graph`]: dense graphs, girth, power graphs, greedy routines, IO.
//! * [`kneser`]: Kneser and Schrijver graphs and their closed-form invariants.
//! * [`hom`]: homomorphism search, chromatic number, exact fractional
//!   chromatic number, multi-fold colorings.
//! * [`tree`]: free-product words, truncated trees, the ball-labeling target
//!   graph and the multi-fold coloring pipeline for bounded-degree graphs.
//! * [`g0`]: finite-depth model of the dense-flip graph on binary strings.
//! * [`cert`]: hypothesis checks for the odd-girth/size witnesses and the
//!   reproduction suite.

pub mod bitset;
pub mod cert;
pub mod error;
pub mod g0;
pub mod graph;
pub mod hom;
pub mod kneser;
pub mod rational;
pub mod tree;

pub use bitset::BitSet;
pub use error::{Error, Result};
pub use graph::{Coloring, Girth, Graph, GraphBuilder, VertexSet};
pub use rational::Rational;
