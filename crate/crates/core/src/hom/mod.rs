//! Exact solvers: homomorphism search, chromatic number, maximal independent
//! set enumeration and the fractional chromatic number.

mod chromatic;
mod fold;
mod fractional;
pub mod lp;
mod mis_enum;
mod search;

pub use chromatic::{chromatic_number, chromatic_number_bounded, dsatur_greedy, greedy_clique, ChromaticResult, DEFAULT_CHROMATIC_BOUND};
pub use fold::FoldColoring;
pub use fractional::{
    check_fractional_bound, fractional_chromatic_lp, fractional_chromatic_lp_capped, independence_ratio,
    kfold_from_lp, FractionalBoundReport, FractionalCertificate,
};
pub use mis_enum::{enumerate_maximal_independent_sets, enumerate_maximal_independent_sets_capped, DEFAULT_MIS_CAP};
pub use search::{find_homomorphism, HomInstance, HomOutcome, HomReport};
