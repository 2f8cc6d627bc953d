//! Hypothesis checks for the size/odd-girth witnesses, exact arithmetic
//! behind the measurable chromatic bounds, and the reproduction battery.

mod arithmetic;
mod repro;
mod witness;

pub use arithmetic::{corollary14_arithmetic, ArithmeticCheck, ArithmeticReport};
pub use repro::{run_reproduction_suite, standard_corpus, CheckOutcome, Profile, ReproReport, Status};
pub use witness::{
    corollary_step, corollary_witness_search, hyperfinite_witness_check, size_bound, CorollarySearchResult,
    CorollaryStep, WitnessInequalities, WitnessReport,
};
