use thiserror::Error;

/// Errors produced across the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("bad parameters: {0}")]
    BadParams(String),
    #[error("invalid graph: {0}")]
    InvalidGraph(String),
    #[error("{what} exceeds cap: {size} > {cap}")]
    CapExceeded { what: String, size: u128, cap: u128 },
    #[error("graph has {n} vertices, above the exact-search bound {bound}")]
    SizeLimit { n: usize, bound: usize },
    #[error("greedy coloring needs more than {palette} colors (vertex {vertex})")]
    PaletteTooSmall { vertex: usize, palette: usize },
    #[error("vertex order is not a permutation of 0..{0}")]
    BadOrder(usize),
    #[error("word is not reduced: {0}")]
    NotReduced(String),
    #[error("no homomorphism: {0}")]
    NoHom(String),
    #[error("odd cycle of length {length} is shorter than {required}")]
    ShortOddCycle { length: usize, required: usize },
    #[error("maximum degree {found} exceeds {allowed}")]
    DegreeTooHigh { found: usize, allowed: usize },
    #[error("invalid certificate: {0}")]
    CertificateInvalid(String),
    #[error("infeasible: {0}")]
    Infeasible(String),
    #[error("linear program is unbounded")]
    Unbounded,
    #[error("not found: {0}")]
    NotFound(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn cap_check(what: &str, size: u128, cap: u128) -> Result<()> {
    if size > cap {
        Err(Error::CapExceeded {
            what: what.to_string(),
            size,
            cap,
        })
    } else {
        Ok(())
    }
}
