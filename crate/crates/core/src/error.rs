use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    /// An input exceeds the desk-scale bound of the operation that received it.
    #[error("scale exceeded: {what} is {got}, limit is {limit}")]
    ScaleExceeded {
        what: &'static str,
        got: u128,
        limit: u128,
    },

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("invalid vertex function: {0}")]
    InvalidFunction(String),

    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("no cubic graph exists on {0} vertices (odd order)")]
    NoCubicGraph(usize),

    #[error("not cubic: vertex {vertex} has degree {degree}")]
    NotCubic { vertex: usize, degree: usize },

    #[error("not connected: graph has {components} components")]
    NotConnected { components: usize },

    /// g = f with odd total: no admissible h exists and the property holds emptily.
    #[error("vacuous instance: g = f with odd total {total}, no admissible h exists")]
    VacuousInstance { total: u64 },

    #[error("gadget precondition violated at vertex {vertex}: f = {f} exceeds degree {degree}")]
    GadgetPrecondition { vertex: usize, f: u32, degree: usize },

    #[error("not a factor of the host graph: {0}")]
    NotAFactor(String),

    #[error("not a triangle lift built by this library: {0}")]
    NotALift(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub(crate) fn scale(what: &'static str, got: impl Into<u128>, limit: impl Into<u128>) -> Result<()> {
    let (got, limit) = (got.into(), limit.into());
    if got > limit {
        Err(Error::ScaleExceeded { what, got, limit })
    } else {
        Ok(())
    }
}
