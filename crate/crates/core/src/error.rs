use thiserror::Error;

/// Library-wide error type. Variants map onto the failure classes the
/// operations distinguish: structural preconditions, parameter domains,
/// capability limits of a mode, numeric ambiguity, code integrity, and
/// exact infeasibility (which carries its witness).
#[derive(Debug, Error)]
pub enum Error {
    #[error("structure error: {0}")]
    Structure(String),

    #[error("parameter error: {0}")]
    Parameter(String),

    #[error("capability error: {0}")]
    Capability(String),

    #[error("ambiguous numeric multiplicity at {lambda}: cluster counts {counts:?}")]
    AmbiguousMultiplicity { lambda: f64, counts: Vec<usize> },

    #[error("code integrity error: {0}")]
    CodeIntegrity(String),

    /// Exact infeasibility of a Gram matrix. When the cause is a failed PSD
    /// check, `witness` holds an exact rational vector x with x'Mx < 0,
    /// rendered as fraction strings.
    #[error("infeasible: {reason}")]
    Infeasible {
        reason: String,
        witness: Option<Vec<String>>,
    },

    #[error("search budget exceeded: {0}")]
    Budget(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("verification failure: {0}")]
    Verification(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
