use thiserror::Error;

/// Failures shared by every module.
///
/// Infeasible but well-posed questions (no partitions, probability zero)
/// are answered normally; these variants are for inputs outside an
/// operation's domain or for work that would exceed a configured cap.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("series has zero constant term and cannot be inverted")]
    SingularSeries,
    #[error("monomial of total degree {degree} lies beyond truncation bound {bound}")]
    OutOfBound { degree: u64, bound: u32 },
    #[error("exponent overflow")]
    ExponentOverflow,
    #[error("{what}: requested {requested} exceeds cap {cap}")]
    CapExceeded {
        what: &'static str,
        requested: u64,
        cap: u64,
    },
    #[error("domain error: {0}")]
    Domain(String),
    #[error("rejected: {0}")]
    Rejected(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Domain(msg.into()))
}

pub(crate) fn check_cap(what: &'static str, requested: u64, cap: u64) -> Result<()> {
    if requested > cap {
        Err(Error::CapExceeded {
            what,
            requested,
            cap,
        })
    } else {
        Ok(())
    }
}
