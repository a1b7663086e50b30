use std::fmt;

/// Error classes for every fallible operation in the crate.
///
/// The CLI maps these onto process exit codes: domain, hypothesis and coding
/// errors are caller mistakes; resource errors mean a query would exceed the
/// configured buffer cap; internal errors signal a bug (they fire only when a
/// mathematically guaranteed event fails to materialize).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// An argument is outside the operation's domain (e.g. a 0 index into the
    /// 1-based word).
    Domain(String),
    /// A lemma or family parameter is below its floor, or a bound's
    /// denominator is nonpositive.
    Hypothesis(String),
    /// Satisfying the query would grow the word buffer past its cap.
    Resource {
        requested_letters: u64,
        cap_letters: u64,
        context: String,
    },
    /// A block fed to the pair coding was 00 or 11. `block` is 1-based.
    Coding { block: u64 },
    /// An event proved to exist did not occur within its scan cap.
    Internal(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Domain(msg) => write!(f, "domain error: {msg}"),
            Error::Hypothesis(msg) => write!(f, "hypothesis error: {msg}"),
            Error::Resource {
                requested_letters,
                cap_letters,
                context,
            } => {
                write!(
                    f,
                    "resource error: {context}{}{requested_letters} letters requested, \
                     buffer cap is {cap_letters} letters",
                    if context.is_empty() { "" } else { ": " },
                )
            }
            Error::Coding { block } => {
                write!(f, "coding error at block {block}: block is not 01 or 10")
            }
            Error::Internal(msg) => write!(f, "internal inconsistency: {msg}"),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
