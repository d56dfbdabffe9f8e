use thiserror::Error;

/// Errors raised by the workbench.
///
/// Variants fall in three groups: malformed input (shapes, names, quivers),
/// hard enumeration caps, and failed internal verifications. The last group
/// never signals a valid state; it means an algebraic identity that must hold
/// was observed to fail.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("field mismatch: {0} vs {1}")]
    FieldMismatch(u32, u32),
    #[error("{0} is not a supported prime modulus")]
    NotPrime(u32),
    #[error("entry {value} is not reduced modulo {p}")]
    UnreducedEntry { value: u64, p: u32 },
    #[error("representations live over different quivers")]
    QuiverMismatch,
    #[error("invalid quiver: {0}")]
    InvalidQuiver(String),
    #[error("acyclicity violated: the quiver contains a directed cycle through {0}")]
    Cyclic(String),
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("unknown arrow `{0}`")]
    UnknownArrow(String),
    #[error("invalid representation: {0}")]
    InvalidRepresentation(String),
    #[error("not a morphism: {0}")]
    NotAMorphism(String),
    #[error("decomposition cap exceeded: {0}")]
    DecompositionCap(String),
    #[error("enumeration cap exceeded: {what} needs {needed} elements, cap is {cap}")]
    EnumerationCap { what: String, needed: u128, cap: u64 },
    #[error("morphism is not an epimorphism")]
    NotEpi,
    #[error("object is not projective")]
    NotProjective,
    #[error("subspace is not stable under the algebra action")]
    NotStable,
    #[error("object has a projective direct summand; strip it first")]
    ProjectiveSummand,
    #[error("object does not lie in add of the given object")]
    NotInAdd,
    #[error("short exact sequence does not match the extension space: {0}")]
    SequenceMismatch(String),
    #[error("no lift exists: {0}")]
    NoLift(String),
    #[error("quiver is not of Dynkin type")]
    NotDynkin,
    #[error("verification failed: {0}")]
    Verification(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn verify(cond: bool, what: impl FnOnce() -> String) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::Verification(what()))
    }
}
