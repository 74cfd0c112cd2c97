//! Crate-wide error type.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {0} out of range 1..={1}")]
    VertexOutOfRange(u32, u32),
    #[error("complex is not shifted")]
    NotShifted,
    #[error("complex has no faces")]
    EmptyComplex,
    #[error("enumeration universe n = {0} exceeds the cap {1}")]
    EnumerationCap(u32, u32),
    #[error("the unit monomial would generate the unit ideal, which has no complex")]
    UnitIdeal,
    #[error("monomial {0} is not squarefree")]
    NotSquarefree(String),
    #[error("the zero ideal has no regularity")]
    ZeroIdeal,
    #[error("monomial {0} has support outside [{1}]")]
    SupportExceedsUniverse(String, u32),
    #[error("ideal is not squarefree strongly stable")]
    NotSqStronglyStable,
    #[error("ideal is not strongly stable")]
    NotStronglyStable,
    #[error("polynomial input is not homogeneous")]
    NotHomogeneous,
    #[error("h-vector must start with h_0 = 1 and have h_1 >= 0")]
    BadHVector,
    #[error("B-sequence is not realizable by a USLI: the recursion gives k_{0} = {1} < 0")]
    NotRealizable(u32, i64),
    #[error("k-sequence has no nonzero entry")]
    ZeroKSequence,
    #[error("vertex universe too small: R_d = {0} exceeds n + 1 = {1}")]
    UniverseTooSmall(u32, u32),
    #[error("generic trials disagree even after widening the coefficient range")]
    GinTrialsDisagree,
    #[error("gin output is not strongly stable: genericity or engine failure")]
    StabilityCertificate,
    #[error("gin output fails the Hilbert-function certificate at degree {0}")]
    HilbertCertificate(u32),
    #[error("squarefree image of {0} escapes the vertex universe [{1}]")]
    PhiImageEscapes(String, u32),
    #[error("term order '{0}' failed the squarefree-compatibility spot test")]
    OrderNotPhiCompatible(String),
    #[error("strict lex increase violated at orbit step {0}")]
    LexIncreaseViolated(usize),
    #[error("engine work budget exceeded: {0}")]
    BudgetExceeded(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("parse error: {0}")]
    Parse(String),
}
