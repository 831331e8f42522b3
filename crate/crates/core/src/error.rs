use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("{what} = {value} is outside the supported range {range}")]
    InputRange {
        what: &'static str,
        value: u64,
        range: &'static str,
    },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    #[error("division by zero in a finite field")]
    DivisionByZero,
    #[error("element is not fixed by the Frobenius map and does not lie in the base field")]
    NotInBaseField,
    #[error("polynomial division left a nonzero remainder")]
    RemainderNonzero,
    #[error("check polynomial must be a proper factor of x^n - 1 (degree {degree}, n = {n})")]
    ImproperCheckPolynomial { degree: usize, n: usize },
    #[error("message has length {got}, the code dimension is {expected}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("gcd(n,q) ≠ 1 (n = {n}, q = {q})")]
    NotCoprime { n: u64, q: u64 },
    #[error("rad(n) ∤ q−1 (n = {n}, rad(n) = {radical}, q = {q})")]
    OutOfRegime { n: u64, q: u64, radical: u64 },
    #[error("case mismatch: routine expects the {expected} case")]
    CaseMismatch { expected: &'static str },
    #[error("inconsistent parameters: {0}")]
    InconsistentParameters(String),
    #[error("degenerate denominator a^{index} = a^(q*{index}) while building the lambda set")]
    DegenerateDenominator { index: u64 },
    #[error("coset oracle needs an extension of degree {degree}, above the cap {cap}")]
    OracleOutOfRange { degree: u64, cap: u64 },
    #[error("code has q^k = {codewords} codewords, above the enumeration cap {cap}")]
    CapExceeded { codewords: String, cap: u64 },
    #[error("probability {0} outside [0, 1]")]
    ProbabilityRange(f64),
    #[error("cannot parse polynomial {input:?}: {reason}")]
    Parse { input: String, reason: String },
    #[error("binary channel requires q = 2 (got q = {0})")]
    ChannelMismatch(u64),
}

pub type Result<T> = std::result::Result<T, Error>;
