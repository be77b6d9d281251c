//! Error type shared by every module of the crate.

use thiserror::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

/// Everything that can go wrong while building fields, manipulating
/// polynomials, or deriving codes.
///
/// Mixing elements from different field contexts is a programming error, not a
/// recoverable condition, and panics instead of producing a variant here.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    // --- field construction and arithmetic ---
    /// The requested characteristic is not a prime number.
    #[error("{0} is not prime")]
    NotPrime(u64),
    /// Extension degree 0 does not define a field.
    #[error("extension degree must be at least 1")]
    ZeroExtensionDegree,
    /// Fields larger than 2^16 elements are out of scope.
    #[error("field cardinality {q} exceeds the supported bound 2^16")]
    FieldTooLarge { q: u128 },
    /// Multiplicative inverse of zero.
    #[error("division by zero")]
    DivisionByZero,
    /// A conjugation-based operation was requested over a field that is not a
    /// quadratic extension (odd extension degree).
    #[error("GF({q}) is not a quadratic extension")]
    NotAQuadraticExtension { q: u64 },
    /// Malformed element or polynomial text.
    #[error("parse error: {0}")]
    ParseError(String),

    // --- polynomials and the quotient ring ---
    /// Block length m = 0 does not define a quotient ring.
    #[error("block length m must be positive")]
    ZeroLength,
    /// Two sequences that must agree in length do not.
    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },
    /// gcd(0, 0) is undefined.
    #[error("gcd(0, 0) is undefined")]
    BothZero,
    /// The operation is undefined for the zero polynomial.
    #[error("operation undefined for the zero polynomial")]
    ZeroPolynomial,
    /// Divisibility test against the zero polynomial.
    #[error("division by the zero polynomial")]
    DivisorZero,
    /// The splitting field needed for a primitive root of unity does not fit
    /// the supported field bound.
    #[error("no primitive {l}-th root of unity available within the supported field bound")]
    RootOfUnityUnavailable { l: u64 },
    /// Polynomial order is undefined when x divides the polynomial.
    #[error("polynomial has zero constant term")]
    ZeroConstantTerm,
    /// The iterative order search ran past its bound.
    #[error("polynomial order exceeds the search bound {bound}")]
    OrderBoundExceeded { bound: u64 },

    // --- matrices ---
    /// Circulant row count outside 1..=m.
    #[error("row count {nrows} out of range 1..={m}")]
    RowCountOutOfRange { nrows: usize, m: usize },
    /// Incompatible matrix/vector dimensions.
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    /// The symplectic pairing needs an even number of columns.
    #[error("symplectic pairing needs an even number of columns, got {cols}")]
    OddColumns { cols: usize },

    // --- codes ---
    /// A generator polynomial must divide x^m - 1.
    #[error("generator polynomial does not divide x^{m} - 1")]
    GeneratorNotDivisor { m: usize },
    /// A definitional gcd certificate does not hold.
    #[error("gcd certificate failed: {0}")]
    GcdConditionFailed(String),
    /// The closed-form dimension disagrees with the rank oracle; signals an
    /// invariant violation upstream.
    #[error("dimension formula disagrees with the rank oracle: formula {formula}, rank {rank}")]
    FormulaRankMismatch { formula: usize, rank: usize },
    /// Symplectic conditions need an even index l.
    #[error("symplectic form needs an even index, got l = {l}")]
    OddIndex { l: usize },
    /// The code does not have the shape a specialized condition requires.
    #[error("code shape does not match the requested condition: {0}")]
    ShapeMismatch(String),
    /// Exhaustive enumeration would exceed the word budget.
    #[error("enumeration budget exceeded: needs {required} words, budget {budget}")]
    BudgetExceeded { required: u128, budget: u64 },
    /// The allegedly smaller code is not contained in the bigger one.
    #[error("small code is not a subcode of the big code")]
    NotASubcode,
    /// CSS-style derivation needs c2 contained in c1.
    #[error("codes are not nested: c2 is not a subcode of c1")]
    NotNested,
    /// A stabilizer derivation was asked of a code that is not
    /// self-orthogonal under the required inner product.
    #[error("code is not self-orthogonal: {0}")]
    NotSelfOrthogonal(String),
    /// Requested misalignment tolerance is not below ord(f).
    #[error("misalignment tolerance {requested} reaches or exceeds ord(f) = {max}")]
    ToleranceExceeded { requested: u64, max: u64 },
    /// The nested-pair invariants of a synchronizable construction fail.
    #[error("containment chain invalid: {0}")]
    ChainInvalid(String),
    /// A per-coset exponent map is malformed.
    #[error("coset exponent map invalid: {0}")]
    CosetExponentInvalid(String),
}
