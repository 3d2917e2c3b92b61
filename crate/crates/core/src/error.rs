use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("characteristic {0} is excluded (must not be 2 or 3)")]
    CharTwoOrThree(u64),
    #[error("{0} is already a square in the base field")]
    SquareDiscriminant(String),
    #[error("malformed field spec `{0}`")]
    BadFieldSpec(String),
    #[error("malformed field element `{0}`")]
    BadElement(String),
    #[error("malformed pencil `{input}`: {reason}")]
    BadPencil { input: String, reason: String },
    #[error("both forms are zero")]
    BothZero,
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),
    #[error("expected a form of degree {expected}, got degree {actual}")]
    WrongDegree { expected: usize, actual: usize },
    #[error("zero form")]
    ZeroForm,
    #[error("generators are linearly dependent")]
    LinearlyDependent,
    #[error("coordinates do not satisfy the Plücker quadric")]
    NotOnPluckerQuadric,
    #[error("zero quartic")]
    ZeroQuartic,
    #[error("unstable pencil: I' = J = 0 has no image in the quotient")]
    UnstableNoImage,
    #[error("operands live over different fields")]
    FieldMismatch,
    #[error("no primitive {0}-th root of unity in this field")]
    MissingRootOfUnity(u32),
    #[error("operation requires a finite field")]
    InfiniteField,
    #[error("matrix is not an element of the distinguished S4")]
    NotInS4,
    #[error("parameter at infinity is not allowed here")]
    InfinityParam,
    #[error("parameter is a pole of the change of variables")]
    PoleParam,
    #[error("pencil is not stable")]
    NotStable,
    #[error("no Wall normal form is rational over this field")]
    NotFoundOverThisField,
    #[error("pencil matches none of the orbit cases")]
    UnclassifiableInput,
    #[error("class function is not a character: {0}")]
    NotACharacter(String),
    #[error("not a subgroup of the ambient group")]
    NotASubgroup,
    #[error("singular matrix")]
    Singular,
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}
