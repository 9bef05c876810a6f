use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("modulus {0} is not prime")]
    NonPrimeModulus(u64),
    #[error("t^2+t+2 splits over GF({0}); the prime field already contains its roots")]
    ReducibleModulus(u64),
    #[error("operands belong to different fields")]
    MixedFields,
    #[error("operands belong to different polynomial rings")]
    MixedRings,
    #[error("division by zero")]
    DivisionByZero,
    #[error("the field has no root of t^2+t+2")]
    NoKleinRoot,
    #[error("operation requires a finite field")]
    InfiniteField,
    #[error("the criterion is stated for characteristic != 3")]
    CharacteristicThree,
    #[error("operation not available in characteristic {0}: {1}")]
    UnsupportedCharacteristic(u64, String),
    #[error("expected exactly 3 minimal generators, found {0}")]
    NotThreeGenerated(usize),
    #[error("generators do not share a single degree")]
    MixedGeneratorDegrees,
    #[error("not a Hilbert-Burch presentation: {0}")]
    NotHilbertBurch(String),
    #[error("resolution shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("quotient ring does not have dimension 1")]
    DimensionNot1,
    #[error("field {field} does not contain {n} distinct {n}-th roots of unity")]
    MissingRootsOfUnity { n: u32, field: String },
    #[error("incompatible module twists")]
    TwistMismatch,
    #[error("no direct-sum decomposition available: {0}")]
    DecompositionImpossible(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("{0}")]
    Invalid(String),
}
