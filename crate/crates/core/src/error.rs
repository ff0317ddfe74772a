use thiserror::Error;

/// Errors raised by the geometric, algebraic and oracle layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid measure: {0}")]
    InvalidMeasure(String),

    #[error("could not parse {what} from {input:?}")]
    Parse { what: &'static str, input: String },

    #[error("scale {0} turns is at least half a turn; arc machinery needs r < pi")]
    ScaleTooLarge(String),

    #[error("measure of diameter {diameter} turns is not in the thickening at scale {scale} turns")]
    NotMember { diameter: String, scale: String },

    #[error("cover degree must be an odd positive integer, got {0}")]
    EvenCover(u64),

    #[error("subgroup order must be positive, got {0}")]
    ZeroOrder(u64),

    #[error("scales out of order: {lower} > {upper}")]
    ScaleOrder { lower: String, upper: String },

    #[error("degree must be even, got {0}")]
    OddDegree(u64),

    #[error("empty weight sequence")]
    EmptyWeights,

    #[error("coefficient {coefficient} vanishes in {field}")]
    CoefficientVanishes { coefficient: String, field: String },

    #[error("field specialization of {0} is not supported")]
    UnsupportedSpecialization(String),

    #[error("{0} is not a prime")]
    NotPrime(u64),

    #[error("{d} does not divide {n} (or is smaller than 2)")]
    NotDivisor { n: usize, d: usize },

    #[error("filtration on {n} points needs at least 3 points and at most 64")]
    PointCount { n: usize },

    #[error("filtration would hold {needed} simplices, over the budget of {budget}")]
    BudgetExceeded { needed: u128, budget: u128 },

    #[error("invalid join point: {0}")]
    InvalidJoinPoint(String),
}

pub type Result<T> = std::result::Result<T, Error>;
