use alloc::string::String;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("malformed parameter list: {0}")]
    MalformedParams(String),
    #[error("factor ({ell}, {m}) has a parameter below 2")]
    FactorTooSmall { ell: u64, m: u64 },
    #[error("at most {max} factors are supported, got {got}")]
    TooManyFactors { max: usize, got: usize },
    #[error("characteristic {0} is neither 0 nor a prime")]
    NotPrime(u64),
    #[error("color has length {got}, expected {expected}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("color entry {0} is outside 0..=2")]
    BadColorEntry(u8),
    #[error("triple set is not anchored at the given pair of colors")]
    NotAnchored,
    #[error("layer {j} out of range 0..={max}")]
    LayerOutOfRange { j: usize, max: usize },
    #[error("k_[g,h,g] is divisible by the characteristic; D-element undefined")]
    NotInvertible,
    #[error("vertex count {count} exceeds the cap {cap}")]
    ResourceCap { count: u128, cap: usize },
    #[error("base point does not lie in the vertex set")]
    BadBasePoint,
}

pub type Result<T> = core::result::Result<T, Error>;
