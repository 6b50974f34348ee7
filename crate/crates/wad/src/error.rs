/// Crate-wide error type.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("operands use different alphabets")]
    AlphabetMismatch,
    #[error("n-gram scales differ: {left} vs {right}")]
    ScaleMismatch { left: usize, right: usize },
    #[error("symbol {0:?} is not in the alphabet")]
    UnknownSymbol(char),
    #[error("symbol rank {rank} is out of range for an alphabet of size {size}")]
    RankOutOfRange { rank: u32, size: usize },
    #[error("invalid alphabet: {0}")]
    InvalidAlphabet(String),
    #[error("rho must be positive, got {0}")]
    NonPositiveRho(f64),
    #[error("rho must lie in (0, 1), got {0}")]
    RhoNotContractive(f64),
    #[error("truncation requires rho < 1: no tail bound exists at rho = {0}")]
    TruncationWithoutTailBound(f64),
    #[error("truncation scale max_n must be at least 1")]
    ZeroTruncation,
    #[error("suffix structure requires nonempty operands")]
    EmptyOperand,
    #[error("input length {len} exceeds the naive-evaluator cap {cap}")]
    LengthCapExceeded { len: usize, cap: usize },
    #[error("distance {0} is not attainable as a distance to the empty string")]
    UnattainableDistance(f64),
    #[error("recovered length {0} is not within 1e-6 of an integer")]
    LengthNotIntegral(f64),
    #[error("edit bound is undefined for |P| = |Q| = 0")]
    DegenerateEdit,
    #[error("stutter bound requires |P1| + |Q| + |P2| >= 1")]
    DegenerateStutter,
    #[error("measure sketches have different depths: {left} vs {right}")]
    DepthMismatch { left: usize, right: usize },
    #[error("string of length {len} is too short for an empirical sketch of depth {depth}")]
    DepthExceedsLength { len: usize, depth: usize },
    #[error("sketch fails consistency check: worst violation {0}")]
    InconsistentSketch(f64),
    #[error(
        "theta recovery capped at n <= {max_n} and |alphabet| <= {max_alphabet} \
         (requested n = {n}, |alphabet| = {alphabet})"
    )]
    RecoveryCapExceeded {
        n: usize,
        max_n: usize,
        alphabet: usize,
        max_alphabet: usize,
    },
    #[error("cannot reach eps = {target}: best achieved upper bound is {achieved}")]
    ApproxInfeasible { target: f64, achieved: f64 },
    #[error("label arrays have different lengths: {left} vs {right}")]
    LabelLengthMismatch { left: usize, right: usize },
    #[error("invalid distance matrix: {0}")]
    InvalidMatrix(String),
    #[error("distance matrix needs at least {need} points, got {got}")]
    MatrixTooSmall { need: usize, got: usize },
    #[error("dataset error at line {line}: {message}")]
    Dataset { line: usize, message: String },
    #[error("invalid synthesis config: {0}")]
    InvalidSynthConfig(String),
    #[error("sketch format error at line {line}: {message}")]
    SketchFormat { line: usize, message: String },
    #[error("unknown distance {name:?}; available: {roster}")]
    UnknownDistance { name: String, roster: String },
    #[error("invalid distance parameter: {0}")]
    InvalidDistanceParam(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Csv(#[from] csv::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
