use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("no such point: {0}")]
    NoSuchPoint(String),
    #[error("duplicate point identifier: {0}")]
    DuplicatePoint(String),
    #[error("reflexive cover ({0}, {0})")]
    ReflexiveCover(String),
    #[error("relation contains a cycle through {0}")]
    Cycle(String),
    #[error("({0}, {1}) is not a covering pair")]
    NotCovering(String, String),
    #[error("empty block")]
    EmptyBlock,
    #[error("point {0} already exists")]
    PointCollision(String),
    #[error("unknown block: {0}")]
    UnknownBlock(String),
    #[error("block connections are cyclic (through {0})")]
    CyclicPlan(String),

    #[error("no such vertex: {0}")]
    NoSuchVertex(String),
    #[error("self-loop at vertex {0}")]
    SelfLoop(String),
    #[error("duplicate edge ({0}, {1}, {2})")]
    DuplicateEdge(String, String, u32),
    #[error("edge colors must be positive")]
    ZeroColor,

    #[error("permutation is not a bijection of 0..{0}")]
    NotBijective(usize),
    #[error("generators act on different sets ({0} vs {1} points)")]
    DegreeMismatch(usize, usize),
    #[error("empty generator list")]
    NoGenerators,
    #[error("generator {0} is the identity")]
    IdentityGenerator(usize),
    #[error("generators {0} and {1} coincide")]
    DuplicateGenerator(usize, usize),
    #[error("group too large: order exceeds cap {0}")]
    GroupTooLarge(usize),
    #[error("invalid group: {0}")]
    InvalidGroup(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("unknown group spec {0:?}; expected cyclic:N, dihedral:2N, symmetric:N, klein, perm:[[..],..] or @file.json")]
    UnknownGroupSpec(String),

    #[error("oracle limit: {0} vertices (brute force handles at most {1})")]
    OracleLimit(usize, usize),
    #[error("engine budget exceeded: space has {points} points, budget is {budget}")]
    BudgetExceeded { points: usize, budget: usize },

    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("{0}")]
    Io(#[from] std::io::Error),
}
