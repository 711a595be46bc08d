use core::fmt;

/// Machine-readable reason a bound or operation does not apply to its input.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Reason {
    CompleteGraph,
    Disconnected,
    NotRegular,
    ZeroEigenvalue,
    NotExpander,
    TrivialExpansion,
    NotBipartite,
    Unbalanced,
    UniversalInSecondSet,
    UniversalVertex,
    CompleteBipartite,
    FamilyRefuted,
    EmptyComplement,
    InvalidParameters,
}

impl Reason {
    pub const fn as_str(self) -> &'static str {
        match self {
            Reason::CompleteGraph => "complete_graph",
            Reason::Disconnected => "disconnected",
            Reason::NotRegular => "not_regular",
            Reason::ZeroEigenvalue => "zero_eigenvalue",
            Reason::NotExpander => "not_expander",
            Reason::TrivialExpansion => "t_equals_one",
            Reason::NotBipartite => "not_bipartite",
            Reason::Unbalanced => "unbalanced",
            Reason::UniversalInSecondSet => "universal_in_second_set",
            Reason::UniversalVertex => "universal_vertex",
            Reason::CompleteBipartite => "complete_bipartite",
            Reason::FamilyRefuted => "family_refuted",
            Reason::EmptyComplement => "empty_complement",
            Reason::InvalidParameters => "invalid_parameters",
        }
    }
}

impl fmt::Display for Reason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("vertex count {n} outside 1..={max}")]
    VertexCount { n: usize, max: usize },
    #[error("vertex {vertex} out of range for n = {n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("vertex set must be nonempty")]
    EmptySet,
    #[error("{what} = {value} out of range")]
    OutOfRange { what: &'static str, value: i64 },
    #[error("budget exceeded: {what} needs {needed}, limit {limit}")]
    Budget {
        what: &'static str,
        needed: u64,
        limit: u64,
    },
    #[error("not applicable: {0}")]
    NotApplicable(Reason),
    #[error("interval endpoints are not pairwise distinct")]
    DuplicateEndpoint,
    #[error("interval with left endpoint after right endpoint at vertex {0}")]
    ReversedInterval(usize),
    #[error("not a permutation of 0..{0}")]
    NotPermutation(usize),
    #[error("matrix is not symmetric")]
    NonSymmetric,
    #[error("eigensolver did not converge after {0} sweeps")]
    NoConvergence(usize),
    #[error("infeasible model parameters: {0}")]
    InfeasibleModel(&'static str),
}

impl Error {
    pub fn is_budget(&self) -> bool {
        matches!(self, Error::Budget { .. })
    }
}

impl From<Reason> for Error {
    fn from(r: Reason) -> Self {
        Error::NotApplicable(r)
    }
}

pub type Result<T> = core::result::Result<T, Error>;
