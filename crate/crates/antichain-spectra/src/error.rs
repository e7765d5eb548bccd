use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// A precondition on the arguments does not hold.
    #[error("domain: {0}")]
    Domain(String),

    /// The arguments are valid but fall outside the range a closed form
    /// covers (for example sigma(t, k) with t > k + 1).
    #[error("range: {0}")]
    Range(String),

    /// The request asks for something certified impossible; the message
    /// carries the certifying reason (a gap value, a non-size proof, ...).
    #[error("not achievable: {0}")]
    NotAchievable(String),

    /// An enumeration would exceed the configured budget.
    #[error("budget exceeded: need {required}, budget {budget}")]
    Budget { required: u128, budget: u128 },

    #[error("parse: {0}")]
    Parse(String),

    #[error("io: {0}")]
    Io(#[from] std::io::Error),
}

impl Error {
    /// Process exit code for the CLI: 2 = unachievable or invalid request,
    /// 3 = budget refusal, 4 = parse/io failure.
    pub fn exit_code(&self) -> u8 {
        match self {
            Error::Domain(_) | Error::Range(_) | Error::NotAchievable(_) => 2,
            Error::Budget { .. } => 3,
            Error::Parse(_) | Error::Io(_) => 4,
        }
    }

    /// Stable machine-readable tag used in the CLI's JSON failure payload.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::Domain(_) => "domain",
            Error::Range(_) => "range",
            Error::NotAchievable(_) => "not_achievable",
            Error::Budget { .. } => "budget",
            Error::Parse(_) => "parse",
            Error::Io(_) => "io",
        }
    }
}
