use replica_knots::bands::BandsError;
use replica_knots::catalogue::CatalogueError;
use replica_knots::exactmoments::MomentError;
use replica_knots::genfunc::GenfuncError;
use replica_knots::knotpoly::KnotpolyError;
use replica_knots::seifert::SeifertError;
use replica_knots::zeros::ZerosError;
use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Input(String),
    #[error("{0}")]
    CapExceeded(String),
    #[error("{0}")]
    NoConvergence(String),
    #[error("{0}")]
    Mismatch(String),
    #[error("{0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Input(_) => 1,
            CliError::CapExceeded(_) => 2,
            CliError::NoConvergence(_) => 3,
            CliError::Mismatch(_) => 4,
            CliError::Io(_) => 5,
        }
    }

    fn kind(&self) -> &'static str {
        match self {
            CliError::Usage(_) => "usage",
            CliError::Input(_) => "input",
            CliError::CapExceeded(_) => "cap-exceeded",
            CliError::NoConvergence(_) => "no-convergence",
            CliError::Mismatch(_) => "mismatch",
            CliError::Io(_) => "io",
        }
    }

    /// One-line JSON record for stderr.
    pub fn record(&self) -> String {
        #[derive(Serialize)]
        struct Record<'a> {
            error: &'a str,
            exit_code: i32,
            message: String,
        }
        serde_json::to_string(&Record {
            error: self.kind(),
            exit_code: self.exit_code(),
            message: self.to_string().replace('\n', " "),
        })
        .expect("record serializes")
    }
}

impl From<MomentError> for CliError {
    fn from(e: MomentError) -> Self {
        match e {
            MomentError::CapExceeded { .. } => CliError::CapExceeded(e.to_string()),
            _ => CliError::Input(e.to_string()),
        }
    }
}

impl From<GenfuncError> for CliError {
    fn from(e: GenfuncError) -> Self {
        match e {
            GenfuncError::Moment(m) => m.into(),
            _ => CliError::Input(e.to_string()),
        }
    }
}

impl From<KnotpolyError> for CliError {
    fn from(e: KnotpolyError) -> Self {
        match e {
            KnotpolyError::CapExceeded { .. } => CliError::CapExceeded(e.to_string()),
            _ => CliError::Input(e.to_string()),
        }
    }
}

impl From<BandsError> for CliError {
    fn from(e: BandsError) -> Self {
        match e {
            BandsError::CapExceeded { .. } => CliError::CapExceeded(e.to_string()),
            _ => CliError::Input(e.to_string()),
        }
    }
}

impl From<ZerosError> for CliError {
    fn from(e: ZerosError) -> Self {
        match e {
            ZerosError::NoConvergence { .. } => CliError::NoConvergence(e.to_string()),
            _ => CliError::Input(e.to_string()),
        }
    }
}

impl From<SeifertError> for CliError {
    fn from(e: SeifertError) -> Self {
        CliError::Input(e.to_string())
    }
}

impl From<CatalogueError> for CliError {
    fn from(e: CatalogueError) -> Self {
        CliError::Input(e.to_string())
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::Input(e.to_string())
    }
}
