use serde_json::{json, Value};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },

    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),

    #[error("schema violation at {path}: {message}")]
    Schema { path: String, message: String },

    #[error(transparent)]
    Core(#[from] gammadist_core::Error),
}

impl CliError {
    pub fn schema(path: impl Into<String>, message: impl Into<String>) -> Self {
        CliError::Schema {
            path: path.into(),
            message: message.into(),
        }
    }

    pub fn kind(&self) -> &'static str {
        use gammadist_core::Error as E;
        match self {
            CliError::Io { .. } => "io",
            CliError::Json(_) => "json",
            CliError::Schema { .. } => "schema",
            CliError::Core(e) => match e {
                E::Domain(_) => "domain",
                E::DivisionByZero => "division_by_zero",
                E::NotExact { .. } => "not_exact",
                E::IndeterminateDefect { .. } => "indeterminate_defect",
                E::Ambiguous { .. } => "ambiguous",
                E::Structure(_) => "structure",
                E::NotInvolution(_) => "not_involution",
                E::Strip { .. } => "strip",
                E::Precondition(_) => "precondition",
                E::NumericalRank { .. } => "numerical_rank",
                E::IllConditioned(_) => "ill_conditioned",
                E::Degenerate(_) => "degenerate",
                E::NotXPoint(_) => "not_x_point",
                E::NotInDomain(_) => "not_in_domain",
                E::Parse(_) => "parse",
            },
        }
    }

    /// The diagnostic document printed on exit code 1.
    pub fn to_json(&self) -> Value {
        json!({ "error": { "kind": self.kind(), "message": self.to_string() } })
    }
}
