use std::collections::HashSet;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::store::{DEFAULT_FILE_CAP, MIN_POOL};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Annotator {
    pub id: String,
    pub token: String,
    /// May create batches and read exports and reports.
    #[serde(default)]
    pub admin: bool,
}

/// Service configuration, read from TOML:
///
/// ```toml
/// per_file_cap = 10
/// seed = 7
///
/// [[annotators]]
/// id = "ann1"
/// token = "secret-1"
/// admin = true
/// ```
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ServiceConfig {
    #[serde(default = "default_cap")]
    pub per_file_cap: usize,
    #[serde(default)]
    pub seed: u64,
    pub annotators: Vec<Annotator>,
}

fn default_cap() -> usize {
    DEFAULT_FILE_CAP
}

#[derive(Debug, thiserror::Error)]
pub enum ConfigError {
    #[error("reading {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("parsing config: {0}")]
    Toml(#[from] toml::de::Error),
    #[error("invalid config: {0}")]
    Invalid(String),
}

impl ServiceConfig {
    pub fn from_toml(text: &str) -> Result<Self, ConfigError> {
        let cfg: ServiceConfig = toml::from_str(text)?;
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn load(path: &Path) -> Result<Self, ConfigError> {
        let text = std::fs::read_to_string(path).map_err(|source| ConfigError::Io {
            path: path.display().to_string(),
            source,
        })?;
        Self::from_toml(&text)
    }

    fn validate(&self) -> Result<(), ConfigError> {
        let invalid = |m: &str| Err(ConfigError::Invalid(m.to_string()));
        if self.per_file_cap == 0 {
            return invalid("per_file_cap must be positive");
        }
        if self.annotators.len() < MIN_POOL {
            return invalid("at least three annotators are required");
        }
        let mut ids = HashSet::new();
        let mut tokens = HashSet::new();
        for a in &self.annotators {
            if a.id.is_empty() || a.token.is_empty() {
                return invalid("annotator ids and tokens must be non-empty");
            }
            if !ids.insert(&a.id) {
                return Err(ConfigError::Invalid(format!("duplicate annotator id {}", a.id)));
            }
            if !tokens.insert(&a.token) {
                return Err(ConfigError::Invalid(format!("duplicate token for {}", a.id)));
            }
        }
        Ok(())
    }

    pub fn by_token(&self, token: &str) -> Option<&Annotator> {
        self.annotators.iter().find(|a| a.token == token)
    }

    pub fn pool(&self) -> Vec<String> {
        self.annotators.iter().map(|a| a.id.clone()).collect()
    }
}
