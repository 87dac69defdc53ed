//! Versioned session files: both completed rule sets and the derived action table,
//! so later runs skip completion and table derivation.

use crate::cotangent::{ActionTable, Basis, Calculus, CalculusConfig, CotangentError};
use crate::ncpoly::Algebra;
use crate::rewrite::{RewriteError, RewriteSystem};
use serde::{Deserialize, Serialize};
use std::path::Path;

pub const SESSION_VERSION: u32 = 1;

#[derive(Debug, thiserror::Error)]
pub enum SessionError {
    #[error("cannot read or write session file: {0}")]
    Io(#[from] std::io::Error),
    #[error("malformed session file: {0}")]
    Json(#[from] serde_json::Error),
    #[error("session version {found}, expected {SESSION_VERSION}")]
    Version { found: u32 },
    #[error(transparent)]
    Rewrite(#[from] RewriteError),
    #[error(transparent)]
    Cotangent(#[from] CotangentError),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SessionFile {
    pub version: u32,
    pub n: usize,
    pub degree_g: usize,
    pub degree_h: usize,
    pub quotient_degree: usize,
    pub g_rules: String,
    pub h_rules: String,
    pub table: serde_json::Value,
}

impl SessionFile {
    pub fn from_calculus(calc: &Calculus, quotient_degree: usize) -> Self {
        SessionFile {
            version: SESSION_VERSION,
            n: calc.n,
            degree_g: calc.gsys.max_degree,
            degree_h: calc.hsys.max_degree,
            quotient_degree,
            g_rules: calc.gsys.dump(),
            h_rules: calc.hsys.dump(),
            table: calc.table.to_json(&calc.basis),
        }
    }

    pub fn config(&self) -> CalculusConfig {
        CalculusConfig { n: self.n, degree_g: self.degree_g, degree_h: self.degree_h }
    }

    /// Rebuilds the calculus from the stored rules and table.
    pub fn calculus(&self) -> Result<Calculus, SessionError> {
        let gsys = RewriteSystem::load(&self.g_rules, Algebra::G(self.n))?;
        let hsys = RewriteSystem::load(&self.h_rules, Algebra::H(self.n))?;
        let table = ActionTable::from_json(Algebra::G(self.n), &Basis::new(self.n), &self.table)?;
        Ok(Calculus::from_systems(gsys, hsys, Some(table))?)
    }

    pub fn to_string_pretty(&self) -> String {
        serde_json::to_string_pretty(self).expect("session serialises")
    }

    pub fn save(&self, path: &Path) -> Result<(), SessionError> {
        std::fs::write(path, self.to_string_pretty())?;
        Ok(())
    }

    pub fn load(path: &Path) -> Result<Self, SessionError> {
        let s: SessionFile = serde_json::from_str(&std::fs::read_to_string(path)?)?;
        if s.version != SESSION_VERSION {
            return Err(SessionError::Version { found: s.version });
        }
        Ok(s)
    }
}
