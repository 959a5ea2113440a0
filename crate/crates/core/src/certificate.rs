//! Certificate files: deterministic JSON for a factorization.

use serde::{Deserialize, Serialize};
use serde_json::Value;
use thiserror::Error;

use crate::catalog::{build_surface, SurfaceSpec};
use crate::families::{Factorization, Family};
use crate::mcg::MappingClassWord;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Error)]
pub enum CertificateError {
    #[error("malformed certificate: {0}")]
    Json(#[from] serde_json::Error),
    #[error("invalid certificate: {0}")]
    Invalid(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Metadata {
    pub generator: String,
    pub version: String,
}

impl Default for Metadata {
    fn default() -> Self {
        Metadata {
            generator: env!("CARGO_PKG_NAME").into(),
            version: env!("CARGO_PKG_VERSION").into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Certificate {
    pub schema_version: u32,
    pub surface: SurfaceSpec,
    pub family: Family,
    pub m: usize,
    pub k: usize,
    pub target: MappingClassWord,
    pub twists: MappingClassWord,
    pub claimed_length: usize,
    pub all_nonseparating: bool,
    pub metadata: Metadata,
}

impl Certificate {
    pub fn from_factorization(f: &Factorization) -> Certificate {
        Certificate {
            schema_version: SCHEMA_VERSION,
            surface: f.spec,
            family: f.family,
            m: f.m,
            k: f.k,
            target: f.target.clone(),
            twists: f.twists.clone(),
            claimed_length: f.claimed_length,
            all_nonseparating: f.all_nonseparating,
            metadata: Metadata::default(),
        }
    }

    pub fn to_factorization(&self) -> Factorization {
        Factorization {
            spec: self.surface,
            target: self.target.clone(),
            twists: self.twists.clone(),
            family: self.family,
            m: self.m,
            k: self.k,
            claimed_length: self.claimed_length,
            all_nonseparating: self.all_nonseparating,
        }
    }

    /// Sorted keys, two-space indent, trailing newline.
    pub fn to_json(&self) -> String {
        // `Value` objects are ordered maps, so keys come out sorted
        let value = serde_json::to_value(self).expect("certificate serializes");
        let mut s = serde_json::to_string_pretty(&value).expect("value serializes");
        s.push('\n');
        s
    }

    pub fn parse(text: &str) -> Result<Certificate, CertificateError> {
        let value: Value = serde_json::from_str(text)?;
        let cert: Certificate = serde_json::from_value(value)?;
        cert.validate()?;
        Ok(cert)
    }

    fn validate(&self) -> Result<(), CertificateError> {
        if self.schema_version != SCHEMA_VERSION {
            return Err(CertificateError::Invalid(format!(
                "unsupported schema version {}",
                self.schema_version
            )));
        }
        build_surface(self.surface.g, self.surface.n)
            .map_err(|e| CertificateError::Invalid(e.to_string()))?;
        check_signs(&self.target)?;
        check_signs(&self.twists)
    }
}

fn check_signs(w: &MappingClassWord) -> Result<(), CertificateError> {
    for t in w.twists() {
        if t.sign != 1 && t.sign != -1 {
            return Err(CertificateError::Invalid(format!(
                "twist about {} has sign {}",
                t.curve, t.sign
            )));
        }
        check_signs(&t.conjugator)?;
    }
    Ok(())
}
