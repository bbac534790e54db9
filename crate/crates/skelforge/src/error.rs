use serde::Serialize;

use skelforge_core::classify::ClassifyError;
use skelforge_core::complex::ComplexError;
use skelforge_core::nets::NetError;
use skelforge_core::ops::OpsError;
use skelforge_core::orbit::OrbitError;
use skelforge_core::presets::PresetError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CliError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("not an isometry: generator {0:?}")]
    NotAnIsometry(String),
    #[error("bad configuration: {0}")]
    Config(String),
    #[error("io: {0}")]
    Io(String),
    #[error(transparent)]
    Preset(#[from] PresetError),
    #[error(transparent)]
    Orbit(#[from] OrbitError),
    #[error(transparent)]
    Complex(#[from] ComplexError),
    #[error(transparent)]
    Classify(#[from] ClassifyError),
    #[error(transparent)]
    Ops(#[from] OpsError),
    #[error(transparent)]
    Net(#[from] NetError),
}

/// Machine-readable failure written to stderr.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ErrorJson {
    pub code: String,
    pub detail: String,
}

/// Innermost variant name of a nested error's debug form, in snake case.
fn variant_code(debug: &str) -> String {
    let head = debug.split(['"', '{', ' ', ',']).next().unwrap_or(debug);
    let name = head
        .split('(')
        .map(|part| part.trim_end_matches(')'))
        .filter(|part| part.starts_with(|c: char| c.is_ascii_uppercase()))
        .last()
        .unwrap_or("Unknown");
    let mut out = String::new();
    for (i, ch) in name.chars().enumerate() {
        if ch.is_ascii_uppercase() {
            if i > 0 {
                out.push('_');
            }
            out.push(ch.to_ascii_lowercase());
        } else {
            out.push(ch);
        }
    }
    out
}

impl CliError {
    pub fn parse(detail: impl Into<String>) -> Self {
        CliError::Parse(detail.into())
    }

    pub fn config(detail: impl Into<String>) -> Self {
        CliError::Config(detail.into())
    }

    pub fn code(&self) -> String {
        match self {
            CliError::Parse(_) => "parse_error".into(),
            CliError::NotAnIsometry(_) => "not_an_isometry".into(),
            CliError::Config(_) => "bad_config".into(),
            CliError::Io(_) => "io_error".into(),
            other => variant_code(&format!("{other:?}")),
        }
    }

    pub fn to_json(&self) -> ErrorJson {
        ErrorJson { code: self.code(), detail: self.to_string() }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn codes_name_the_innermost_variant() {
        let e = CliError::Preset(PresetError::Orbit(OrbitError::SelfIdentification("(1, 0, 0)".into())));
        assert_eq!(e.code(), "self_identification");
        let e = CliError::Classify(ClassifyError::NotInvolution(2));
        assert_eq!(e.code(), "not_involution");
        let e = CliError::Orbit(OrbitError::BadRegion);
        assert_eq!(e.code(), "bad_region");
        assert_eq!(CliError::NotAnIsometry("S1".into()).code(), "not_an_isometry");
    }
}
