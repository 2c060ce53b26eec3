//! Parsing and serialization of platform and application documents.
//!
//! The interchange format is UTF-8 text with a standard JSON data model and
//! a top-level `"kind"` discriminator (`"platform"` or `"application"`).
//! Serialization is canonical: keys in fixed schema order, lists in
//! declaration order, 2-space indentation, LF line endings, one trailing
//! newline. For every valid model `m`, `parse(serialize(m))` is structurally
//! equal to `m`, and serializing a parsed canonical document reproduces it
//! byte for byte.
//!
//! Parsing is total: any input yields either a model or a non-empty list of
//! error diagnostics, never both and never a panic. Unknown keys are errors
//! rather than being ignored, so typos in role names or tag names surface
//! immediately.

mod parse;
mod ser;

use std::fmt;

pub use parse::{parse_application, parse_platform};
pub use ser::{serialize_application, serialize_platform};

pub(crate) use ser::value_to_json;

/// Severity of a diagnostic.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Severity {
    Warning,
    Error,
}

impl Severity {
    pub fn as_str(self) -> &'static str {
        match self {
            Severity::Warning => "WARNING",
            Severity::Error => "ERROR",
        }
    }
}

impl fmt::Display for Severity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Stable code of a parse diagnostic.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum ParseCode {
    /// IO001: not well-formed JSON, or a value of the wrong shape.
    Malformed,
    /// IO002: a key the schema does not define at this position.
    UnknownKey,
    /// IO003: a name that does not resolve within the document.
    UnresolvedReference,
    /// IO004: a string outside its closed vocabulary.
    BadEnumLiteral,
    /// IO005: a name declared twice in one namespace.
    DuplicateName,
}

impl ParseCode {
    pub fn as_str(self) -> &'static str {
        match self {
            ParseCode::Malformed => "IO001",
            ParseCode::UnknownKey => "IO002",
            ParseCode::UnresolvedReference => "IO003",
            ParseCode::BadEnumLiteral => "IO004",
            ParseCode::DuplicateName => "IO005",
        }
    }
}

impl fmt::Display for ParseCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// One problem found while parsing a document. `path` is a slash-separated
/// location in the input (array elements by index, object members by key).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseDiagnostic {
    pub severity: Severity,
    pub path: String,
    pub code: ParseCode,
    pub message: String,
}

impl fmt::Display for ParseDiagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {} {}: {}",
            self.severity, self.code, self.path, self.message
        )
    }
}
