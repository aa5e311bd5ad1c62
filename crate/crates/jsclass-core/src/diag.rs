//! Diagnostics carried alongside analysis results.
//!
//! Anomalies that do not invalidate a run (duplicate candidate names,
//! near-miss constructors, dropped inheritance cycles, skipped files) are
//! reported here rather than as hard errors, so corpus analysis always
//! completes with an explainable model.

use crate::ast::SourceSpan;
use alloc::string::String;
use core::fmt;
use serde::{Deserialize, Serialize};

/// How serious a diagnostic is.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Severity {
    /// Informational finding, e.g. a near-miss constructor.
    Info,
    /// Suspicious input handled by a documented rule.
    Warning,
    /// A file or construct was dropped from the analysis.
    Error,
}

/// Machine-readable diagnostic codes: the closed set of anomaly kinds.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DiagCode {
    /// ESTree document is not valid JSON.
    BadJson,
    /// ESTree document's top-level type is not `Program`.
    NotAProgram,
    /// Analysis root directory missing or unreadable.
    BadRoot,
    /// No ingestible files under the analysis root.
    EmptyInput,
    /// Source construct outside the supported grammar, skipped by recovery.
    UnsupportedSyntax,
    /// Malformed source the parser could not recover from.
    Syntax,
    /// A file was skipped (unreadable, oversized, or failed to parse).
    FileSkipped,
    /// Two candidate functions share a name; the first in path order wins.
    DuplicateCandidate,
    /// Candidate constructor function that is never instantiated.
    NearMiss,
    /// The same member name appears as both attribute and method.
    MemberConflict,
    /// Computed prototype member (`C.prototype[x] = ...`) ignored.
    ComputedMember,
    /// A class's prototype was assigned more than once; the last wins.
    PrototypeReassigned,
    /// An inheritance edge was dropped because it would create a cycle.
    InheritanceCycle,
    /// Distribution-map request named an unknown metric.
    BadMetric,
}

impl Severity {
    /// Stable lower-case name (`info`, `warning`, `error`).
    pub fn as_str(&self) -> &'static str {
        match self {
            Severity::Info => "info",
            Severity::Warning => "warning",
            Severity::Error => "error",
        }
    }
}

impl fmt::Display for Severity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl DiagCode {
    /// Stable snake_case name matching the serialized form.
    pub fn as_str(&self) -> &'static str {
        match self {
            DiagCode::BadJson => "bad_json",
            DiagCode::NotAProgram => "not_a_program",
            DiagCode::BadRoot => "bad_root",
            DiagCode::EmptyInput => "empty_input",
            DiagCode::UnsupportedSyntax => "unsupported_syntax",
            DiagCode::Syntax => "syntax",
            DiagCode::FileSkipped => "file_skipped",
            DiagCode::DuplicateCandidate => "duplicate_candidate",
            DiagCode::NearMiss => "near_miss",
            DiagCode::MemberConflict => "member_conflict",
            DiagCode::ComputedMember => "computed_member",
            DiagCode::PrototypeReassigned => "prototype_reassigned",
            DiagCode::InheritanceCycle => "inheritance_cycle",
            DiagCode::BadMetric => "bad_metric",
        }
    }
}

impl fmt::Display for DiagCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// One reported anomaly.
#[derive(Debug, Clone, PartialEq)]
pub struct Diagnostic {
    /// Severity class.
    pub severity: Severity,
    /// Machine name from the closed set.
    pub code: DiagCode,
    /// Human-readable description.
    pub message: String,
    /// Path of the file the diagnostic refers to, when file-specific.
    pub file: Option<String>,
    /// Position inside `file`, when known.
    pub span: Option<SourceSpan>,
}

impl Diagnostic {
    /// Builds a diagnostic without file/span context.
    pub fn new(severity: Severity, code: DiagCode, message: String) -> Self {
        Diagnostic {
            severity,
            code,
            message,
            file: None,
            span: None,
        }
    }

    /// Attaches a file path.
    pub fn with_file(mut self, file: &str) -> Self {
        self.file = Some(String::from(file));
        self
    }

    /// Attaches a source span.
    pub fn with_span(mut self, span: SourceSpan) -> Self {
        self.span = Some(span);
        self
    }
}

impl fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.severity, self.code)?;
        if let Some(file) = &self.file {
            write!(f, " {}", file)?;
            if let Some(span) = &self.span {
                if span.is_known() {
                    write!(f, ":{}:{}", span.start_line, span.start_col)?;
                }
            }
        }
        write!(f, ": {}", self.message)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    #[test]
    fn display_includes_code_and_location() {
        let d = Diagnostic::new(
            Severity::Warning,
            DiagCode::DuplicateCandidate,
            "duplicate candidate 'A'".to_string(),
        )
        .with_file("a.js")
        .with_span(SourceSpan::new(3, 0, 3, 10));
        assert_eq!(
            d.to_string(),
            "warning duplicate_candidate a.js:3:0: duplicate candidate 'A'"
        );
    }

    #[test]
    fn severity_orders_info_warning_error() {
        assert!(Severity::Info < Severity::Warning);
        assert!(Severity::Warning < Severity::Error);
    }
}
