//! Command-line companion to `nbgeom-core`: the object catalog, file
//! formats, random test graphs, and the verification suite shared between
//! `nbgeom verify` and the acceptance tests.

pub mod catalog;
pub mod formats;
pub mod random;
pub mod verify;

use std::fmt;

/// Process-level failure classes with a fixed exit-code contract so the
/// suite can gate CI: 2 = usage, 3 = data, 4 = bound.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CliError {
    /// Unknown name, unsupported combination, bad arguments.
    Usage(String),
    /// Malformed or inconsistent input file.
    Data(String),
    /// A module size or depth bound was exceeded.
    Bound(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Data(_) => 3,
            CliError::Bound(_) => 4,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(msg) => write!(f, "usage error: {msg}"),
            CliError::Data(msg) => write!(f, "data error: {msg}"),
            CliError::Bound(msg) => write!(f, "bound exceeded: {msg}"),
        }
    }
}

impl std::error::Error for CliError {}

/// Formats a float with 12 significant digits, trimming the exponent form
/// for values in ordinary range.
pub fn fmt_sig(x: f64) -> String {
    if x == 0.0 {
        return String::from("0");
    }
    let mag = x.abs().log10().floor() as i32;
    if (-4..12).contains(&mag) {
        let decimals = (11 - mag).max(0) as usize;
        let s = format!("{x:.decimals$}");
        if s.contains('.') {
            let t = s.trim_end_matches('0').trim_end_matches('.');
            t.to_string()
        } else {
            s
        }
    } else {
        format!("{x:.11e}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn significant_digit_formatting() {
        assert_eq!(fmt_sig(1.090549663507087), "1.09054966351");
        assert_eq!(fmt_sig(0.0), "0");
        assert_eq!(fmt_sig(-0.5), "-0.5");
        assert_eq!(fmt_sig(3.0), "3");
        assert_eq!(fmt_sig(1.0e-13), "1.00000000000e-13");
    }

    #[test]
    fn exit_codes_are_stable() {
        assert_eq!(CliError::Usage(String::new()).exit_code(), 2);
        assert_eq!(CliError::Data(String::new()).exit_code(), 3);
        assert_eq!(CliError::Bound(String::new()).exit_code(), 4);
    }
}
