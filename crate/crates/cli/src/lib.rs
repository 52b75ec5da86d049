//! Presets, file formats and subcommands behind the `taumute` binary.

pub mod commands;
pub mod format;
pub mod names;
pub mod presets;

use std::fmt;

/// Exit codes: 0 all checks pass, 1 a violation or computation failure,
/// 2 bad input, 3 truncation at the node cap.
#[derive(Debug)]
pub enum CliError {
    Input(String),
    Truncated(usize),
    Core(taumute::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) => 2,
            CliError::Truncated(_) => 3,
            CliError::Core(e) => match e {
                taumute::Error::Truncated(_) => 3,
                taumute::Error::Parse(_)
                | taumute::Error::InvalidParameter(_)
                | taumute::Error::InvalidQuiver(_)
                | taumute::Error::InvalidRelation(_)
                | taumute::Error::NonHomogeneous(_)
                | taumute::Error::InvalidVertex(_)
                | taumute::Error::LengthCap(_)
                | taumute::Error::NonReducedWord(_)
                | taumute::Error::SlotNotPresent(_)
                | taumute::Error::NotSupportTauTilting => 2,
                _ => 1,
            },
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Input(s) => write!(f, "{s}"),
            CliError::Truncated(cap) => write!(f, "truncated at cap {cap}"),
            CliError::Core(e) => write!(f, "{e}"),
        }
    }
}

impl From<taumute::Error> for CliError {
    fn from(e: taumute::Error) -> Self {
        CliError::Core(e)
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;

/// Text to print and the exit code to return.
#[derive(Debug)]
pub struct Outcome {
    pub text: String,
    pub code: i32,
}
