//! Command line front end: JSON workspaces in, text or JSON reports out.

pub mod commands;
pub mod report;
pub mod workspace;

pub use commands::{run_command, Command, Options};
pub use report::{emit_report, Format, Report};
pub use workspace::{load_workspace, parse_workspace, Workspace};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    /// Unreadable, malformed or inconsistent input.
    #[error("{0}")]
    Input(String),
    #[error(transparent)]
    Math(#[from] auslander::Error),
}

impl CliError {
    /// 1 when an algebraic verification failed, 2 for everything the user can fix.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Math(auslander::Error::Verification(_)) => 1,
            _ => 2,
        }
    }
}
