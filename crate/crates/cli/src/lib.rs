//! Command-line front end for `engeltori`.
//!
//! [`run`] parses an argument vector, executes one command and returns the
//! exit code with everything that would be printed. The binary is a thin
//! wrapper around it.
//!
//! Exit codes: 0 success, 1 invalid input or failed check, 2 hypothesis violation.

mod args;
mod commands;
mod load;
mod output;
pub mod render;

use clap::Parser;

pub use args::Cli;
pub use output::Report;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 1;
pub const EXIT_HYPOTHESIS: i32 = 2;

/// Result of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Invocation {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

pub fn run<I, T>(argv: I) -> Invocation
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INVALID } else { EXIT_OK };
            let text = e.render().to_string();
            return if code == EXIT_OK {
                Invocation { code, stdout: text, stderr: String::new() }
            } else {
                Invocation { code, stdout: String::new(), stderr: text }
            };
        }
    };
    let json = cli.json;
    match commands::dispatch(cli) {
        Ok(report) => {
            let code = if report.ok { EXIT_OK } else { EXIT_INVALID };
            let stdout = if json { report.json_string() } else { report.text.clone() };
            let stderr = if report.ok { String::new() } else { "check failed\n".to_string() };
            Invocation { code, stdout, stderr }
        }
        Err(e) => Invocation { code: exit_code(&e), stdout: String::new(), stderr: format!("error: {e:#}\n") },
    }
}

/// Hypothesis violations map to 2, everything else to 1.
pub fn exit_code(e: &anyhow::Error) -> i32 {
    match e.downcast_ref::<engeltori::Error>() {
        Some(err) if err.is_hypothesis_violation() => EXIT_HYPOTHESIS,
        _ => EXIT_INVALID,
    }
}
