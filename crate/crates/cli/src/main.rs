use std::path::PathBuf;
use std::process::ExitCode;

use auslander::limits::set_max_enum;
use auslander_cli::{emit_report, load_workspace, run_command, CliError, Command, Format, Options};
use clap::Parser;

#[derive(Parser)]
#[command(name = "auslander", version, about = "Auslander bijections and universal extensions over F_p")]
struct Cli {
    /// JSON workspace with the field, the quiver and named modules
    #[arg(long, global = true)]
    workspace: Option<PathBuf>,
    /// Emit a JSON document instead of text
    #[arg(long, global = true)]
    json: bool,
    /// Cap on the number of elements any brute-force enumeration may visit
    #[arg(long = "max-enum", global = true)]
    max_enum: Option<u64>,
    /// Module names forming the universe of the determinedness oracle
    #[arg(long, global = true, value_delimiter = ',')]
    universe: Option<Vec<String>>,
    #[command(subcommand)]
    command: Command,
}

fn run(cli: &Cli) -> Result<i32, CliError> {
    let path = cli.workspace.as_ref().ok_or_else(|| CliError::Input("--workspace PATH is required".into()))?;
    let ws = load_workspace(path)?;
    if let Some(n) = cli.max_enum.or(ws.config.max_enum) {
        set_max_enum(n);
    }
    let opts = Options { universe: cli.universe.clone() };
    let report = run_command(&ws, &cli.command, &opts)?;
    let format = if cli.json { Format::Json } else { Format::Text };
    print!("{}", emit_report(&report, format));
    Ok(report.exit_code())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
