use std::io::{IsTerminal, Write};
use std::process::ExitCode;

use toric_cli::{run, Style};

fn color_enabled() -> bool {
    match std::env::var("TORIC_COLOR").as_deref() {
        Ok("never") => false,
        Ok("auto") | Err(_) => std::io::stdout().is_terminal(),
        Ok(other) => {
            eprintln!("warning: TORIC_COLOR={other:?} is not one of auto, never; using auto");
            std::io::stdout().is_terminal()
        }
    }
}

fn main() -> ExitCode {
    let outcome = run(
        std::env::args_os(),
        Style {
            color: color_enabled(),
        },
    );
    let _ = std::io::stdout().write_all(outcome.stdout.as_bytes());
    let _ = std::io::stderr().write_all(outcome.stderr.as_bytes());
    ExitCode::from(outcome.code as u8)
}
