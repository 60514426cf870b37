use std::io;
use std::process::ExitCode;

use ics_cli::app::{run, MAX_ELEMENTS_VAR};

fn main() -> ExitCode {
    let cap = std::env::var(MAX_ELEMENTS_VAR).ok();
    let mut out = io::BufWriter::new(io::stdout());
    let code = run(
        std::env::args_os(),
        cap.as_deref(),
        &mut out,
        &mut io::stderr(),
    );
    ExitCode::from(code)
}
