use std::process::ExitCode;

fn main() -> ExitCode {
    ExitCode::from(naqc_cli::run(std::env::args_os()))
}
