use std::process::ExitCode;

fn main() -> ExitCode {
    ExitCode::from(pegasus_topo::cli::run(std::env::args_os()) as u8)
}
