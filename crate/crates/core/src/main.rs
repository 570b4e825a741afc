use std::process::ExitCode;

fn main() -> ExitCode {
    ExitCode::from(sturmian::cli::run())
}
