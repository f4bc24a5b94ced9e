use std::process::ExitCode;

fn main() -> ExitCode {
    ExitCode::from(digit_atlas::cli::run(std::env::args()) as u8)
}
