use std::process::ExitCode;

fn main() -> ExitCode {
    let argv: Vec<String> = std::env::args().collect();
    let code = xychain::cli::main_with(&argv);
    ExitCode::from(u8::try_from(code).unwrap_or(1))
}
