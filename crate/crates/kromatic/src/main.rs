use std::process::ExitCode;

fn main() -> ExitCode {
    ExitCode::from(kromatic::cli::main_entry() as u8)
}
