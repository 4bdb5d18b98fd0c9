use std::process::ExitCode;

fn main() -> ExitCode {
    ExitCode::from(samplebox::cli::main_entry() as u8)
}
