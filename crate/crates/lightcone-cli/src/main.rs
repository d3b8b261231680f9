use std::process::ExitCode;

fn main() -> ExitCode {
    lightcone_cli::main_entry()
}
