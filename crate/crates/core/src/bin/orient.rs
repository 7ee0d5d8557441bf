use std::process::ExitCode;

fn main() -> ExitCode {
    let output = acyclic_orient::cli::run_command(std::env::args_os());
    print!("{}", output.stdout);
    ExitCode::from(output.exit_code as u8)
}
