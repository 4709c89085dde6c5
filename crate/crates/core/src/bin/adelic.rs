use std::process::ExitCode;

use adelic_weil::cli::run_command;

fn main() -> ExitCode {
    let (code, out) = run_command(std::env::args_os());
    if code == 0 {
        print!("{out}");
    } else {
        eprint!("{out}");
    }
    ExitCode::from(code as u8)
}
