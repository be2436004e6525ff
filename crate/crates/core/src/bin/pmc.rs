use std::io::Write;

fn main() {
    let outcome = monomial_crystal::cli::run(std::env::args_os());
    let _ = std::io::stdout().write_all(outcome.output.as_bytes());
    std::process::exit(outcome.code);
}
