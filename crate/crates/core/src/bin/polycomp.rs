use std::io::Write;

fn main() {
    let out = polycomp::cli::parse_and_run(std::env::args_os());
    print!("{}", out.stdout);
    eprint!("{}", out.stderr);
    let _ = std::io::stdout().flush();
    std::process::exit(out.code);
}
