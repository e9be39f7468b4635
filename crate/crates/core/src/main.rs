use std::io::Write;

fn main() {
    let out = hfix::cli::run_command(std::env::args_os());
    std::io::stdout()
        .write_all(&out.stdout)
        .expect("write stdout");
    std::io::stderr()
        .write_all(&out.stderr)
        .expect("write stderr");
    std::process::exit(out.exit_code);
}
