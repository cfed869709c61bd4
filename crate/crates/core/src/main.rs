use std::io::Write;

fn main() {
    let args: Vec<String> = std::env::args().collect();
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    let mut out = stdout.lock();
    let mut err = stderr.lock();
    let code = lexseg::cli::run_command(&args, &mut out, &mut err);
    let _ = out.flush();
    std::process::exit(code);
}
