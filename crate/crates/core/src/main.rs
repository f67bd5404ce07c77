use std::io::Write;

fn main() {
    let (code, out) = zsurf_core::cli::run(std::env::args_os());
    if code == 2 {
        let _ = std::io::stderr().write_all(out.as_bytes());
    } else {
        let _ = std::io::stdout().write_all(out.as_bytes());
    }
    std::process::exit(code);
}
