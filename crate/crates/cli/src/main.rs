use std::io::{stderr, stdout, Write};

fn main() {
    let out = stdout();
    let mut out = out.lock();
    let code = hfrac_cli::run(std::env::args_os(), &mut out, &mut stderr());
    let _ = out.flush();
    std::process::exit(code);
}
