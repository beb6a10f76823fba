use std::io::{self, Write};

fn main() {
    let stdout = io::stdout();
    let mut out = io::BufWriter::new(stdout.lock());
    let mut err = io::stderr();
    let code = derangements::cli::run(std::env::args_os(), &mut out, &mut err);
    if out.flush().is_err() && code == 0 {
        std::process::exit(1);
    }
    drop(out);
    std::process::exit(code);
}
