use std::io::Write;
use std::time::Instant;

fn main() {
    let start = Instant::now();
    let out = hopfgs::cli::run(std::env::args_os());
    print!("{}", out.stdout);
    let _ = std::io::stdout().flush();
    eprint!("{}", out.stderr);
    if out.code != 2 {
        eprintln!("elapsed: {:.3}s", start.elapsed().as_secs_f64());
    }
    std::process::exit(out.code);
}
