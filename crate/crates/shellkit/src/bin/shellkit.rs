use std::io::Write;

fn main() {
    let argv: Vec<String> = std::env::args().skip(1).collect();
    let stdout = std::io::stdout();
    let mut out = std::io::BufWriter::new(stdout.lock());
    let code = shellkit::cli::run(&argv, &mut out);
    out.flush().expect("flush stdout");
    std::process::exit(code);
}
