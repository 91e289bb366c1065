use std::process::ExitCode;
use std::time::Instant;

fn main() -> ExitCode {
    let started = Instant::now();
    let args: Vec<String> = std::env::args().skip(1).collect();
    let (code, output) = kq_cli::run(&args);
    if !output.is_empty() {
        println!("{output}");
    }
    // Wall-clock time is diagnostics, not output: stdout must be
    // byte-identical across runs.
    eprintln!("elapsed: {:.3?}", started.elapsed());
    ExitCode::from(code)
}
