use clap::Parser;
use std::io::Write;

fn main() {
    let cli = match slope_lab::args::Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            // Help and version requests are not errors; everything else
            // (unknown flags, missing values, bad literals) exits 1.
            let code = i32::from(err.use_stderr());
            let _ = err.print();
            std::process::exit(code);
        }
    };
    let mut stdin = std::io::stdin().lock();
    let outcome = slope_lab::execute(cli, &mut stdin);
    let mut stdout = std::io::stdout();
    let _ = stdout.write_all(outcome.stdout.as_bytes());
    let _ = std::io::stderr().write_all(outcome.stderr.as_bytes());
    let _ = stdout.flush();
    std::process::exit(outcome.code);
}
