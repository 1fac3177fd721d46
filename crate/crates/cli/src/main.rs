use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use triharm_cli::{args::Cli, run};

fn main() -> ExitCode {
    let argv: Vec<String> = std::env::args().collect();
    let cli = match Cli::try_parse_from(&argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let echo = argv[1..].join(" ");
    match run(&cli, format!("triharm {echo}")) {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            let _ = stdout.write_all(out.stdout.as_bytes());
            let _ = stdout.flush();
            ExitCode::from(out.exit_code() as u8)
        }
        Err(f) => {
            eprintln!("triharm: {f}");
            ExitCode::from(f.exit_code() as u8)
        }
    }
}
