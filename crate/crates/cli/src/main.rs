use std::io::Write;
use std::process::ExitCode;

fn main() -> ExitCode {
    let budget = std::env::var(arl_cli::NODE_BUDGET_ENV).ok();
    let out = arl_cli::run(std::env::args().skip(1), budget.as_deref());
    print!("{}", out.stdout);
    eprint!("{}", out.stderr);
    let _ = std::io::stdout().flush();
    ExitCode::from(out.code as u8)
}
