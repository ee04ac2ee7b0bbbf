use std::io;
use std::process::ExitCode;

fn main() -> ExitCode {
    let cache = std::env::var(affsat_cli::CACHE_ENV).ok();
    let code = affsat_cli::run(
        std::env::args_os(),
        cache.as_deref(),
        &mut io::stdout().lock(),
        &mut io::stderr().lock(),
    );
    ExitCode::from(code as u8)
}
