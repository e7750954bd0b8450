use std::io::Write;

fn main() {
    let env_db = std::env::var_os(rovib::cli::DB_ENV).map(Into::into);
    let outcome = rovib::cli::run(std::env::args_os(), env_db);
    let _ = std::io::stdout().write_all(outcome.stdout.as_bytes());
    let _ = std::io::stderr().write_all(outcome.stderr.as_bytes());
    std::process::exit(outcome.code);
}
