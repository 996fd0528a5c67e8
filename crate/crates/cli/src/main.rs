use clap::Parser;

use binsum::config::RunConfig;

fn main() {
    let config = match RunConfig::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { binsum::EXIT_USAGE } else { binsum::EXIT_PASS };
            let _ = e.print();
            std::process::exit(code);
        }
    };
    std::process::exit(binsum::run(&config));
}
