use clap::Parser;

fn main() {
    let cli = antcycle_cli::Cli::parse();
    if let Err(err) = antcycle_cli::execute(&cli) {
        eprintln!("error: {err}");
        std::process::exit(err.exit_code());
    }
}
