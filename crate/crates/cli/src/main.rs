use clap::Parser;

fn main() {
    // Usage errors exit with code 2 through clap; check failures exit 1.
    let cli = finq_cli::Cli::parse();
    let outcome = finq_cli::execute(&cli);
    print!("{}", finq_cli::render(&outcome.report, cli.format));
    std::process::exit(outcome.exit_code);
}
