fn main() {
    let report = dpcolor::cli::run(std::env::args_os(), &mut std::io::stdout().lock());
    std::process::exit(report.verdict.exit_code());
}
