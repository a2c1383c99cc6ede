fn main() {
    std::process::exit(fuzzy_rankings::cli::run_cli(std::env::args_os()));
}
