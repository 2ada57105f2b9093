fn main() {
    std::process::exit(normgap_cli::run(std::env::args_os()));
}
