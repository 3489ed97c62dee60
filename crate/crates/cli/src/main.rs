fn main() {
    std::process::exit(proximity_cli::run(std::env::args_os()));
}
