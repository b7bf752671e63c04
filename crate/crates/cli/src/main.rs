fn main() {
    std::process::exit(estar_cli::run(std::env::args_os()));
}
