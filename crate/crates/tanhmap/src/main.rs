fn main() {
    std::process::exit(tanhmap::cli::run(std::env::args_os()));
}
