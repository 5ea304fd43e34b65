fn main() {
    std::process::exit(pathext::cli::run(std::env::args_os()));
}
