fn main() {
    std::process::exit(ontocm::cli::run(std::env::args_os()));
}
