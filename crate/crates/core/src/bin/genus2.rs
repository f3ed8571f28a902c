fn main() {
    std::process::exit(genus2::cli::run(std::env::args_os()));
}
