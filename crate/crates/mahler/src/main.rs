fn main() {
    std::process::exit(mahler::cli::run(std::env::args_os()));
}
