fn main() {
    std::process::exit(frobkit::cli::run(std::env::args_os()));
}
