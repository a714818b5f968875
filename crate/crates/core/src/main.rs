fn main() {
    std::process::exit(wreath_hodge::cli::run(std::env::args_os()));
}
