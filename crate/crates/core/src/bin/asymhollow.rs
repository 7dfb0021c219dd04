fn main() {
    std::process::exit(asymhollow::cli::run(std::env::args_os()));
}
