fn main() {
    std::process::exit(qpmut::cli::run(std::env::args_os()));
}
