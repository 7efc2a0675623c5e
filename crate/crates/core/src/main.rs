fn main() {
    std::process::exit(axoforge::cli::run(std::env::args_os()));
}
