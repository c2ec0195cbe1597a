fn main() {
    std::process::exit(qbrauer::cli::main_with_args(std::env::args_os()));
}
