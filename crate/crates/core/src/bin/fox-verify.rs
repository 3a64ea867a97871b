fn main() {
    std::process::exit(fox_core::cli::main_with_args(std::env::args_os()));
}
