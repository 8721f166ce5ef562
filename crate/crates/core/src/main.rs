fn main() {
    std::process::exit(k3vw::cli::main_with_args(std::env::args_os()));
}
