fn main() {
    std::process::exit(acyclic_fusion::cli::main_with_args(std::env::args_os()));
}
