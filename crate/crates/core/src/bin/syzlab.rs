fn main() {
    std::process::exit(syzlab::cli::main_with_env());
}
