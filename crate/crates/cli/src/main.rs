fn main() {
    std::process::exit(lascoux_cli::run(std::env::args_os()));
}
