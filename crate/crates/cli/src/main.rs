fn main() {
    std::process::exit(mixbound_cli::run(std::env::args_os()));
}
