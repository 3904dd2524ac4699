fn main() {
    std::process::exit(sylvdet::cli::run(std::env::args_os()));
}
