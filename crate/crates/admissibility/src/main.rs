fn main() {
    std::process::exit(admissibility::cli::run(std::env::args_os()));
}
