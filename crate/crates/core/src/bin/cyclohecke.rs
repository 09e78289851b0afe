fn main() {
    std::process::exit(cyclohecke::cli::run(std::env::args_os()));
}
