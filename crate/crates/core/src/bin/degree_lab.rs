fn main() {
    std::process::exit(degree_lab::cli::run(std::env::args_os()));
}
