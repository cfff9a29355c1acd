fn main() {
    std::process::exit(stackwalk::cli::run(std::env::args()));
}
