fn main() {
    std::process::exit(walkmetric::cli::run(std::env::args()));
}
