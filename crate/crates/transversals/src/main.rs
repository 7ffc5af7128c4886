fn main() {
    std::process::exit(transversals::cli::main());
}
