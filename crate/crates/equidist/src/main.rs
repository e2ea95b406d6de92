fn main() {
    std::process::exit(equidist::cli::main());
}
