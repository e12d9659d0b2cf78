fn main() {
    std::process::exit(token_thickness::cli::main());
}
