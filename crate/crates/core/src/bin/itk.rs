fn main() {
    std::process::exit(integrated_info::cli::main());
}
