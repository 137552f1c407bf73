fn main() {
    std::process::exit(orbit_tverberg::cli::main_entry());
}
