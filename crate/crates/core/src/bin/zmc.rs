fn main() {
    std::process::exit(zmc_riemann::cli::main_entry());
}
