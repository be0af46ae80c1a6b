fn main() {
    std::process::exit(indicmt::cli::run());
}
