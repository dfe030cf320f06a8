fn main() {
    std::process::exit(regionsig::cli::run());
}
