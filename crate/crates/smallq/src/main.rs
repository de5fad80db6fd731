fn main() {
    std::process::exit(smallq::cli::run());
}
