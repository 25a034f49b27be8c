fn main() {
    std::process::exit(qpd::cli::run());
}
