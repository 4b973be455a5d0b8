fn main() {
    std::process::exit(bitensor::cli::run());
}
