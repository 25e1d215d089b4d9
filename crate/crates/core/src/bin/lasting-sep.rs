fn main() {
    std::process::exit(lasting_sep::cli::main());
}
