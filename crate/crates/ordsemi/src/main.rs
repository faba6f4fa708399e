fn main() {
    std::process::exit(ordsemi::cli::main_entry());
}
