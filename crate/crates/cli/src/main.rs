fn main() {
    std::process::exit(foxhom::run(std::env::args_os()));
}
