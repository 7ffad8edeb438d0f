fn main() {
    std::process::exit(conecheck::run(std::env::args_os()));
}
