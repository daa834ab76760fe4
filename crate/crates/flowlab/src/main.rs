fn main() {
    std::process::exit(flowlab::run(std::env::args_os()));
}
