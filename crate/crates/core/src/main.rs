fn main() {
    std::process::exit(cherednik_howe::cli::run(std::env::args_os()));
}
