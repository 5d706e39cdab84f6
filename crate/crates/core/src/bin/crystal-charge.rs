fn main() {
    let (code, out) = crystal_charge::cli::run(std::env::args_os());
    if code == crystal_charge::cli::EXIT_OK {
        print!("{out}");
    } else {
        eprint!("{out}");
    }
    std::process::exit(code);
}
