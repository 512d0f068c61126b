fn main() {
    let outcome = svdual::cli::run_args(std::env::args_os());
    print!("{}", outcome.out);
    std::process::exit(outcome.code);
}
