fn main() {
    let (code, out) = toricnet::cli::run(std::env::args_os());
    if !out.is_empty() {
        println!("{out}");
    }
    std::process::exit(code);
}
