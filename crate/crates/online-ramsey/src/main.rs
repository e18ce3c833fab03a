fn main() {
    // All logic lives in the library; the binary hands the front end its
    // real streams and propagates the exit code, nothing more.
    let stdin = std::io::stdin();
    let stdout = std::io::stdout();
    let code = online_ramsey::cli::execute(
        std::env::args_os().skip(1),
        &mut stdin.lock(),
        &mut stdout.lock(),
    );
    std::process::exit(code)
}
