fn main() {
    let code = twistcert::cli::run(
        std::env::args_os(),
        std::env::var("TWIST_BUDGET").ok(),
        &mut std::io::stdout(),
        &mut std::io::stderr(),
    );
    std::process::exit(code);
}
