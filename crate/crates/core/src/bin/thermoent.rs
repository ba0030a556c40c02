fn main() -> std::process::ExitCode {
    thermoent::cli::main()
}
