fn main() -> std::process::ExitCode {
    forcing_lab::cli::main()
}
