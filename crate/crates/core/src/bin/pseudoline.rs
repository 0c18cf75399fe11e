fn main() -> std::process::ExitCode {
    pseudoline::cli::run()
}
