fn main() -> std::process::ExitCode {
    horocount::cli::main_with_args(std::env::args_os())
}
