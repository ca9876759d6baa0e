fn main() {
    env_logger::Builder::from_env(env_logger::Env::new().filter_or("BOHR_LOG", "warn")).init();
    std::process::exit(bohr::cli::run(std::env::args_os()));
}
