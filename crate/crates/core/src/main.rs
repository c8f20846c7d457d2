fn main() {
    std::process::exit(spectral_graph::cli::run(std::env::args_os()));
}
