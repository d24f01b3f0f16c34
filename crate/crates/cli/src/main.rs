fn main() {
    std::process::exit(posetrep::cli::run(std::env::args_os()));
}
