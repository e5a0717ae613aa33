fn main() {
    std::process::exit(zzpoly::cli::run());
}
