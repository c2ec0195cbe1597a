//! Running CLI commands in-process.
fn main() {
    for args in [
        vec!["qbrauer", "multiply", "--n", "3", "--lhs", "C_1", "--rhs", "C_2e"],
        vec!["qbrauer", "duality-check", "--variant", "aii", "--m", "1", "--n", "3"],
    ] {
        let code = qbrauer::cli::main_with_args(args);
        println!("exit {code}");
    }
}
