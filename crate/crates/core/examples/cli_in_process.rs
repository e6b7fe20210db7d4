//! Drives the command-line interface in-process and prints what `bohr`
//! would print.
//!
//! Run with `cargo run --example cli_in_process`.

use bohr_radius::cli::run;

fn main() {
    let commands: [&[&str]; 4] = [
        &["radius", "--pair", "derivative", "--m", "1"],
        &["bombieri", "--pair", "id0", "--r", "0.5"],
        &[
            "sweep",
            "--quantity",
            "integral_with_a",
            "--start",
            "0.88",
            "--stop",
            "0.9",
            "--count",
            "5",
        ],
        &["radius", "--pair", "integral", "--a", "0.5"],
    ];
    for args in commands {
        let out = run(std::iter::once("bohr").chain(args.iter().copied()));
        println!("$ bohr {}", args.join(" "));
        print!("{}{}", out.stdout, out.stderr);
        println!("[exit {}]\n", out.code);
    }
}
