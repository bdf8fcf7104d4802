//! Driving the command-line front end in process.

fn main() {
    let mut out = Vec::new();
    let code = orbitcode::cli::run(
        ["orbitcode", "classify", "--n", "6", "--k", "3", "--format", "jsonl"],
        &mut out,
        &mut std::io::stderr(),
    );
    print!("{}", String::from_utf8_lossy(&out));
    println!("exit code {code}");
}
