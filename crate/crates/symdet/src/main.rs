use std::io::{Read, Write};

fn main() {
    let argv: Vec<String> = std::env::args().collect();
    let needs_stdin = argv.iter().skip(1).any(|a| a == "-");
    let mut stdin_text = String::new();
    if needs_stdin {
        if let Err(e) = std::io::stdin().read_to_string(&mut stdin_text) {
            eprintln!("error: failed to read stdin: {e}");
            std::process::exit(1);
        }
    }
    let (code, out, err) = symdet::cli::run(&argv, &stdin_text);
    print!("{out}");
    eprint!("{err}");
    let _ = std::io::stdout().flush();
    std::process::exit(code);
}
