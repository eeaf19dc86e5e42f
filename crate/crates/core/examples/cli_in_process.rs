//! Drives the command line in-process and captures its output.

use frobkit::cli::run_with_output;

fn main() {
    let commands: [&[&str]; 5] = [
        &["report", "4", "7", "11", "--list"],
        &["ap", "--a", "7", "--d", "2", "--k", "3", "--sum"],
        &["wsum", "7", "9", "11", "--lambda", "2", "--check"],
        &["--format", "csv", "quadruple", "--a", "10", "--c", "6"],
        &["geom", "--a", "17", "--k", "4"],
    ];
    for args in commands {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let code = run_with_output(
            std::iter::once("frobkit").chain(args.iter().copied()),
            &mut out,
            &mut err,
        );
        println!("$ frobkit {}", args.join(" "));
        print!("{}{}", String::from_utf8_lossy(&out), String::from_utf8_lossy(&err));
        println!("[exit {code}]\n");
    }
}
