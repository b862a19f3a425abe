//! Driving the command-line front end in-process.

use std::io;

fn main() {
    let runs: [&[&str]; 4] = [
        &["steinberg", "jh", "--type", "A2", "--lambda", "1,1"],
        &["steinberg", "count", "--type", "A3", "--I", "2"],
        &["steinberg", "kl", "--type", "A3", "--x", "1,3", "--y", "2,1,3,2", "--format", "json"],
        &["steinberg", "jh", "--type", "A2", "--lambda", "-1,0"],
    ];
    for argv in runs {
        println!("$ {}", argv.join(" "));
        let code = steinberg::cli::run(argv, &mut io::stdout(), &mut io::stdout());
        println!("exit {code}\n");
    }
}
