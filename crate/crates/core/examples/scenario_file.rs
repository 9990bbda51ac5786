//! Writes a scenario file for two Mach-Zehnder cases, reads it back and runs
//! the command-line front end on it.

use quasiprob::cli::{self, ScenarioFile};
use quasiprob::scenarios::mach_zehnder_cases;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let file = ScenarioFile::from_family(&mach_zehnder_cases(&[1, 6])?);
    let path = std::env::temp_dir().join("quasiprob-cases-1-6.json");
    std::fs::write(&path, file.to_json())?;
    println!("{}", file.to_json());

    let path = path.to_str().ok_or("temp path is not UTF-8")?;
    let mut out = std::io::stdout();
    let mut err = std::io::stderr();
    for command in ["bias", "viable"] {
        let code = cli::run(["quasiprob", command, path], &mut out, &mut err);
        println!("exit {code}\n");
    }
    let code = cli::run(
        [
            "quasiprob",
            "builtin",
            "mz-counterfactual",
            "--format",
            "json",
        ],
        &mut out,
        &mut err,
    );
    println!("exit {code}");
    Ok(())
}
