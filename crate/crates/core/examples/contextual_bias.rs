//! Disagreeing contexts: bias witnesses across Mach-Zehnder configurations.

use quasiprob::contextuality::{detect_bias, family_mstar};
use quasiprob::scenarios::mach_zehnder_cases;

fn main() -> quasiprob::Result<()> {
    for cases in [&[5, 6][..], &[1, 4], &[2, 3], &[5, 6, 7, 8], &[1, 5]] {
        let f = mach_zehnder_cases(cases)?;
        let status = family_mstar(&f).status.as_str();
        match detect_bias(&f) {
            Some(w) => println!(
                "cases {cases:?}: {} is {} in case {} but {} in case {}; {status}",
                w.event, w.value_i, cases[w.context_i], w.value_j, cases[w.context_j]
            ),
            None => println!("cases {cases:?}: no bias; {status}"),
        }
    }
    Ok(())
}
