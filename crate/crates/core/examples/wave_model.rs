//! Classical wave through the interferometer, and the detector context it
//! induces once rounded to rationals.

use std::f64::consts::PI;

use quasiprob::rational::{int, ratio};
use quasiprob::scenarios::{wave_detection, WaveConfig};

fn main() -> quasiprob::Result<()> {
    println!(
        "{:>9} {:>10} {:>10} {:>8} {:>8}",
        "detuning", "I(D1)", "I(D2)", "p(D1)", "p(D2)"
    );
    for k in 0..=8 {
        let detuning = PI * k as f64 / 8.0;
        let w = wave_detection(&WaveConfig {
            amplitude: int(2),
            phi1: 0.3,
            phi2: 1.1,
            detuning,
        })?;
        println!(
            "{detuning:>9.4} {:>10.6} {:>10.6} {:>8.5} {:>8.5}",
            w.i_d1, w.i_d2, w.p_d1, w.p_d2
        );
    }
    let w = wave_detection(&WaveConfig::new(ratio(1, 1), PI / 3.0))?;
    let c = w.context(1_000_000)?;
    println!("context at detuning pi/3: {:?}", c.distribution());
    Ok(())
}
