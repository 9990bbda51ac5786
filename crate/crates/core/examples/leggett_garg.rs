//! Three-time correlation chains: which pair correlations admit a proper joint.

use quasiprob::contextuality::family_mstar;
use quasiprob::rational::{ratio, Rational};
use quasiprob::scenarios::leggett_garg_chain;

fn main() -> quasiprob::Result<()> {
    let cases: [[Rational; 3]; 5] = [
        [ratio(1, 1), ratio(1, 1), ratio(1, 1)],
        [ratio(0, 1), ratio(0, 1), ratio(0, 1)],
        [ratio(1, 2), ratio(1, 2), ratio(-1, 2)],
        [ratio(3, 4), ratio(3, 4), ratio(-3, 4)],
        [ratio(1, 1), ratio(1, 1), ratio(-1, 1)],
    ];
    for [xy, yz, xz] in &cases {
        let r = family_mstar(&leggett_garg_chain(xy, yz, xz)?);
        println!(
            "E(XY) = {xy:<4} E(YZ) = {yz:<4} E(XZ) = {xz:<5} {:<18} M* = {}",
            r.status.as_str(),
            r.mstar.map_or("-".to_string(), |m| m.to_string())
        );
    }
    Ok(())
}
