//! `M* = S/2` for Bell boxes: PR box, a rational Tsirelson box, and a sweep.

use quasiprob::contextuality::{check_mstar_s_relation, ChshNames};
use quasiprob::rational::ratio;
use quasiprob::scenarios::{bell_box, pr_box, tsirelson_box};

fn main() -> quasiprob::Result<()> {
    for (name, f) in [("PR box", pr_box()), ("Tsirelson", tsirelson_box())] {
        let r = check_mstar_s_relation(&f, ChshNames::default())?;
        println!(
            "{name:<10} S = {:<10} M* = {:<9} M* = S/2: {}",
            r.s, r.mstar, r.holds
        );
    }
    println!();
    println!("E(AB) = E(AB2) = E(A2B) = -E(A2B2) = e");
    for k in 0..=8 {
        let e = ratio(k, 8);
        let f = bell_box(&e, &e, &e, &-&e)?;
        let r = check_mstar_s_relation(&f, ChshNames::default())?;
        println!("e = {e:<4} S = {:<4} M* = {}", r.s, r.mstar);
    }
    Ok(())
}
