//! Counterfactual Mach-Zehnder analysis: `M* = 3`, the minimizer family and
//! the which-path conditionals it implies.

use quasiprob::measure::{Assignment, Event};
use quasiprob::rational::ratio;
use quasiprob::scenarios::{mz_counterfactual, mz_family_member, mz_space};
use quasiprob::solver;

fn main() -> quasiprob::Result<()> {
    let cs = mz_counterfactual();
    let (rank, nullity) = solver::rank_nullity(&cs);
    let r = solver::minimize_l1(&cs);
    let mstar = r.mstar.clone().expect("signed joint exists");
    println!("{} rows, rank {rank}, nullity {nullity}", cs.rows().len());
    println!("proper joint: {}", solver::feasible_proper(&cs).is_some());
    println!("status {}, M* = {}", r.status.as_str(), mstar);

    let space = mz_space();
    let cyl = |pairs: &[(&str, i64)]| Event::cylinder(&space, &Assignment::of(pairs));
    let (da, db, d1, d2) = (
        cyl(&[("Da", 1)])?,
        cyl(&[("Db", 1)])?,
        cyl(&[("D1", 1)])?,
        cyl(&[("D2", 1)])?,
    );
    for k in 0..=4 {
        let alpha = ratio(k, 8);
        let m = mz_family_member(&alpha)?;
        println!(
            "alpha = {alpha:<3}  member of minimizers: {}  P(da|d1) = {}  P(db|d1) = {}",
            solver::verify_member(&cs, &m, &mstar)?,
            m.signed_conditional(&da, &d1)?,
            m.signed_conditional(&db, &d1)?,
        );
    }

    let m = mz_family_member(&ratio(1, 2))?;
    match m.signed_conditional(&db, &d2) {
        Ok(v) => println!("P(db|d2) = {v}"),
        Err(e) => println!("P(db|d2): {e}"),
    }
    let (pos, neg) = m.jordan_decompose();
    println!(
        "alpha = 1/2: positive part {}, negative part {}",
        pos.total(),
        neg.total()
    );
    if let Some((s1, s2)) = m.nonmonotonicity_witness() {
        println!(
            "nonmonotone: {s1} has mass {} but its superset {s2} has mass {}",
            m.event_mass(&s1)?,
            m.event_mass(&s2)?
        );
    }
    Ok(())
}
