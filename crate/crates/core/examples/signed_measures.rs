//! Signed measures on a small space: Jordan decomposition, marginals,
//! axiom checks and a nonmonotone pair.

use quasiprob::measure::{
    validate_kolmogorov, validate_upper, SampleSpace, SignedMeasure, UpperTable,
};
use quasiprob::rational::ratio;

fn main() -> quasiprob::Result<()> {
    let space = SampleSpace::new(&["X", "Y"])?;
    let m = SignedMeasure::new(
        &space,
        vec![ratio(1, 2), ratio(-1, 4), ratio(1, 4), ratio(1, 2)],
    )?;
    for atom in 0..space.atom_count() {
        println!("{}  {}", space.atom_label(atom), m.atom_mass(atom));
    }
    println!("total {}, L1 {}", m.total(), m.l1_norm());
    let (pos, neg) = m.jordan_decompose();
    println!("Jordan: positive {}, negative {}", pos.total(), neg.total());
    println!("marginal on Y: {:?}", m.marginalize(&["Y"])?);
    for v in validate_kolmogorov(&m) {
        println!("{v}");
    }
    if let Some((s1, s2)) = m.nonmonotonicity_witness() {
        println!(
            "{s1} ({}) is inside {s2} ({})",
            m.event_mass(&s1)?,
            m.event_mass(&s2)?
        );
    }

    let mut upper = UpperTable::default();
    upper.atoms.insert(0, ratio(1, 2));
    upper.atoms.insert(1, ratio(1, 2));
    upper.pairs.insert((0, 1), ratio(3, 2));
    upper.whole = Some(ratio(1, 1));
    for v in validate_upper(&upper) {
        println!("{v}");
    }
    Ok(())
}
