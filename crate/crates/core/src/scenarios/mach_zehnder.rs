//! Mach-Zehnder interferometer with detectors `Da`, `Db` on the arms and
//! `D1`, `D2` at the outputs.
//!
//! Cases 1–4 use destructive (absorbing) arm detectors, cases 5–8
//! non-destructive ones. The counterfactual system keeps only the
//! post-selected runs with no arm detection, which is what makes a signed
//! joint possible.

use num_traits::{Signed, Zero};

use crate::contextuality::ContextFamily;
use crate::error::{Error, Result};
use crate::measure::{Assignment, Context, Event, SampleSpace, SignedMeasure};
use crate::rational::{half, int, ratio, Rational};
use crate::solver::{self, ConstraintSystem, SolveResult};

pub const MZ_VARIABLES: [&str; 4] = ["Da", "Db", "D1", "D2"];

pub fn mz_space() -> SampleSpace {
    SampleSpace::new(&MZ_VARIABLES).expect("fixed names")
}

/// Full assignment of the four detectors, `+1` meaning a click.
pub fn mz_atom(da: i64, db: i64, d1: i64, d2: i64) -> Assignment {
    Assignment::of(&[("Da", da), ("Db", db), ("D1", d1), ("D2", d2)])
}

fn case_variables(n: u8) -> &'static [&'static str] {
    match n {
        1 | 5 => &["D1", "D2"],
        2 | 6 => &["Da", "D1", "D2"],
        3 | 7 => &["Db", "D1", "D2"],
        _ => &MZ_VARIABLES,
    }
}

/// Observed joint of one experimental configuration, as a single-context family.
pub fn mach_zehnder_case(n: u8) -> Result<ContextFamily> {
    let q = ratio(1, 4);
    let h = half();
    // Labels list outcomes in the order of `case_variables(n)`.
    let entries: Vec<(&str, Rational)> = match n {
        1 | 5 => vec![("+-", int(1))],
        2 | 3 => vec![("-+-", h.clone()), ("--+", h)],
        4 => vec![("-+--", h.clone()), ("+---", h)],
        6 | 7 => vec![
            ("++-", q.clone()),
            ("+-+", q.clone()),
            ("-+-", q.clone()),
            ("--+", q),
        ],
        8 => vec![
            ("-+-+", q.clone()),
            ("-++-", q.clone()),
            ("+--+", q.clone()),
            ("+-+-", q),
        ],
        _ => return Err(Error::InvalidCase(n)),
    };
    let vars = case_variables(n);
    let context = Context::from_labels(vars, &entries)?;
    ContextFamily::new(vars, vec![context])
}

/// Several cases as one family over the detectors they use, in `Da, Db, D1, D2` order.
pub fn mach_zehnder_cases(cases: &[u8]) -> Result<ContextFamily> {
    let mut contexts = Vec::with_capacity(cases.len());
    for &n in cases {
        let family = mach_zehnder_case(n)?;
        contexts.extend(family.contexts().iter().cloned());
    }
    let used: Vec<&str> = MZ_VARIABLES
        .iter()
        .copied()
        .filter(|v| contexts.iter().any(|c| c.space().contains(v)))
        .collect();
    ContextFamily::new(&used, contexts)
}

fn counterfactual_rows(eps: &Rational) -> Vec<(Assignment, Rational)> {
    let h = half();
    vec![
        // Post-selected runs with the other arm blocked.
        (
            Assignment::of(&[("Da", -1), ("D1", 1), ("D2", -1)]),
            h.clone(),
        ),
        (
            Assignment::of(&[("Da", -1), ("D1", -1), ("D2", 1)]),
            h.clone(),
        ),
        (
            Assignment::of(&[("Db", -1), ("D1", -1), ("D2", 1)]),
            h.clone(),
        ),
        (
            Assignment::of(&[("Db", -1), ("D1", 1), ("D2", -1)]),
            h.clone(),
        ),
        // Interference at the outputs.
        (Assignment::of(&[("D1", 1), ("D2", 1)]), int(0)),
        (Assignment::of(&[("D1", 1), ("D2", -1)]), int(1) - eps),
        (Assignment::of(&[("D1", -1), ("D2", 1)]), eps.clone()),
        (Assignment::of(&[("D1", -1), ("D2", -1)]), int(0)),
        // A single photon on the arms.
        (Assignment::of(&[("Da", 1), ("Db", 1)]), int(0)),
        (Assignment::of(&[("Da", 1), ("Db", -1)]), h.clone()),
        (Assignment::of(&[("Da", -1), ("Db", 1)]), h),
        (Assignment::of(&[("Da", -1), ("Db", -1)]), int(0)),
    ]
}

/// The counterfactual system: twelve cylinder rows plus normalization.
pub fn mz_counterfactual() -> ConstraintSystem {
    ConstraintSystem::assemble(&mz_space(), &counterfactual_rows(&Rational::zero()))
        .expect("consistent rows")
}

/// Counterfactual system with the interference rows detuned to `1 − eps` / `eps`.
/// The post-selected and photon-number rows are unchanged.
pub fn mz_counterfactual_detuned(eps: &Rational) -> Result<ConstraintSystem> {
    if eps.is_negative() || eps >= &half() {
        return Err(Error::EpsOutOfRange(eps.clone()));
    }
    ConstraintSystem::assemble(&mz_space(), &counterfactual_rows(eps))
}

/// General solution of the counterfactual system in the five free parameters.
pub fn mz_general_member(
    alpha: &Rational,
    beta: &Rational,
    gamma: &Rational,
    delta: &Rational,
    theta: &Rational,
) -> SignedMeasure {
    let h = half();
    let (a, b, g, d, t) = (alpha, beta, gamma, delta, theta);
    let entries = vec![
        (mz_atom(1, 1, 1, 1), a.clone()),
        (mz_atom(1, 1, 1, -1), t + &h * (d - g + b - a)),
        (mz_atom(1, 1, -1, 1), -&h - t),
        (mz_atom(1, 1, -1, -1), &h + &h * (-d + g - b - a)),
        (mz_atom(1, -1, 1, 1), &h * (-d - g + b - a)),
        (mz_atom(1, -1, 1, -1), &h - t + &h * (-d + g - b + a)),
        (mz_atom(1, -1, -1, 1), t.clone()),
        (mz_atom(1, -1, -1, -1), d.clone()),
        (mz_atom(-1, 1, 1, 1), &h * (d - g - b - a)),
        (mz_atom(-1, 1, 1, -1), &h - t + &h * (-d + g - b + a)),
        (mz_atom(-1, 1, -1, 1), t.clone()),
        (mz_atom(-1, 1, -1, -1), b.clone()),
        (mz_atom(-1, -1, 1, 1), g.clone()),
        (mz_atom(-1, -1, 1, -1), t + &h * (d - g + b - a)),
        (mz_atom(-1, -1, -1, 1), &h - t),
        (mz_atom(-1, -1, -1, -1), -&h + &h * (-d - g - b + a)),
    ];
    SignedMeasure::from_assignments(&mz_space(), &entries).expect("full assignments")
}

/// Member of the one-parameter family of minimizers, `0 ≤ alpha ≤ 1/2`.
pub fn mz_family_member(alpha: &Rational) -> Result<SignedMeasure> {
    if alpha.is_negative() || alpha > &half() {
        return Err(Error::AlphaOutOfRange(alpha.clone()));
    }
    let zero = Rational::zero();
    Ok(mz_general_member(alpha, &zero, &-alpha, &zero, &zero))
}

/// Which-path conditional `P(d_b | d_2)` read off the deterministic LP witness
/// of a detuned system, next to the value `−1/2 + α` it is compared with.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DetunedConditional {
    pub eps: Rational,
    pub mstar: Rational,
    /// Mass the witness puts on the atom where all four detectors click.
    pub alpha: Rational,
    pub conditional: Rational,
    pub target: Rational,
    pub gap: Rational,
}

pub fn detuned_which_path(eps: &Rational) -> Result<DetunedConditional> {
    let cs = mz_counterfactual_detuned(eps)?;
    let SolveResult { mstar, witness, .. } = solver::minimize_l1(&cs);
    let (mstar, witness) = mstar.zip(witness).ok_or(Error::NoSignedJoint)?;
    let space = witness.space().clone();
    let alpha = witness.mass_of(&mz_atom(1, 1, 1, 1))?.clone();
    let db = Event::cylinder(&space, &Assignment::of(&[("Db", 1)]))?;
    let d2 = Event::cylinder(&space, &Assignment::of(&[("D2", 1)]))?;
    let conditional = witness.signed_conditional(&db, &d2)?;
    let target = &alpha - half();
    let gap = (&conditional - &target).abs();
    Ok(DetunedConditional {
        eps: eps.clone(),
        mstar,
        alpha,
        conditional,
        target,
        gap,
    })
}

/// Whether the detuned conditionals approach `−1/2 + α` as `eps` shrinks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DetunedConvergence {
    /// One entry per `eps`, in decreasing `eps` order.
    pub points: Vec<DetunedConditional>,
    /// Gaps never grow as `eps` decreases.
    pub monotone: bool,
    /// Each gap is at most half the previous one.
    pub halves_per_step: bool,
}

impl DetunedConvergence {
    pub fn converges(&self) -> bool {
        self.monotone && self.halves_per_step
    }
}

pub fn detuned_convergence(eps_values: &[Rational]) -> Result<DetunedConvergence> {
    let mut eps_values = eps_values.to_vec();
    eps_values.sort_by(|a, b| b.cmp(a));
    let points = eps_values
        .iter()
        .map(detuned_which_path)
        .collect::<Result<Vec<_>>>()?;
    let monotone = points.windows(2).all(|w| w[1].gap <= w[0].gap);
    let halves_per_step = points.windows(2).all(|w| &w[1].gap * int(2) <= w[0].gap);
    Ok(DetunedConvergence {
        points,
        monotone,
        halves_per_step,
    })
}
