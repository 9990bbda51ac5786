//! Families built from pair correlations with unbiased single-variable marginals.

use num_traits::Signed;

use crate::contextuality::ContextFamily;
use crate::error::{Error, Result};
use crate::measure::Context;
use crate::rational::{int, ratio, Rational};

fn check(e: &Rational) -> Result<()> {
    if e.abs() > int(1) {
        return Err(Error::CorrelationOutOfRange(e.clone()));
    }
    Ok(())
}

/// Two-variable context with `p(xy) = (1 + xy·E)/4`.
pub fn pair_context(x: &str, y: &str, e: &Rational) -> Result<Context> {
    check(e)?;
    let q = ratio(1, 4);
    let same = &q * (int(1) + e);
    let diff = &q * (int(1) - e);
    Context::from_labels(
        &[x, y],
        &[
            ("++", same.clone()),
            ("+-", diff.clone()),
            ("-+", diff),
            ("--", same),
        ],
    )
}

/// CHSH family over `A, A2, B, B2` with contexts `(A,B), (A,B2), (A2,B), (A2,B2)`.
pub fn bell_box(
    e_ab: &Rational,
    e_ab2: &Rational,
    e_a2b: &Rational,
    e_a2b2: &Rational,
) -> Result<ContextFamily> {
    let contexts = vec![
        pair_context("A", "B", e_ab)?,
        pair_context("A", "B2", e_ab2)?,
        pair_context("A2", "B", e_a2b)?,
        pair_context("A2", "B2", e_a2b2)?,
    ];
    ContextFamily::new(&["A", "A2", "B", "B2"], contexts)
}

pub fn pr_box() -> ContextFamily {
    bell_box(&int(1), &int(1), &int(1), &int(-1)).expect("valid correlations")
}

/// Rational stand-in for the quantum maximum, `E = ±408/577 ≈ ±1/√2`.
pub fn tsirelson_box() -> ContextFamily {
    let e = ratio(408, 577);
    bell_box(&e, &e, &e, &-&e).expect("valid correlations")
}

/// One system measured at three times `X, Y, Z`, one context per pair of times.
pub fn leggett_garg_chain(
    e_xy: &Rational,
    e_yz: &Rational,
    e_xz: &Rational,
) -> Result<ContextFamily> {
    let contexts = vec![
        pair_context("X", "Y", e_xy)?,
        pair_context("Y", "Z", e_yz)?,
        pair_context("X", "Z", e_xz)?,
    ];
    ContextFamily::new(&["X", "Y", "Z"], contexts)
}
