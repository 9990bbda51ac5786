//! Families of overlapping contexts: contextual bias, `M*` of a family, and
//! the CHSH correlation bridge.

use num_traits::{One, Signed};

use crate::error::{Error, Result};
use crate::measure::{Assignment, Context, Event, Outcome, SampleSpace};
use crate::rational::{int, Rational};
use crate::solver::{self, ConstraintSystem, SolveResult};

/// Contexts over subsets of a common ordered variable list.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ContextFamily {
    space: SampleSpace,
    contexts: Vec<Context>,
}

impl ContextFamily {
    pub fn new<S: AsRef<str>>(global_variables: &[S], contexts: Vec<Context>) -> Result<Self> {
        let space = SampleSpace::new(global_variables)?;
        for c in &contexts {
            if let Some(v) = c.variables().iter().find(|v| !space.contains(v)) {
                return Err(Error::ContextOutsideFamily(v.clone()));
            }
        }
        Ok(Self { space, contexts })
    }

    /// Joins several families; global variables keep first-appearance order.
    pub fn merge(parts: &[ContextFamily]) -> Result<Self> {
        let mut vars: Vec<String> = Vec::new();
        let mut contexts = Vec::new();
        for part in parts {
            for v in part.global_variables() {
                if !vars.contains(v) {
                    vars.push(v.clone());
                }
            }
            contexts.extend(part.contexts.iter().cloned());
        }
        Self::new(&vars, contexts)
    }

    pub fn global_variables(&self) -> &[String] {
        self.space.variables()
    }

    pub fn space(&self) -> &SampleSpace {
        &self.space
    }

    pub fn contexts(&self) -> &[Context] {
        &self.contexts
    }

    /// One cylinder row per atom of every context, on the global space.
    pub fn constraint_system(&self) -> ConstraintSystem {
        let mut rows = Vec::new();
        for c in &self.contexts {
            for (atom, mass) in c.distribution().masses().iter().enumerate() {
                let partial = c.space().assignment_of(atom);
                let event =
                    Event::cylinder(&self.space, &partial).expect("context variables are global");
                rows.push((event, mass.clone()));
            }
        }
        ConstraintSystem::from_rows(&self.space, rows).expect("values come from proper contexts")
    }

    fn pair_context(&self, x: &str, y: &str) -> Result<&Context> {
        self.contexts
            .iter()
            .find(|c| c.space().contains(x) && c.space().contains(y))
            .ok_or_else(|| Error::MissingPairContext(x.to_string(), y.to_string()))
    }

    /// `E(xy)` from the first context containing both variables.
    pub fn correlation(&self, x: &str, y: &str) -> Result<Rational> {
        self.pair_context(x, y)?.correlation(x, y)
    }
}

/// Two contexts that disagree on the probability of a shared event.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BiasWitness {
    /// Partial assignment over variables both contexts contain.
    pub event: Assignment,
    pub context_i: usize,
    pub context_j: usize,
    pub value_i: Rational,
    pub value_j: Rational,
}

/// First shared event whose marginal differs between two contexts.
///
/// Context pairs `(i, j)` with `i < j` are scanned in order. Within a pair,
/// sub-assignments of the shared variables go by size, then by variable
/// order, then with `+1` before `−1`.
pub fn detect_bias(f: &ContextFamily) -> Option<BiasWitness> {
    let ctx = f.contexts();
    for i in 0..ctx.len() {
        for j in i + 1..ctx.len() {
            let shared: Vec<&String> = f
                .global_variables()
                .iter()
                .filter(|v| ctx[i].space().contains(v) && ctx[j].space().contains(v))
                .collect();
            for size in 1..=shared.len() {
                for subset in combinations(shared.len(), size) {
                    for code in 0..1usize << size {
                        let mut event = Assignment::new();
                        for (t, &k) in subset.iter().enumerate() {
                            let outcome = if code >> (size - 1 - t) & 1 == 0 {
                                Outcome::Plus
                            } else {
                                Outcome::Minus
                            };
                            event
                                .insert(shared[k], outcome)
                                .expect("distinct shared variables");
                        }
                        let value_i = ctx[i].probability(&event).expect("shared variable");
                        let value_j = ctx[j].probability(&event).expect("shared variable");
                        if value_i != value_j {
                            return Some(BiasWitness {
                                event,
                                context_i: i,
                                context_j: j,
                                value_i,
                                value_j,
                            });
                        }
                    }
                }
            }
        }
    }
    None
}

/// Index subsets of `0..n` of the given size, in lexicographic order.
fn combinations(n: usize, size: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(size);
    fn go(
        start: usize,
        n: usize,
        size: usize,
        current: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if current.len() == size {
            out.push(current.clone());
            return;
        }
        for k in start..n {
            current.push(k);
            go(k + 1, n, size, current, out);
            current.pop();
        }
    }
    go(0, n, size, &mut current, &mut out);
    out
}

/// Minimum-L1 signed joint on the global space compatible with every context.
pub fn family_mstar(f: &ContextFamily) -> SolveResult {
    solver::minimize_l1(&f.constraint_system())
}

/// Names of the four CHSH variables: two settings per party.
#[derive(Clone, Copy, Debug)]
pub struct ChshNames<'a> {
    pub a: &'a str,
    pub a2: &'a str,
    pub b: &'a str,
    pub b2: &'a str,
}

impl Default for ChshNames<'static> {
    fn default() -> Self {
        Self {
            a: "A",
            a2: "A2",
            b: "B",
            b2: "B2",
        }
    }
}

/// CHSH value: the largest `|ΣE − 2E_k|` over the four placements of a single minus sign.
pub fn chsh_s(f: &ContextFamily, names: ChshNames<'_>) -> Result<Rational> {
    let e = [
        f.correlation(names.a, names.b)?,
        f.correlation(names.a, names.b2)?,
        f.correlation(names.a2, names.b)?,
        f.correlation(names.a2, names.b2)?,
    ];
    let sum: Rational = e.iter().sum();
    Ok(e.iter()
        .map(|ek| (&sum - ek * int(2)).abs())
        .max()
        .expect("four terms"))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MstarSRelation {
    pub mstar: Rational,
    pub s: Rational,
    /// `M* = S/2` when `S > 2`, `M* = 1` otherwise.
    pub holds: bool,
}

pub fn check_mstar_s_relation(f: &ContextFamily, names: ChshNames<'_>) -> Result<MstarSRelation> {
    let s = chsh_s(f, names)?;
    let mstar = family_mstar(f).mstar.ok_or(Error::NoSignedJoint)?;
    let holds = if s > int(2) {
        mstar == &s / int(2)
    } else {
        mstar.is_one()
    };
    Ok(MstarSRelation { mstar, s, holds })
}
