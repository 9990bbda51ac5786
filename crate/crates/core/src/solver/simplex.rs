//! Two-phase primal simplex over exact rationals with Bland's rule.
//!
//! Problems are in standard form: minimize `c·y` subject to `A y = b`,
//! `y ≥ 0`. Entering and leaving ties are broken by lowest index, so the
//! returned vertex depends only on the input.

use num_traits::{One, Signed, Zero};

use crate::rational::Rational;

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) enum LpOutcome {
    Optimal { y: Vec<Rational>, value: Rational },
    Infeasible,
    Unbounded,
}

struct Tableau {
    /// Constraint rows; the last entry of each row is the right-hand side.
    rows: Vec<Vec<Rational>>,
    /// Reduced costs; the last entry is minus the current objective value.
    cost: Vec<Rational>,
    basis: Vec<usize>,
}

impl Tableau {
    fn rhs(&self) -> usize {
        self.cost.len() - 1
    }

    fn pivot(&mut self, row: usize, col: usize) {
        let lead = self.rows[row][col].clone();
        if !lead.is_one() {
            for v in &mut self.rows[row] {
                *v /= &lead;
            }
        }
        let pivot_row = self.rows[row].clone();
        for (i, r) in self.rows.iter_mut().enumerate() {
            if i != row {
                eliminate(r, &pivot_row, col);
            }
        }
        eliminate(&mut self.cost, &pivot_row, col);
        self.basis[row] = col;
    }

    /// Runs Bland's rule over the first `allowed` columns until optimal or unbounded.
    fn optimize(&mut self, allowed: usize) -> bool {
        let rhs = self.rhs();
        loop {
            let Some(enter) = (0..allowed).find(|&j| self.cost[j].is_negative()) else {
                return true;
            };
            let mut leave: Option<(usize, Rational)> = None;
            for (i, r) in self.rows.iter().enumerate() {
                if !r[enter].is_positive() {
                    continue;
                }
                let ratio = &r[rhs] / &r[enter];
                let better = match &leave {
                    None => true,
                    Some((best, best_ratio)) => {
                        ratio < *best_ratio
                            || (ratio == *best_ratio && self.basis[i] < self.basis[*best])
                    }
                };
                if better {
                    leave = Some((i, ratio));
                }
            }
            match leave {
                Some((row, _)) => self.pivot(row, enter),
                None => return false,
            }
        }
    }

    fn objective(&self) -> Rational {
        -&self.cost[self.rhs()]
    }

    fn primal(&self, n: usize) -> Vec<Rational> {
        let rhs = self.rhs();
        let mut y = vec![Rational::zero(); n];
        for (i, &b) in self.basis.iter().enumerate() {
            if b < n {
                y[b] = self.rows[i][rhs].clone();
            }
        }
        y
    }
}

fn eliminate(target: &mut [Rational], pivot_row: &[Rational], col: usize) {
    if target[col].is_zero() {
        return;
    }
    let f = target[col].clone();
    for (t, p) in target.iter_mut().zip(pivot_row) {
        if !p.is_zero() {
            *t -= &f * p;
        }
    }
}

/// Phase 1: a basic feasible tableau over the original columns, with redundant rows removed.
fn phase_one(a: &[Vec<Rational>], b: &[Rational], n: usize) -> Option<Tableau> {
    let m = a.len();
    let width = n + m + 1;
    let mut rows = Vec::with_capacity(m);
    for (i, (row, rhs)) in a.iter().zip(b).enumerate() {
        assert_eq!(row.len(), n, "row {i} has the wrong width");
        let flip = rhs.is_negative();
        let mut r = vec![Rational::zero(); width];
        for (j, v) in row.iter().enumerate() {
            r[j] = if flip { -v } else { v.clone() };
        }
        r[n + i] = Rational::one();
        r[width - 1] = if flip { -rhs } else { rhs.clone() };
        rows.push(r);
    }
    let mut cost = vec![Rational::zero(); width];
    for r in &rows {
        for j in 0..n {
            cost[j] -= &r[j];
        }
        cost[width - 1] -= &r[width - 1];
    }
    let mut t = Tableau {
        rows,
        cost,
        basis: (n..n + m).collect(),
    };
    // Phase 1 is bounded below by zero, so this always terminates optimal.
    t.optimize(n + m);
    if !t.objective().is_zero() {
        return None;
    }

    // Drive artificials out of the basis; rows where that is impossible are redundant.
    let mut i = 0;
    while i < t.rows.len() {
        if t.basis[i] >= n {
            match (0..n).find(|&j| !t.rows[i][j].is_zero()) {
                Some(j) => {
                    t.pivot(i, j);
                    i += 1;
                }
                None => {
                    t.rows.remove(i);
                    t.basis.remove(i);
                }
            }
        } else {
            i += 1;
        }
    }
    // Drop the artificial columns.
    for r in &mut t.rows {
        let rhs = r[width - 1].clone();
        r.truncate(n);
        r.push(rhs);
    }
    t.cost = vec![Rational::zero(); n + 1];
    Some(t)
}

/// A nonnegative solution of `A y = b`, if one exists.
pub(crate) fn find_feasible(
    a: &[Vec<Rational>],
    b: &[Rational],
    n: usize,
) -> Option<Vec<Rational>> {
    phase_one(a, b, n).map(|t| t.primal(n))
}

/// Minimizes `c·y` subject to `A y = b`, `y ≥ 0`.
pub(crate) fn minimize(a: &[Vec<Rational>], b: &[Rational], c: &[Rational]) -> LpOutcome {
    let n = c.len();
    let Some(mut t) = phase_one(a, b, n) else {
        return LpOutcome::Infeasible;
    };
    let mut cost: Vec<Rational> = c.to_vec();
    cost.push(Rational::zero());
    for (row, &basic) in t.rows.iter().zip(&t.basis) {
        let cb = &c[basic];
        if cb.is_zero() {
            continue;
        }
        for (k, v) in row.iter().enumerate() {
            cost[k] -= cb * v;
        }
    }
    t.cost = cost;
    if !t.optimize(n) {
        return LpOutcome::Unbounded;
    }
    LpOutcome::Optimal {
        y: t.primal(n),
        value: t.objective(),
    }
}
