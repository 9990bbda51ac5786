//! Brute-force reference for `M*`, sharing no arithmetic with the library solver.
//!
//! The affine solution set of `A x = b` is parameterized by its free atoms
//! (own reduced row echelon form over i128 fractions). Free atoms range over
//! `[-2, 2]` on a grid of step `1/64`, and the L1 norm is evaluated at every
//! grid point with integer arithmetic scaled by a common denominator.

#![allow(dead_code)]

use num_traits::ToPrimitive;
use quasiprob::rational::Rational;
use quasiprob::solver::ConstraintSystem;

pub const STEPS_PER_UNIT: i128 = 64;
pub const RANGE: i128 = 2;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Frac {
    pub num: i128,
    pub den: i128,
}

fn gcd(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

fn lcm(a: i128, b: i128) -> i128 {
    a / gcd(a, b) * b
}

impl Frac {
    pub fn new(num: i128, den: i128) -> Self {
        assert!(den != 0);
        let g = gcd(num, den).max(1);
        let s = if den < 0 { -1 } else { 1 };
        Frac {
            num: s * num / g,
            den: s * den / g,
        }
    }
    pub fn zero() -> Self {
        Frac::new(0, 1)
    }
    pub fn is_zero(self) -> bool {
        self.num == 0
    }
    pub fn add(self, o: Frac) -> Frac {
        Frac::new(self.num * o.den + o.num * self.den, self.den * o.den)
    }
    pub fn sub(self, o: Frac) -> Frac {
        Frac::new(self.num * o.den - o.num * self.den, self.den * o.den)
    }
    pub fn mul(self, o: Frac) -> Frac {
        Frac::new(self.num * o.num, self.den * o.den)
    }
    pub fn div(self, o: Frac) -> Frac {
        Frac::new(self.num * o.den, self.den * o.num)
    }
    pub fn from_rational(r: &Rational) -> Frac {
        Frac::new(r.numer().to_i128().unwrap(), r.denom().to_i128().unwrap())
    }
    pub fn to_rational(self) -> Rational {
        Rational::new(self.num.into(), self.den.into())
    }
}

/// `x = x0 + Σ_k t_k · dirs[k]`, one direction per free atom.
pub struct AffineSet {
    pub x0: Vec<Frac>,
    pub dirs: Vec<Vec<Frac>>,
}

/// Particular solution and null-space basis by Gauss-Jordan elimination, or
/// `None` when the rows are inconsistent.
pub fn affine_solutions(a: &[Vec<Frac>], b: &[Frac]) -> Option<AffineSet> {
    let n = a.first().map_or(0, Vec::len);
    let mut m: Vec<Vec<Frac>> = a
        .iter()
        .zip(b)
        .map(|(row, &v)| row.iter().copied().chain(std::iter::once(v)).collect())
        .collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..n {
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let lead = m[r][c];
        for v in m[r].iter_mut() {
            *v = v.div(lead);
        }
        for i in 0..m.len() {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c];
                let pivot_row = m[r].clone();
                for (v, p) in m[i].iter_mut().zip(&pivot_row) {
                    *v = v.sub(f.mul(*p));
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    if m[r..].iter().any(|row| !row[n].is_zero()) {
        return None;
    }
    let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    let mut x0 = vec![Frac::zero(); n];
    for (i, &c) in pivots.iter().enumerate() {
        x0[c] = m[i][n];
    }
    let dirs = free
        .iter()
        .map(|&f| {
            let mut d = vec![Frac::zero(); n];
            d[f] = Frac::new(1, 1);
            for (i, &c) in pivots.iter().enumerate() {
                d[c] = Frac::zero().sub(m[i][f]);
            }
            d
        })
        .collect();
    Some(AffineSet { x0, dirs })
}

pub struct GridResult {
    /// Smallest L1 norm over the grid.
    pub min: Rational,
    /// Largest amount the L1 norm can drop on moving from a grid point to any
    /// point within half a step of it.
    pub resolution: Rational,
    pub points: u64,
}

pub fn grid_min(cs: &ConstraintSystem) -> Option<GridResult> {
    let (a, b) = cs.matrix();
    let a: Vec<Vec<Frac>> = a
        .iter()
        .map(|r| r.iter().map(Frac::from_rational).collect())
        .collect();
    let b: Vec<Frac> = b.iter().map(Frac::from_rational).collect();
    let set = affine_solutions(&a, &b)?;
    let k = set.dirs.len();
    assert!(k <= 3, "grid oracle limited to nullity 3, got {k}");

    // Scale so that x0 and the per-step moves are integers.
    let mut scale = 1;
    for v in &set.x0 {
        scale = lcm(scale, v.den);
    }
    for v in set.dirs.iter().flatten() {
        scale = lcm(scale, STEPS_PER_UNIT * v.den);
    }
    let x0: Vec<i128> = set.x0.iter().map(|v| v.num * (scale / v.den)).collect();
    let steps: Vec<Vec<i128>> = set
        .dirs
        .iter()
        .map(|d| {
            d.iter()
                .map(|v| v.num * (scale / v.den) / STEPS_PER_UNIT)
                .collect()
        })
        .collect();
    let lo = -RANGE * STEPS_PER_UNIT;
    let hi = RANGE * STEPS_PER_UNIT;
    let ticks = |i: usize| if i < k { lo..=hi } else { 0..=0 };

    let mut best = i128::MAX;
    let mut points = 0u64;
    for t0 in ticks(0) {
        for t1 in ticks(1) {
            for t2 in ticks(2) {
                let t = [t0, t1, t2];
                let mut l1 = 0i128;
                for (atom, base) in x0.iter().enumerate() {
                    let mut v = *base;
                    for (d, s) in steps.iter().enumerate() {
                        v += t[d] * s[atom];
                    }
                    l1 += v.abs();
                }
                best = best.min(l1);
                points += 1;
            }
        }
    }
    let min = Frac::new(best, scale).to_rational();
    let col_norms: i128 = steps.iter().flatten().map(|v| v.abs()).sum();
    let resolution = Frac::new(col_norms, 2 * scale).to_rational();
    Some(GridResult {
        min,
        resolution,
        points,
    })
}

/// Nullity of the system as seen by the oracle's own elimination.
pub fn oracle_nullity(cs: &ConstraintSystem) -> Option<usize> {
    let (a, b) = cs.matrix();
    let a: Vec<Vec<Frac>> = a
        .iter()
        .map(|r| r.iter().map(Frac::from_rational).collect())
        .collect();
    let b: Vec<Frac> = b.iter().map(Frac::from_rational).collect();
    affine_solutions(&a, &b).map(|s| s.dirs.len())
}

pub mod gen {
    use quasiprob::measure::{Assignment, Event, Outcome, SampleSpace, SignedMeasure};
    use quasiprob::rational::{ratio, Rational};
    use quasiprob::solver::ConstraintSystem;
    use rand::Rng;

    pub const NAMES: [&str; 3] = ["X", "Y", "Z"];

    pub fn space<R: Rng>(rng: &mut R) -> SampleSpace {
        let n = rng.gen_range(1..=3);
        SampleSpace::new(&NAMES[..n]).unwrap()
    }

    pub fn partial<R: Rng>(rng: &mut R, space: &SampleSpace) -> Assignment {
        let mut a = Assignment::new();
        for v in space.variables() {
            match rng.gen_range(0..3) {
                0 => a.insert(v, Outcome::Plus).unwrap(),
                1 => a.insert(v, Outcome::Minus).unwrap(),
                _ => {}
            }
        }
        a
    }

    /// Normalized measure with integer weights in `lo..=hi` before scaling.
    pub fn measure<R: Rng>(rng: &mut R, space: &SampleSpace, lo: i64, hi: i64) -> SignedMeasure {
        loop {
            let w: Vec<i64> = (0..space.atom_count())
                .map(|_| rng.gen_range(lo..=hi))
                .collect();
            let total: i64 = w.iter().sum();
            if total != 0 {
                let mass = w.iter().map(|&x| ratio(x, total)).collect();
                return SignedMeasure::new(space, mass).unwrap();
            }
        }
    }

    /// Rows read off a hidden measure, so the system is always signed-feasible.
    pub fn rows_of<R: Rng>(rng: &mut R, m: &SignedMeasure) -> ConstraintSystem {
        let count = rng.gen_range(0..=6);
        let rows: Vec<(Event, Rational)> = (0..count)
            .map(|_| {
                let e = Event::cylinder(m.space(), &partial(rng, m.space())).unwrap();
                let v = m.event_mass(&e).unwrap();
                (e, v)
            })
            .collect();
        ConstraintSystem::from_rows(m.space(), rows).unwrap()
    }

    /// Mix of systems from proper measures, signed measures, and arbitrary row values.
    pub fn system<R: Rng>(rng: &mut R) -> ConstraintSystem {
        let s = space(rng);
        match rng.gen_range(0..3) {
            0 => {
                let m = measure(rng, &s, 0, 4);
                rows_of(rng, &m)
            }
            1 => {
                let m = measure(rng, &s, -3, 4);
                rows_of(rng, &m)
            }
            _ => {
                let count = rng.gen_range(1..=4);
                let rows: Vec<(Event, Rational)> = (0..count)
                    .map(|_| {
                        let e = Event::cylinder(&s, &partial(rng, &s)).unwrap();
                        (e, ratio(rng.gen_range(-2..=6), 4))
                    })
                    .collect();
                ConstraintSystem::from_rows(&s, rows).unwrap()
            }
        }
    }

    /// Correlation `k/12` with `|k| ≤ 12`.
    pub fn correlation<R: Rng>(rng: &mut R) -> Rational {
        ratio(rng.gen_range(-12..=12), 12)
    }
}
