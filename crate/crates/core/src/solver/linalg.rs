use num_traits::Zero;

use crate::rational::Rational;

/// Rank of a dense rational matrix by exact Gaussian elimination.
pub fn rank(rows: &[Vec<Rational>]) -> usize {
    let mut m: Vec<Vec<Rational>> = rows.to_vec();
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..cols {
        let Some(pivot) = (rank..m.len()).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, pivot);
        let lead = m[rank][col].clone();
        for v in m[rank].iter_mut().skip(col) {
            *v /= &lead;
        }
        for r in 0..m.len() {
            if r == rank || m[r][col].is_zero() {
                continue;
            }
            let f = m[r][col].clone();
            let (src, dst) = if r < rank {
                let (lo, hi) = m.split_at_mut(rank);
                (&hi[0], &mut lo[r])
            } else {
                let (lo, hi) = m.split_at_mut(r);
                (&lo[rank], &mut hi[0])
            };
            for (d, s) in dst.iter_mut().zip(src).skip(col) {
                *d -= &f * s;
            }
        }
        rank += 1;
        if rank == m.len() {
            break;
        }
    }
    rank
}
