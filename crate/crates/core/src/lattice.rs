//! Integer row lattices: rank and saturation by unimodular diagonalization.

use alloc::vec::Vec;

/// Rank of the integer span of `rows`, and whether that span is saturated
/// (`Z^k / L` torsion-free). Each row must have length `k`.
///
/// Any diagonal form reached by unimodular row and column operations has the
/// same product of nonzero entries as the Smith form, so the span is
/// saturated exactly when every pivot is a unit.
pub(crate) fn rank_and_saturation(rows: &[Vec<i64>], k: usize) -> (usize, bool) {
    let mut m: Vec<Vec<i128>> = rows.iter().map(|r| r.iter().map(|&x| i128::from(x)).collect()).collect();
    let nrows = m.len();
    let mut rank = 0;
    let mut saturated = true;
    while rank < nrows.min(k) {
        let Some((pi, pj)) = smallest(&m, rank..nrows, rank..k) else { break };
        m.swap(rank, pi);
        swap_cols(&mut m, rank, pj);
        let p = rank;
        loop {
            for i in p + 1..nrows {
                let q = m[i][p] / m[p][p];
                if q != 0 {
                    let (top, bottom) = m.split_at_mut(i);
                    for (x, &y) in bottom[0][p..k].iter_mut().zip(&top[p][p..k]) {
                        *x -= q * y;
                    }
                }
            }
            for j in p + 1..k {
                let q = m[p][j] / m[p][p];
                if q != 0 {
                    for row in m.iter_mut().skip(p) {
                        row[j] -= q * row[p];
                    }
                }
            }
            let rest_row = (p + 1..k).any(|j| m[p][j] != 0);
            let rest_col = (p + 1..nrows).any(|i| m[i][p] != 0);
            if !rest_row && !rest_col {
                break;
            }
            // a remainder smaller than the pivot is left; move it into place
            let (pi, pj) = smallest(&m, p..nrows, p..p + 1)
                .into_iter()
                .chain(smallest(&m, p..p + 1, p..k))
                .min_by_key(|&(i, j)| m[i][j].unsigned_abs())
                .expect("pivot is nonzero");
            m.swap(p, pi);
            swap_cols(&mut m, p, pj);
        }
        saturated &= m[p][p].unsigned_abs() == 1;
        rank += 1;
    }
    (rank, saturated)
}

fn smallest(m: &[Vec<i128>], rows: core::ops::Range<usize>, cols: core::ops::Range<usize>) -> Option<(usize, usize)> {
    rows.flat_map(|i| cols.clone().map(move |j| (i, j)))
        .filter(|&(i, j)| m[i][j] != 0)
        .min_by_key(|&(i, j)| m[i][j].unsigned_abs())
}

fn swap_cols(m: &mut [Vec<i128>], a: usize, b: usize) {
    if a != b {
        for row in m.iter_mut() {
            row.swap(a, b);
        }
    }
}
