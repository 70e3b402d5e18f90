//! Small dense helpers that do not warrant a nalgebra round trip.

/// Pivot threshold for the positive-definiteness test.
pub const PD_PIVOT_TOL: f64 = 1e-9;

/// Attempted Cholesky factorisation. Returns `false` as soon as a pivot
/// drops to `tol` or below.
pub fn is_positive_definite(a: &[Vec<f64>], tol: f64) -> bool {
    let n = a.len();
    let mut l = vec![vec![0.0; n]; n];
    for j in 0..n {
        let mut d = a[j][j];
        for k in 0..j {
            d -= l[j][k] * l[j][k];
        }
        if d <= tol {
            return false;
        }
        let djj = d.sqrt();
        l[j][j] = djj;
        for i in (j + 1)..n {
            let mut s = a[i][j];
            for k in 0..j {
                s -= l[i][k] * l[j][k];
            }
            l[i][j] = s / djj;
        }
    }
    true
}

/// Diagonal of the Smith normal form of an integer matrix (nonzero entries
/// only, in divisibility order).
pub fn smith_diagonal(rows: &[Vec<i64>], ncols: usize) -> Vec<i128> {
    let mut m: Vec<Vec<i128>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| x as i128).collect())
        .collect();
    let nrows = m.len();
    let mut diag = Vec::new();
    let mut top = 0;
    let mut left = 0;
    while top < nrows && left < ncols {
        // pick the smallest nonzero entry of the remaining block as pivot
        let mut pivot: Option<(usize, usize)> = None;
        for (i, row) in m.iter().enumerate().skip(top) {
            for (j, &x) in row.iter().enumerate().skip(left) {
                if x != 0 && pivot.map_or(true, |(pi, pj)| x.abs() < m[pi][pj].abs()) {
                    pivot = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = pivot else { break };
        m.swap(top, pi);
        for row in m.iter_mut() {
            row.swap(left, pj);
        }
        loop {
            let p = m[top][left];
            let mut dirty = false;
            for i in (top + 1)..nrows {
                let q = m[i][left] / p;
                if q != 0 {
                    for j in left..ncols {
                        m[i][j] -= q * m[top][j];
                    }
                }
                if m[i][left] != 0 {
                    dirty = true;
                }
            }
            for j in (left + 1)..ncols {
                let q = m[top][j] / p;
                if q != 0 {
                    for row in m.iter_mut().skip(top) {
                        row[j] -= q * row[left];
                    }
                }
                if m[top][j] != 0 {
                    dirty = true;
                }
            }
            if !dirty {
                // the pivot must divide the rest of the block
                let bad = (top + 1..nrows)
                    .flat_map(|i| (left + 1..ncols).map(move |j| (i, j)))
                    .find(|&(i, j)| m[i][j] % p != 0);
                match bad {
                    None => break,
                    Some((i, _)) => {
                        for j in left..ncols {
                            let x = m[i][j];
                            m[top][j] += x;
                        }
                        continue;
                    }
                }
            }
            // move the smallest entry of the pivot row/column into place
            let mut best = (top, left);
            for i in top..nrows {
                if m[i][left] != 0 && m[i][left].abs() < m[best.0][best.1].abs() {
                    best = (i, left);
                }
            }
            for j in left..ncols {
                if m[top][j] != 0 && m[top][j].abs() < m[best.0][best.1].abs() {
                    best = (top, j);
                }
            }
            m.swap(top, best.0);
            for row in m.iter_mut() {
                row.swap(left, best.1);
            }
        }
        diag.push(m[top][left].abs());
        top += 1;
        left += 1;
    }
    diag
}
