//! Brute-force hull facets for small general-position inputs.
//!
//! Every `d`-subset is tested; its hyperplane is found by Gaussian
//! elimination on `[x_i | −1]`, independently of the incremental hull.

use super::linalg::Vector;

/// Facets of `conv(points)` as sorted input-index sets, in sorted order.
pub fn brute_force_facets(points: &[Vector], tol: f64) -> Vec<Vec<usize>> {
    let Some(d) = points.first().map(Vector::dim) else {
        return Vec::new();
    };
    let mut out = Vec::new();
    let mut subset: Vec<usize> = (0..d).collect();
    if points.len() < d {
        return out;
    }
    loop {
        if let Some((normal, offset)) = plane_through(points, &subset) {
            let scale = normal.iter().map(|x| x * x).sum::<f64>().sqrt();
            let (mut above, mut below) = (false, false);
            for (j, x) in points.iter().enumerate() {
                if subset.contains(&j) {
                    continue;
                }
                let s = (normal.iter().zip(x.iter()).map(|(a, b)| a * b).sum::<f64>() - offset) / scale;
                if s > tol {
                    above = true;
                } else if s < -tol {
                    below = true;
                }
            }
            if !(above && below) {
                out.push(subset.clone());
            }
        }
        // next combination
        let n = points.len();
        let mut i = d;
        loop {
            if i == 0 {
                out.sort();
                return out;
            }
            i -= 1;
            if subset[i] < n - d + i {
                subset[i] += 1;
                for j in i + 1..d {
                    subset[j] = subset[j - 1] + 1;
                }
                break;
            }
        }
    }
}

/// Null vector `(n, h)` of the `d × (d+1)` system `n · x_i − h = 0`.
fn plane_through(points: &[Vector], idx: &[usize]) -> Option<(Vec<f64>, f64)> {
    let d = idx.len();
    let cols = d + 1;
    let mut a: Vec<Vec<f64>> = idx
        .iter()
        .map(|&i| {
            let mut row = points[i].0.clone();
            row.push(-1.0);
            row
        })
        .collect();
    let mut pivot_cols = Vec::new();
    let mut row = 0;
    for col in 0..cols {
        if row == d {
            break;
        }
        let (best, val) = (row..d)
            .map(|r| (r, a[r][col].abs()))
            .max_by(|x, y| x.1.total_cmp(&y.1))?;
        if val < 1e-12 {
            continue;
        }
        a.swap(row, best);
        let p = a[row][col];
        for c in 0..cols {
            a[row][c] /= p;
        }
        for r in 0..d {
            if r != row {
                let f = a[r][col];
                if f != 0.0 {
                    for c in 0..cols {
                        a[r][c] -= f * a[row][c];
                    }
                }
            }
        }
        pivot_cols.push(col);
        row += 1;
    }
    if pivot_cols.len() != d {
        return None;
    }
    let free = (0..cols).find(|c| !pivot_cols.contains(c))?;
    let mut sol = vec![0.0; cols];
    sol[free] = 1.0;
    for (r, &pc) in pivot_cols.iter().enumerate() {
        sol[pc] = -a[r][free];
    }
    let h = sol.pop()?;
    if sol.iter().all(|x| x.abs() < 1e-14) {
        return None;
    }
    Some((sol, h))
}
