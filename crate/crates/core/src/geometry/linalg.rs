//! Small dense linear algebra on stack buffers (dimension at most [`MAX_DIM`]).

use std::ops::{Deref, DerefMut};

use serde::{Deserialize, Serialize};
use smallvec::SmallVec;

/// Largest supported ambient dimension.
pub const MAX_DIM: usize = 8;

/// A point or direction in ℝ^d.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Vector(pub Vec<f64>);

impl Vector {
    pub fn zeros(d: usize) -> Self {
        Vector(vec![0.0; d])
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn norm(&self) -> f64 {
        norm(&self.0)
    }

    pub fn dot(&self, other: &[f64]) -> f64 {
        dot(&self.0, other)
    }

    pub fn scaled(&self, s: f64) -> Vector {
        Vector(self.0.iter().map(|x| x * s).collect())
    }

    pub fn is_finite(&self) -> bool {
        self.0.iter().all(|x| x.is_finite())
    }
}

impl Deref for Vector {
    type Target = [f64];
    fn deref(&self) -> &[f64] {
        &self.0
    }
}

impl DerefMut for Vector {
    fn deref_mut(&mut self) -> &mut [f64] {
        &mut self.0
    }
}

impl From<Vec<f64>> for Vector {
    fn from(v: Vec<f64>) -> Self {
        Vector(v)
    }
}

#[inline]
pub fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

#[inline]
pub fn norm(a: &[f64]) -> f64 {
    dot(a, a).sqrt()
}

/// Determinant of the leading `n × n` block of `m` by partial-pivot LU.
pub fn det(m: &mut [[f64; MAX_DIM]; MAX_DIM], n: usize) -> f64 {
    let mut sign = 1.0;
    for col in 0..n {
        let mut piv = col;
        let mut best = m[col][col].abs();
        for (r, row) in m.iter().enumerate().take(n).skip(col + 1) {
            if row[col].abs() > best {
                best = row[col].abs();
                piv = r;
            }
        }
        if best == 0.0 {
            return 0.0;
        }
        if piv != col {
            m.swap(piv, col);
            sign = -sign;
        }
        let p = m[col][col];
        for r in col + 1..n {
            let f = m[r][col] / p;
            if f != 0.0 {
                for c in col + 1..n {
                    m[r][c] -= f * m[col][c];
                }
            }
        }
    }
    (0..n).fold(sign, |acc, i| acc * m[i][i])
}

/// Determinant of the `d × d` matrix whose rows are `rows`.
pub fn det_rows(rows: &[&[f64]]) -> f64 {
    let n = rows.len();
    let mut m = [[0.0; MAX_DIM]; MAX_DIM];
    for (i, r) in rows.iter().enumerate() {
        m[i][..n].copy_from_slice(&r[..n]);
    }
    det(&mut m, n)
}

/// Unnormalized normal of the hyperplane through `d` points in ℝ^d, by
/// cofactor expansion of the edge matrix `[p_i − p_0]`.
///
/// The Euclidean norm of the result is `(d − 1)!` times the `(d − 1)`-volume
/// of the simplex spanned by the points.
pub fn hyperplane_normal(points: &[&[f64]]) -> SmallVec<[f64; MAX_DIM]> {
    let d = points.len();
    let base = points[0];
    let mut edges = [[0.0; MAX_DIM]; MAX_DIM];
    for i in 1..d {
        for j in 0..d {
            edges[i - 1][j] = points[i][j] - base[j];
        }
    }
    let mut normal = SmallVec::with_capacity(d);
    if d == 1 {
        normal.push(1.0);
        return normal;
    }
    for skip in 0..d {
        let mut minor = [[0.0; MAX_DIM]; MAX_DIM];
        for r in 0..d - 1 {
            let mut c2 = 0;
            for c in 0..d {
                if c != skip {
                    minor[r][c2] = edges[r][c];
                    c2 += 1;
                }
            }
        }
        let v = det(&mut minor, d - 1);
        normal.push(if skip % 2 == 0 { v } else { -v });
    }
    normal
}

/// Factorial as `f64`.
pub fn factorial(n: usize) -> f64 {
    (1..=n).fold(1.0, |acc, k| acc * k as f64)
}
