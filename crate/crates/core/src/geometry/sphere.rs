use rand::Rng;
use rand_distr::StandardNormal;

use super::linalg::{norm, Vector};
use crate::error::{Error, Result};
use crate::seed::rng_from;

/// A uniform direction on S^{d−1} (normalized standard Gaussian); `d ≥ 1`.
pub fn random_unit_vector<R: Rng + ?Sized>(rng: &mut R, d: usize) -> Vector {
    loop {
        let v: Vec<f64> = (0..d).map(|_| rng.sample(StandardNormal)).collect();
        let n = norm(&v);
        if n > 1e-300 && n.is_finite() {
            return Vector(v.into_iter().map(|x| x / n).collect());
        }
    }
}

/// `m` independent uniform points on the unit sphere in ℝ^d.
pub fn sample_unit_sphere(d: usize, m: usize, seed: u64) -> Result<Vec<Vector>> {
    if d < 2 {
        return Err(Error::Parameter(format!("dimension must be at least 2, got {d}")));
    }
    if m < d + 1 {
        return Err(Error::Parameter(format!(
            "need at least d + 1 = {} points, got {m}",
            d + 1
        )));
    }
    let mut rng = rng_from(seed);
    Ok((0..m).map(|_| random_unit_vector(&mut rng, d)).collect())
}
