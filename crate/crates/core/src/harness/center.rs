use rand::Rng;
use rayon::prelude::*;

use crate::bounds::center_sample_size;
use crate::error::{Error, Result};
use crate::geometry::random_unit_vector;
use crate::seed::{derive_seed, rng_from, Role};

/// Fraction of `reps` repetitions in which the mean of `N` uniform points on
/// the radius-`r` sphere in ℝ^d lies farther than `eps` from the center,
/// with `N` from [`center_sample_size`]. In ℝ¹ the "sphere" is `{−r, r}`.
pub fn center_estimate_experiment(d: usize, r: f64, eps: f64, pi: f64, reps: usize, seed: u64) -> Result<(u64, f64)> {
    if reps < 100 {
        return Err(Error::Parameter(format!("need at least 100 repetitions, got {reps}")));
    }
    let n = center_sample_size(r, eps, pi, d)?;
    let failures = (0..reps)
        .into_par_iter()
        .filter(|&i| {
            let mut rng = rng_from(derive_seed(seed, Role::Center, i as u64));
            let mut sum = vec![0.0; d];
            for _ in 0..n {
                if d == 1 {
                    sum[0] += if rng.random::<bool>() { r } else { -r };
                } else {
                    let u = random_unit_vector(&mut rng, d);
                    for (s, x) in sum.iter_mut().zip(u.iter()) {
                        *s += r * x;
                    }
                }
            }
            let norm = sum.iter().map(|s| s * s).sum::<f64>().sqrt() / n as f64;
            norm > eps
        })
        .count();
    Ok((n, failures as f64 / reps as f64))
}
