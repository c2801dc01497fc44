use crate::error::{Error, Result};
use crate::geometry::linalg::{dot, hyperplane_normal};
use crate::geometry::Polytope;

fn require_simple(base: &Polytope) -> Result<()> {
    if base.flags().is_simple {
        Ok(())
    } else {
        Err(Error::Model("shallow cuts need a simple base polytope".into()))
    }
}

fn mask(n: usize, kept: &[usize]) -> Vec<bool> {
    let mut m = vec![false; n];
    for &v in kept {
        m[v] = true;
    }
    m
}

/// Excluded vertices all of whose neighbors are kept.
pub fn shallow_patterns(base: &Polytope, kept: &[usize]) -> Result<Vec<usize>> {
    require_simple(base)?;
    let is_kept = mask(base.num_vertices(), kept);
    Ok(base
        .skeleton()
        .iter()
        .enumerate()
        .filter(|&(v, adj)| !is_kept[v] && adj.iter().all(|&u| is_kept[u]))
        .map(|(v, _)| v)
        .collect())
}

/// `(pattern_count, realized_count)`: patterns as in [`shallow_patterns`],
/// and those whose neighbor hyperplane has no point of `q` (or, without
/// `q`, no kept vertex) strictly above it.
pub fn count_shallow_cuts(base: &Polytope, kept: &[usize], q: Option<&Polytope>) -> Result<(usize, usize)> {
    let patterns = shallow_patterns(base, kept)?;
    let verts = base.vertices();
    let tol = base.tol();
    let witnesses: Vec<&[f64]> = match q {
        Some(q) => q.vertices().iter().map(|v| &v[..]).collect(),
        None => kept.iter().map(|&v| &verts[v][..]).collect(),
    };
    let realized = patterns
        .iter()
        .filter(|&&v| {
            let pts: Vec<&[f64]> = base.skeleton()[v].iter().map(|&u| &verts[u][..]).collect();
            let normal = hyperplane_normal(&pts);
            let len = normal.iter().map(|x| x * x).sum::<f64>().sqrt();
            if len == 0.0 {
                return false;
            }
            let mut offset = dot(&normal, pts[0]) / len;
            let mut sign = 1.0 / len;
            if offset < 0.0 {
                offset = -offset;
                sign = -sign;
            }
            if offset <= tol {
                return false;
            }
            witnesses.iter().all(|w| sign * dot(&normal, w) - offset <= tol)
        })
        .count();
    Ok((patterns.len(), realized))
}

/// `N[k]` = total number of shallow-cut patterns summed over all kept sets
/// of size `k`, by exhaustive enumeration of the `2^n` subsets. The expected
/// pattern count at probability `p` is `Σ_k N[k] p^k (1−p)^{n−k}`.
pub fn shallow_pattern_polynomial(base: &Polytope) -> Result<Vec<u64>> {
    require_simple(base)?;
    let n = base.num_vertices();
    if n > 24 {
        return Err(Error::Range(format!("exhaustive enumeration limited to 24 vertices, got {n}")));
    }
    let nbr_masks: Vec<u32> = base
        .skeleton()
        .iter()
        .map(|adj| adj.iter().fold(0u32, |m, &u| m | (1 << u)))
        .collect();
    let mut coeffs = vec![0u64; n + 1];
    for s in 0u32..(1u32 << n) {
        let patterns = (0..n)
            .filter(|&v| s & (1 << v) == 0 && s & nbr_masks[v] == nbr_masks[v])
            .count() as u64;
        coeffs[s.count_ones() as usize] += patterns;
    }
    Ok(coeffs)
}
