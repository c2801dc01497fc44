use std::collections::HashSet;

use crate::error::{Error, Result};

/// Number of unlabeled rooted trees on `t` vertices, `1 ≤ t ≤ 12`.
///
/// Walks the canonical level sequences in reverse lexicographic order
/// (Beyer and Hedetniemi); each tree has exactly one such sequence.
pub fn rooted_tree_count(t: usize) -> Result<u64> {
    if !(1..=12).contains(&t) {
        return Err(Error::Range(format!("rooted tree size must be in 1..=12, got {t}")));
    }
    // levels[i] is the depth of the i-th vertex in preorder, root at depth 1
    let mut levels: Vec<usize> = (1..=t).collect();
    let mut count = 1;
    loop {
        let Some(p) = (1..t).rev().find(|&i| levels[i] != 2) else {
            return Ok(count);
        };
        let q = (0..p).rev().find(|&i| levels[i] == levels[p] - 1).expect("parent");
        for i in p..t {
            levels[i] = levels[i - (p - q)];
        }
        count += 1;
    }
}

/// Counts distinct canonical forms over all labeled recursive trees (every
/// parent array with `parent[i] < i`). Exponential; oracle for `t ≤ 9`.
pub fn rooted_tree_count_brute_force(t: usize) -> u64 {
    if t == 0 {
        return 0;
    }
    let mut parent = vec![0usize; t];
    let mut seen = HashSet::new();
    loop {
        let mut children = vec![Vec::new(); t];
        for v in 1..t {
            children[parent[v]].push(v);
        }
        seen.insert(canonical(0, &children));
        // odometer over parent[i] ∈ 0..i
        let mut i = t;
        loop {
            i -= 1;
            if i == 0 {
                return seen.len() as u64;
            }
            if parent[i] + 1 < i {
                parent[i] += 1;
                break;
            }
            parent[i] = 0;
        }
    }
}

fn canonical(v: usize, children: &[Vec<usize>]) -> String {
    let mut parts: Vec<String> = children[v].iter().map(|&c| canonical(c, children)).collect();
    parts.sort();
    format!("({})", parts.concat())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_counts() {
        let known = [1, 1, 2, 4, 9, 20, 48, 115, 286, 719, 1842, 4766];
        for (i, &k) in known.iter().enumerate() {
            assert_eq!(rooted_tree_count(i + 1).unwrap(), k);
        }
        assert!(rooted_tree_count(0).is_err());
        assert!(rooted_tree_count(13).is_err());
    }

    #[test]
    fn agrees_with_canonical_oracle() {
        for t in 1..=9 {
            assert_eq!(rooted_tree_count(t).unwrap(), rooted_tree_count_brute_force(t), "t={t}");
        }
    }

    #[test]
    fn within_encoding_bound() {
        for t in 2..=12 {
            assert!(rooted_tree_count(t).unwrap() <= 4u64.pow(t as u32 - 2));
        }
    }
}
