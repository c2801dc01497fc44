use std::collections::BTreeSet;

use proptest::prelude::*;
use twostep::bounds::{lower_bound_facets, upper_bound_facets};
use twostep::geometry::{convex_hull, f_vector, volume, Facet, Halfspace, Polytope, Vector, TOL_GEOM};
use twostep::graph::{induced_components, Graph};
use twostep::model::{
    binomial_vertex_sample, build_q, classify_facets, count_shallow_cuts, disconnected_caps, run_two_step,
    sample_p1, sample_vertices_by_objectives, shallow_pattern_polynomial, FacetKind,
};
use twostep::{Degeneracy, Error};

fn cube() -> Polytope {
    let mut pts = Vec::new();
    for x in [-1.0, 1.0] {
        for y in [-1.0, 1.0] {
            for z in [-1.0, 1.0] {
                pts.push(Vector(vec![x, y, z]));
            }
        }
    }
    convex_hull(&pts).unwrap()
}

fn cube_index(c: &Polytope, x: [f64; 3]) -> usize {
    c.vertices().iter().position(|v| v.0 == x).unwrap()
}

fn cross(a: [f64; 3], b: [f64; 3]) -> [f64; 3] {
    [a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]]
}

fn sub(a: &[f64], b: &[f64]) -> [f64; 3] {
    [a[0] - b[0], a[1] - b[1], a[2] - b[2]]
}

fn dot3(a: [f64; 3], b: &[f64]) -> f64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

/// Facets of conv(pts) in ℝ³ as the full set of points on each supporting
/// plane, by trying every triple.
fn oracle_facets_3d(pts: &[&[f64]]) -> BTreeSet<Vec<usize>> {
    let mut out = BTreeSet::new();
    let n = pts.len();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                let nrm = cross(sub(pts[j], pts[i]), sub(pts[k], pts[i]));
                if dot3(nrm, &[nrm[0], nrm[1], nrm[2]]) < 1e-12 {
                    continue;
                }
                let h = dot3(nrm, pts[i]);
                let side: Vec<f64> = pts.iter().map(|p| dot3(nrm, p) - h).collect();
                let above = side.iter().any(|&s| s > 1e-9);
                let below = side.iter().any(|&s| s < -1e-9);
                if above != below {
                    out.insert((0..n).filter(|&l| side[l].abs() <= 1e-9).collect());
                }
            }
        }
    }
    out
}

fn regular_polygon(n: usize) -> Polytope {
    let verts: Vec<Vector> = (0..n)
        .map(|i| {
            let a = 2.0 * std::f64::consts::PI * i as f64 / n as f64;
            Vector(vec![a.cos(), a.sin()])
        })
        .collect();
    let facets = (0..n)
        .map(|i| {
            let j = (i + 1) % n;
            let mid = [(verts[i][0] + verts[j][0]) / 2.0, (verts[i][1] + verts[j][1]) / 2.0];
            let len = (mid[0] * mid[0] + mid[1] * mid[1]).sqrt();
            Facet {
                halfspace: Halfspace {
                    normal: Vector(vec![mid[0] / len, mid[1] / len]),
                    offset: len,
                },
                vertices: vec![i, j],
            }
        })
        .collect();
    Polytope::from_facets(2, verts, facets).unwrap()
}

#[test]
fn p1_examples() {
    let p = sample_p1(2, 7, 3).unwrap();
    assert_eq!(f_vector(&p).0, vec![7, 7]);
    let p = sample_p1(3, 100, 4).unwrap();
    assert_eq!(f_vector(&p).0[2], 196);
    let p = sample_p1(4, 50, 5).unwrap();
    assert!(f_vector(&p).satisfies_euler());
    assert!(p.facets().iter().all(|f| f.vertices.len() == 4));
    assert!(matches!(sample_p1(1, 10, 0), Err(Error::Parameter(_))));
    assert!(matches!(sample_p1(3, 3, 0), Err(Error::Parameter(_))));
}

#[test]
fn binomial_extremes_and_mean() {
    let c = cube();
    assert_eq!(binomial_vertex_sample(&c, 1.0, 9).unwrap(), (0..8).collect::<Vec<_>>());
    assert!(binomial_vertex_sample(&c, 0.0, 9).unwrap().is_empty());
    assert!(binomial_vertex_sample(&c, 1.5, 9).is_err());
    let big = regular_polygon(10_000);
    let sizes: Vec<f64> = (0..100)
        .map(|s| binomial_vertex_sample(&big, 0.3, s).unwrap().len() as f64)
        .collect();
    let mean = sizes.iter().sum::<f64>() / 100.0;
    let sd_of_mean = (10_000.0f64 * 0.3 * 0.7).sqrt() / 10.0;
    assert!((mean - 3000.0).abs() <= 3.0 * sd_of_mean, "mean {mean}");
    assert_eq!(binomial_vertex_sample(&big, 0.3, 1).unwrap(), binomial_vertex_sample(&big, 0.3, 1).unwrap());
}

#[test]
fn cube_minus_corner() {
    let c = cube();
    let corner = cube_index(&c, [1.0, 1.0, 1.0]);
    let kept: Vec<usize> = (0..8).filter(|&v| v != corner).collect();
    let q = build_q(&c, &kept).unwrap().unwrap();
    assert_eq!(q.num_facets(), 7);

    let pts: Vec<&[f64]> = kept.iter().map(|&v| &c.vertices()[v][..]).collect();
    let oracle: BTreeSet<Vec<usize>> = oracle_facets_3d(&pts)
        .into_iter()
        .map(|f| f.into_iter().map(|i| kept[i]).collect())
        .collect();
    let src = q.source_indices();
    let ours: BTreeSet<Vec<usize>> = q
        .facets()
        .iter()
        .map(|f| {
            let mut s: Vec<usize> = f.vertices.iter().map(|&v| src[v]).collect();
            s.sort_unstable();
            s
        })
        .collect();
    assert_eq!(ours, oracle);

    let cls = classify_facets(&q, &c).unwrap();
    assert_eq!(cls.num_old(), 6);
    assert_eq!(cls.num_new(), 1);
    let new = cls.facets.iter().find(|f| f.kind == FacetKind::New).unwrap();
    let mut expected = vec![
        corner,
        cube_index(&c, [-1.0, 1.0, 1.0]),
        cube_index(&c, [1.0, -1.0, 1.0]),
        cube_index(&c, [1.0, 1.0, -1.0]),
    ];
    expected.sort_unstable();
    assert_eq!(new.cap, expected);
    assert!(new.parent.is_none());
    for f in cls.facets.iter().filter(|f| f.kind == FacetKind::Old) {
        assert_eq!(f.cap, c.facets()[f.parent.unwrap()].vertices);
    }
    assert_eq!(count_shallow_cuts(&c, &kept, Some(&q)).unwrap(), (1, 1));
    assert_eq!(count_shallow_cuts(&c, &kept, None).unwrap(), (1, 1));
    assert_eq!(disconnected_caps(&c, &cls), 0);
}

#[test]
fn keeping_everything_reproduces_the_base() {
    let c = cube();
    let all: Vec<usize> = (0..8).collect();
    let q = build_q(&c, &all).unwrap().unwrap();
    assert_eq!(f_vector(&q), f_vector(&c));
    let cls = classify_facets(&q, &c).unwrap();
    assert_eq!(cls.num_new(), 0);
    for (f, qf) in cls.facets.iter().zip(q.facets()) {
        let mut vs: Vec<usize> = qf.vertices.iter().map(|&v| q.source_indices()[v]).collect();
        vs.sort_unstable();
        assert_eq!(f.cap, vs);
    }
    assert_eq!(count_shallow_cuts(&c, &all, Some(&q)).unwrap(), (0, 0));
}

#[test]
fn degenerate_q() {
    let c = cube();
    assert_eq!(build_q(&c, &[0, 1, 2]).unwrap().unwrap_err(), Degeneracy::TooFewPoints);
    let face: Vec<usize> = c.facets()[0].vertices.clone();
    assert_eq!(build_q(&c, &face).unwrap().unwrap_err(), Degeneracy::Flat);
    let corner = cube_index(&c, [1.0, 1.0, 1.0]);
    let mut tet = c.skeleton()[corner].clone();
    tet.push(corner);
    tet.sort_unstable();
    assert_eq!(build_q(&c, &tet).unwrap().unwrap_err(), Degeneracy::OriginOutside);
    assert!(build_q(&c, &[0, 1, 2, 99]).is_err());

    let pts: Vec<Vector> = tet.iter().map(|&v| c.vertices()[v].clone()).collect();
    let off_center = convex_hull(&pts).unwrap();
    assert!(matches!(classify_facets(&off_center, &c), Err(Error::Classification)));
}

#[test]
fn shallow_requires_simple_base() {
    let mut pts = Vec::new();
    for i in 0..3 {
        for s in [-1.0, 1.0] {
            let mut x = vec![0.0; 3];
            x[i] = s;
            pts.push(Vector(x));
        }
    }
    let oct = convex_hull(&pts).unwrap();
    assert!(matches!(count_shallow_cuts(&oct, &[0, 1], None), Err(Error::Model(_))));
}

#[test]
fn cube_shallow_expectation_is_exact() {
    let coeffs = shallow_pattern_polynomial(&cube()).unwrap();
    // 8 q p³ = Σ_j 8 C(4, j) p^{3+j} q^{4−j}
    let binom4 = [1, 4, 6, 4, 1];
    for (k, &c) in coeffs.iter().enumerate() {
        let expected = if (3..=7).contains(&k) { 8 * binom4[k - 3] } else { 0 };
        assert_eq!(c, expected, "k={k}");
    }
    for i in 1..10 {
        let p = i as f64 / 10.0;
        let e: f64 = coeffs
            .iter()
            .enumerate()
            .map(|(k, &c)| c as f64 * p.powi(k as i32) * (1.0 - p).powi(8 - k as i32))
            .sum();
        assert!((e - 8.0 * (1.0 - p) * p.powi(3)).abs() < 1e-12);
    }
}

#[test]
fn two_step_extremes() {
    let o = run_two_step(3, 40, 1.0, 11).unwrap();
    let q = o.polytope_q.as_ref().unwrap();
    assert_eq!(q.num_facets(), 40);
    assert_eq!(o.classification.as_ref().unwrap().num_new(), 0);
    let o = run_two_step(3, 40, 0.0, 11).unwrap();
    assert_eq!(o.polytope_q.unwrap_err(), Degeneracy::TooFewPoints);
    assert!(o.classification.is_none() && o.metrics_q.is_none());
    assert!(run_two_step(3, 40, -0.1, 11).is_err());
}

#[test]
fn two_step_is_deterministic() {
    let a = run_two_step(4, 30, 0.8, 99).unwrap();
    let b = run_two_step(4, 30, 0.8, 99).unwrap();
    assert_eq!(serde_json::to_string(&a.sidecar()).unwrap(), serde_json::to_string(&b.sidecar()).unwrap());
    let dir = tempfile::tempdir().unwrap();
    let paths = a.write_files(dir.path()).unwrap();
    assert_eq!(paths.len(), 3);
    let side: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&paths[2]).unwrap()).unwrap();
    assert_eq!(side["seed"], 99);
}

#[test]
fn mean_facets_lie_between_bounds() {
    let (d, m, p) = (3, 500, 0.95);
    let mut total = 0.0;
    let mut n_total = 0.0;
    for seed in 0..50 {
        let o = run_two_step(d, m, p, seed).unwrap();
        total += o.polytope_q.as_ref().unwrap().num_facets() as f64;
        n_total += o.base.num_vertices() as f64;
    }
    let mean = total / 50.0;
    let n = n_total / 50.0;
    let lo = lower_bound_facets(d, m as f64, n, p).unwrap();
    let hi = upper_bound_facets(d, m as f64, n, p).unwrap();
    assert!(lo <= mean && mean <= hi, "{lo} <= {mean} <= {hi}");
}

#[test]
fn objective_sampling() {
    let square = regular_polygon(4);
    let draws = sample_vertices_by_objectives(&square, 40_000, 5);
    let mut freq = [0usize; 4];
    for &v in &draws {
        freq[v] += 1;
    }
    let sigma = (0.25f64 * 0.75 / 40_000.0).sqrt();
    for f in freq {
        assert!((f as f64 / 40_000.0 - 0.25).abs() < 4.0 * sigma, "{freq:?}");
    }
    let c = cube();
    assert!(sample_vertices_by_objectives(&c, 500, 1).iter().all(|&v| v < 8));
    assert_eq!(sample_vertices_by_objectives(&c, 50, 1), sample_vertices_by_objectives(&c, 50, 1));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn outcome_invariants(d in 3usize..=5, extra in 2usize..20, p in 0.3f64..=1.0, seed in any::<u64>()) {
        let o = run_two_step(d, 3 * d + extra, p, seed).unwrap();
        let base = &o.base;
        prop_assert!((o.q - (1.0 - p)).abs() == 0.0);
        prop_assert!(o.kept.windows(2).all(|w| w[0] < w[1]));
        prop_assert!(base.flags().is_simple);
        if let Ok(q) = &o.polytope_q {
            let cls = o.classification.as_ref().unwrap();
            for &v in q.source_indices() {
                prop_assert!(o.kept.binary_search(&v).is_ok());
                prop_assert!(base.contains_point(&base.vertices()[v]));
            }
            prop_assert_eq!(cls.num_old() + cls.num_new(), q.num_facets());
            let g = Graph::from_polytope(base);
            for (f, qf) in cls.facets.iter().zip(q.facets()) {
                let mut vs: Vec<usize> = qf.vertices.iter().map(|&v| q.source_indices()[v]).collect();
                vs.sort_unstable();
                prop_assert!(vs.iter().all(|v| f.cap.binary_search(v).is_ok()));
                let containing = base
                    .facets()
                    .iter()
                    .filter(|bf| vs.iter().all(|v| bf.vertices.binary_search(v).is_ok()))
                    .count();
                match f.kind {
                    FacetKind::Old => prop_assert_eq!(containing, 1),
                    FacetKind::New => {
                        prop_assert_eq!(containing, 0);
                        prop_assert_eq!(induced_components(&g, &f.cap).len(), 1);
                    }
                }
            }
            let (pattern, realized) = o.shallow.unwrap();
            prop_assert!(realized <= pattern);
            prop_assert!(q.num_facets() >= cls.num_old() + realized);
            let surviving = base
                .facets()
                .iter()
                .filter(|bf| bf.vertices.iter().filter(|v| o.kept.binary_search(v).is_ok()).count() >= d)
                .count();
            prop_assert_eq!(cls.num_old(), surviving);
            let mq = o.metrics_q.unwrap();
            prop_assert!(mq.volume <= volume(base) * (1.0 + 1e-12));
            prop_assert!(mq.inradius <= 1.0 + TOL_GEOM);
            prop_assert!(1.0 + TOL_GEOM <= mq.circumradius + 2.0 * TOL_GEOM);
        }
        let again = run_two_step(d, 3 * d + extra, p, seed).unwrap();
        prop_assert_eq!(&again.kept, &o.kept);
        prop_assert_eq!(again.sidecar(), o.sidecar());
    }
}
