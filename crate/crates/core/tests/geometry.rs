use proptest::prelude::*;
use twostep::geometry::{
    convex_hull, convex_hull_with, f_vector, from_json, metrics, oracle::brute_force_facets,
    polar_dual, sample_unit_sphere, to_json, HullOptions, Polytope, Vector, TOL_GEOM,
};
use twostep::{Degeneracy, Error};

fn v(xs: &[f64]) -> Vector {
    Vector(xs.to_vec())
}

fn binom(n: usize, k: usize) -> usize {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

fn cube() -> Vec<Vector> {
    let mut pts = Vec::new();
    for x in [-1.0, 1.0] {
        for y in [-1.0, 1.0] {
            for z in [-1.0, 1.0] {
                pts.push(v(&[x, y, z]));
            }
        }
    }
    pts
}

fn cross_polytope(d: usize) -> Vec<Vector> {
    let mut pts = Vec::new();
    for i in 0..d {
        for s in [-1.0, 1.0] {
            let mut x = vec![0.0; d];
            x[i] = s;
            pts.push(Vector(x));
        }
    }
    pts
}

/// Facets of a hull as sorted sets of input indices.
fn facet_sets(p: &Polytope) -> Vec<Vec<usize>> {
    let src = p.source_indices();
    let mut out: Vec<Vec<usize>> = p
        .facets()
        .iter()
        .map(|f| {
            let mut s: Vec<usize> = f.vertices.iter().map(|&i| src[i]).collect();
            s.sort_unstable();
            s
        })
        .collect();
    out.sort();
    out
}

#[test]
fn simplex_face_counts() {
    for d in 2..=6 {
        let mut pts = vec![Vector::zeros(d)];
        for i in 0..d {
            let mut x = vec![0.0; d];
            x[i] = 1.0;
            pts.push(Vector(x));
        }
        let p = convex_hull(&pts).unwrap();
        let f = f_vector(&p);
        for i in 0..d {
            assert_eq!(f.0[i], binom(d + 1, i + 1), "d={d} i={i}");
        }
        assert!(p.flags().is_simplicial && p.flags().is_simple);
    }
}

#[test]
fn square() {
    let p = convex_hull(&[v(&[1.0, 0.0]), v(&[-1.0, 0.0]), v(&[0.0, 1.0]), v(&[0.0, -1.0])]).unwrap();
    assert_eq!(f_vector(&p).0, vec![4, 4]);
    p.validate().unwrap();
}

#[test]
fn sphere_hulls_in_three_dimensions() {
    for (m, seed) in [(10, 1), (57, 2), (200, 3)] {
        let p = convex_hull(&sample_unit_sphere(3, m, seed).unwrap()).unwrap();
        let f = f_vector(&p);
        assert_eq!(f.0, vec![m, 3 * m - 6, 2 * m - 4]);
        assert!(p.flags().is_simplicial);
        p.validate().unwrap();
    }
}

#[test]
fn cube_merges_coplanar_simplices() {
    let mut pts = cube();
    // non-extreme points on a face and inside
    pts.push(v(&[1.0, 0.25, -0.5]));
    pts.push(v(&[0.1, 0.2, 0.3]));
    let p = convex_hull(&pts).unwrap();
    assert_eq!(p.num_vertices(), 8);
    assert_eq!(f_vector(&p).0, vec![8, 12, 6]);
    assert!(p.facets().iter().all(|f| f.vertices.len() == 4));
    assert!(p.flags().is_simple && !p.flags().is_simplicial);
    assert!(p.skeleton().iter().all(|a| a.len() == 3));
    assert_eq!(p.ridges().len(), 12);
    let m = metrics(&p).unwrap();
    assert!((m.inradius - 1.0).abs() < 1e-12);
    assert!((m.circumradius - 3f64.sqrt()).abs() < 1e-12);
    assert!((m.volume - 8.0).abs() < 1e-12);
    p.validate().unwrap();
}

#[test]
fn cross_polytope_dual_is_cube() {
    let p = convex_hull(&cross_polytope(3)).unwrap();
    let q = polar_dual(&p).unwrap();
    assert_eq!(f_vector(&q).0, vec![8, 12, 6]);
    for x in q.vertices() {
        assert!(x.iter().all(|c| (c.abs() - 1.0).abs() < 1e-12), "{x:?}");
    }
    q.validate().unwrap();
}

#[test]
fn tangent_facet_gives_unit_dual_vertex() {
    // cross-polytope scaled so every facet is tangent to the unit sphere
    let s = 3f64.sqrt();
    let pts: Vec<Vector> = cross_polytope(3).iter().map(|x| x.scaled(s)).collect();
    let p = convex_hull(&pts).unwrap();
    for f in p.facets() {
        assert!((f.halfspace.offset - 1.0).abs() < 1e-12);
    }
    let q = polar_dual(&p).unwrap();
    for x in q.vertices() {
        assert!((x.norm() - 1.0).abs() < 1e-12);
    }
}

#[test]
fn double_dual_recovers_polytope() {
    for d in 3..=5 {
        let p = convex_hull(&sample_unit_sphere(d, 4 * d + 8, d as u64).unwrap()).unwrap();
        let pp = polar_dual(&polar_dual(&p).unwrap()).unwrap();
        assert_eq!(pp.num_vertices(), p.num_vertices());
        assert_eq!(f_vector(&pp), f_vector(&p));
        for (a, b) in p.vertices().iter().zip(pp.vertices()) {
            for (x, y) in a.iter().zip(b.iter()) {
                assert!((x - y).abs() < 1e-6);
            }
        }
        let fa: Vec<_> = p.facets().iter().map(|f| f.vertices.clone()).collect();
        let fb: Vec<_> = pp.facets().iter().map(|f| f.vertices.clone()).collect();
        assert_eq!(fa, fb);
    }
}

#[test]
fn dual_of_sphere_hull_is_simple_and_circumscribed() {
    for d in [3, 4] {
        let p = convex_hull(&sample_unit_sphere(d, 60, 11).unwrap()).unwrap();
        let q = polar_dual(&p).unwrap();
        assert!(q.flags().is_simple);
        assert!(q.skeleton().iter().all(|a| a.len() == d));
        let fp = f_vector(&p).0;
        let mut fq = f_vector(&q).0;
        fq.reverse();
        assert_eq!(fp, fq);
        let m = metrics(&q).unwrap();
        assert!((m.inradius - 1.0).abs() < 1e-9);
        assert!(q.vertices().iter().all(|x| x.norm() >= 1.0 - TOL_GEOM));
        q.validate().unwrap();
    }
}

#[test]
fn origin_containment() {
    assert!(convex_hull(&cube()).unwrap().contains_origin());
    let shifted: Vec<Vector> = cube().iter().map(|x| v(&[x[0] + 10.0, x[1], x[2]])).collect();
    let p = convex_hull(&shifted).unwrap();
    assert!(!p.contains_origin());
    assert!(matches!(polar_dual(&p), Err(Error::Polarity)));
    assert!(matches!(metrics(&p), Err(Error::MetricsUndefined)));
    let half: Vec<Vector> = sample_unit_sphere(3, 30, 4)
        .unwrap()
        .into_iter()
        .map(|x| v(&[x[0].abs() + 0.01, x[1], x[2]]))
        .collect();
    assert!(!convex_hull(&half).unwrap().contains_origin());
}

#[test]
fn simplex_volume_matches_determinant() {
    use twostep::geometry::linalg::det_rows;
    for seed in 0..20 {
        let pts = sample_unit_sphere(3, 4, seed).unwrap();
        let p = convex_hull(&pts).unwrap();
        let rows: Vec<Vec<f64>> = pts[1..].iter().map(|x| x.iter().zip(pts[0].iter()).map(|(a, b)| a - b).collect()).collect();
        let r: Vec<&[f64]> = rows.iter().map(|x| &x[..]).collect();
        let oracle = det_rows(&r).abs() / 6.0;
        if p.contains_origin() {
            assert!((metrics(&p).unwrap().volume - oracle).abs() < 1e-10);
        }
        // translate to put the centroid at the origin so metrics are defined
        let c: Vec<f64> = (0..3).map(|k| pts.iter().map(|x| x[k]).sum::<f64>() / 4.0).collect();
        let centered: Vec<Vector> = pts.iter().map(|x| Vector(x.iter().zip(&c).map(|(a, b)| a - b).collect())).collect();
        let q = convex_hull(&centered).unwrap();
        assert!((metrics(&q).unwrap().volume - oracle).abs() < 1e-10);
    }
}

#[test]
fn degenerate_inputs() {
    let flat = vec![v(&[0.0, 0.0, 0.0]), v(&[1.0, 0.0, 0.0]), v(&[0.0, 1.0, 0.0]), v(&[1.0, 1.0, 0.0])];
    assert!(matches!(convex_hull(&flat), Err(Error::Degenerate(Degeneracy::Flat))));
    assert!(matches!(
        convex_hull(&flat[..3]),
        Err(Error::Degenerate(Degeneracy::TooFewPoints))
    ));
    assert!(matches!(convex_hull(&[v(&[1.0]), v(&[2.0])]), Err(Error::Parameter(_))));
}

#[test]
fn insertion_order_does_not_change_the_hull() {
    let pts = sample_unit_sphere(4, 80, 5).unwrap();
    let a = convex_hull_with(&pts, &HullOptions { seed: 1, ..Default::default() }).unwrap();
    let b = convex_hull_with(&pts, &HullOptions { seed: 99, ..Default::default() }).unwrap();
    assert_eq!(facet_sets(&a), facet_sets(&b));
}

#[test]
fn serialization_round_trip_is_bit_exact() {
    let p = polar_dual(&convex_hull(&sample_unit_sphere(3, 40, 8).unwrap()).unwrap()).unwrap();
    let q = from_json(&to_json(&p).unwrap()).unwrap();
    assert_eq!(p.vertices(), q.vertices());
    assert_eq!(p.facets(), q.facets());
    assert_eq!(p.ridges(), q.ridges());
    assert_eq!(p.skeleton(), q.skeleton());
    assert_eq!(p.flags(), q.flags());
}

fn ball_points(d: usize, m: usize, seed: u64) -> Vec<Vector> {
    // half on the sphere, half scaled inward
    sample_unit_sphere(d, m, seed)
        .unwrap()
        .into_iter()
        .enumerate()
        .map(|(i, x)| if i % 2 == 0 { x } else { x.scaled(0.3 + 0.6 * ((i * 37 % 11) as f64 / 11.0)) })
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(120))]

    #[test]
    fn hull_matches_brute_force(d in 2usize..=4, extra in 1usize..=8, seed in any::<u64>(), mixed in any::<bool>()) {
        let m = (d + 1 + extra).min(12);
        let pts = if mixed { ball_points(d, m, seed) } else { sample_unit_sphere(d, m, seed).unwrap() };
        let p = convex_hull(&pts).unwrap();
        prop_assert_eq!(facet_sets(&p), brute_force_facets(&pts, TOL_GEOM));
    }

    #[test]
    fn hull_is_sound(d in 2usize..=5, m in 10usize..60, seed in any::<u64>()) {
        let pts = ball_points(d, m, seed);
        let p = convex_hull_with(&pts, &HullOptions { seed, ..Default::default() }).unwrap();
        for x in &pts {
            prop_assert!(p.contains_point(x));
        }
        for fs in p.vertex_facets() {
            prop_assert!(fs.len() >= d);
        }
        prop_assert!(p.validate().is_ok());
    }

    #[test]
    fn hull_is_monotone(seed in any::<u64>(), cut in 8usize..40) {
        let pts = sample_unit_sphere(3, 40, seed).unwrap();
        let small = convex_hull(&pts[..cut.max(4)]).unwrap();
        let big = convex_hull(&pts).unwrap();
        for x in small.vertices() {
            prop_assert!(big.contains_point(x));
        }
    }
}
