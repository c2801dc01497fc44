//! Verification checks. Each check runs a fixed experiment and compares the
//! measured values with a closed form or a brute-force oracle.

use std::f64::consts::PI;
use std::fmt::Write as _;

use rand::Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::sweep::{rows_to_csv, sweep, ExperimentConfig};
use crate::bounds::{
    connected_subgraph_bound, f_const, gamma_seq, lower_bound_facets, unit_ball_volume, upper_bound_facets,
};
use crate::error::{Error, Result};
use crate::geometry::oracle::brute_force_facets;
use crate::geometry::{
    convex_hull_with, f_vector, metrics, polar_dual, sample_unit_sphere, HullOptions, Polytope, Vector,
};
use crate::graph::{
    count_induced_brute_force, enumerate_connected_induced, rooted_tree_count, rooted_tree_count_brute_force,
    Graph,
};
use crate::model::{disconnected_caps, run_two_step, sample_base, sample_p1, shallow_pattern_polynomial};
use crate::seed::{derive_seed, rng_from, Role};

pub const SUITES: &[&str] = &[
    "constants",
    "hull-oracle",
    "duality",
    "caps",
    "shallow",
    "bounds-empirical",
    "hausdorff-trend",
    "center",
];

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    fn new(name: &str, passed: bool, detail: String) -> Self {
        Check {
            name: name.to_string(),
            passed,
            detail,
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Report {
    pub suite: String,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for c in &self.checks {
            let tag = if c.passed { "PASS" } else { "FAIL" };
            let _ = writeln!(s, "{tag} {}/{}: {}", self.suite, c.name, c.detail);
        }
        s
    }
}

/// Runs one named suite with the given master seed.
pub fn run_suite(name: &str, seed: u64) -> Result<Report> {
    let checks = match name {
        "constants" => vec![constants()],
        "hull-oracle" => vec![facet_law(seed)?, hull_oracle(200, seed)?],
        "duality" => vec![structure(1000, seed)?],
        "caps" => vec![caps(1000, &[0.5, 0.8, 0.95], seed)?],
        "shallow" => vec![shallow_exhaustive()?, shallow_monte_carlo(3, 300, 0.9, 200, 0.1, 0.95, seed)?],
        "bounds-empirical" => vec![
            bounds_bracket(3, 500, 0.95, 50, seed)?,
            upper_bound(3, 2000, 0.99, 100, 10, seed)?,
            bmt(4, 5000, 30, 0.15, seed)?,
        ],
        "hausdorff-trend" => {
            let (trend, volume) = hausdorff(3, 0.9, &[200, 800, 3200], 30, seed)?;
            vec![trend, volume]
        }
        "center" => vec![
            center(3, 1.0, 0.1, 0.05, 2000, seed)?,
            center(2, 1.1, 0.2, 0.1, 2000, seed)?,
            center(1, 1.0, 0.1, 0.05, 2000, seed)?,
        ],
        other => {
            return Err(Error::Parameter(format!(
                "unknown suite '{other}'; expected one of {}",
                SUITES.join(", ")
            )))
        }
    };
    Ok(Report {
        suite: name.to_string(),
        checks,
    })
}

/// Exhaustive counting checks on the fixed graph corpus.
pub fn graph_verify(seed: u64) -> Result<Report> {
    let corpus = graph_corpus(seed)?;
    Ok(Report {
        suite: "graph".into(),
        checks: vec![connected_subgraphs(&corpus, 6)?, rooted_trees()?],
    })
}

fn trial_seed(seed: u64, i: usize) -> u64 {
    derive_seed(seed, Role::Trial, i as u64)
}

/// Sphere sample size used by the structural and cap checks.
pub fn small_m(d: usize) -> usize {
    match d {
        2 | 3 => 40,
        4 => 24,
        _ => 16,
    }
}

fn median(xs: &mut [f64]) -> f64 {
    xs.sort_by(f64::total_cmp);
    let n = xs.len();
    if n % 2 == 1 {
        xs[n / 2]
    } else {
        (xs[n / 2 - 1] + xs[n / 2]) / 2.0
    }
}

pub fn constants() -> Check {
    let exact = f_const(2).ok() == Some(1.0) && f_const(3).ok() == Some(2.0);
    let listed = [
        (4, 24.0 * PI * PI / 35.0),
        (5, 286.0 / 9.0),
        (6, 1_296_000.0 * PI.powi(4) / 676_039.0),
    ];
    let worst = listed
        .iter()
        .map(|&(d, v)| f_const(d).map_or(f64::INFINITY, |f| ((f - v) / v).abs()))
        .fold(0.0, f64::max);
    let gamma_err = (0..60)
        .map(|k| (2.0 * PI * (k + 1) as f64 * gamma_seq(k) * gamma_seq(k + 1) - 1.0).abs())
        .fold(0.0, f64::max);
    Check::new(
        "F(d) values",
        exact && worst <= 1e-12 && gamma_err <= 1e-12,
        format!("F(2), F(3) exact: {exact}; max rel err F(4..6) {worst:.2e}; gamma identity err {gamma_err:.2e}"),
    )
}

/// `f_1 = m` in the plane for every `m ≤ 100`, and `f_2 = 2m − 4` for 50
/// random `m ≤ 500` in ℝ³.
pub fn facet_law(seed: u64) -> Result<Check> {
    let planar: Vec<usize> = (3..=100usize)
        .into_par_iter()
        .map(|m| Ok((m, sample_p1(2, m, trial_seed(seed, m))?.num_facets())))
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .filter(|&(m, f)| f != m)
        .map(|(m, _)| m)
        .collect();
    let mut rng = rng_from(derive_seed(seed, Role::Trial, u64::MAX));
    let ms: Vec<usize> = (0..50).map(|_| rng.random_range(10..=500)).collect();
    let spatial: Vec<usize> = ms
        .par_iter()
        .enumerate()
        .map(|(i, &m)| Ok((m, sample_p1(3, m, trial_seed(seed, 1000 + i))?.num_facets())))
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .filter(|&(m, f)| f != 2 * m - 4)
        .map(|(m, _)| m)
        .collect();
    Ok(Check::new(
        "low-dimension facet law",
        planar.is_empty() && spatial.is_empty(),
        format!(
            "d=2, m=3..100: {} mismatches; d=3, 50 random m in 10..500: {} mismatches",
            planar.len(),
            spatial.len()
        ),
    ))
}

/// Mean `f_{d−1}(P) / m` against `F(d)`.
pub fn bmt(d: usize, m: usize, trials: usize, rel_tol: f64, seed: u64) -> Result<Check> {
    let counts: Vec<usize> = (0..trials)
        .into_par_iter()
        .map(|i| Ok(sample_p1(d, m, trial_seed(seed, i))?.num_facets()))
        .collect::<Result<_>>()?;
    let mean = counts.iter().sum::<usize>() as f64 / (trials * m) as f64;
    let f = f_const(d)?;
    let rel = (mean - f).abs() / f;
    Ok(Check::new(
        "facet constant convergence",
        rel <= rel_tol,
        format!("d={d}, m={m}, {trials} trials: mean f/m = {mean:.4} vs F(d) = {f:.4} (rel err {rel:.3}, tol {rel_tol})"),
    ))
}

fn hull_facet_sets(p: &Polytope) -> Vec<Vec<usize>> {
    let src = p.source_indices();
    let mut sets: Vec<Vec<usize>> = p
        .facets()
        .iter()
        .map(|f| {
            let mut s: Vec<usize> = f.vertices.iter().map(|&v| src[v]).collect();
            s.sort_unstable();
            s
        })
        .collect();
    sets.sort();
    sets
}

/// Incremental hull against the all-`d`-subsets oracle on random inputs
/// with `d ≤ 4`, `m ≤ 12`; half the instances add Gaussian interior noise.
pub fn hull_oracle(instances: usize, seed: u64) -> Result<Check> {
    let mismatches: Vec<usize> = (0..instances)
        .into_par_iter()
        .map(|i| {
            let s = trial_seed(seed, i);
            let mut rng = rng_from(s);
            let d = rng.random_range(2..=4usize);
            let m = rng.random_range(d + 1..=12);
            let mut points = sample_unit_sphere(d, m, derive_seed(s, Role::SpherePoints, 0))?;
            if i % 2 == 1 {
                for p in points.iter_mut().skip(d + 1) {
                    let r: f64 = rng.random_range(0.2..0.9);
                    *p = p.scaled(r);
                }
            }
            let opts = HullOptions {
                seed: derive_seed(s, Role::InsertionOrder, 0),
                ..HullOptions::default()
            };
            let ours = convex_hull_with(&points, &opts)?;
            Ok((i, hull_facet_sets(&ours) == brute_force_facets(&points, opts.tol)))
        })
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .filter(|&(_, ok)| !ok)
        .map(|(i, _)| i)
        .collect();
    Ok(Check::new(
        "hull vs brute-force oracle",
        mismatches.is_empty(),
        format!("{instances} instances, d<=4, m<=12: {} mismatches {:?}", mismatches.len(), mismatches),
    ))
}

#[derive(Default)]
struct Violations {
    simplicial: usize,
    regular: usize,
    euler: usize,
    involution: usize,
    inradius: usize,
    validate: usize,
}

fn structure_trial(d: usize, m: usize, seed: u64) -> Result<Violations> {
    let mut v = Violations::default();
    let (p, dual) = sample_base(d, m, seed, crate::geometry::TOL_GEOM)?;
    v.simplicial += usize::from(!p.facets().iter().all(|f| f.vertices.len() == d));
    v.regular += usize::from(!dual.skeleton().iter().all(|a| a.len() == d));
    v.euler += usize::from(!(f_vector(&p).satisfies_euler() && f_vector(&dual).satisfies_euler()));
    v.validate += usize::from(p.validate().is_err() || dual.validate().is_err());
    let back = polar_dual(&dual)?;
    let same = back.num_vertices() == p.num_vertices()
        && back
            .vertices()
            .iter()
            .zip(p.vertices())
            .all(|(a, b)| a.iter().zip(b.iter()).all(|(x, y)| (x - y).abs() <= 1e-6));
    v.involution += usize::from(!same);
    v.inradius += usize::from((metrics(&dual)?.inradius - 1.0).abs() > 1e-9);
    Ok(v)
}

/// Simpliciality of `P`, `d`-regularity of the dual skeleton, Euler's
/// relation, the double-dual identity and unit inradius of `P°`.
pub fn structure(trials: usize, seed: u64) -> Result<Check> {
    let all: Vec<Violations> = (0..trials)
        .into_par_iter()
        .map(|i| {
            let d = 3 + i % 3;
            structure_trial(d, small_m(d), trial_seed(seed, i))
        })
        .collect::<Result<_>>()?;
    let sum = |f: fn(&Violations) -> usize| all.iter().map(f).sum::<usize>();
    let counts = [
        sum(|v| v.simplicial),
        sum(|v| v.regular),
        sum(|v| v.euler),
        sum(|v| v.involution),
        sum(|v| v.inradius),
        sum(|v| v.validate),
    ];
    Ok(Check::new(
        "structural invariants",
        counts.iter().all(|&c| c == 0),
        format!(
            "{trials} trials, d in 3..5: violations simplicial {}, regular dual {}, Euler {}, involution {}, inradius {}, validate {}",
            counts[0], counts[1], counts[2], counts[3], counts[4], counts[5]
        ),
    ))
}

/// Counts disconnected caps over at least `target` non-degenerate samples
/// cycling through `d ∈ {3,4,5}` and `probs`.
pub fn caps(target: usize, probs: &[f64], seed: u64) -> Result<Check> {
    let mut nondegenerate = 0;
    let mut disconnected = 0;
    let mut next = 0;
    while nondegenerate < target && next < 20 * target {
        let batch = 64;
        let results: Vec<Option<usize>> = (next..next + batch)
            .into_par_iter()
            .map(|i| {
                let d = 3 + i % 3;
                let p = probs[(i / 3) % probs.len()];
                let o = run_two_step(d, small_m(d), p, trial_seed(seed, i))?;
                Ok(o.classification.as_ref().map(|c| disconnected_caps(&o.base, c)))
            })
            .collect::<Result<_>>()?;
        for r in results.into_iter().flatten() {
            nondegenerate += 1;
            disconnected += r;
        }
        next += batch;
    }
    Ok(Check::new(
        "cap connectivity",
        nondegenerate >= target && disconnected == 0,
        format!("{nondegenerate} non-degenerate samples over {next} trials, p in {probs:?}: {disconnected} disconnected caps"),
    ))
}

/// Exact expected shallow-cut pattern count on the 3-cube.
pub fn shallow_exhaustive() -> Result<Check> {
    let mut pts = Vec::new();
    for i in 0..8u32 {
        pts.push(Vector((0..3).map(|b| if i >> b & 1 == 1 { 1.0 } else { -1.0 }).collect()));
    }
    let cube = convex_hull_with(&pts, &HullOptions::default())?;
    let coeffs = shallow_pattern_polynomial(&cube)?;
    // 8 q p³ expands to Σ_j 8 C(4, j) p^{3+j} q^{4−j}
    let expected: Vec<u64> = (0..=8)
        .map(|k| if (3..=7).contains(&k) { 8 * [1, 4, 6, 4, 1][k - 3] } else { 0 })
        .collect();
    let symbolic = coeffs == expected;
    let worst = (1..10)
        .map(|i| {
            let p = i as f64 / 10.0;
            let e: f64 = coeffs
                .iter()
                .enumerate()
                .map(|(k, &c)| c as f64 * p.powi(k as i32) * (1.0 - p).powi(8 - k as i32))
                .sum();
            (e - 8.0 * (1.0 - p) * p.powi(3)).abs()
        })
        .fold(0.0, f64::max);
    Ok(Check::new(
        "cube shallow-cut expectation",
        symbolic && worst <= 1e-12,
        format!("256 subsets: coefficients {coeffs:?} match 8qp^3 expansion: {symbolic}; max abs err at p=0.1..0.9 {worst:.1e}"),
    ))
}

/// Fraction of trials with `f_{d−1}(Q) ≥ (1 − δ)(p^d m + n q p^d)`,
/// `n = f_0(P°)`.
pub fn shallow_monte_carlo(
    d: usize,
    m: usize,
    p: f64,
    trials: usize,
    delta: f64,
    required: f64,
    seed: u64,
) -> Result<Check> {
    let results: Vec<(f64, f64)> = (0..trials)
        .into_par_iter()
        .map(|i| {
            let o = run_two_step(d, m, p, trial_seed(seed, i))?;
            let facets = o.polytope_q.as_ref().map_or(0, |q| q.num_facets()) as f64;
            let lower = lower_bound_facets(d, m as f64, o.base.num_vertices() as f64, p)?;
            Ok((facets, lower))
        })
        .collect::<Result<_>>()?;
    let ok = results.iter().filter(|(f, lo)| *f >= (1.0 - delta) * lo).count();
    let frac = ok as f64 / trials as f64;
    let mean_f = results.iter().map(|r| r.0).sum::<f64>() / trials as f64;
    let mean_lo = results.iter().map(|r| r.1).sum::<f64>() / trials as f64;
    Ok(Check::new(
        "facet lower bound (Monte Carlo)",
        frac >= required,
        format!(
            "d={d}, m={m}, p={p}, {trials} trials: {:.1}% meet (1-{delta})*lower (need {:.0}%); mean f = {mean_f:.1}, mean lower = {mean_lo:.1}",
            100.0 * frac,
            100.0 * required
        ),
    ))
}

fn facet_and_vertex_means(d: usize, m: usize, p: f64, seeds: &[u64]) -> Result<(f64, f64)> {
    let pairs: Vec<(usize, usize)> = seeds
        .par_iter()
        .map(|&s| {
            let o = run_two_step(d, m, p, s)?;
            Ok((o.polytope_q.as_ref().map_or(0, |q| q.num_facets()), o.base.num_vertices()))
        })
        .collect::<Result<_>>()?;
    let k = pairs.len() as f64;
    Ok((
        pairs.iter().map(|x| x.0).sum::<usize>() as f64 / k,
        pairs.iter().map(|x| x.1).sum::<usize>() as f64 / k,
    ))
}

/// `lower ≤ mean f_{d−1}(Q) ≤ upper` with `n` the mean vertex count of `P°`.
pub fn bounds_bracket(d: usize, m: usize, p: f64, trials: usize, seed: u64) -> Result<Check> {
    let seeds: Vec<u64> = (0..trials).map(|i| trial_seed(seed, i)).collect();
    let (mean, n) = facet_and_vertex_means(d, m, p, &seeds)?;
    let lo = lower_bound_facets(d, m as f64, n, p)?;
    let hi = upper_bound_facets(d, m as f64, n, p)?;
    Ok(Check::new(
        "mean facets between bounds",
        lo <= mean && mean <= hi,
        format!("d={d}, m={m}, p={p}, {trials} trials: {lo:.1} <= {mean:.1} <= {hi:.1}"),
    ))
}

/// Batch means of `f_{d−1}(Q)` against the explicit-constant upper bound.
pub fn upper_bound(d: usize, m: usize, p: f64, trials: usize, batch: usize, seed: u64) -> Result<Check> {
    let mut worst: f64 = 0.0;
    let mut failed = 0;
    let batches = trials.div_ceil(batch);
    for b in 0..batches {
        let seeds: Vec<u64> = (b * batch..((b + 1) * batch).min(trials)).map(|i| trial_seed(seed, i)).collect();
        let (mean, n) = facet_and_vertex_means(d, m, p, &seeds)?;
        let hi = upper_bound_facets(d, m as f64, n, p)?;
        worst = worst.max(mean / hi);
        failed += usize::from(mean > hi);
    }
    Ok(Check::new(
        "explicit upper bound",
        failed == 0,
        format!("d={d}, m={m}, p={p}, {trials} trials in {batches} batches: {failed} batches above bound; max mean/bound {worst:.4}"),
    ))
}

/// Median sphere deviation across an `m` grid (must strictly decrease) and
/// the volume sandwich in every non-degenerate trial.
pub fn hausdorff(d: usize, p: f64, ms: &[usize], trials: usize, seed: u64) -> Result<(Check, Check)> {
    let vd = unit_ball_volume(d);
    let mut medians = Vec::new();
    let mut sandwich_failures = 0;
    let mut samples = 0;
    for (j, &m) in ms.iter().enumerate() {
        let devs: Vec<Option<(f64, bool)>> = (0..trials)
            .into_par_iter()
            .map(|i| {
                let o = run_two_step(d, m, p, trial_seed(seed, j * trials + i))?;
                Ok(o.metrics_q.map(|mq| {
                    let lo = vd * (mq.inradius).powi(d as i32);
                    let hi = vd * (mq.circumradius).powi(d as i32);
                    let tol = 1e-8 * vd;
                    (mq.sphere_deviation(), lo - tol <= mq.volume && mq.volume <= hi + tol)
                }))
            })
            .collect::<Result<_>>()?;
        let mut values: Vec<f64> = devs.iter().flatten().map(|x| x.0).collect();
        samples += values.len();
        sandwich_failures += devs.iter().flatten().filter(|x| !x.1).count();
        medians.push(if values.is_empty() { f64::NAN } else { median(&mut values) });
    }
    let decreasing = medians.windows(2).all(|w| w[1] < w[0]);
    let slope = if ms.len() >= 2 {
        let xs: Vec<f64> = ms.iter().map(|&m| (m as f64).ln()).collect();
        let ys: Vec<f64> = medians.iter().map(|v| v.ln()).collect();
        let mx = xs.iter().sum::<f64>() / xs.len() as f64;
        let my = ys.iter().sum::<f64>() / ys.len() as f64;
        let num: f64 = xs.iter().zip(&ys).map(|(x, y)| (x - mx) * (y - my)).sum();
        let den: f64 = xs.iter().map(|x| (x - mx).powi(2)).sum();
        num / den
    } else {
        f64::NAN
    };
    let trend = Check::new(
        "sphere deviation trend",
        decreasing,
        format!("d={d}, p={p}, m={ms:?}, {trials} trials each: medians {medians:.5?}; log-log slope {slope:.3}"),
    );
    let volume = Check::new(
        "volume sandwich",
        sandwich_failures == 0 && samples > 0,
        format!("{samples} non-degenerate trials: {sandwich_failures} outside v_d*r_in^d <= vol <= v_d*r_out^d (tol 1e-8)"),
    );
    Ok((trend, volume))
}

pub fn center(d: usize, r: f64, eps: f64, pi: f64, reps: usize, seed: u64) -> Result<Check> {
    let (n, rate) = super::center_estimate_experiment(d, r, eps, pi, reps, seed)?;
    Ok(Check::new(
        &format!("center estimate d={d}"),
        rate <= pi,
        format!("R={r}, eps={eps}, pi={pi}: N={n}, failure rate {rate:.4} over {reps} reps"),
    ))
}

/// Named regular graphs with `n ≤ 30`, including random dual skeletons.
pub fn graph_corpus(seed: u64) -> Result<Vec<(String, Graph)>> {
    let mut out: Vec<(String, Graph)> = Vec::new();
    for n in 5..=9 {
        out.push((format!("C{n}"), Graph::cycle(n)));
    }
    for n in 4..=6 {
        out.push((format!("K{n}"), Graph::complete(n)));
    }
    out.push(("3-cube".into(), Graph::hypercube(3)));
    out.push(("4-cube".into(), Graph::hypercube(4)));
    for k in 3..=5 {
        out.push((format!("{k}-cross-polytope"), Graph::cross_polytope(k)));
    }
    out.push(("Petersen".into(), Graph::petersen()));
    for n in 5..=8 {
        out.push((format!("prism{n}"), Graph::prism(n)));
    }
    out.push(("circulant12(1,5)".into(), Graph::circulant(12, &[1, 5])));
    for (i, m) in [8, 10, 12, 14, 16].into_iter().enumerate() {
        let (_, dual) = sample_base(3, m, trial_seed(seed, i), crate::geometry::TOL_GEOM)?;
        out.push((format!("dual skeleton d=3 m={m}"), Graph::from_polytope(&dual)));
    }
    for (i, m) in [6, 7].into_iter().enumerate() {
        let (_, dual) = sample_base(4, m, trial_seed(seed, 100 + i), crate::geometry::TOL_GEOM)?;
        if dual.num_vertices() <= 30 {
            out.push((format!("dual skeleton d=4 m={m}"), Graph::from_polytope(&dual)));
        }
    }
    Ok(out)
}

/// For every graph and `t ≤ t_max`: the enumeration matches brute force,
/// connected plus disconnected sets partition the `t`-subsets, and the
/// count respects `4^{t−2} d (d−1)^{t−2} n`.
pub fn connected_subgraphs(corpus: &[(String, Graph)], t_max: usize) -> Result<Check> {
    let mut problems = Vec::new();
    let mut evaluated = 0;
    let mut worst_ratio: f64 = 0.0;
    for (name, g) in corpus {
        let Some(d) = g.regular_degree() else {
            problems.push(format!("{name} is not regular"));
            continue;
        };
        let n = g.num_vertices();
        for t in 2..=t_max.min(n) {
            let count = enumerate_connected_induced(g, t)?;
            let (conn, disc) = count_induced_brute_force(g, t);
            let total = (0..t).fold(1u64, |acc, i| acc * (n - i) as u64 / (i as u64 + 1));
            let bound = connected_subgraph_bound(t, d, n)?;
            worst_ratio = worst_ratio.max(count as f64 / bound);
            if count != conn || conn + disc != total || count as f64 > bound {
                problems.push(format!("{name} t={t}: count {count}, brute {conn}+{disc}/{total}, bound {bound}"));
            }
            evaluated += 1;
        }
    }
    Ok(Check::new(
        "connected induced subgraph bound",
        problems.is_empty() && corpus.len() >= 20,
        format!(
            "{} graphs, {evaluated} (graph, t) pairs, t<={t_max}: max count/bound {worst_ratio:.3}; problems {problems:?}",
            corpus.len()
        ),
    ))
}

/// Rooted tree counts within `4^{t−2}` and equal to a canonical-string
/// brute force where that is affordable.
pub fn rooted_trees() -> Result<Check> {
    let mut counts = Vec::new();
    let mut ok = true;
    for t in 1..=12 {
        let c = rooted_tree_count(t)?;
        if t >= 2 && c > 4u64.pow(t as u32 - 2) {
            ok = false;
        }
        if t <= 9 && c != rooted_tree_count_brute_force(t) {
            ok = false;
        }
        counts.push(c);
    }
    Ok(Check::new(
        "rooted tree bound",
        ok,
        format!("t=1..12 counts {counts:?}; all <= 4^(t-2) and equal to brute force for t<=9: {ok}"),
    ))
}

/// Byte-identical CSV across two runs and across 1 and 4 worker threads.
pub fn reproducibility(cfg: &ExperimentConfig) -> Result<Check> {
    let run = |threads: usize| -> Result<Vec<u8>> {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .map_err(|e| Error::Parameter(format!("thread pool: {e}")))?;
        pool.install(|| rows_to_csv(&sweep(cfg)?))
    };
    let a = run(1)?;
    let b = run(1)?;
    let c = run(4)?;
    Ok(Check::new(
        "reproducibility",
        a == b && a == c && !a.is_empty(),
        format!(
            "{:?} mode, {} bytes: rerun identical {}, 1 vs 4 threads identical {}",
            cfg.mode,
            a.len(),
            a == b,
            a == c
        ),
    ))
}
