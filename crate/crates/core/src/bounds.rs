//! Closed-form constants, facet-count bounds, tail probabilities and sample
//! sizes for the two-step model.
//!
//! Every probability-valued function clamps its final value to `[0, 1]`;
//! intermediate quantities are never clamped.

use std::f64::consts::PI;

use num::{BigInt, BigRational, One, ToPrimitive};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

fn clamp01(x: f64) -> f64 {
    if x.is_nan() {
        1.0
    } else {
        x.clamp(0.0, 1.0)
    }
}

fn check_prob(p: f64, name: &str) -> Result<()> {
    if (0.0..=1.0).contains(&p) {
        Ok(())
    } else {
        Err(Error::Parameter(format!("{name} must lie in [0, 1], got {p}")))
    }
}

/// `exponent · ln(base)` with the convention `0 · ln 0 = 0`.
fn ln_pow(base: f64, exponent: f64) -> f64 {
    if exponent == 0.0 {
        0.0
    } else {
        exponent * base.ln()
    }
}

/// `ln C(n, k)`; `−∞` when `k > n`.
pub fn ln_binomial(n: u64, k: u64) -> f64 {
    if k > n {
        return f64::NEG_INFINITY;
    }
    let k = k.min(n - k);
    (0..k).map(|i| ((n - i) as f64).ln() - ((i + 1) as f64).ln()).sum()
}

/// `γ_0 = 1/2`, `γ_{k+1} = 1 / (2π (k+1) γ_k)`.
pub fn gamma_seq(k: usize) -> f64 {
    let mut g = 0.5;
    for i in 0..k {
        g = 1.0 / (2.0 * PI * (i + 1) as f64 * g);
    }
    g
}

/// Rational part `r_k` of `γ_k = r_k · π^{−(k mod 2)}`, using
/// `γ_{k+2} / γ_k = (k+1)/(k+2)`.
fn gamma_rational(k: usize) -> BigRational {
    let mut r = if k % 2 == 0 {
        BigRational::new(BigInt::one(), BigInt::from(2))
    } else {
        BigRational::one()
    };
    let mut j = k % 2;
    while j < k {
        r *= BigRational::new(BigInt::from(j + 1), BigInt::from(j + 2));
        j += 2;
    }
    r
}

/// Limit of `E f_{d−1}(P) / m` for hulls of `m` uniform sphere points:
/// `(2/d) · γ_{(d−1)²} · γ_{d−1}^{−(d−1)}`.
///
/// The rational factor is evaluated exactly, so `F(2) = 1` and `F(3) = 2`
/// come out exact. Returns a range error once the value leaves `f64`.
pub fn f_const(d: usize) -> Result<f64> {
    if d < 2 {
        return Err(Error::Parameter(format!("F(d) needs d >= 2, got {d}")));
    }
    let a = (d - 1) * (d - 1);
    let b = d - 1;
    let ratio = BigRational::new(BigInt::from(2), BigInt::from(d)) * gamma_rational(a)
        / num::pow(gamma_rational(b), b);
    let pi_exp = b as i32 * (b % 2) as i32 - (a % 2) as i32;
    let value = ratio
        .to_f64()
        .map(|r| r * PI.powi(pi_exp))
        .filter(|v| v.is_finite() && *v > 0.0);
    value.ok_or_else(|| Error::Range(format!("F({d}) overflows f64")))
}

/// Lebesgue measure of the unit ball in ℝ^k, `π^{k/2} / Γ(k/2 + 1)`,
/// via `v_k = (2π/k) v_{k−2}`.
pub fn unit_ball_volume(k: usize) -> f64 {
    match k {
        0 => 1.0,
        1 => 2.0,
        _ => 2.0 * PI / k as f64 * unit_ball_volume(k - 2),
    }
}

/// Lower bound on the probability that a uniform sphere point lands in a
/// fixed cap of height `h`: `√(2h)^{d−1} v_{d−1} / (d v_d)`.
pub fn cap_prob_lower(h: f64, d: usize) -> Result<f64> {
    if !(h > 0.0 && h < 1.0) {
        return Err(Error::Parameter(format!("cap height must be in (0, 1), got {h}")));
    }
    if d < 2 {
        return Err(Error::Parameter(format!("dimension must be at least 2, got {d}")));
    }
    Ok((2.0 * h).sqrt().powi(d as i32 - 1) * unit_ball_volume(d - 1) / (d as f64 * unit_ball_volume(d)))
}

/// Explicit constant `C_d = 4 d 8^d (d−1)^d` of the dense-regime upper bound.
pub fn c_d(d: usize) -> f64 {
    4.0 * d as f64 * 8f64.powi(d as i32) * ((d - 1) as f64).powi(d as i32)
}

/// Upper bound on `E f_{d−1}(Q)` for a nondegenerate simple polytope with
/// `m` facets and `n` vertices:
/// `m + n q p^d (1 + C_d q / (1 − 8(d−1) q))`, valid for `q < 1/(8(d−1))`.
pub fn upper_bound_facets(d: usize, m: f64, n: f64, p: f64) -> Result<f64> {
    check_prob(p, "p")?;
    if d < 2 {
        return Err(Error::Parameter(format!("dimension must be at least 2, got {d}")));
    }
    let q = 1.0 - p;
    let denom = 1.0 - 8.0 * (d - 1) as f64 * q;
    if denom <= 0.0 {
        return Err(Error::Precondition(format!(
            "q = {q} must be below 1/(8(d-1)) = {}",
            1.0 / (8.0 * (d - 1) as f64)
        )));
    }
    Ok(m + n * q * p.powi(d as i32) * (1.0 + c_d(d) * q / denom))
}

/// Asymptotic form with `n = F(d) m`.
pub fn upper_bound_facets_asymptotic(d: usize, m: f64, p: f64) -> Result<f64> {
    upper_bound_facets(d, m, f_const(d)? * m, p)
}

/// `p^d m + n q p^d`, the expected number of surviving old facets plus
/// shallow cuts.
pub fn lower_bound_facets(d: usize, m: f64, n: f64, p: f64) -> Result<f64> {
    check_prob(p, "p")?;
    let pd = p.powi(d as i32);
    Ok(pd * m + n * (1.0 - p) * pd)
}

/// `(1 − δ)(p^d + F(d) p^d q) m`.
pub fn lower_bound_facets_asymptotic(d: usize, m: f64, p: f64, delta: f64) -> Result<f64> {
    check_prob(p, "p")?;
    let pd = p.powi(d as i32);
    Ok((1.0 - delta) * (pd + f_const(d)? * pd * (1.0 - p)) * m)
}

/// Failure probability of `f_{d−1}(Q) ≥ (1 − ε)(p^d m + n q p^d)`:
/// `e^{−2(ε q p^d / d)² n} + e^{−m p^d ε² / 2}`, clamped.
pub fn facet_tail(d: usize, m: f64, n: f64, p: f64, eps: f64) -> Result<f64> {
    check_prob(p, "p")?;
    if !(eps > 0.0) {
        return Err(Error::Parameter(format!("epsilon must be positive, got {eps}")));
    }
    let pd = p.powi(d as i32);
    let a = (eps * (1.0 - p) * pd / d as f64).powi(2);
    Ok(clamp01((-2.0 * a * n).exp() + (-m * pd * eps * eps / 2.0).exp()))
}

/// Number of connected induced `t`-vertex subgraphs of a `d`-regular graph
/// on `n` vertices is at most `4^{t−2} d (d−1)^{t−2} n`.
pub fn connected_subgraph_bound(t: usize, d: usize, n: usize) -> Result<f64> {
    if t < 2 || d < 2 {
        return Err(Error::Parameter(format!("need t >= 2 and d >= 2, got t={t}, d={d}")));
    }
    let e = (t - 2) as i32;
    Ok(4f64.powi(e) * d as f64 * ((d - 1) as f64).powi(e) * n as f64)
}

/// Probability that some vertex of `Q` lies beyond radius `1 + ε`:
/// `p C(m,d) (1 − √(2ε)^{d−1} v_{d−1} / (d v_d))^{m−d}`, clamped.
pub fn outside_prob_bound(d: usize, m: u64, p: f64, eps: f64) -> Result<f64> {
    check_prob(p, "p")?;
    if !(eps > 0.0 && eps < 1.0) {
        return Err(Error::Parameter(format!("epsilon must be in (0, 1), got {eps}")));
    }
    if m < d as u64 {
        return Err(Error::Parameter(format!("need m >= d, got m={m}, d={d}")));
    }
    let cap = cap_prob_lower(eps, d)?;
    let ln = ln_binomial(m, d as u64) + ln_pow(1.0 - cap, (m - d as u64) as f64);
    Ok(clamp01(p * ln.exp()))
}

/// Probability that `Q` has a new facet with at least `t` vertices above it:
/// `C(n,d) p^d (1−p)^t`, clamped.
pub fn cap_size_tail(n: u64, d: usize, p: f64, t: u64) -> Result<f64> {
    check_prob(p, "p")?;
    let ln = ln_binomial(n, d as u64) + ln_pow(p, d as f64) + ln_pow(1.0 - p, t as f64);
    Ok(clamp01(ln.exp()))
}

/// Facet diameter of a polytope circumscribed about the unit sphere with
/// all vertices within radius `1 + ε`: at most `√(12ε + 6ε²)`.
pub fn facet_diameter_bound(eps: f64) -> Result<f64> {
    if !(eps > 0.0) {
        return Err(Error::Parameter(format!("epsilon must be positive, got {eps}")));
    }
    Ok((12.0 * eps + 6.0 * eps * eps).sqrt())
}

/// Rate terms of the Hausdorff bound without their unknown constants:
/// inner `log²(pm) (log m)^{2/(d−1)} / (p² m^{2/(d−1)})` and outer
/// `(log(p m^d) / m)^{2/(d−1)}`.
pub fn hausdorff_rate_terms(d: usize, m: f64, p: f64) -> Result<(f64, f64)> {
    if d < 2 {
        return Err(Error::Parameter(format!("dimension must be at least 2, got {d}")));
    }
    let e = 2.0 / (d - 1) as f64;
    if !(p * m.powf(1.0 / (d - 1) as f64) > 1.0) {
        return Err(Error::Precondition(format!("p m^(1/(d-1)) must exceed 1 (d={d}, m={m}, p={p})")));
    }
    let inner = (p * m).ln().powi(2) * m.ln().powf(e) / (p * p * m.powf(e));
    let outer = ((p * m.powi(d as i32)).ln() / m).powf(e);
    Ok((inner, outer))
}

/// Smallest `N ≥ (2R²/ε²)(1 + (2/d) ln(1/π))` so that the mean of `N`
/// uniform points on the radius-`R` sphere lies within `ε` of the center
/// with probability at least `1 − π`.
pub fn center_sample_size(r: f64, eps: f64, pi: f64, d: usize) -> Result<u64> {
    if !(r > 0.0 && eps > 0.0) {
        return Err(Error::Parameter(format!("R and epsilon must be positive, got R={r}, eps={eps}")));
    }
    if !(pi > 0.0 && pi < 1.0) {
        return Err(Error::Parameter(format!("pi must be in (0, 1), got {pi}")));
    }
    if d == 0 {
        return Err(Error::Parameter("dimension must be positive".into()));
    }
    let x = 2.0 * r * r / (eps * eps) * (1.0 + 2.0 / d as f64 * (1.0 / pi).ln());
    // absorb rounding noise when the formula lands on an integer
    let nearest = x.round();
    let n = if (x - nearest).abs() <= 1e-9 * x.max(1.0) { nearest } else { x.ceil() };
    Ok(n.max(1.0) as u64)
}

/// Band for `f_{d−1}(Q) / f_0(Q)` obtained from the lower constant
/// `c = p^d + F p^d q` and the upper constant
/// `C = 1 + F p^d q (1 + C_d q / (1 − 8(d−1)q))`, both divided by `p F(d)`.
/// The upper end is `None` outside the dense regime.
pub fn slenderness_band(d: usize, p: f64, delta: f64) -> Result<(f64, Option<f64>)> {
    check_prob(p, "p")?;
    if p == 0.0 {
        return Err(Error::Parameter("slenderness band needs p > 0".into()));
    }
    let f = f_const(d)?;
    let lower = lower_bound_facets_asymptotic(d, 1.0, p, delta)? / (f * p);
    let upper = upper_bound_facets_asymptotic(d, 1.0, p)
        .ok()
        .map(|c| (1.0 + delta) * c / (f * p));
    Ok((lower, upper))
}

/// Inputs for a [`BoundsReport`].
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct BoundsInput {
    pub d: usize,
    pub m: u64,
    /// Vertex count of `P°`; defaults to `round(F(d) m)`.
    pub n: Option<u64>,
    pub p: f64,
    pub eps: f64,
    pub t: usize,
    pub h: f64,
    pub r: f64,
    pub pi: f64,
    pub delta: f64,
}

impl Default for BoundsInput {
    fn default() -> Self {
        BoundsInput {
            d: 3,
            m: 1000,
            n: None,
            p: 0.95,
            eps: 0.1,
            t: 5,
            h: 0.5,
            r: 1.1,
            pi: 0.05,
            delta: 0.1,
        }
    }
}

/// Every closed form evaluated at one parameter point. Entries whose
/// preconditions fail are `None`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct BoundsReport {
    pub input: BoundsInput,
    pub n: u64,
    pub q: f64,
    pub gamma_d_minus_1: f64,
    pub gamma_sq: f64,
    pub f_const: Option<f64>,
    pub c_d: f64,
    pub v_d_minus_1: f64,
    pub v_d: f64,
    pub cap_prob_lower: Option<f64>,
    pub upper_bound_facets: Option<f64>,
    pub upper_bound_facets_asymptotic: Option<f64>,
    pub lower_bound_facets: Option<f64>,
    pub lower_bound_facets_asymptotic: Option<f64>,
    pub facet_tail: Option<f64>,
    pub connected_subgraph_bound: Option<f64>,
    pub outside_prob_bound: Option<f64>,
    pub cap_size_tail: Option<f64>,
    pub facet_diameter_bound: Option<f64>,
    pub hausdorff_inner: Option<f64>,
    pub hausdorff_outer: Option<f64>,
    pub center_sample_size: Option<u64>,
    pub slenderness_lower: Option<f64>,
    pub slenderness_upper: Option<f64>,
}

impl BoundsReport {
    pub fn evaluate(input: &BoundsInput) -> Self {
        let d = input.d;
        let m = input.m as f64;
        let f = f_const(d).ok();
        let n = input
            .n
            .unwrap_or_else(|| f.map(|f| (f * m).round() as u64).unwrap_or(0));
        let nf = n as f64;
        let p = input.p;
        let rates = hausdorff_rate_terms(d, m, p).ok();
        let band = slenderness_band(d, p, input.delta).ok();
        BoundsReport {
            input: input.clone(),
            n,
            q: 1.0 - p,
            gamma_d_minus_1: gamma_seq(d.saturating_sub(1)),
            gamma_sq: gamma_seq(d.saturating_sub(1).pow(2)),
            f_const: f,
            c_d: c_d(d),
            v_d_minus_1: unit_ball_volume(d.saturating_sub(1)),
            v_d: unit_ball_volume(d),
            cap_prob_lower: cap_prob_lower(input.h, d).ok(),
            upper_bound_facets: upper_bound_facets(d, m, nf, p).ok(),
            upper_bound_facets_asymptotic: upper_bound_facets_asymptotic(d, m, p).ok(),
            lower_bound_facets: lower_bound_facets(d, m, nf, p).ok(),
            lower_bound_facets_asymptotic: lower_bound_facets_asymptotic(d, m, p, input.delta).ok(),
            facet_tail: facet_tail(d, m, nf, p, input.eps).ok(),
            connected_subgraph_bound: connected_subgraph_bound(input.t, d, n as usize).ok(),
            outside_prob_bound: outside_prob_bound(d, input.m, p, input.eps).ok(),
            cap_size_tail: cap_size_tail(n, d, p, input.t as u64).ok(),
            facet_diameter_bound: facet_diameter_bound(input.eps).ok(),
            hausdorff_inner: rates.map(|r| r.0),
            hausdorff_outer: rates.map(|r| r.1),
            center_sample_size: center_sample_size(input.r, input.eps, input.pi, d).ok(),
            slenderness_lower: band.map(|b| b.0),
            slenderness_upper: band.and_then(|b| b.1),
        }
    }

    /// Aligned `key  value` lines.
    pub fn to_text(&self) -> String {
        let i = &self.input;
        let fmt = |x: Option<f64>| x.map_or_else(|| "n/a".to_string(), |v| format!("{v:.10e}"));
        let rows: Vec<(&str, String)> = vec![
            ("d", i.d.to_string()),
            ("m", i.m.to_string()),
            ("n", self.n.to_string()),
            ("p", i.p.to_string()),
            ("q", format!("{}", self.q)),
            ("epsilon", i.eps.to_string()),
            ("t", i.t.to_string()),
            ("h", i.h.to_string()),
            ("R", i.r.to_string()),
            ("pi", i.pi.to_string()),
            ("delta", i.delta.to_string()),
            ("gamma_{d-1}", fmt(Some(self.gamma_d_minus_1))),
            ("gamma_{(d-1)^2}", fmt(Some(self.gamma_sq))),
            ("F(d)", fmt(self.f_const)),
            ("C_d", fmt(Some(self.c_d))),
            ("v_{d-1}", fmt(Some(self.v_d_minus_1))),
            ("v_d", fmt(Some(self.v_d))),
            ("cap_prob_lower(h)", fmt(self.cap_prob_lower)),
            ("upper_bound_facets", fmt(self.upper_bound_facets)),
            ("upper_bound_facets_asymptotic", fmt(self.upper_bound_facets_asymptotic)),
            ("lower_bound_facets", fmt(self.lower_bound_facets)),
            ("lower_bound_facets_asymptotic", fmt(self.lower_bound_facets_asymptotic)),
            ("facet_tail", fmt(self.facet_tail)),
            ("connected_subgraph_bound", fmt(self.connected_subgraph_bound)),
            ("outside_prob_bound", fmt(self.outside_prob_bound)),
            ("cap_size_tail", fmt(self.cap_size_tail)),
            ("facet_diameter_bound", fmt(self.facet_diameter_bound)),
            ("hausdorff_inner_term", fmt(self.hausdorff_inner)),
            ("hausdorff_outer_term", fmt(self.hausdorff_outer)),
            (
                "center_sample_size",
                self.center_sample_size.map_or_else(|| "n/a".into(), |n| n.to_string()),
            ),
            ("slenderness_lower", fmt(self.slenderness_lower)),
            ("slenderness_upper", fmt(self.slenderness_upper)),
        ];
        let width = rows.iter().map(|r| r.0.len()).max().unwrap_or(0);
        rows.iter()
            .map(|(k, v)| format!("{k:<width$}  {v}\n"))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rel(a: f64, b: f64) -> f64 {
        ((a - b) / b).abs()
    }

    #[test]
    fn gamma_values() {
        assert_eq!(gamma_seq(0), 0.5);
        assert!((gamma_seq(1) - 1.0 / PI).abs() < 1e-15);
        assert!((gamma_seq(2) - 0.25).abs() < 1e-15);
        for k in 0..60 {
            let lhs = 2.0 * PI * (k + 1) as f64 * gamma_seq(k) * gamma_seq(k + 1);
            assert!((lhs - 1.0).abs() < 1e-12, "k={k}");
        }
    }

    #[test]
    fn f_const_listed_values() {
        assert_eq!(f_const(2).unwrap(), 1.0);
        assert_eq!(f_const(3).unwrap(), 2.0);
        assert!(rel(f_const(4).unwrap(), 24.0 * PI * PI / 35.0) < 1e-12);
        assert!(rel(f_const(5).unwrap(), 286.0 / 9.0) < 1e-12);
        assert!(rel(f_const(6).unwrap(), 1_296_000.0 * PI.powi(4) / 676_039.0) < 1e-12);
        assert!(matches!(f_const(1), Err(Error::Parameter(_))));
    }

    #[test]
    fn f_const_agrees_with_recurrence() {
        for d in 2..=9 {
            let direct = 2.0 / d as f64 * gamma_seq((d - 1) * (d - 1)) * gamma_seq(d - 1).powi(-((d - 1) as i32));
            assert!(rel(f_const(d).unwrap(), direct) < 1e-11, "d={d}");
        }
    }

    #[test]
    fn f_const_grows() {
        let mut prev = 0.0;
        for d in 2..=40 {
            let f = f_const(d).unwrap();
            assert!(f.is_finite() && f > prev);
            prev = f;
        }
    }

    #[test]
    fn ball_volumes() {
        assert_eq!(unit_ball_volume(1), 2.0);
        assert!((unit_ball_volume(2) - PI).abs() < 1e-15);
        assert!((unit_ball_volume(3) - 4.0 * PI / 3.0).abs() < 1e-14);
        use statrs::function::gamma::gamma;
        for k in 0..12 {
            let oracle = PI.powf(k as f64 / 2.0) / gamma(k as f64 / 2.0 + 1.0);
            assert!(rel(unit_ball_volume(k), oracle) < 1e-12);
        }
    }

    #[test]
    fn cap_probabilities() {
        assert!((cap_prob_lower(0.5, 2).unwrap() - 1.0 / PI).abs() < 1e-15);
        assert!((cap_prob_lower(0.5, 3).unwrap() - 0.25).abs() < 1e-15);
        assert!(cap_prob_lower(1e-12, 4).unwrap() < 1e-15);
        assert!(cap_prob_lower(1.0, 3).is_err());
        assert!(cap_prob_lower(0.0, 3).is_err());
    }

    #[test]
    fn upper_bound() {
        assert_eq!(upper_bound_facets(3, 1000.0, 1996.0, 1.0).unwrap(), 1000.0);
        assert_eq!(c_d(3), 49152.0);
        let p: f64 = 0.99;
        let q = 1.0 - p;
        let expected = 1000.0 + 1996.0 * q * p.powi(3) * (1.0 + 49152.0 * q / (1.0 - 16.0 * q));
        let got = upper_bound_facets(3, 1000.0, 1996.0, p).unwrap();
        assert!(got > 1000.0 && rel(got, expected) < 1e-14);
        assert!(matches!(
            upper_bound_facets(3, 1000.0, 1996.0, 1.0 - 1.0 / 16.0),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn lower_bound() {
        assert_eq!(lower_bound_facets(3, 1000.0, 1996.0, 1.0).unwrap(), 1000.0);
        assert_eq!(lower_bound_facets(3, 1000.0, 1996.0, 0.0).unwrap(), 0.0);
        assert!((lower_bound_facets(3, 1000.0, 1996.0, 0.9).unwrap() - 874.5084).abs() < 0.1);
    }

    #[test]
    fn facet_tail_values() {
        assert_eq!(facet_tail(3, 1e4, 2e4, 0.9, 1e9).unwrap(), 0.0);
        assert_eq!(facet_tail(3, 0.0, 0.0, 0.9, 0.1).unwrap(), 1.0);
        let v = facet_tail(3, 1e4, 2e4, 0.9, 0.1).unwrap();
        let a = (-2.0 * (0.1f64 * 0.1 * 0.729 / 3.0).powi(2) * 2e4).exp();
        let b = (-1e4 * 0.729 * 0.01 / 2.0f64).exp();
        assert!(v > 0.0 && v < 1.0 && (v - (a + b)).abs() < 1e-15);
    }

    #[test]
    fn connected_subgraph_values() {
        assert_eq!(connected_subgraph_bound(2, 3, 8).unwrap(), 24.0);
        assert_eq!(connected_subgraph_bound(3, 2, 6).unwrap(), 48.0);
        assert_eq!(connected_subgraph_bound(5, 3, 20).unwrap(), 30720.0);
    }

    #[test]
    fn outside_prob() {
        assert!((outside_prob_bound(3, 3, 0.7, 0.5).unwrap() - 0.7).abs() < 1e-15);
        assert!(outside_prob_bound(3, 100_000, 1.0, 0.999).unwrap() < 1e-6);
        let mut prev = f64::INFINITY;
        for m in (500..5000).step_by(250) {
            let v = outside_prob_bound(3, m, 0.9, 0.1).unwrap();
            // direct evaluation
            let cap = 0.2f64.sqrt().powi(2) * PI / (3.0 * 4.0 * PI / 3.0);
            let direct = 0.9 * (ln_binomial(m, 3) + (m - 3) as f64 * (1.0 - cap).ln()).exp();
            assert!((v - direct.min(1.0)).abs() <= 1e-12 * direct.max(1e-300));
            assert!(v < prev || v == 0.0);
            prev = v;
        }
    }

    #[test]
    fn cap_size_tail_values() {
        assert_eq!(cap_size_tail(8, 3, 1.0, 1).unwrap(), 0.0);
        assert!((cap_size_tail(8, 3, 0.9, 2).unwrap() - 56.0 * 0.729 * 0.01).abs() < 1e-12);
        assert!((cap_size_tail(8, 3, 0.1, 0).unwrap() - 56.0 * 0.001).abs() < 1e-12);
        assert_eq!(cap_size_tail(8, 3, 0.9, 0).unwrap(), 1.0);
    }

    #[test]
    fn diameter_values() {
        assert!(facet_diameter_bound(1e-12).unwrap() < 1e-5);
        assert!((facet_diameter_bound(1.0).unwrap() - 18f64.sqrt()).abs() < 1e-15);
        assert!((facet_diameter_bound(0.01).unwrap() - 0.34728).abs() < 1e-4);
    }

    #[test]
    fn hausdorff_rates() {
        let (i, o) = hausdorff_rate_terms(3, 1e4, 0.9).unwrap();
        assert!(i.is_finite() && i > 0.0 && o.is_finite() && o > 0.0);
        let mut prev = (f64::INFINITY, f64::INFINITY);
        for k in 2..8 {
            let m = 10f64.powi(k) * 3.0;
            let (i, o) = hausdorff_rate_terms(3, m, 0.9).unwrap();
            assert!(i < prev.0 && o < prev.1);
            prev = (i, o);
        }
        let mut last = f64::INFINITY;
        for p in [0.2, 0.4, 0.6, 0.8, 1.0] {
            let (i, _) = hausdorff_rate_terms(3, 1e4, p).unwrap();
            assert!(i < last);
            last = i;
        }
        assert!(matches!(hausdorff_rate_terms(3, 4.0, 0.4), Err(Error::Precondition(_))));
    }

    #[test]
    fn center_sizes() {
        assert_eq!(center_sample_size(1.0, 1.0, (-1.0f64).exp(), 2).unwrap(), 4);
        assert_eq!(center_sample_size(1.1, 0.1, 0.05, 3).unwrap(), 726);
        assert_eq!(center_sample_size(1.0, 0.1, 1.0 - 1e-15, 3).unwrap(), 200);
        assert!(center_sample_size(1.0, 0.1, 1.0, 3).is_err());
        assert!(center_sample_size(0.0, 0.1, 0.5, 3).is_err());
    }

    #[test]
    fn bounds_are_ordered_in_the_dense_regime() {
        for d in 2..=6 {
            let f = f_const(d).unwrap();
            let qmax = 1.0 / (8.0 * (d - 1) as f64);
            for k in 0..20 {
                let p = 1.0 - qmax * k as f64 / 20.0;
                for m in [10.0, 1e3, 1e6] {
                    let n = f * m;
                    assert!(upper_bound_facets(d, m, n, p).unwrap() >= lower_bound_facets(d, m, n, p).unwrap());
                }
            }
        }
    }

    #[test]
    fn report_renders() {
        let r = BoundsReport::evaluate(&BoundsInput::default());
        assert_eq!(r.n, 2000);
        let text = r.to_text();
        assert!(text.contains("F(d)") && text.contains("center_sample_size"));
        assert!(r.upper_bound_facets.unwrap() > 1000.0);
        let sparse = BoundsReport::evaluate(&BoundsInput { p: 0.9, ..BoundsInput::default() });
        assert!(sparse.upper_bound_facets.is_none() && sparse.slenderness_upper.is_none());
    }
}
