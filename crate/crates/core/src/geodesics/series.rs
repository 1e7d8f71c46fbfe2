//! Partial sums of the relative and parabolic Poincaré series, and an
//! empirical convergence classifier.
//!
//! The relative series runs over double cosets of the cusp stabilizer, i.e.
//! over fractions, with the horosphere distance equal to the depth:
//! `P₀(s) = Σ Φ(q)·|q|^{-2s}` over principal ideals `(q)`. The parabolic
//! series runs over the stabilizer itself, the translations by `c ∈ O`, with
//! `d(x₀, x₀ + c) = 2·asinh(|c|/2)` for `x₀` at height 1.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::counting::phi_by_norm;
use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::ideal::{LatticeIdeal, NormEllipse};
use crate::numeric::{floor_cutoff, ls_slope, CompensatedSum};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SeriesKind {
    Relative,
    Parabolic,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SeriesPartialSum {
    pub s: f64,
    pub cutoff: f64,
    pub value: f64,
    pub kind: SeriesKind,
}

/// Relative series truncated at `N(q) ≤ cutoff`, for each cutoff.
/// Terms are added in ascending norm order with compensated summation.
pub fn relative_poincare_partials(f: &FieldSpec, s: f64, cutoffs: &[f64]) -> Vec<SeriesPartialSum> {
    let ints: Vec<u64> = cutoffs.iter().map(|&c| floor_cutoff(c)).collect();
    let max = ints.iter().copied().max().unwrap_or(0);
    let per_norm = phi_by_norm(f, max);
    let mut order: Vec<usize> = (0..cutoffs.len()).collect();
    order.sort_by_key(|&i| ints[i]);
    let mut out = vec![None; cutoffs.len()];
    let mut sum = CompensatedSum::new();
    let mut n = 0u64;
    for i in order {
        while n < ints[i] {
            n += 1;
            let count = per_norm[n as usize];
            if count > 0 {
                let abs_sq = if f.is_rational() { (n * n) as f64 } else { n as f64 };
                sum.add(count as f64 * (-s * abs_sq.ln()).exp());
            }
        }
        out[i] = Some(SeriesPartialSum { s, cutoff: cutoffs[i], value: sum.value(), kind: SeriesKind::Relative });
    }
    out.into_iter().map(|x| x.expect("filled")).collect()
}

/// `Σ Φ(q)·e^{-s·depth(q)}` over principal ideals with `N(q) ≤ cutoff`. The
/// trivial double coset contributes the leading 1.
pub fn relative_poincare_partial(f: &FieldSpec, s: f64, cutoff: f64) -> SeriesPartialSum {
    relative_poincare_partials(f, s, &[cutoff])[0]
}

/// Parabolic series truncated at `|c| ≤ cutoff`, for each cutoff.
pub fn parabolic_poincare_partials(f: &FieldSpec, s: f64, cutoffs: &[f64]) -> Vec<SeriesPartialSum> {
    // Norm bound per cutoff: |c| for the rationals, |c|² otherwise.
    let to_norm = |c: f64| if f.is_rational() { floor_cutoff(c) } else { floor_cutoff(c * c) };
    let ints: Vec<u64> = cutoffs.iter().map(|&c| to_norm(c)).collect();
    let max = ints.iter().copied().max().unwrap_or(0);
    let mut by_norm: BTreeMap<u64, u64> = BTreeMap::new();
    for c in NormEllipse::new(f, LatticeIdeal::UNIT, max).iter() {
        *by_norm.entry(f.norm(c)).or_default() += 1;
    }
    let mut order: Vec<usize> = (0..cutoffs.len()).collect();
    order.sort_by_key(|&i| ints[i]);
    let mut out = vec![None; cutoffs.len()];
    let mut sum = CompensatedSum::new();
    let mut terms = by_norm.into_iter().peekable();
    for i in order {
        while let Some(&(n, count)) = terms.peek() {
            if n > ints[i] {
                break;
            }
            let abs = abs_from_norm(f, n);
            sum.add(count as f64 * (-2.0 * s * (abs / 2.0).asinh()).exp());
            terms.next();
        }
        out[i] = Some(SeriesPartialSum { s, cutoff: cutoffs[i], value: sum.value(), kind: SeriesKind::Parabolic });
    }
    out.into_iter().map(|x| x.expect("filled")).collect()
}

fn abs_from_norm(f: &FieldSpec, n: u64) -> f64 {
    if f.is_rational() {
        n as f64
    } else {
        (n as f64).sqrt()
    }
}

/// `Σ_{c ≠ 0, |c| ≤ cutoff} e^{-s·d(x₀, x₀ + c)}` with `d = 2·asinh(|c|/2)`.
pub fn parabolic_poincare_partial(f: &FieldSpec, s: f64, cutoff: f64) -> SeriesPartialSum {
    parabolic_poincare_partials(f, s, &[cutoff])[0]
}

/// `P₀(s)·(1 + parabolic)²` at each norm cutoff `c`, with the parabolic sum
/// taken over `|c'|² ≤ c` (the matching archimedean size). This mirrors the
/// factorization of the full Poincaré series into relative and parabolic
/// parts up to bounded multiplicative constants.
pub fn full_series_surrogate(f: &FieldSpec, s: f64, cutoffs: &[f64]) -> Vec<f64> {
    let rel = relative_poincare_partials(f, s, cutoffs);
    let radii: Vec<f64> = cutoffs.iter().map(|&c| if f.is_rational() { c } else { c.sqrt() }).collect();
    let par = parabolic_poincare_partials(f, s, &radii);
    rel.iter().zip(&par).map(|(r, p)| r.value * (1.0 + p.value).powi(2)).collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Converges,
    Diverges,
    Inconclusive,
}

/// Description of the rule applied by [`classify_partials`].
pub const CONVERGENCE_PROTOCOL: &str = "converges if the last increment across a cutoff ratio >= 2 is below 1e-6, \
or if increments per unit log-cutoff decay with fitted power-law exponent < -0.1; \
diverges if partial sums grow with fitted power-law exponent > 0.1 and increments do not decay; \
inconclusive otherwise";

const CAUCHY_THRESHOLD: f64 = 1e-6;
const EXPONENT_THRESHOLD: f64 = 0.1;

/// Empirical verdict on a sequence of partial sums, with the statistics it
/// was based on.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ConvergenceReport {
    pub verdict: Verdict,
    pub protocol: &'static str,
    pub cutoffs: Vec<f64>,
    pub values: Vec<f64>,
    /// Last increment `S(c_k) − S(c_{k−1})`.
    pub last_increment: f64,
    /// Fitted exponent of increments per unit `log c` against `c`.
    pub increment_exponent: Option<f64>,
    /// Fitted exponent of the partial sums against `c`.
    pub growth_exponent: Option<f64>,
    /// Extrapolated remaining tail, when the increments decay.
    pub tail_estimate: Option<f64>,
}

/// Classify partial sums at strictly increasing cutoffs (at least three).
pub fn classify_partials(cutoffs: &[f64], values: &[f64]) -> Result<ConvergenceReport> {
    if cutoffs.len() != values.len() || cutoffs.len() < 3 {
        return Err(Error::DegenerateSamples("need at least 3 partial sums".into()));
    }
    if cutoffs.windows(2).any(|w| !(w[1] > w[0]) || w[0] <= 0.0) {
        return Err(Error::DegenerateSamples("cutoffs must be positive and strictly increasing".into()));
    }
    let k = cutoffs.len();
    let last_increment = values[k - 1] - values[k - 2];
    let last_ratio = cutoffs[k - 1] / cutoffs[k - 2];

    let mut mids = Vec::new();
    let mut dens = Vec::new();
    for i in 0..k - 1 {
        let inc = values[i + 1] - values[i];
        if inc > 0.0 {
            mids.push((cutoffs[i] * cutoffs[i + 1]).sqrt().ln());
            dens.push((inc / (cutoffs[i + 1] / cutoffs[i]).ln()).ln());
        }
    }
    let increment_exponent = if dens.len() >= 2 { ls_slope(&mids, &dens) } else { None };
    let growth_exponent = if values.iter().all(|&v| v > 0.0) {
        let xs: Vec<f64> = cutoffs.iter().map(|c| c.ln()).collect();
        let ys: Vec<f64> = values.iter().map(|v| v.ln()).collect();
        ls_slope(&xs, &ys)
    } else {
        None
    };

    let tail_estimate = match increment_exponent {
        Some(a) if a < -EXPONENT_THRESHOLD => {
            let last_mid = mids.last().expect("nonempty").exp();
            let last_density = dens.last().expect("nonempty").exp();
            let at_end = last_density * (cutoffs[k - 1] / last_mid).powf(a);
            Some(at_end / -a)
        }
        _ => None,
    };

    let verdict = if last_ratio >= 2.0 && last_increment.abs() < CAUCHY_THRESHOLD {
        Verdict::Converges
    } else if tail_estimate.is_some() {
        Verdict::Converges
    } else if growth_exponent.is_some_and(|g| g > EXPONENT_THRESHOLD) {
        Verdict::Diverges
    } else {
        Verdict::Inconclusive
    };

    Ok(ConvergenceReport {
        verdict,
        protocol: CONVERGENCE_PROTOCOL,
        cutoffs: cutoffs.to_vec(),
        values: values.to_vec(),
        last_increment,
        increment_exponent,
        growth_exponent,
        tail_estimate,
    })
}

/// Bracket the convergence threshold of the parabolic series: the largest
/// `s` in `s_grid` judged divergent and the smallest judged convergent.
pub fn parabolic_threshold_bracket(f: &FieldSpec, s_grid: &[f64], cutoffs: &[f64]) -> Result<(f64, f64)> {
    let mut lo = f64::NEG_INFINITY;
    let mut hi = f64::INFINITY;
    for &s in s_grid {
        let values: Vec<f64> = parabolic_poincare_partials(f, s, cutoffs).iter().map(|p| p.value).collect();
        match classify_partials(cutoffs, &values)?.verdict {
            Verdict::Diverges => lo = lo.max(s),
            Verdict::Converges => hi = hi.min(s),
            Verdict::Inconclusive => {}
        }
    }
    if lo.is_finite() && hi.is_finite() && lo < hi {
        Ok((lo, hi))
    } else {
        Err(Error::DegenerateSamples(format!("no consistent bracket on the grid (lo = {lo}, hi = {hi})")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gauss() -> FieldSpec {
        FieldSpec::imaginary_quadratic(1).unwrap()
    }

    #[test]
    fn relative_identity_only() {
        for f in [FieldSpec::rational(), gauss(), FieldSpec::imaginary_quadratic(3).unwrap()] {
            assert_eq!(relative_poincare_partial(&f, 2.0, 1.0).value, 1.0);
        }
    }

    #[test]
    fn relative_matches_direct_sum() {
        let r = FieldSpec::rational();
        let direct: f64 = (1..=30u64)
            .map(|q| (1..=q).filter(|&p| crate::field::gcd(p as i64, q as i64) == 1).count() as f64 * (q as f64).powf(-4.0))
            .sum();
        assert!((relative_poincare_partial(&r, 2.0, 30.0).value - direct).abs() < 1e-13);
    }

    #[test]
    fn series_monotonicity() {
        let f = gauss();
        let cut = [10.0, 20.0, 40.0, 80.0];
        for s in [1.0, 2.0, 3.0] {
            let p = relative_poincare_partials(&f, s, &cut);
            assert!(p.windows(2).all(|w| w[1].value >= w[0].value));
        }
        let a = relative_poincare_partial(&f, 1.5, 80.0).value;
        let b = relative_poincare_partial(&f, 2.5, 80.0).value;
        assert!(a > b);
    }

    #[test]
    fn parabolic_matches_direct_sum() {
        let f = gauss();
        let mut direct = 0.0;
        for a in -10i64..=10 {
            for b in -10i64..=10 {
                let r2 = (a * a + b * b) as f64;
                if r2 > 0.0 && r2 <= 100.0 {
                    direct += (-2.0 * 1.5 * (r2.sqrt() / 2.0).asinh()).exp();
                }
            }
        }
        assert!((parabolic_poincare_partial(&f, 1.5, 10.0).value - direct).abs() < 1e-12);
    }

    #[test]
    fn classifier_on_model_series() {
        let cut = [100.0, 200.0, 400.0, 800.0];
        let conv: Vec<f64> = cut.iter().map(|c: &f64| 3.0 - c.powf(-0.5)).collect();
        assert_eq!(classify_partials(&cut, &conv).unwrap().verdict, Verdict::Converges);
        let div: Vec<f64> = cut.iter().map(|c: &f64| c.powf(0.5)).collect();
        assert_eq!(classify_partials(&cut, &div).unwrap().verdict, Verdict::Diverges);
        let log: Vec<f64> = cut.iter().map(|c: &f64| 1.0 + 0.01 * c.ln()).collect();
        assert_eq!(classify_partials(&cut, &log).unwrap().verdict, Verdict::Inconclusive);
        let flat = [2.0, 2.0, 2.0, 2.0];
        assert_eq!(classify_partials(&cut, &flat).unwrap().verdict, Verdict::Converges);
        assert!(classify_partials(&cut[..2], &conv[..2]).is_err());
    }
}
