//! Rational geodesics of the modular and Bianchi orbifolds.
//!
//! A rational geodesic leaving the cusp at `∞` and returning to it is the
//! same thing as a fraction `p/q mod O` in lowest terms; with the base
//! horosphere at Euclidean height 1 its depth is `log |q|²`. Counting
//! geodesics by depth is therefore counting fractions by `|q|²`, which is
//! what [`depth_counting`] does through the [`counting`](crate::counting)
//! module.

mod horoball;
mod series;

pub use horoball::{check_disjoint, horoball_of, Horoball, PackingReport};
pub use series::{
    classify_partials, full_series_surrogate, parabolic_poincare_partial, parabolic_poincare_partials,
    parabolic_threshold_bracket, relative_poincare_partial, relative_poincare_partials, ConvergenceReport,
    SeriesKind, SeriesPartialSum, Verdict, CONVERGENCE_PROTOCOL,
};

use serde::Serialize;

use crate::counting::{cumulative, phi_by_norm};
use crate::error::{Error, Result};
use crate::field::{FieldSpec, RingElement};
use crate::ideal::{is_coprime, principal, residues_mod, LatticeIdeal, NormEllipse};
use crate::numeric::{floor_cutoff, ls_slope};

/// A rational geodesic, stored as its canonical fraction: `q` is the
/// preferred associate in its unit orbit and `p` is reduced modulo `(q)`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RationalGeodesic {
    #[serde(skip)]
    field: FieldSpec,
    pub p: RingElement,
    pub q: RingElement,
    pub depth: f64,
}

impl RationalGeodesic {
    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    /// `|q|²`, whose logarithm is the depth.
    pub fn abs_sq(&self) -> u128 {
        self.field.abs_sq(self.q)
    }
}

/// Canonical geodesic for the fraction `p/q`.
pub fn make_geodesic(f: &FieldSpec, p: RingElement, q: RingElement) -> Result<RationalGeodesic> {
    if q.is_zero() {
        return Err(Error::InvalidDenominator);
    }
    if !is_coprime(f, p, q)? {
        return Err(Error::NotCoprime);
    }
    let (q, u) = f.canonical_associate(q);
    let lattice = principal(f, q)?;
    let p = lattice.reduce(f.mul(u, p));
    Ok(RationalGeodesic { field: f.clone(), p, q, depth: depth_of(f, q) })
}

/// Every rational geodesic with `N(q) ≤ max_norm`, in ascending `(N(q), q, p)`
/// order.
pub fn fractions_up_to(f: &FieldSpec, max_norm: u64) -> Vec<RationalGeodesic> {
    let mut qs: Vec<RingElement> = NormEllipse::new(f, LatticeIdeal::UNIT, max_norm)
        .iter()
        .filter(|&q| f.is_canonical_associate(q))
        .collect();
    qs.sort_by_key(|&q| (f.norm(q), q.a, q.b));
    let mut out = Vec::new();
    for q in qs {
        let residues = residues_mod(f, q).expect("q is nonzero");
        for p in residues {
            if is_coprime(f, p, q).expect("q is nonzero") {
                out.push(make_geodesic(f, p, q).expect("coprime fraction"));
            }
        }
    }
    out
}

/// Horoballs of every fraction with `N(q) ≤ max_norm`, together with their
/// translates by `a + b·ω` for `|a|, |b| ≤ 1`, so that neighbours across the
/// edges of the fundamental parallelogram are compared as well.
pub fn ford_packing(f: &FieldSpec, max_norm: u64) -> Vec<Horoball> {
    let shifts: Vec<RingElement> = if f.is_rational() {
        (-1..=1).map(RingElement::int).collect()
    } else {
        (-1..=1).flat_map(|b| (-1..=1).map(move |a| RingElement::new(a, b))).collect()
    };
    let base: Vec<Horoball> = fractions_up_to(f, max_norm).iter().map(horoball_of).collect();
    shifts.iter().flat_map(|&t| base.iter().map(move |h| h.translate(t))).collect()
}

/// `log |q|²`.
pub fn depth_of(f: &FieldSpec, q: RingElement) -> f64 {
    (f.abs_sq(q) as f64).ln()
}

/// Norm cutoff matching a depth bound `t`: `e^{t/2}` for the rationals
/// (`N(q) = |q|`) and `e^t` otherwise (`N(q) = |q|²`).
pub fn norm_cutoff_for_depth(f: &FieldSpec, t: f64) -> f64 {
    let t = t.max(0.0);
    if f.is_rational() {
        (t / 2.0).exp()
    } else {
        t.exp()
    }
}

/// `N_e(t)`: the number of rational geodesics of depth at most `t`.
/// Negative `t` is clamped to zero, leaving only the depth-0 class.
pub fn depth_counting(f: &FieldSpec, t: f64) -> u64 {
    crate::counting::phi(f, norm_cutoff_for_depth(f, t))
}

/// `N_e(t)` at every point of `ts`, sharing one exact table.
pub fn depth_counting_many(f: &FieldSpec, ts: &[f64]) -> Vec<u64> {
    let cutoffs: Vec<u64> = ts.iter().map(|&t| floor_cutoff(norm_cutoff_for_depth(f, t))).collect();
    let max = cutoffs.iter().copied().max().unwrap_or(0);
    let table = cumulative(&phi_by_norm(f, max));
    cutoffs.iter().map(|&c| table[c as usize]).collect()
}

/// Least-squares slope of `log N_e(t)` against `t`, an estimate of the
/// critical exponent.
pub fn growth_rate(f: &FieldSpec, t_grid: &[f64]) -> Result<f64> {
    if t_grid.len() < 2 {
        return Err(Error::DegenerateSamples("need at least 2 grid points".into()));
    }
    if t_grid.windows(2).any(|w| !(w[1] > w[0])) {
        return Err(Error::DegenerateSamples("grid must be strictly increasing".into()));
    }
    let counts = depth_counting_many(f, t_grid);
    if counts.contains(&0) {
        return Err(Error::DegenerateSamples("N_e vanishes on the grid".into()));
    }
    let ys: Vec<f64> = counts.iter().map(|&n| (n as f64).ln()).collect();
    ls_slope(t_grid, &ys).ok_or_else(|| Error::DegenerateSamples("grid does not vary".into()))
}

/// Slope of `log n` against `t` for an arbitrary counting function; used for
/// synthetic checks of the fitting procedure.
pub fn growth_rate_of(t_grid: &[f64], counts: &[f64]) -> Result<f64> {
    if t_grid.len() < 2 || counts.iter().any(|&c| !(c > 0.0)) {
        return Err(Error::DegenerateSamples("need positive counts on at least 2 points".into()));
    }
    let ys: Vec<f64> = counts.iter().map(|c| c.ln()).collect();
    ls_slope(t_grid, &ys).ok_or_else(|| Error::DegenerateSamples("grid does not vary".into()))
}
