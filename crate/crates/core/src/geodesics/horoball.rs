//! Ford horoballs: the images of the height-1 horoball at `∞`.
//!
//! The horoball of `p/q` is tangent to the boundary at `p/q` and has
//! Euclidean diameter `1/|q|²`. Centers are kept as exact integers over a
//! common denominator so that disjointness and tangency are decided without
//! rounding.

use num_rational::Ratio;
use serde::Serialize;

use super::RationalGeodesic;
use crate::error::{Error, Result};
use crate::field::{FieldSpec, RingElement};

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Horoball {
    /// Canonical geodesic whose endpoint this horoball sits at.
    pub source: RationalGeodesic,
    /// Translation by a ring element; the boundary point is
    /// `source.p/source.q + offset`.
    pub offset: RingElement,
    /// The boundary point is `(u + v·√-d) / den` (`v = 0` for the rationals).
    u: i128,
    v: i128,
    den: i128,
    /// `|q|²`; the diameter is `1/abs_sq`.
    abs_sq: i128,
}

impl Horoball {
    fn field(&self) -> &FieldSpec {
        self.source.field()
    }

    /// Real part of the tangency point, or the point itself for the rationals.
    pub fn center_re(&self) -> Ratio<i128> {
        Ratio::new(self.u, self.den)
    }

    /// Coefficient of `√-d` in the tangency point (so the imaginary part is
    /// this times `√d`). Zero for the rationals.
    pub fn center_sqrt_coeff(&self) -> Ratio<i128> {
        Ratio::new(self.v, self.den)
    }

    pub fn diameter(&self) -> Ratio<i128> {
        Ratio::new(1, self.abs_sq)
    }

    /// Numerator of the fraction this horoball is centered at,
    /// `p + offset·q`.
    pub fn numerator(&self) -> RingElement {
        let f = self.field();
        f.add(self.source.p, f.mul(self.offset, self.source.q))
    }

    /// The same horoball translated by `t ∈ O`.
    pub fn translate(&self, t: RingElement) -> Horoball {
        let f = self.field().clone();
        let offset = f.add(self.offset, t);
        build(&f, self.source.clone(), offset)
    }
}

fn build(f: &FieldSpec, source: RationalGeodesic, offset: RingElement) -> Horoball {
    let q = source.q;
    let p = f.add(source.p, f.mul(offset, q));
    let abs_sq = f.abs_sq(q) as i128;
    // p/q = p·q̄ / (q·q̄), and q·q̄ = |q|² in every case.
    let num = f.mul(p, f.conj(q));
    let (a, b) = (num.a as i128, num.b as i128);
    let (u, v) = if f.half_basis() {
        // a + b·(1 + √-d)/2 = ((2a + b) + b·√-d)/2
        (2 * a + b, b)
    } else {
        (2 * a, 2 * b)
    };
    Horoball { source, offset, u, v, den: 2 * abs_sq, abs_sq }
}

/// The Ford horoball at the endpoint of `g`.
pub fn horoball_of(g: &RationalGeodesic) -> Horoball {
    build(g.field(), g.clone(), RingElement::ZERO)
}

/// Outcome of a pairwise packing check. Pairs are index pairs `(i, j)` with
/// `i < j` into the input slice.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct PackingReport {
    pub pairs_checked: u64,
    /// Pairs whose interiors intersect.
    pub overlaps: Vec<(usize, usize)>,
    /// Pairs that touch in exactly one point.
    pub tangencies: Vec<(usize, usize)>,
    /// Pairs where tangency and the unimodularity test `N(p·s − q·r) = 1`
    /// disagree.
    pub mismatches: Vec<(usize, usize)>,
}

impl PackingReport {
    pub fn is_packing(&self) -> bool {
        self.overlaps.is_empty() && self.mismatches.is_empty()
    }
}

/// Squared Euclidean distance between tangency points, as an exact fraction
/// `num / den²` with `den = den_i·den_j`.
fn boundary_distance_sq(f: &FieldSpec, x: &Horoball, y: &Horoball) -> (i128, i128) {
    let d = f.d().unwrap_or(0) as i128;
    let du = x.u * y.den - y.u * x.den;
    let dv = x.v * y.den - y.v * x.den;
    (du * du + d * dv * dv, x.den * y.den)
}

/// Compare every pair of horoballs exactly.
///
/// Spheres of radii `r₁, r₂` resting on the boundary at points at distance
/// `δ` have centers at squared distance `δ² + (r₁ − r₂)²`; they overlap when
/// this is below `(r₁ + r₂)²` and are tangent at equality. Subtracting,
/// the comparison is `δ²` against `4·r₁·r₂ = 1/(|q₁|²·|q₂|²)`.
pub fn check_disjoint(balls: &[Horoball]) -> Result<PackingReport> {
    let Some(first) = balls.first() else {
        return Ok(PackingReport::default());
    };
    let f = first.field().clone();
    if balls.iter().any(|b| *b.field() != f) {
        return Err(Error::MixedFields);
    }
    let mut report = PackingReport::default();
    for i in 0..balls.len() {
        for j in i + 1..balls.len() {
            let (x, y) = (&balls[i], &balls[j]);
            report.pairs_checked += 1;
            let (num, den) = boundary_distance_sq(&f, x, y);
            // δ² = num/den² versus 1/(M₁·M₂)
            let lhs = num * x.abs_sq * y.abs_sq;
            let rhs = den * den;
            let tangent = lhs == rhs;
            if lhs < rhs {
                report.overlaps.push((i, j));
            } else if tangent {
                report.tangencies.push((i, j));
            }
            let det = f.sub(f.mul(x.numerator(), y.source.q), f.mul(x.source.q, y.numerator()));
            let unimodular = f.norm(det) == 1;
            if tangent != unimodular {
                report.mismatches.push((i, j));
            }
        }
    }
    Ok(report)
}
