//! Counting fractions `p/q mod O` with `(p, q) = 1` and `N(q) ≤ x`.
//!
//! Two exact routes are provided. The brute-force route sums the ring
//! totient over principal ideals `(q)`. The Möbius route sums
//! `μ(I)·T_I(x)/N(I)` over squarefree ideals `I`, where `T_I(x)` is the sum
//! of `N(q)` over principal ideals `(q) ⊆ I`. The two must agree exactly.

use std::collections::HashMap;
use std::f64::consts::PI;
use std::sync::{Arc, Mutex, OnceLock};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::{FieldSpec, DEFAULT_TOLERANCE};
use crate::ideal::{ring_totient, ring_totient_product, squarefree_ideals, LatticeIdeal, NormEllipse};
use crate::numeric::{floor_cutoff, ls_slope};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CountMethod {
    Brute,
    Mobius,
}

/// One value of the counting function.
#[derive(Debug, Clone, PartialEq)]
pub struct CountSample {
    pub x: f64,
    pub phi: u64,
    pub method: CountMethod,
    pub field: FieldSpec,
}

/// `Σ_{(q) : N(q) = n} Φ(q)` for every `n ≤ n_max` (index `n`), counted by
/// brute force: one generator per unit orbit, residues tested one by one.
pub fn phi_bruteforce_by_norm(f: &FieldSpec, n_max: u64) -> Vec<u64> {
    let len = n_max as usize + 1;
    if f.is_rational() {
        let mut out = vec![0u64; len];
        out.par_iter_mut().enumerate().skip(1).for_each(|(q, slot)| {
            *slot = ring_totient(f, crate::field::RingElement::int(q as i64)).expect("nonzero q");
        });
        return out;
    }
    let ellipse = NormEllipse::new(f, LatticeIdeal::UNIT, n_max);
    ellipse
        .rows()
        .into_par_iter()
        .fold(
            || vec![0u64; len],
            |mut acc, n| {
                for q in ellipse.row(n) {
                    if f.is_canonical_associate(q) {
                        acc[f.norm(q) as usize] += ring_totient(f, q).expect("nonzero q");
                    }
                }
                acc
            },
        )
        .reduce(|| vec![0u64; len], add_vecs)
}

/// The same per-norm table as [`phi_bruteforce_by_norm`], with each `Φ(q)`
/// taken from the product over prime ideals instead of a residue scan.
pub fn phi_by_norm(f: &FieldSpec, n_max: u64) -> Vec<u64> {
    let len = n_max as usize + 1;
    if f.is_rational() {
        return totient_sieve(n_max);
    }
    let ellipse = NormEllipse::new(f, LatticeIdeal::UNIT, n_max);
    ellipse
        .rows()
        .into_par_iter()
        .fold(
            || vec![0u64; len],
            |mut acc, n| {
                for q in ellipse.row(n) {
                    if f.is_canonical_associate(q) {
                        acc[f.norm(q) as usize] += ring_totient_product(f, q).expect("nonzero q");
                    }
                }
                acc
            },
        )
        .reduce(|| vec![0u64; len], add_vecs)
}

fn add_vecs(mut a: Vec<u64>, b: Vec<u64>) -> Vec<u64> {
    for (x, y) in a.iter_mut().zip(b) {
        *x += y;
    }
    a
}

/// Running totals of a per-norm table: entry `n` is `Σ_{k ≤ n} table[k]`.
pub fn cumulative(table: &[u64]) -> Vec<u64> {
    table
        .iter()
        .scan(0u64, |acc, &v| {
            *acc += v;
            Some(*acc)
        })
        .collect()
}

/// `φ(x)` by brute force.
pub fn phi_bruteforce(f: &FieldSpec, x: f64) -> u64 {
    if x < 1.0 {
        log::warn!("phi_bruteforce: cutoff {x} < 1 admits no denominator");
        return 0;
    }
    phi_bruteforce_by_norm(f, floor_cutoff(x)).iter().sum()
}

/// Per-norm profile of one ideal's lattice points, cached by the sieve.
#[derive(Debug)]
struct IdealProfile {
    /// Distinct element norms, ascending.
    norms: Vec<u64>,
    /// Running count of elements up to each norm.
    cum_count: Vec<u64>,
    /// Running `Σ N(q)/N(I)` over elements up to each norm.
    cum_quot: Vec<u64>,
}

impl IdealProfile {
    fn build(f: &FieldSpec, ideal: &LatticeIdeal, x_max: u64) -> Self {
        let mut counts: HashMap<u64, u64> = HashMap::new();
        for q in NormEllipse::new(f, *ideal, x_max).iter() {
            *counts.entry(f.norm(q)).or_default() += 1;
        }
        let mut pairs: Vec<(u64, u64)> = counts.into_iter().collect();
        pairs.sort_unstable();
        let ni = ideal.norm();
        let (mut c, mut t) = (0u64, 0u64);
        let mut profile = IdealProfile {
            norms: Vec::with_capacity(pairs.len()),
            cum_count: Vec::with_capacity(pairs.len()),
            cum_quot: Vec::with_capacity(pairs.len()),
        };
        for (n, k) in pairs {
            debug_assert_eq!(n % ni, 0);
            c += k;
            t += k * (n / ni);
            profile.norms.push(n);
            profile.cum_count.push(c);
            profile.cum_quot.push(t);
        }
        profile
    }

    fn upto(&self, x: u64) -> usize {
        self.norms.partition_point(|&n| n <= x)
    }

    fn quot_sum(&self, x: u64) -> u64 {
        match self.upto(x) {
            0 => 0,
            i => self.cum_quot[i - 1],
        }
    }

    fn count(&self, x: u64) -> u64 {
        match self.upto(x) {
            0 => 0,
            i => self.cum_count[i - 1],
        }
    }
}

/// The Möbius route to `φ(x)` for all cutoffs up to `x_max`.
///
/// Lattice-point profiles of each squarefree ideal are computed once (keyed
/// by HNF) and reused by every later query.
pub struct MobiusSieve {
    field: FieldSpec,
    x_max: u64,
    ideals: Vec<(LatticeIdeal, i8)>,
    cache: Mutex<HashMap<LatticeIdeal, Arc<OnceLock<IdealProfile>>>>,
}

impl MobiusSieve {
    pub fn new(field: &FieldSpec, x_max: u64) -> Self {
        MobiusSieve {
            field: field.clone(),
            x_max,
            ideals: squarefree_ideals(field, x_max),
            cache: Mutex::new(HashMap::new()),
        }
    }

    pub fn x_max(&self) -> u64 {
        self.x_max
    }

    /// Squarefree ideals of norm at most `x_max` with their Möbius values.
    pub fn ideals(&self) -> &[(LatticeIdeal, i8)] {
        &self.ideals
    }

    fn profile(&self, ideal: &LatticeIdeal) -> Arc<OnceLock<IdealProfile>> {
        let cell = {
            let mut cache = self.cache.lock().expect("cache poisoned");
            cache.entry(*ideal).or_default().clone()
        };
        cell.get_or_init(|| IdealProfile::build(&self.field, ideal, self.x_max));
        cell
    }

    /// `T_I(x) = Σ N(q)` over principal `(q) ⊆ I`, `N(q) ≤ x`, via the cache.
    pub fn t_sum(&self, ideal: &LatticeIdeal, x: u64) -> u64 {
        assert!(x <= self.x_max, "cutoff {x} exceeds sieve range {}", self.x_max);
        let cell = self.profile(ideal);
        let p = cell.get().expect("initialized");
        p.quot_sum(x) * ideal.norm() / self.field.w() as u64
    }

    /// `S_I(x)` via the cache.
    pub fn s_count(&self, ideal: &LatticeIdeal, x: u64) -> u64 {
        assert!(x <= self.x_max, "cutoff {x} exceeds sieve range {}", self.x_max);
        let cell = self.profile(ideal);
        cell.get().expect("initialized").count(x) / self.field.w() as u64
    }

    /// `φ(x) = Σ_I μ(I)·T_I(x)/N(I)`.
    pub fn phi(&self, x: f64) -> u64 {
        if x < 1.0 {
            return 0;
        }
        let x = floor_cutoff(x);
        assert!(x <= self.x_max, "cutoff {x} exceeds sieve range {}", self.x_max);
        let total: i64 = self
            .ideals
            .par_iter()
            .filter(|(i, _)| i.norm() <= x)
            .map(|(i, mu)| {
                let cell = self.profile(i);
                *mu as i64 * cell.get().expect("initialized").quot_sum(x) as i64
            })
            .sum();
        let w = self.field.w() as i64;
        debug_assert_eq!(total % w, 0, "Möbius sum not divisible by the unit count");
        (total / w) as u64
    }

    /// `φ(n)` for every integer `n ≤ x_max`.
    pub fn phi_table(&self) -> Vec<u64> {
        let len = self.x_max as usize + 1;
        let signed: Vec<i64> = self
            .ideals
            .par_iter()
            .fold(
                || vec![0i64; len],
                |mut acc, (i, mu)| {
                    let cell = self.profile(i);
                    let p = cell.get().expect("initialized");
                    let mut prev = 0u64;
                    for (k, &n) in p.norms.iter().enumerate() {
                        acc[n as usize] += *mu as i64 * (p.cum_quot[k] - prev) as i64;
                        prev = p.cum_quot[k];
                    }
                    acc
                },
            )
            .reduce(
                || vec![0i64; len],
                |mut a, b| {
                    for (x, y) in a.iter_mut().zip(b) {
                        *x += y;
                    }
                    a
                },
            );
        let w = self.field.w() as i64;
        let mut acc = 0i64;
        signed
            .into_iter()
            .map(|v| {
                acc += v;
                debug_assert_eq!(acc % w, 0);
                (acc / w) as u64
            })
            .collect()
    }
}

/// `φ(x)` by the Möbius sieve over ideals.
pub fn phi_mobius(f: &FieldSpec, x: f64) -> Result<u64> {
    if x < 1.0 {
        return Ok(0);
    }
    let sieve = MobiusSieve::new(f, floor_cutoff(x));
    Ok(sieve.phi(x))
}

/// Exact `φ(x)` by the fastest available route: the totient sieve for the
/// rationals, the multiplicative totient otherwise.
pub fn phi(f: &FieldSpec, x: f64) -> u64 {
    if f.is_rational() {
        if x < 1.0 {
            return 0;
        }
        phi_rational_sieve(floor_cutoff(x))
    } else if x < 1.0 {
        0
    } else {
        phi_by_norm(f, floor_cutoff(x)).iter().sum()
    }
}

/// Count of nonzero elements of `I` with norm at most `x`, by rows.
fn element_stats(f: &FieldSpec, ideal: &LatticeIdeal, x: f64) -> (u64, u64) {
    let bound = floor_cutoff(x);
    let ellipse = NormEllipse::new(f, *ideal, bound);
    ellipse
        .rows()
        .into_par_iter()
        .map(|n| ellipse.row(n).fold((0u64, 0u64), |(c, t), q| (c + 1, t + f.norm(q))))
        .reduce(|| (0, 0), |a, b| (a.0 + b.0, a.1 + b.1))
}

/// `S(x)`: number of nonzero principal ideals `(q) ⊆ I` with `N(q) ≤ x`.
pub fn s_count(f: &FieldSpec, ideal: &LatticeIdeal, x: f64) -> u64 {
    let (count, _) = element_stats(f, ideal, x);
    let w = f.w() as u64;
    assert_eq!(count % w, 0, "element count not a multiple of the unit count");
    count / w
}

/// `T(x)`: sum of `N(q)` over the principal ideals counted by [`s_count`].
pub fn t_sum(f: &FieldSpec, ideal: &LatticeIdeal, x: f64) -> u64 {
    let (_, total) = element_stats(f, ideal, x);
    let w = f.w() as u64;
    assert_eq!(total % w, 0, "norm sum not a multiple of the unit count");
    total / w
}

/// Leading coefficient `Res_K / (2·h·ζ_K(2))` of `φ(x) ~ c·x²`.
pub fn main_term_coefficient(f: &FieldSpec) -> f64 {
    let zeta = f.zeta_k2(DEFAULT_TOLERANCE).value;
    f.residue() / (2.0 * f.class_number() as f64 * zeta)
}

/// The same coefficient with the class number cancelled: `π/(w·ζ_K(2)·√D)`
/// for an imaginary quadratic field, `3/π²` for the rationals.
pub fn main_term_coefficient_closed_form(f: &FieldSpec) -> f64 {
    if f.is_rational() {
        return 3.0 / (PI * PI);
    }
    let zeta = f.zeta_k2(DEFAULT_TOLERANCE).value;
    PI / (f.w() as f64 * zeta * (f.disc() as f64).sqrt())
}

/// Predicted main term of `φ(x)`.
pub fn phi_asymptotic(f: &FieldSpec, x: f64) -> f64 {
    main_term_coefficient(f) * x * x
}

/// Least-squares slope of `log φ` against `log x`.
pub fn exponent_estimate(samples: &[CountSample]) -> Result<f64> {
    if samples.len() < 3 {
        return Err(Error::DegenerateSamples(format!("need at least 3 samples, got {}", samples.len())));
    }
    for w in samples.windows(2) {
        if !(w[1].x > w[0].x) {
            return Err(Error::DegenerateSamples("cutoffs must be strictly increasing".into()));
        }
    }
    if let Some(s) = samples.iter().find(|s| s.phi == 0 || s.x <= 0.0) {
        return Err(Error::DegenerateSamples(format!("nonpositive sample at x = {}", s.x)));
    }
    let xs: Vec<f64> = samples.iter().map(|s| s.x.ln()).collect();
    let ys: Vec<f64> = samples.iter().map(|s| (s.phi as f64).ln()).collect();
    ls_slope(&xs, &ys).ok_or_else(|| Error::DegenerateSamples("abscissae do not vary".into()))
}

/// Euler's totient of every `n ≤ n_max` (index `n`, with `φ(0) = 0`).
pub fn totient_sieve(n_max: u64) -> Vec<u64> {
    let n = n_max as usize;
    let mut phi: Vec<u64> = (0..=n as u64).collect();
    for p in 2..=n {
        if phi[p] == p as u64 {
            let mut m = p;
            while m <= n {
                phi[m] -= phi[m] / p as u64;
                m += p;
            }
        }
    }
    phi
}

/// `φ_Z(x) = Σ_{k ≤ x} φ(k)` via the totient sieve.
pub fn phi_rational_sieve(x: u64) -> u64 {
    totient_sieve(x).iter().sum()
}
