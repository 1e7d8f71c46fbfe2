//! The base field `K` (the rationals or an imaginary quadratic field) and
//! exact arithmetic in its ring of integers.
//!
//! Ring elements are stored as integer coordinates `(a, b)` for `a + b·ω`,
//! where `ω = √-d` when `d ≢ 3 (mod 4)` and `ω = (1 + √-d)/2` otherwise.
//! Nothing here touches floating point except the analytic constants
//! (`ζ_K(2)`, `Res_K`), which carry explicit error bounds.

use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numeric::CompensatedSum;

/// Default absolute tolerance for certified analytic constants.
pub const DEFAULT_TOLERANCE: f64 = 1e-10;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FieldKind {
    Rational,
    ImaginaryQuadratic,
}

/// The base field together with the derived constants used throughout.
#[derive(Debug, Clone)]
pub struct FieldSpec {
    kind: FieldKind,
    d: u64,
    disc: u64,
    w: u32,
    half_basis: bool,
    class_number: OnceLock<u64>,
}

impl PartialEq for FieldSpec {
    fn eq(&self, other: &Self) -> bool {
        self.kind == other.kind && self.d == other.d
    }
}

impl Eq for FieldSpec {}

/// An element `a + b·ω` of the ring of integers. For the rational field `b`
/// is always zero.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
pub struct RingElement {
    pub a: i64,
    pub b: i64,
}

impl RingElement {
    pub const ZERO: RingElement = RingElement { a: 0, b: 0 };
    pub const ONE: RingElement = RingElement { a: 1, b: 0 };

    pub const fn new(a: i64, b: i64) -> Self {
        RingElement { a, b }
    }

    /// The rational integer `a`.
    pub const fn int(a: i64) -> Self {
        RingElement { a, b: 0 }
    }

    pub fn is_zero(&self) -> bool {
        self.a == 0 && self.b == 0
    }

    pub fn neg(self) -> Self {
        RingElement::new(-self.a, -self.b)
    }
}

impl fmt::Display for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.a, self.b) {
            (a, 0) => write!(f, "{a}"),
            (0, 1) => write!(f, "w"),
            (0, -1) => write!(f, "-w"),
            (0, b) => write!(f, "{b}w"),
            (a, 1) => write!(f, "{a}+w"),
            (a, -1) => write!(f, "{a}-w"),
            (a, b) if b < 0 => write!(f, "{a}{b}w"),
            (a, b) => write!(f, "{a}+{b}w"),
        }
    }
}

/// Ring operations exposed through [`FieldSpec::ring_arith`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RingOp {
    Add,
    Sub,
    Mul,
    /// Complex conjugation of the first operand; the second is ignored.
    Conj,
}

/// A real value with a certified absolute error bound.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Certified {
    pub value: f64,
    pub bound: f64,
}

fn is_squarefree(n: u64) -> bool {
    let mut m = n;
    let mut p = 2u64;
    while p * p <= m {
        if m % p == 0 {
            m /= p;
            if m % p == 0 {
                return false;
            }
        }
        p += 1;
    }
    true
}

impl FieldSpec {
    pub fn rational() -> Self {
        FieldSpec {
            kind: FieldKind::Rational,
            d: 0,
            disc: 1,
            w: 2,
            half_basis: false,
            class_number: OnceLock::new(),
        }
    }

    /// `Q(√-d)` for a positive squarefree `d`.
    pub fn imaginary_quadratic(d: i64) -> Result<Self> {
        if d <= 0 {
            return Err(Error::InvalidField(format!("d = {d} must be positive")));
        }
        let du = d as u64;
        if !is_squarefree(du) {
            return Err(Error::InvalidField(format!("d = {d} is not squarefree")));
        }
        let half_basis = du % 4 == 3;
        let disc = if half_basis { du } else { 4 * du };
        let w = match du {
            1 => 4,
            3 => 6,
            _ => 2,
        };
        Ok(FieldSpec {
            kind: FieldKind::ImaginaryQuadratic,
            d: du,
            disc,
            w,
            half_basis,
            class_number: OnceLock::new(),
        })
    }

    pub fn kind(&self) -> FieldKind {
        self.kind
    }

    pub fn is_rational(&self) -> bool {
        self.kind == FieldKind::Rational
    }

    /// The squarefree `d`, absent for the rationals.
    pub fn d(&self) -> Option<u64> {
        match self.kind {
            FieldKind::Rational => None,
            FieldKind::ImaginaryQuadratic => Some(self.d),
        }
    }

    /// Absolute value `D` of the field discriminant (1 for the rationals).
    pub fn disc(&self) -> u64 {
        self.disc
    }

    /// Number of roots of unity in the field.
    pub fn w(&self) -> u32 {
        self.w
    }

    pub fn half_basis(&self) -> bool {
        self.half_basis
    }

    /// `(1 + d)/4`, the constant term of the minimal polynomial of `ω` in the
    /// half basis.
    fn quarter(&self) -> i64 {
        ((1 + self.d) / 4) as i64
    }

    /// Short label such as `rational` or `d=5`.
    pub fn label(&self) -> String {
        match self.kind {
            FieldKind::Rational => "rational".to_string(),
            FieldKind::ImaginaryQuadratic => format!("d={}", self.d),
        }
    }

    /// Field norm. For the rationals this is `|a|` so that it stays
    /// nonnegative.
    pub fn norm(&self, x: RingElement) -> u64 {
        let (a, b) = (x.a as i128, x.b as i128);
        let n = match self.kind {
            FieldKind::Rational => a.abs(),
            FieldKind::ImaginaryQuadratic if self.half_basis => {
                a * a + a * b + b * b * self.quarter() as i128
            }
            FieldKind::ImaginaryQuadratic => a * a + self.d as i128 * b * b,
        };
        n as u64
    }

    /// Square of the archimedean absolute value: `a²` for the rationals and
    /// the norm for an imaginary quadratic field.
    pub fn abs_sq(&self, x: RingElement) -> u128 {
        match self.kind {
            FieldKind::Rational => (x.a as i128 * x.a as i128) as u128,
            FieldKind::ImaginaryQuadratic => self.norm(x) as u128,
        }
    }

    pub fn add(&self, x: RingElement, y: RingElement) -> RingElement {
        RingElement::new(x.a + y.a, x.b + y.b)
    }

    pub fn sub(&self, x: RingElement, y: RingElement) -> RingElement {
        RingElement::new(x.a - y.a, x.b - y.b)
    }

    pub fn mul(&self, x: RingElement, y: RingElement) -> RingElement {
        match self.kind {
            FieldKind::Rational => RingElement::int(x.a * y.a),
            FieldKind::ImaginaryQuadratic if self.half_basis => {
                // ω² = ω − (1+d)/4
                let bb = x.b * y.b;
                RingElement::new(x.a * y.a - self.quarter() * bb, x.a * y.b + x.b * y.a + bb)
            }
            FieldKind::ImaginaryQuadratic => RingElement::new(
                x.a * y.a - self.d as i64 * x.b * y.b,
                x.a * y.b + x.b * y.a,
            ),
        }
    }

    /// Complex conjugate. In the half basis `ω̄ = 1 − ω`, so the rational
    /// coordinate shifts as well.
    pub fn conj(&self, x: RingElement) -> RingElement {
        match self.kind {
            FieldKind::Rational => x,
            FieldKind::ImaginaryQuadratic if self.half_basis => RingElement::new(x.a + x.b, -x.b),
            FieldKind::ImaginaryQuadratic => RingElement::new(x.a, -x.b),
        }
    }

    /// `x·ω`; for the rationals there is no `ω` and this returns `x`.
    pub fn mul_omega(&self, x: RingElement) -> RingElement {
        match self.kind {
            FieldKind::Rational => x,
            _ => self.mul(x, RingElement::new(0, 1)),
        }
    }

    pub fn ring_arith(&self, op: RingOp, x: RingElement, y: RingElement) -> RingElement {
        match op {
            RingOp::Add => self.add(x, y),
            RingOp::Sub => self.sub(x, y),
            RingOp::Mul => self.mul(x, y),
            RingOp::Conj => self.conj(x),
        }
    }

    /// The `w` roots of unity, as powers of a primitive one.
    pub fn units(&self) -> Vec<RingElement> {
        let generator = match (self.kind, self.d) {
            (FieldKind::ImaginaryQuadratic, 1) => RingElement::new(0, 1),
            // ω = (1 + √-3)/2 = e^{iπ/3}
            (FieldKind::ImaginaryQuadratic, 3) => RingElement::new(0, 1),
            _ => RingElement::int(-1),
        };
        let mut out = Vec::with_capacity(self.w as usize);
        let mut u = RingElement::ONE;
        for _ in 0..self.w {
            out.push(u);
            u = self.mul(u, generator);
        }
        out
    }

    /// The associate of `x` that is lexicographically largest in `(a, b)`.
    /// For the rationals this is `|x|`; for the Gaussian integers it lies in
    /// the quadrant `a > 0, b ≥ 0`.
    pub fn canonical_associate(&self, x: RingElement) -> (RingElement, RingElement) {
        let mut best = (x, RingElement::ONE);
        for u in self.units() {
            let y = self.mul(u, x);
            if (y.a, y.b) > (best.0.a, best.0.b) {
                best = (y, u);
            }
        }
        best
    }

    pub fn is_canonical_associate(&self, x: RingElement) -> bool {
        self.canonical_associate(x).0 == x
    }

    /// Kronecker symbol `(-D / n)`, the splitting character of the field.
    pub fn kronecker_character(&self, n: i64) -> Result<i8> {
        match self.kind {
            FieldKind::Rational => Err(Error::Unsupported("kronecker character of the rational field")),
            FieldKind::ImaginaryQuadratic => Ok(kronecker(-(self.disc as i64), n)),
        }
    }

    /// `ζ_K(2)` within `tol`, computed as `ζ(2)·L(2, χ_{-D})`.
    pub fn zeta_k2(&self, tol: f64) -> Certified {
        let zeta2 = PI * PI / 6.0;
        match self.kind {
            FieldKind::Rational => Certified { value: zeta2, bound: 4.0 * f64::EPSILON },
            FieldKind::ImaginaryQuadratic => {
                let l = self.l_series_at_2(tol / (2.0 * zeta2));
                Certified {
                    value: zeta2 * l.value,
                    bound: zeta2 * l.bound + 4.0 * f64::EPSILON * zeta2 * l.value,
                }
            }
        }
    }

    /// `L(2, χ_{-D})` within `tol`.
    ///
    /// The sum is truncated at a multiple `N` of the period `D`; by Abel
    /// summation the tail is bounded by `B/(N+1)²` with `B` the largest
    /// partial character sum over one period.
    pub fn l_series_at_2(&self, tol: f64) -> Certified {
        assert!(tol > 0.0, "tolerance must be positive");
        let period = self.disc as i64;
        let chi: Vec<i8> = (0..period).map(|n| kronecker(-period, n)).collect();
        let mut partial = 0i64;
        let mut max_partial = 0i64;
        for n in 1..=period {
            partial += chi[(n % period) as usize] as i64;
            max_partial = max_partial.max(partial.abs());
        }
        let b = max_partial.max(1) as f64;
        let periods = ((b / tol).sqrt() / period as f64).ceil().max(1.0) as i64;
        let n_max = periods * period;
        let mut sum = CompensatedSum::new();
        // smallest terms first
        for n in (1..=n_max).rev() {
            let c = chi[(n % period) as usize];
            if c != 0 {
                let nf = n as f64;
                sum.add(c as f64 / (nf * nf));
            }
        }
        let tail = b / ((n_max + 1) as f64).powi(2);
        Certified { value: sum.value(), bound: tail + sum.rounding_bound() }
    }

    /// `a_1, …, a_{n_max}` (at index `n - 1`), the number of ideals of each
    /// norm, from the prime splitting rules.
    pub fn ideal_count_coefficients(&self, n_max: usize) -> Vec<u32> {
        if self.is_rational() {
            return vec![1; n_max];
        }
        let spf = smallest_prime_factors(n_max);
        let mut a = vec![0u32; n_max + 1];
        if n_max >= 1 {
            a[1] = 1;
        }
        for n in 2..=n_max {
            let p = spf[n] as usize;
            let mut m = n;
            let mut k = 0u32;
            while m % p == 0 {
                m /= p;
                k += 1;
            }
            let local = match kronecker(-(self.disc as i64), p as i64) {
                1 => k + 1,
                0 => 1,
                _ => u32::from(k % 2 == 0),
            };
            a[n] = a[m] * local;
        }
        a.split_off(1)
    }

    /// Estimate of `ζ_K(2) = Σ a_n / n²` from the ideal-count coefficients.
    ///
    /// The tail beyond `n_max` is replaced by `A(N)/N²` where `A(N)` is the
    /// number of ideals of norm at most `N`; the remaining error is of order
    /// `N^{-3/2}`. This is an independent cross-check of [`zeta_k2`](Self::zeta_k2),
    /// not a certified value.
    pub fn zeta_k2_ideal_series(&self, n_max: usize) -> f64 {
        let a = self.ideal_count_coefficients(n_max);
        let mut sum = CompensatedSum::new();
        let mut count = 0u64;
        for (i, &an) in a.iter().enumerate().rev() {
            if an != 0 {
                let n = (i + 1) as f64;
                sum.add(an as f64 / (n * n));
            }
            count += an as u64;
        }
        let nf = n_max as f64;
        sum.add(count as f64 / (nf * nf));
        sum.value()
    }

    /// Class number, counted as reduced primitive forms of discriminant `-D`.
    /// Computed once and cached.
    pub fn class_number(&self) -> u64 {
        *self.class_number.get_or_init(|| match self.kind {
            FieldKind::Rational => 1,
            FieldKind::ImaginaryQuadratic => reduced_forms(self.disc).len() as u64,
        })
    }

    /// Residue of `ζ_K` at `s = 1`: `2π·h/(w·√D)` for an imaginary quadratic
    /// field and `1` for the rationals.
    pub fn residue(&self) -> f64 {
        match self.kind {
            FieldKind::Rational => 1.0,
            FieldKind::ImaginaryQuadratic => {
                2.0 * PI * self.class_number() as f64 / (self.w as f64 * (self.disc as f64).sqrt())
            }
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            FieldKind::Rational => write!(f, "Q"),
            FieldKind::ImaginaryQuadratic => write!(f, "Q(sqrt(-{}))", self.d),
        }
    }
}

impl FromStr for FieldSpec {
    type Err = Error;

    /// Accepts `rational`, `Q`, `d=N` or a bare `N`.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        if t.eq_ignore_ascii_case("rational") || t == "Q" {
            return Ok(FieldSpec::rational());
        }
        let digits = t.strip_prefix("d=").unwrap_or(t);
        let d: i64 = digits
            .parse()
            .map_err(|_| Error::InvalidField(format!("cannot parse field '{s}'")))?;
        FieldSpec::imaginary_quadratic(d)
    }
}

/// Reduced primitive forms `(A, B, C)` with `B² − 4AC = −disc`:
/// `|B| ≤ A ≤ C`, and `B ≥ 0` whenever `|B| = A` or `A = C`.
pub fn reduced_forms(disc: u64) -> Vec<(i64, i64, i64)> {
    let disc = disc as i64;
    let mut out = Vec::new();
    let mut a = 1i64;
    while 3 * a * a <= disc {
        for b in -a..=a {
            if (b - disc).rem_euclid(2) != 0 {
                continue;
            }
            let num = b * b + disc;
            if num % (4 * a) != 0 {
                continue;
            }
            let c = num / (4 * a);
            if c < a {
                continue;
            }
            if b < 0 && (-b == a || a == c) {
                continue;
            }
            if gcd(gcd(a, b), c) != 1 {
                continue;
            }
            out.push((a, b, c));
        }
        a += 1;
    }
    out
}

pub(crate) fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.unsigned_abs(), b.unsigned_abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a as i64
}

/// Kronecker symbol `(a / n)`, completely multiplicative in `n`.
pub fn kronecker(a: i64, n: i64) -> i8 {
    const TAB: [i8; 8] = [0, 1, 0, -1, 0, -1, 0, 1];
    let (mut a, mut b) = (a as i128, n as i128);
    if b == 0 {
        return i8::from(a.abs() == 1);
    }
    if a % 2 == 0 && b % 2 == 0 {
        return 0;
    }
    let mut v = 0;
    while b % 2 == 0 {
        v += 1;
        b /= 2;
    }
    let mut k: i8 = if v % 2 == 0 { 1 } else { TAB[(a & 7) as usize] };
    if b < 0 {
        b = -b;
        if a < 0 {
            k = -k;
        }
    }
    loop {
        if a == 0 {
            return if b == 1 { k } else { 0 };
        }
        let mut v = 0;
        while a % 2 == 0 {
            v += 1;
            a /= 2;
        }
        if v % 2 == 1 {
            k *= TAB[(b & 7) as usize];
        }
        if a & b & 2 != 0 {
            k = -k;
        }
        let r = a.abs();
        a = b % r;
        b = r;
    }
}

/// Smallest prime factor of every `n ≤ n_max` (entries 0 and 1 are 0 and 1).
pub fn smallest_prime_factors(n_max: usize) -> Vec<u32> {
    let mut spf = vec![0u32; n_max + 1];
    if n_max >= 1 {
        spf[1] = 1;
    }
    let mut primes: Vec<u32> = Vec::new();
    for i in 2..=n_max {
        if spf[i] == 0 {
            spf[i] = i as u32;
            primes.push(i as u32);
        }
        for &p in &primes {
            let m = i * p as usize;
            if p > spf[i] || m > n_max {
                break;
            }
            spf[m] = p;
        }
    }
    spf
}

/// Prime factorization of `n` by trial division, ascending primes.
pub fn factor_u64(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2u64;
    while p * p <= n {
        if n % p == 0 {
            let mut k = 0;
            while n % p == 0 {
                n /= p;
                k += 1;
            }
            out.push((p, k));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(d: i64) -> FieldSpec {
        FieldSpec::imaginary_quadratic(d).unwrap()
    }

    #[test]
    fn field_constants() {
        let f = q(1);
        assert_eq!((f.disc(), f.w(), f.half_basis()), (4, 4, false));
        let f = q(3);
        assert_eq!((f.disc(), f.w(), f.half_basis()), (3, 6, true));
        let f = q(5);
        assert_eq!((f.disc(), f.w(), f.half_basis()), (20, 2, false));
        let f = q(7);
        assert_eq!((f.disc(), f.w(), f.half_basis()), (7, 2, true));
        let f = FieldSpec::rational();
        assert_eq!((f.disc(), f.w(), f.d()), (1, 2, None));
    }

    #[test]
    fn rejects_bad_d() {
        for d in [0, -3, 4, 8, 12, 18, 49] {
            assert!(matches!(FieldSpec::imaginary_quadratic(d), Err(Error::InvalidField(_))), "d={d}");
        }
    }

    #[test]
    fn parse_field() {
        assert_eq!("rational".parse::<FieldSpec>().unwrap(), FieldSpec::rational());
        assert_eq!("d=7".parse::<FieldSpec>().unwrap(), q(7));
        assert_eq!("11".parse::<FieldSpec>().unwrap(), q(11));
        assert!("d=9".parse::<FieldSpec>().is_err());
        assert!("foo".parse::<FieldSpec>().is_err());
    }

    #[test]
    fn norm_examples() {
        assert_eq!(q(1).norm(RingElement::new(2, 1)), 5);
        assert_eq!(q(3).norm(RingElement::new(1, 1)), 3);
        assert_eq!(FieldSpec::rational().norm(RingElement::int(-7)), 7);
    }

    #[test]
    fn half_basis_norm_matches_complex_modulus() {
        for d in [3i64, 7, 11, 19, 23, 31] {
            let f = q(d);
            let (re_w, im_w) = (0.5, (d as f64).sqrt() / 2.0);
            for a in -6..=6 {
                for b in -6..=6 {
                    let re = a as f64 + b as f64 * re_w;
                    let im = b as f64 * im_w;
                    let n = f.norm(RingElement::new(a, b)) as f64;
                    assert!((n - (re * re + im * im)).abs() < 1e-9);
                }
            }
        }
    }

    #[test]
    fn arithmetic_examples() {
        let i = RingElement::new(0, 1);
        assert_eq!(q(1).ring_arith(RingOp::Mul, i, i), RingElement::int(-1));
        let w = RingElement::new(0, 1);
        assert_eq!(q(3).ring_arith(RingOp::Mul, w, w), RingElement::new(-1, 1));
        let x = RingElement::new(3, -2);
        assert_eq!(q(5).ring_arith(RingOp::Add, x, RingElement::ZERO), x);
        assert_eq!(q(5).ring_arith(RingOp::Conj, x, RingElement::ZERO), RingElement::new(3, 2));
        // ω + ω̄ = 1 in the half basis
        let f = q(7);
        assert_eq!(f.add(w, f.conj(w)), RingElement::ONE);
        assert_eq!(f.mul(w, f.conj(w)), RingElement::int(2));
    }

    #[test]
    fn units_examples() {
        let u = q(1).units();
        assert_eq!(u.len(), 4);
        for x in [(1, 0), (-1, 0), (0, 1), (0, -1)] {
            assert!(u.contains(&RingElement::new(x.0, x.1)));
        }
        assert_eq!(q(5).units(), vec![RingElement::ONE, RingElement::int(-1)]);
        let u3 = q(3).units();
        assert_eq!(u3.len(), 6);
        assert!(u3.iter().all(|&x| q(3).norm(x) == 1));
    }

    #[test]
    fn canonical_associate_is_idempotent() {
        let f = q(1);
        let (c, u) = f.canonical_associate(RingElement::new(-3, -1));
        assert_eq!(c, RingElement::new(3, 1));
        assert_eq!(f.mul(u, RingElement::new(-3, -1)), c);
        assert_eq!(f.canonical_associate(c).0, c);
        assert_eq!(FieldSpec::rational().canonical_associate(RingElement::int(-9)).0, RingElement::int(9));
    }

    #[test]
    fn kronecker_examples() {
        let f = q(1);
        assert_eq!(f.kronecker_character(5).unwrap(), 1);
        assert_eq!(f.kronecker_character(3).unwrap(), -1);
        assert_eq!(f.kronecker_character(2).unwrap(), 0);
        assert!(FieldSpec::rational().kronecker_character(5).is_err());
        // Legendre symbol check against Euler's criterion
        for p in [3i64, 5, 7, 11, 13, 101] {
            for a in -30i64..30 {
                let e = a.rem_euclid(p) as u128;
                let mut r = 1u128;
                let mut base = e;
                let mut ex = (p - 1) / 2;
                while ex > 0 {
                    if ex & 1 == 1 {
                        r = r * base % p as u128;
                    }
                    base = base * base % p as u128;
                    ex >>= 1;
                }
                let expected = if e == 0 { 0 } else if r == 1 { 1 } else { -1 };
                assert_eq!(kronecker(a, p), expected, "({a}/{p})");
            }
        }
    }

    #[test]
    fn class_numbers() {
        assert_eq!(q(1).class_number(), 1);
        assert_eq!(q(5).class_number(), 2);
        assert_eq!(q(23).class_number(), 3);
        assert_eq!(FieldSpec::rational().class_number(), 1);
        for d in [1, 2, 3, 7, 11, 19, 43, 67, 163] {
            assert_eq!(q(d).class_number(), 1, "d={d}");
        }
    }

    #[test]
    fn residue_examples() {
        assert_eq!(FieldSpec::rational().residue(), 1.0);
        assert!((q(1).residue() - PI / 4.0).abs() < 1e-15);
        assert!((q(5).residue() - 1.404963).abs() < 1e-6);
    }

    #[test]
    fn ideal_counts() {
        let a = q(1).ideal_count_coefficients(10);
        assert_eq!((a[0], a[1], a[2], a[4]), (1, 1, 0, 2));
        let a = q(5).ideal_count_coefficients(10);
        assert_eq!((a[1], a[2]), (1, 2));
        assert!(FieldSpec::rational().ideal_count_coefficients(5).iter().all(|&x| x == 1));
    }

    #[test]
    fn factor_small() {
        assert_eq!(factor_u64(360), vec![(2, 3), (3, 2), (5, 1)]);
        assert_eq!(factor_u64(1), vec![]);
        assert_eq!(factor_u64(97), vec![(97, 1)]);
    }
}
