//! Ideals of the ring of integers as rank-2 integer lattices in Hermite
//! normal form.
//!
//! An ideal is stored as the upper triangular matrix `[[α, β], [0, γ]]`
//! whose columns `(α, 0)` and `(β, γ)` are a lattice basis in the
//! coordinates `(1, ω)`, with `α, γ > 0` and `0 ≤ β < α`. The form is
//! canonical, so two ideals are equal exactly when their matrices are.
//! Rational ideals `nZ` are stored as `[[n, 0], [0, 1]]`; the second
//! column is never used because rational elements have no `ω` part.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::{factor_u64, gcd, FieldSpec, RingElement};
use crate::numeric::isqrt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct LatticeIdeal {
    alpha: i64,
    beta: i64,
    gamma: i64,
}

impl LatticeIdeal {
    /// The whole ring.
    pub const UNIT: LatticeIdeal = LatticeIdeal { alpha: 1, beta: 0, gamma: 1 };

    pub fn alpha(&self) -> i64 {
        self.alpha
    }

    pub fn beta(&self) -> i64 {
        self.beta
    }

    pub fn gamma(&self) -> i64 {
        self.gamma
    }

    /// Index of the lattice in the ring, `α·γ`.
    pub fn norm(&self) -> u64 {
        (self.alpha * self.gamma) as u64
    }

    /// The HNF matrix `[[α, β], [0, γ]]`.
    pub fn matrix(&self) -> [[i64; 2]; 2] {
        [[self.alpha, self.beta], [0, self.gamma]]
    }

    /// Lattice basis as ring elements.
    pub fn basis(&self) -> [RingElement; 2] {
        [RingElement::int(self.alpha), RingElement::new(self.beta, self.gamma)]
    }

    pub fn contains(&self, x: RingElement) -> bool {
        if x.b % self.gamma != 0 {
            return false;
        }
        let n = x.b / self.gamma;
        (x.a as i128 - n as i128 * self.beta as i128) % self.alpha as i128 == 0
    }

    /// `true` when `self ⊇ other`, i.e. `self` divides `other`.
    pub fn divides(&self, other: &LatticeIdeal) -> bool {
        other.basis().iter().all(|&x| self.contains(x))
    }

    /// Canonical representative of `x` modulo this lattice, with coordinates
    /// in `[0, α) × [0, γ)`.
    pub fn reduce(&self, x: RingElement) -> RingElement {
        let b = x.b.rem_euclid(self.gamma);
        let n = (x.b - b) / self.gamma;
        let a = (x.a as i128 - n as i128 * self.beta as i128).rem_euclid(self.alpha as i128) as i64;
        RingElement::new(a, b)
    }

    /// Exact division of every entry by `n`, for lattices known to lie in `nO`.
    fn div_exact(&self, n: i64, f: &FieldSpec) -> LatticeIdeal {
        if f.is_rational() {
            debug_assert_eq!(self.alpha % n, 0);
            return LatticeIdeal { alpha: self.alpha / n, beta: 0, gamma: 1 };
        }
        debug_assert!(self.alpha % n == 0 && self.beta % n == 0 && self.gamma % n == 0);
        LatticeIdeal { alpha: self.alpha / n, beta: self.beta / n, gamma: self.gamma / n }
    }
}

impl fmt::Display for LatticeIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{}, {}], [0, {}]]", self.alpha, self.beta, self.gamma)
    }
}

/// HNF of the integer span of `vecs` (coordinates `(a, b)`).
fn hnf_of_span(f: &FieldSpec, vecs: &[(i128, i128)]) -> Result<LatticeIdeal> {
    if f.is_rational() {
        let g = vecs.iter().fold(0i128, |g, &(a, _)| gcd128(g, a));
        if g == 0 {
            return Err(Error::ZeroIdeal);
        }
        return Ok(LatticeIdeal { alpha: g as i64, beta: 0, gamma: 1 });
    }
    let mut v: Vec<(i128, i128)> = vecs.iter().copied().filter(|&(a, b)| a != 0 || b != 0).collect();
    // Euclid on the second coordinate until one vector carries it all.
    loop {
        let pivot = v
            .iter()
            .enumerate()
            .filter(|(_, x)| x.1 != 0)
            .min_by_key(|(_, x)| x.1.abs())
            .map(|(i, _)| i);
        let Some(p) = pivot else { break };
        let (pa, pb) = v[p];
        let mut others_clear = true;
        for (i, x) in v.iter_mut().enumerate() {
            if i != p && x.1 != 0 {
                let q = x.1.div_euclid(pb);
                x.0 -= q * pa;
                x.1 -= q * pb;
                if x.1 != 0 {
                    others_clear = false;
                }
            }
        }
        if others_clear {
            break;
        }
    }
    let pivot = v.iter().position(|x| x.1 != 0);
    let (mut pa, mut pb) = match pivot {
        Some(p) => v.swap_remove(p),
        None => return Err(Error::ZeroIdeal),
    };
    if pb < 0 {
        pa = -pa;
        pb = -pb;
    }
    let alpha = v.iter().fold(0i128, |g, x| gcd128(g, x.0));
    if alpha == 0 {
        // rank one: not an ideal of a quadratic order
        return Err(Error::ZeroIdeal);
    }
    let beta = pa.rem_euclid(alpha);
    Ok(LatticeIdeal { alpha: alpha as i64, beta: beta as i64, gamma: pb as i64 })
}

fn gcd128(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

fn coords(x: RingElement) -> (i128, i128) {
    (x.a as i128, x.b as i128)
}

/// The ideal generated by `gens`, i.e. the lattice spanned by every `g` and
/// `g·ω`.
pub fn hnf_from_generators(f: &FieldSpec, gens: &[RingElement]) -> Result<LatticeIdeal> {
    let mut vecs = Vec::with_capacity(2 * gens.len());
    for &g in gens {
        vecs.push(coords(g));
        if !f.is_rational() {
            vecs.push(coords(f.mul_omega(g)));
        }
    }
    hnf_of_span(f, &vecs)
}

pub fn principal(f: &FieldSpec, q: RingElement) -> Result<LatticeIdeal> {
    hnf_from_generators(f, &[q])
}

/// Product of two ideals.
pub fn multiply(f: &FieldSpec, i: &LatticeIdeal, j: &LatticeIdeal) -> LatticeIdeal {
    let mut vecs = Vec::with_capacity(4);
    for x in i.basis() {
        for y in j.basis() {
            vecs.push(coords(f.mul(x, y)));
        }
    }
    hnf_of_span(f, &vecs).expect("product of nonzero ideals is nonzero")
}

/// Complex conjugate ideal.
pub fn conjugate(f: &FieldSpec, i: &LatticeIdeal) -> LatticeIdeal {
    let vecs: Vec<_> = i.basis().iter().map(|&x| coords(f.conj(x))).collect();
    hnf_of_span(f, &vecs).expect("conjugate of a nonzero ideal is nonzero")
}

/// `true` when the lattice is closed under multiplication by `ω`.
pub fn is_ideal(f: &FieldSpec, l: &LatticeIdeal) -> bool {
    f.is_rational() || l.basis().iter().all(|&x| l.contains(f.mul_omega(x)))
}

/// Every ideal of norm exactly `n`, by scanning Hermite normal forms.
pub fn ideals_of_norm(f: &FieldSpec, n: u64) -> Vec<LatticeIdeal> {
    let n = n as i64;
    if f.is_rational() {
        return vec![LatticeIdeal { alpha: n, beta: 0, gamma: 1 }];
    }
    let mut out = Vec::new();
    for gamma in 1..=n {
        if n % gamma != 0 {
            continue;
        }
        let alpha = n / gamma;
        for beta in 0..alpha {
            let l = LatticeIdeal { alpha, beta, gamma };
            if is_ideal(f, &l) {
                out.push(l);
            }
        }
    }
    out
}

pub fn is_coprime(f: &FieldSpec, p: RingElement, q: RingElement) -> Result<bool> {
    if q.is_zero() {
        return Err(Error::InvalidDenominator);
    }
    if f.is_rational() {
        return Ok(gcd(p.a, q.a) == 1);
    }
    Ok(hnf_from_generators(f, &[p, q])?.norm() == 1)
}

/// Coset representatives of `O/(q)`: `x + y·ω` with `0 ≤ x < α`, `0 ≤ y < γ`.
pub fn residues_mod(f: &FieldSpec, q: RingElement) -> Result<Vec<RingElement>> {
    if q.is_zero() {
        return Err(Error::InvalidDenominator);
    }
    let l = principal(f, q)?;
    Ok(residue_iter(&l).collect())
}

fn residue_iter(l: &LatticeIdeal) -> impl Iterator<Item = RingElement> {
    let (alpha, gamma) = (l.alpha, l.gamma);
    (0..gamma).flat_map(move |y| (0..alpha).map(move |x| RingElement::new(x, y)))
}

/// Number of residues mod `(q)` coprime to `q`, counted directly.
pub fn ring_totient(f: &FieldSpec, q: RingElement) -> Result<u64> {
    if q.is_zero() {
        return Err(Error::InvalidDenominator);
    }
    if f.is_rational() {
        let n = q.a.abs();
        return Ok((0..n).filter(|&p| gcd(p, n) == 1).count() as u64);
    }
    let l = principal(f, q)?;
    let mut count = 0;
    for p in residue_iter(&l) {
        if is_coprime(f, p, q)? {
            count += 1;
        }
    }
    Ok(count)
}

/// `N(q)·Π (1 − 1/N(P))` over the prime ideals dividing `(q)`.
pub fn ring_totient_product(f: &FieldSpec, q: RingElement) -> Result<u64> {
    let l = principal(f, q).map_err(|_| Error::InvalidDenominator)?;
    let fac = factor_ideal(f, &l)?;
    let mut t = l.norm();
    for (prime, _) in &fac.factors {
        let np = prime.norm();
        t = t / np * (np - 1);
    }
    Ok(t)
}

/// How a rational prime decomposes, used to tag prime ideals.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Splitting {
    /// `(p, ω − r)` for the smaller root `r` of the minimal polynomial of `ω` mod `p`.
    SplitFirst,
    /// `(p, ω − r′)` for the larger root.
    SplitSecond,
    Inert,
    Ramified,
    /// A prime of `Z` itself, for the rational field.
    Rational,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct PrimeIdealTag {
    pub p: u64,
    pub splitting: Splitting,
}

impl PrimeIdealTag {
    pub fn norm(&self) -> u64 {
        match self.splitting {
            Splitting::Inert => self.p * self.p,
            _ => self.p,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdealFactorization {
    pub factors: Vec<(PrimeIdealTag, u32)>,
}

impl IdealFactorization {
    pub fn norm(&self) -> u64 {
        self.factors.iter().map(|(p, k)| p.norm().pow(*k)).product()
    }

    pub fn is_squarefree(&self) -> bool {
        self.factors.iter().all(|&(_, k)| k == 1)
    }
}

/// Roots of the minimal polynomial of `ω` modulo `p`, ascending.
fn omega_roots_mod(f: &FieldSpec, p: u64) -> Vec<u64> {
    let d = f.d().unwrap_or(0);
    (0..p)
        .filter(|&r| {
            let r = r as u128;
            let p = p as u128;
            let v = if f.half_basis() {
                // x² − x + (1+d)/4
                (r * r + p - r % p + ((1 + d as u128) / 4)) % p
            } else {
                (r * r + d as u128) % p
            };
            v == 0
        })
        .collect()
}

/// The prime ideals above the rational prime `p`.
pub fn primes_above(f: &FieldSpec, p: u64) -> Vec<(PrimeIdealTag, LatticeIdeal)> {
    if f.is_rational() {
        let tag = PrimeIdealTag { p, splitting: Splitting::Rational };
        return vec![(tag, LatticeIdeal { alpha: p as i64, beta: 0, gamma: 1 })];
    }
    let gen = |r: u64| {
        hnf_from_generators(f, &[RingElement::int(p as i64), RingElement::new(-(r as i64), 1)])
            .expect("nonzero generators")
    };
    let roots = omega_roots_mod(f, p);
    match f.kronecker_character(p as i64).expect("quadratic field") {
        1 => {
            debug_assert_eq!(roots.len(), 2);
            vec![
                (PrimeIdealTag { p, splitting: Splitting::SplitFirst }, gen(roots[0])),
                (PrimeIdealTag { p, splitting: Splitting::SplitSecond }, gen(roots[1])),
            ]
        }
        0 => {
            debug_assert_eq!(roots.len(), 1);
            vec![(PrimeIdealTag { p, splitting: Splitting::Ramified }, gen(roots[0]))]
        }
        _ => {
            debug_assert!(roots.is_empty());
            let p = p as i64;
            vec![(
                PrimeIdealTag { p: p as u64, splitting: Splitting::Inert },
                LatticeIdeal { alpha: p, beta: 0, gamma: p },
            )]
        }
    }
}

/// Factor an ideal into prime ideals, dividing out one prime at a time.
pub fn factor_ideal(f: &FieldSpec, i: &LatticeIdeal) -> Result<IdealFactorization> {
    if i.norm() == 0 {
        return Err(Error::ZeroIdeal);
    }
    let mut j = *i;
    let mut factors = Vec::new();
    for (p, _) in factor_u64(i.norm()) {
        for (tag, prime) in primes_above(f, p) {
            let mut k = 0u32;
            while prime.divides(&j) && j.norm() > 1 {
                j = if f.is_rational() {
                    j.div_exact(p as i64, f)
                } else {
                    // P·P̄ = (N(P))
                    let conj = conjugate(f, &prime);
                    multiply(f, &j, &conj).div_exact(tag.norm() as i64, f)
                };
                k += 1;
            }
            if k > 0 {
                factors.push((tag, k));
            }
        }
    }
    debug_assert_eq!(j, LatticeIdeal::UNIT);
    Ok(IdealFactorization { factors })
}

pub fn mobius_ideal(f: &FieldSpec, i: &LatticeIdeal) -> Result<i8> {
    let fac = factor_ideal(f, i)?;
    if !fac.is_squarefree() {
        return Ok(0);
    }
    Ok(if fac.factors.len() % 2 == 0 { 1 } else { -1 })
}

/// Every squarefree ideal of norm at most `bound` with its Möbius value,
/// built as products of distinct prime ideals. Sorted by norm, then HNF.
pub fn squarefree_ideals(f: &FieldSpec, bound: u64) -> Vec<(LatticeIdeal, i8)> {
    let mut primes: Vec<LatticeIdeal> = Vec::new();
    for p in prime_list(bound) {
        for (tag, ideal) in primes_above(f, p) {
            if tag.norm() <= bound {
                primes.push(ideal);
            }
        }
    }
    primes.sort_by_key(|p| p.norm());
    let mut out = vec![(LatticeIdeal::UNIT, 1i8)];
    fn walk(
        f: &FieldSpec,
        primes: &[LatticeIdeal],
        start: usize,
        current: LatticeIdeal,
        sign: i8,
        bound: u64,
        out: &mut Vec<(LatticeIdeal, i8)>,
    ) {
        for k in start..primes.len() {
            let n = current.norm() * primes[k].norm();
            if n > bound {
                break;
            }
            let next = multiply(f, &current, &primes[k]);
            out.push((next, -sign));
            walk(f, primes, k + 1, next, -sign, bound, out);
        }
    }
    walk(f, &primes, 0, LatticeIdeal::UNIT, 1, bound, &mut out);
    out.sort_by_key(|(i, _)| (i.norm(), *i));
    out
}

fn prime_list(n: u64) -> Vec<u64> {
    let n = n as usize;
    let mut sieve = vec![true; n + 1];
    let mut out = Vec::new();
    for i in 2..=n {
        if sieve[i] {
            out.push(i as u64);
            let mut j = i * i;
            while j <= n {
                sieve[j] = false;
                j += i;
            }
        }
    }
    out
}

/// `true` when the ideal has a generator, i.e. an element of norm `N(I)`.
pub fn is_principal(f: &FieldSpec, i: &LatticeIdeal) -> bool {
    if f.is_rational() {
        return true;
    }
    let n = i.norm();
    NormEllipse::new(f, *i, n).iter().any(|x| f.norm(x) == n)
}

/// Class number by searching ideal classes below the Minkowski bound
/// `(2/π)·√D`: two ideals are equivalent when `I·J̄` is principal.
pub fn class_number_by_ideal_classes(f: &FieldSpec) -> u64 {
    if f.is_rational() {
        return 1;
    }
    let bound = (2.0 / std::f64::consts::PI * (f.disc() as f64).sqrt()).floor() as u64;
    let mut reps: Vec<LatticeIdeal> = Vec::new();
    for n in 1..=bound.max(1) {
        for i in ideals_of_norm(f, n) {
            let known = reps.iter().any(|r| is_principal(f, &multiply(f, &i, &conjugate(f, r))));
            if !known {
                reps.push(i);
            }
        }
    }
    reps.len() as u64
}

/// Lattice points of `L` inside the norm ellipse `N(x) ≤ bound`, organized by
/// rows of constant `ω`-coordinate.
#[derive(Debug, Clone)]
pub struct NormEllipse<'a> {
    field: &'a FieldSpec,
    lattice: LatticeIdeal,
    bound: u64,
}

impl<'a> NormEllipse<'a> {
    pub fn new(field: &'a FieldSpec, lattice: LatticeIdeal, bound: u64) -> Self {
        NormEllipse { field, lattice, bound }
    }

    /// Row indices `n`; row `n` holds the elements with `b = n·γ`.
    pub fn rows(&self) -> std::ops::RangeInclusive<i64> {
        if self.field.is_rational() {
            return 0..=0;
        }
        let d = self.field.d().unwrap() as u128;
        let x = self.bound as u128;
        let bmax = if self.field.half_basis() { isqrt(4 * x / d) } else { isqrt(x / d) } as i64;
        let nmax = bmax / self.lattice.gamma;
        -nmax..=nmax
    }

    /// Range of `a` with `N(a + bω) ≤ bound`, or `None` if the row is empty.
    fn a_range(&self, b: i64) -> Option<(i64, i64)> {
        let x = self.bound as i128;
        if self.field.is_rational() {
            return Some((-(x as i64), x as i64));
        }
        let d = self.field.d().unwrap() as i128;
        let b = b as i128;
        if self.field.half_basis() {
            let rem = 4 * x - d * b * b;
            if rem < 0 {
                return None;
            }
            let s = isqrt(rem as u128) as i128;
            // (2a + b)² ≤ 4X − d·b²
            let lo = (-s - b).div_euclid(2) + i128::from((-s - b).rem_euclid(2) != 0);
            let hi = (s - b).div_euclid(2);
            Some((lo as i64, hi as i64))
        } else {
            let rem = x - d * b * b;
            if rem < 0 {
                return None;
            }
            let s = isqrt(rem as u128) as i64;
            Some((-s, s))
        }
    }

    /// Nonzero lattice elements of row `n`, ascending in `a`.
    pub fn row(&self, n: i64) -> impl Iterator<Item = RingElement> + '_ {
        let l = self.lattice;
        let b = n * l.gamma;
        let (m_lo, m_hi) = match self.a_range(b) {
            Some((lo, hi)) => {
                let shift = n * l.beta;
                ((lo - shift).div_euclid(l.alpha) + i64::from((lo - shift).rem_euclid(l.alpha) != 0),
                 (hi - shift).div_euclid(l.alpha))
            }
            None => (1, 0),
        };
        (m_lo..=m_hi)
            .map(move |m| RingElement::new(m * l.alpha + n * l.beta, b))
            .filter(|x| !x.is_zero())
    }

    /// All nonzero elements, ordered lexicographically by `(b, a)`.
    pub fn iter(&self) -> impl Iterator<Item = RingElement> + '_ {
        self.rows().flat_map(move |n| self.row(n))
    }
}

/// Every nonzero element of `l` with norm at most `bound`, in `(b, a)`
/// lexicographic order.
pub fn enumerate_norm_le(f: &FieldSpec, l: &LatticeIdeal, bound: f64) -> Vec<RingElement> {
    let x = crate::numeric::floor_cutoff(bound);
    NormEllipse::new(f, *l, x).iter().collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(d: i64) -> FieldSpec {
        FieldSpec::imaginary_quadratic(d).unwrap()
    }

    fn e(a: i64, b: i64) -> RingElement {
        RingElement::new(a, b)
    }

    #[test]
    fn hnf_examples() {
        let f = q(1);
        let two = hnf_from_generators(&f, &[RingElement::int(2)]).unwrap();
        assert_eq!(two.matrix(), [[2, 0], [0, 2]]);
        assert_eq!(two.norm(), 4);
        let p = hnf_from_generators(&f, &[e(1, 1)]).unwrap();
        assert_eq!(p.matrix(), [[2, 1], [0, 1]]);
        assert_eq!(p.norm(), 2);
        assert_eq!(hnf_from_generators(&f, &[RingElement::ONE]).unwrap(), LatticeIdeal::UNIT);
        assert_eq!(hnf_from_generators(&f, &[RingElement::ZERO]), Err(Error::ZeroIdeal));
        assert_eq!(hnf_from_generators(&f, &[]), Err(Error::ZeroIdeal));
    }

    #[test]
    fn hnf_is_canonical_under_associates() {
        let f = q(3);
        let x = e(4, -3);
        let base = principal(&f, x).unwrap();
        for u in f.units() {
            assert_eq!(principal(&f, f.mul(u, x)).unwrap(), base);
        }
        assert_eq!(base.norm(), f.norm(x));
        assert!(is_ideal(&f, &base));
    }

    #[test]
    fn coprimality_examples() {
        let f = q(1);
        assert!(!is_coprime(&f, e(1, 1), RingElement::int(2)).unwrap());
        assert!(is_coprime(&f, RingElement::ONE, e(7, 3)).unwrap());
        assert!(is_coprime(&f, e(2, 1), e(2, -1)).unwrap());
        assert_eq!(is_coprime(&f, RingElement::ONE, RingElement::ZERO), Err(Error::InvalidDenominator));
        let r = FieldSpec::rational();
        assert!(is_coprime(&r, RingElement::int(4), RingElement::int(9)).unwrap());
        assert!(!is_coprime(&r, RingElement::int(6), RingElement::int(9)).unwrap());
    }

    #[test]
    fn residue_examples() {
        let f = q(1);
        assert_eq!(residues_mod(&f, e(1, 1)).unwrap(), vec![e(0, 0), e(1, 0)]);
        let r2 = residues_mod(&f, RingElement::int(2)).unwrap();
        assert_eq!(r2, vec![e(0, 0), e(1, 0), e(0, 1), e(1, 1)]);
        let r = residues_mod(&FieldSpec::rational(), RingElement::int(3)).unwrap();
        assert_eq!(r, vec![e(0, 0), e(1, 0), e(2, 0)]);
        assert_eq!(residues_mod(&f, RingElement::ZERO), Err(Error::InvalidDenominator));
    }

    #[test]
    fn totient_examples() {
        let r = FieldSpec::rational();
        assert_eq!(ring_totient(&r, RingElement::int(6)).unwrap(), 2);
        let f = q(1);
        assert_eq!(ring_totient(&f, e(1, 1)).unwrap(), 1);
        assert_eq!(ring_totient(&f, RingElement::int(2)).unwrap(), 2);
        assert_eq!(ring_totient_product(&f, RingElement::int(2)).unwrap(), 2);
        assert_eq!(ring_totient(&f, RingElement::ZERO), Err(Error::InvalidDenominator));
    }

    #[test]
    fn factorization_examples() {
        let f = q(1);
        let two = principal(&f, RingElement::int(2)).unwrap();
        let fac = factor_ideal(&f, &two).unwrap();
        assert_eq!(fac.factors, vec![(PrimeIdealTag { p: 2, splitting: Splitting::Ramified }, 2)]);

        let five = principal(&f, RingElement::int(5)).unwrap();
        let fac = factor_ideal(&f, &five).unwrap();
        assert_eq!(
            fac.factors,
            vec![
                (PrimeIdealTag { p: 5, splitting: Splitting::SplitFirst }, 1),
                (PrimeIdealTag { p: 5, splitting: Splitting::SplitSecond }, 1),
            ]
        );

        let three = principal(&f, RingElement::int(3)).unwrap();
        let fac = factor_ideal(&f, &three).unwrap();
        assert_eq!(fac.factors, vec![(PrimeIdealTag { p: 3, splitting: Splitting::Inert }, 1)]);
        assert_eq!(fac.norm(), 9);
    }

    #[test]
    fn split_primes_are_conjugate() {
        for d in [1, 2, 5, 7, 11] {
            let f = q(d);
            for p in [2u64, 3, 5, 7, 11, 13] {
                let ps = primes_above(&f, p);
                if ps.len() == 2 {
                    assert_eq!(conjugate(&f, &ps[0].1), ps[1].1);
                    assert_ne!(ps[0].1, ps[1].1);
                }
                let prod = ps.iter().fold(LatticeIdeal::UNIT, |acc, (t, i)| {
                    let mut acc = multiply(&f, &acc, i);
                    if t.splitting == Splitting::Ramified {
                        acc = multiply(&f, &acc, i);
                    }
                    acc
                });
                assert_eq!(prod, principal(&f, RingElement::int(p as i64)).unwrap(), "d={d} p={p}");
            }
        }
    }

    #[test]
    fn mobius_examples() {
        let f = q(1);
        assert_eq!(mobius_ideal(&f, &LatticeIdeal::UNIT).unwrap(), 1);
        assert_eq!(mobius_ideal(&f, &principal(&f, RingElement::int(2)).unwrap()).unwrap(), 0);
        assert_eq!(mobius_ideal(&f, &principal(&f, e(2, 1)).unwrap()).unwrap(), -1);
        assert_eq!(mobius_ideal(&f, &principal(&f, RingElement::int(5)).unwrap()).unwrap(), 1);
    }

    #[test]
    fn squarefree_ideals_agree_with_mobius() {
        for f in [q(1), q(5), q(3), FieldSpec::rational()] {
            let list = squarefree_ideals(&f, 60);
            for (i, mu) in &list {
                assert_eq!(mobius_ideal(&f, i).unwrap(), *mu);
            }
            let mut brute = Vec::new();
            for n in 1..=60 {
                for i in ideals_of_norm(&f, n) {
                    let mu = mobius_ideal(&f, &i).unwrap();
                    if mu != 0 {
                        brute.push((i, mu));
                    }
                }
            }
            brute.sort_by_key(|(i, _)| (i.norm(), *i));
            assert_eq!(list, brute);
        }
    }

    #[test]
    fn class_number_by_ideals_examples() {
        assert_eq!(class_number_by_ideal_classes(&q(1)), 1);
        assert_eq!(class_number_by_ideal_classes(&q(5)), 2);
        assert_eq!(class_number_by_ideal_classes(&q(23)), 3);
        let f = q(5);
        let p2 = primes_above(&f, 2)[0].1;
        assert!(!is_principal(&f, &p2));
        assert!(is_principal(&f, &multiply(&f, &p2, &p2)));
    }

    #[test]
    fn enumerate_examples() {
        let f = q(1);
        let one = enumerate_norm_le(&f, &LatticeIdeal::UNIT, 1.0);
        assert_eq!(one, vec![e(0, -1), e(-1, 0), e(1, 0), e(0, 1)]);
        let two = enumerate_norm_le(&f, &LatticeIdeal::UNIT, 2.0);
        assert_eq!(two.len(), 8);
        let r = enumerate_norm_le(&FieldSpec::rational(), &LatticeIdeal::UNIT, 3.0);
        let vals: Vec<i64> = r.iter().map(|x| x.a).collect();
        assert_eq!(vals, vec![-3, -2, -1, 1, 2, 3]);
        assert!(enumerate_norm_le(&f, &LatticeIdeal::UNIT, 0.0).is_empty());
    }

    #[test]
    fn enumeration_matches_box_scan() {
        for d in [1, 2, 3, 7, 11, 5] {
            let f = q(d);
            for gens in [vec![RingElement::ONE], vec![e(1, 1)], vec![RingElement::int(3), e(1, 1)]] {
                let l = hnf_from_generators(&f, &gens).unwrap();
                let bound = 150u64;
                let got = enumerate_norm_le(&f, &l, bound as f64);
                let mut want = Vec::new();
                for b in -40..=40 {
                    for a in -40..=40 {
                        let x = e(a, b);
                        if !x.is_zero() && f.norm(x) <= bound && l.contains(x) {
                            want.push(x);
                        }
                    }
                }
                assert_eq!(got, want, "d={d} l={l}");
            }
        }
    }
}
