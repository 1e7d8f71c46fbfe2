//! Small numerical helpers shared by the analytic and series code.

/// Neumaier compensated summation. Addition order is the caller's iteration
/// order, so a fixed order gives bit-reproducible totals.
#[derive(Debug, Clone, Copy, Default)]
pub struct CompensatedSum {
    sum: f64,
    carry: f64,
    abs_total: f64,
}

impl CompensatedSum {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, x: f64) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.carry += (self.sum - t) + x;
        } else {
            self.carry += (x - t) + self.sum;
        }
        self.sum = t;
        self.abs_total += x.abs();
    }

    pub fn value(&self) -> f64 {
        self.sum + self.carry
    }

    /// Bound on the accumulated rounding error of [`value`](Self::value).
    pub fn rounding_bound(&self) -> f64 {
        2.0 * f64::EPSILON * self.value().abs() + 4.0 * f64::EPSILON * f64::EPSILON * self.abs_total
    }
}

impl Extend<f64> for CompensatedSum {
    fn extend<I: IntoIterator<Item = f64>>(&mut self, iter: I) {
        for x in iter {
            self.add(x);
        }
    }
}

/// Ordinary least-squares slope of `ys` against `xs`.
///
/// Returns `None` when fewer than two points are given or the abscissae do
/// not vary.
pub fn ls_slope(xs: &[f64], ys: &[f64]) -> Option<f64> {
    if xs.len() != ys.len() || xs.len() < 2 {
        return None;
    }
    let n = xs.len() as f64;
    let mx = xs.iter().sum::<f64>() / n;
    let my = ys.iter().sum::<f64>() / n;
    let (mut sxy, mut sxx) = (0.0, 0.0);
    for (x, y) in xs.iter().zip(ys) {
        sxy += (x - mx) * (y - my);
        sxx += (x - mx) * (x - mx);
    }
    if sxx <= 0.0 {
        return None;
    }
    Some(sxy / sxx)
}

/// Integer square root, rounded down.
pub fn isqrt(n: u128) -> u128 {
    if n < 2 {
        return n;
    }
    let mut x = (n as f64).sqrt() as u128;
    while x * x > n {
        x -= 1;
    }
    while (x + 1) * (x + 1) <= n {
        x += 1;
    }
    x
}

/// Floor of a nonnegative real cutoff, treating values within a relative
/// `1e-9` of the next integer as that integer. Cutoffs often come from
/// `exp(log n)` which can land just below `n`.
pub fn floor_cutoff(x: f64) -> u64 {
    if !(x >= 0.0) {
        return 0;
    }
    let r = x.round();
    if (x - r).abs() <= 1e-9 * r.max(1.0) {
        r as u64
    } else {
        x.floor() as u64
    }
}
