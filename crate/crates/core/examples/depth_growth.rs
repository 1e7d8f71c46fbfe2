//! Growth of the number of rational geodesics by depth.
//!
//! The slope of log N(t) against t estimates the critical exponent: 1 for
//! the modular surface, 2 for Bianchi orbifolds.

use horocount::field::FieldSpec;
use horocount::geodesics::{depth_counting_many, growth_rate};

fn main() -> horocount::Result<()> {
    for (f, lo, hi) in [
        (FieldSpec::rational(), 2.0 * 100f64.ln(), 2.0 * 10_000f64.ln()),
        (FieldSpec::imaginary_quadratic(1)?, 100f64.ln(), 2000f64.ln()),
        (FieldSpec::imaginary_quadratic(3)?, 100f64.ln(), 2000f64.ln()),
    ] {
        let ts: Vec<f64> = (0..8).map(|k| lo + (hi - lo) * k as f64 / 7.0).collect();
        let counts = depth_counting_many(&f, &ts);
        println!("{f}: growth rate {:.4}", growth_rate(&f, &ts)?);
        for (t, n) in ts.iter().zip(counts) {
            println!("  t = {t:>7.3}  N = {n}");
        }
    }
    Ok(())
}
