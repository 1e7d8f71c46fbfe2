//! Count fractions p/q mod O with N(q) <= x by brute force and by the
//! Möbius sieve, and compare with the quadratic main term.

use horocount::counting::{cumulative, phi_asymptotic, phi_bruteforce_by_norm, MobiusSieve};
use horocount::field::FieldSpec;

fn main() -> horocount::Result<()> {
    let x_max = 2000;
    for field in [FieldSpec::rational(), FieldSpec::imaginary_quadratic(1)?, FieldSpec::imaginary_quadratic(5)?] {
        let brute = cumulative(&phi_bruteforce_by_norm(&field, x_max));
        let sieve = MobiusSieve::new(&field, x_max);
        println!("{field}");
        for x in [10u64, 100, 500, 1000, 2000] {
            let predicted = phi_asymptotic(&field, x as f64);
            let b = brute[x as usize];
            assert_eq!(b, sieve.phi(x as f64));
            println!("  x = {x:>5}  phi = {b:>9}  main term = {predicted:>12.1}  ratio = {:.4}", b as f64 / predicted);
        }
    }
    Ok(())
}
