//! Factor principal ideals into prime ideals and print their HNF lattices.

use horocount::field::{FieldSpec, RingElement};
use horocount::ideal::{factor_ideal, mobius_ideal, primes_above, principal, ring_totient_product};

fn main() -> horocount::Result<()> {
    let f = FieldSpec::imaginary_quadratic(5)?;
    println!("{f}, class number {}", f.class_number());

    for p in [2u64, 3, 5, 7, 11] {
        for (tag, lattice) in primes_above(&f, p) {
            println!("  prime above {p}: {:?} {lattice}", tag.splitting);
        }
    }

    for q in [RingElement::int(6), RingElement::new(1, 1), RingElement::new(3, 2), RingElement::int(30)] {
        let ideal = principal(&f, q)?;
        let fac = factor_ideal(&f, &ideal)?;
        let parts: Vec<String> = fac.factors.iter().map(|(t, e)| format!("P({},{:?})^{e}", t.p, t.splitting)).collect();
        println!(
            "({q}) = {ideal}  N = {}  mu = {}  Phi = {}  = {}",
            ideal.norm(),
            mobius_ideal(&f, &ideal)?,
            ring_totient_product(&f, q)?,
            parts.join(" ")
        );
    }
    Ok(())
}
