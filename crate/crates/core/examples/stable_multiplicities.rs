//! Stable multiplicities in type A and their restriction to small GL_n.
//!
//!     cargo run --release --example stable_multiplicities

use monomial_crystal::product::decompose;
use monomial_crystal::typea::{restrict_coeffs, stable_bound, stable_coeffs, weights_to_partitions};
use monomial_crystal::{PointMultiset, RootDatum};

fn main() -> monomial_crystal::Result<()> {
    let triples = [(1, 5, 1), (3, 1, 1), (4, 6, 1)];
    let r = PointMultiset::from_triples(&RootDatum::gl(6)?, &triples)?;
    let bound = stable_bound(&r);
    let stable = stable_coeffs(&r)?;
    println!("R = {r}, stable from GL_{bound}");
    for (lambda, m) in &stable {
        println!("  {lambda} x {m}");
    }
    for n in 5..=7 {
        let gl = RootDatum::gl(n)?;
        let direct = weights_to_partitions(&gl, &decompose(&gl, &PointMultiset::from_triples(&gl, &triples)?)?)?;
        let restricted = restrict_coeffs(&stable, n);
        println!("GL_{n}: {} summands, matches restriction: {}", direct.len(), direct == restricted);
    }
    Ok(())
}
