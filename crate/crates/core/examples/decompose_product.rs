//! Decomposes product monomial crystals into highest-weight pieces.
//!
//!     cargo run --example decompose_product

use monomial_crystal::product::{decompose, decompose_exhaustive, product_crystal};
use monomial_crystal::typea::weights_to_partitions;
use monomial_crystal::{PointMultiset, RootDatum};

fn show(datum: &RootDatum, triples: &[(usize, i64, i64)]) -> monomial_crystal::Result<()> {
    let r = PointMultiset::from_triples(datum, triples)?;
    let dec = decompose(datum, &r)?;
    let pieces: Vec<String> = dec.iter().map(|(w, m)| format!("{}^{m}", datum.format_fundamental(w))).collect();
    println!("{} R = {r}: {}", datum.name(), pieces.join(" + "));
    Ok(())
}

fn main() -> monomial_crystal::Result<()> {
    // Same weight 2ϖ_2, three different answers depending on the spacing.
    let sl4 = RootDatum::parse("A", 3)?;
    show(&sl4, &[(2, 0, 2)])?;
    show(&sl4, &[(2, 0, 1), (2, 2, 1)])?;
    show(&sl4, &[(2, 0, 1), (2, 4, 1)])?;
    show(&sl4, &[(1, 3, 1), (3, 1, 1), (3, 3, 1)])?;

    // The fast route agrees with walking the whole graph.
    let r = PointMultiset::from_triples(&sl4, &[(1, 3, 1), (3, 1, 1), (3, 3, 1)])?;
    assert_eq!(decompose(&sl4, &r)?, decompose_exhaustive(&sl4, &r, 100_000)?);
    println!("M({r}) has {} elements", product_crystal(&sl4, &r)?.len());

    let d4 = RootDatum::parse("D", 4)?;
    show(&d4, &[(2, 1, 1), (1, 0, 1)])?;
    let e6 = RootDatum::parse("E", 6)?;
    show(&e6, &[(1, 0, 1)])?;

    let gl6 = RootDatum::gl(6)?;
    let r = PointMultiset::from_triples(&gl6, &[(1, 5, 1), (3, 1, 1), (4, 6, 1)])?;
    for (lambda, m) in weights_to_partitions(&gl6, &decompose(&gl6, &r)?)? {
        println!("GL_6 R = {r}: {lambda} x {m}");
    }
    Ok(())
}
