//! Walks the SL_3 crystal generated by y_{1,1} and prints it as DOT.
//!
//!     cargo run --example sl3_crystal

use monomial_crystal::crystal::{check_axioms, to_dot, MonomialCrystal};
use monomial_crystal::product::product_crystal;
use monomial_crystal::{PointMultiset, RootDatum};

fn main() -> monomial_crystal::Result<()> {
    let sl3 = RootDatum::parse("A", 2)?;
    let crystal = MonomialCrystal::new(&sl3);

    for mult in 1..=2 {
        let r = PointMultiset::from_triples(&sl3, &[(1, 1, mult)])?;
        let graph = product_crystal(&sl3, &r)?;
        println!("M({r}) has {} elements and {} edges", graph.len(), graph.edges().len());
        for b in graph.elements() {
            let eps: Vec<i64> = sl3.vertices().map(|i| b.epsilon(i)).collect();
            let phi: Vec<i64> = sl3.vertices().map(|i| b.phi(i)).collect();
            println!("  {:<40} wt {}  eps {:?}  phi {:?}", b.variables_string(), sl3.format_weight(b.weight()), eps, phi);
        }
        check_axioms(&crystal, &graph).expect("crystal axioms");
        println!("{}", to_dot(&crystal, &graph));
    }
    Ok(())
}
