//! The symmetric-group side on its own: seminormal matrices, characters and
//! generalized Littlewood–Richardson coefficients of small diagrams.
//!
//!     cargo run --release --example specht_oracle

use monomial_crystal::typea::specht::{check_coxeter_relations, murnaghan_nakayama, trace, SeminormalRep};
use monomial_crystal::typea::{specht_decompose_bruteforce, Diagram, Partition};

fn main() -> monomial_crystal::Result<()> {
    for lambda in Partition::all_of_size(4) {
        let rep = SeminormalRep::new(&lambda);
        assert!(check_coxeter_relations(&rep));
        let chi: Vec<String> = Partition::all_of_size(4)
            .iter()
            .map(|mu| murnaghan_nakayama(&lambda, mu).to_string())
            .collect();
        println!("{lambda:<10} dim {:>2}  χ = [{}]  tr(s_1) = {}", rep.dim(), chi.join(", "), trace(&rep.word(&[1])));
    }

    let non_skew = Diagram::new([(1, 2), (1, 3), (2, 2), (2, 4), (3, 2), (3, 5)])?;
    print!("{}", non_skew.to_ascii());
    println!("{:?}", specht_decompose_bruteforce(&non_skew, 7)?);
    Ok(())
}
