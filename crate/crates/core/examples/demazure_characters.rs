//! Demazure operators on characters and the matching Demazure crystals.
//!
//!     cargo run --example demazure_characters

use monomial_crystal::crystal::{character_of_set, demazure_crystal, MonomialCrystal};
use monomial_crystal::weightring::{demazure_pi, key_decompose, pi_longest, weyl_decompose};
use monomial_crystal::{GroupAlgebraElement, RootDatum};

fn main() -> monomial_crystal::Result<()> {
    let gl4 = RootDatum::gl(4)?;
    let w1 = gl4.fundamental_weight(1).clone();
    let w3 = gl4.fundamental_weight(3).clone();

    // e^{ϖ_3} · π_3(e^{ϖ_1 + ϖ_3})
    let inner = demazure_pi(&gl4, 3, &GroupAlgebraElement::monomial(w1.plus(&w3)));
    let ch = &GroupAlgebraElement::monomial(w3.clone()) * &inner;
    println!("character        {}", ch.render(&gl4));
    println!("modulo det       {}", ch.normalize_mod_det().render(&gl4));
    println!("key expansion    {:?}", key_decompose(&gl4, &ch)?);
    for (w, m) in weyl_decompose(&gl4, &pi_longest(&gl4, &ch))? {
        println!("irreducible      {} x {m}", gl4.format_fundamental(&w));
    }

    let sl3 = RootDatum::parse("A", 2)?;
    let crystal = MonomialCrystal::new(&sl3);
    let lambda = sl3.from_fundamental(&[1, 1], 0)?;
    for word in [vec![], vec![1], vec![2, 1], vec![1, 2, 1]] {
        let set = demazure_crystal(&sl3, &lambda, &word)?;
        let via_ops = word.iter().rev().fold(GroupAlgebraElement::monomial(lambda.clone()), |f, &i| demazure_pi(&sl3, i, &f));
        assert_eq!(character_of_set(&crystal, &set), via_ops);
        println!("B_{word:?}(ϖ_1+ϖ_2): {} elements, character {}", set.len(), via_ops.render(&sl3));
    }
    Ok(())
}
