//! Schur modules of partition sequences and of diagrams, with the skew and
//! Specht cross-checks.
//!
//!     cargo run --release --example schur_modules

use monomial_crystal::typea::{
    self, diagram_of_sequence, flagged_schur_char, lr_skew_expand, multiset_of_sequence, natural_rank, schur_decompose,
    sequence_for_diagram, skew_normalise, specht_decompose_bruteforce, Diagram, PartitionSequence,
};
use monomial_crystal::weightring::key_decompose;
use monomial_crystal::RootDatum;

fn main() -> monomial_crystal::Result<()> {
    let staircase = PartitionSequence::from_parts(&[&[1], &[1], &[2, 1, 1]])?;
    let n = natural_rank(&staircase);
    let gl = RootDatum::gl(n)?;
    let d = diagram_of_sequence(&staircase);
    print!("{}", d.to_ascii());
    let (r, j) = multiset_of_sequence(&gl, &staircase)?;
    println!("R = {r}, J = {j}");
    let flagged = flagged_schur_char(&staircase, 3)?;
    println!("flagged character {}", flagged.render(&RootDatum::gl(3)?));
    println!("keys {:?}", key_decompose(&RootDatum::gl(3)?, &flagged)?);
    println!("Schur module {:?}", schur_decompose(&staircase, n)?);
    println!("Specht module {:?}", specht_decompose_bruteforce(&d, 7)?);

    let five = Diagram::new([(1, 1), (2, 2), (3, 2), (2, 3), (4, 3)])?;
    print!("{}", five.to_ascii());
    let skew = skew_normalise(&five).expect("rearranges to a skew shape");
    println!("skew shape {skew}: {:?}", lr_skew_expand(&skew));
    let seq = sequence_for_diagram(&five)?;
    println!("sequence {seq}: {:?}", typea::schur_decompose(&seq, natural_rank(&seq))?);
    println!("Specht: {:?}", specht_decompose_bruteforce(&five, 7)?);
    Ok(())
}
