//! Builds a truncation M(R, J) step by step and compares the inductive
//! character with the elements found at each stage.
//!
//!     cargo run --example truncation_plan

use monomial_crystal::crystal::{character_of_set, string_property, MonomialCrystal};
use monomial_crystal::monomial::LatticePoint;
use monomial_crystal::product::product_crystal;
use monomial_crystal::truncation::{build_plan, char_by_plan, replay_plan, truncate, PlanStep};
use monomial_crystal::{PointMultiset, RootDatum, ThresholdSet};

fn main() -> monomial_crystal::Result<()> {
    let sl4 = RootDatum::parse("A", 3)?;
    let r = PointMultiset::from_triples(&sl4, &[(1, 3, 1), (3, 1, 1), (3, 3, 1)])?;

    let plan = build_plan(&sl4, &r, None)?;
    println!("J_0 = {}", plan.initial);
    let stages = replay_plan(&sl4, &plan)?;
    for (step, stage) in plan.steps.iter().zip(&stages[1..]) {
        let label = match step {
            PlanStep::Extend { i, k } => format!("extend ({i},{k})"),
            PlanStep::Multiply { q } => format!("multiply {q}"),
        };
        println!("{label:<24} J = {}  |M| = {}", stage.j, stage.elements.len());
    }

    let crystal = MonomialCrystal::new(&sl4);
    let last = stages.last().expect("at least the initial stage");
    assert_eq!(character_of_set(&crystal, &last.elements), char_by_plan(&sl4, &plan));

    let j = ThresholdSet::up_closure(&sl4, [LatticePoint::new(&sl4, 3, 1)?])?;
    let small = truncate(&sl4, &r, &j)?;
    println!("M(R, up(3,1)) at {j}:");
    for m in &small {
        println!("  {}", m.variables_string());
    }
    let ambient = product_crystal(&sl4, &r)?;
    string_property(&crystal, &small.iter().cloned().collect(), &ambient).expect("string property");
    Ok(())
}
