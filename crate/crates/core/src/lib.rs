//! Product monomial crystals, their truncations by upward-closed sets, the
//! inductive Demazure character formula, and the type A correspondence
//! with Schur modules of column-convex diagrams.
//!
//! ## Examples
//!
//! Each major capability has a runnable example under `crates/core/examples/`:
//!
//! - **`sl3_crystal`** - elements, `ε`/`φ` and DOT output of small SL_3 crystals
//! - **`decompose_product`** - highest-weight decompositions in types A, D, E and GL_n
//! - **`truncation_plan`** - build `M(R, J)` step by step and check its character
//! - **`demazure_characters`** - Demazure operators, key expansions, Demazure crystals
//! - **`schur_modules`** - partition sequences, diagrams, flagged and full Schur characters
//! - **`stable_multiplicities`** - stable coefficients and their restriction to small GL_n
//! - **`specht_oracle`** - seminormal matrices and generalized LR coefficients
//!
//! ```bash
//! cargo run --example decompose_product
//! cargo run --release --example schur_modules
//! ```
//!
//! ## Quick start
//!
//! ```
//! use monomial_crystal::{product::decompose, PointMultiset, RootDatum};
//!
//! let sl4 = RootDatum::parse("A", 3)?;
//! let r = PointMultiset::from_triples(&sl4, &[(1, 3, 1), (3, 1, 1), (3, 3, 1)])?;
//! let dec = decompose(&sl4, &r)?;
//! let keys: Vec<String> = dec.keys().map(|w| sl4.format_weight(w)).collect();
//! assert_eq!(keys, ["(1,0,2)", "(1,1,0)"]);
//! # Ok::<(), monomial_crystal::Error>(())
//! ```

pub mod cartan;
pub mod cli;
pub mod crystal;
pub mod error;
pub mod monomial;
pub mod product;
pub mod truncation;
pub mod typea;
pub mod weightring;

pub use cartan::{CartanKind, RootDatum, Weight};
pub use error::{Error, Result};
pub use monomial::{LatticePoint, Monomial};
pub use product::PointMultiset;
pub use truncation::ThresholdSet;
pub use weightring::GroupAlgebraElement;
