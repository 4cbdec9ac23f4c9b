//! Independent ground truth for the combinatorial crates.
//!
//! Everything here is computed from the root system alone (Freudenthal's
//! recursion, the Weyl dimension formula, explicit Weyl group searches) and
//! never looks at tableaux.

pub mod bruhat;
pub mod character;
pub mod error;
pub mod freudenthal;
pub mod levi;

pub use bruhat::{bruhat_tuple_oracle, BruhatOracle};
pub use character::{weight_multiplicities, weight_multiplicities_budget, weyl_dim, CharacterTable, DEFAULT_BUDGET};
pub use error::{OracleError, Result};
pub use freudenthal::LabelSystem;
pub use levi::{dim_invariants_budget, dim_invariants_many, dim_invariants_oracle};
