//! Classification layer: table membership, primitive bases of Q ∩ h^+, and
//! the additivity harness over the tableau counters.

pub mod basis;
pub mod dims;
pub mod error;
pub mod exceptional;
pub mod sweep;
pub mod table;

pub use basis::{decompose, labels_of, primitive_basis, primitive_labels, MonoidElementSet};
pub use dims::{additivity_check, additivity_check_budget, oracle_invariant_dim, tableau_invariant_dim, DEFAULT_BOX_BUDGET};
pub use error::{MonoidError, Result};
pub use exceptional::{forms_for, rows_for, PrimitiveRow, EXCEPTIONAL_PRIMITIVES};
pub use sweep::{form_sweep, sweep_weights, SweepReport};
pub use table::{m_table_membership, table1_row, table3_membership, ClassificationVerdict};

use lie_core::{RealForm, Weight};
use serde::Serialize;

/// One classification record, as emitted by the command line front end.
#[derive(Clone, Debug, Serialize)]
pub struct Verdict {
    pub form: RealForm,
    pub lambda: Weight,
    pub in_table: bool,
    pub failed_condition: Option<String>,
    pub dim_tableaux: Option<u64>,
    pub dim_oracle: Option<u64>,
}
