//! Doubled Young tableaux for types B, C and D: strongly standard columns,
//! the Young order with parity, admissible pairs, the character formula and
//! Levi-invariant counts, and the explicit families used for the monoid basis.

pub mod basis;
pub mod column;
pub mod enumerate;
pub mod error;
pub mod families;
pub mod order;
pub mod symbol;
pub mod tableau;

pub use basis::{basis_fillings, BasisFilling};
pub use column::{all_columns, column_weight, columns_of_height, Column};
pub use error::{BcdError, Result};
pub use families::{
    all_family_specs, family_expected_syndrome, family_standard_for, family_tableau, FamilyKind, FamilySpec,
};
pub use order::{
    admissible_oracle, admissible_pair, bruhat_side_conditions, hasse_cover, young_compare, young_nondecreasing,
};
pub use tableau::{
    evaluate_tableau, psi_shape, shift_tableau, sigma_tableau, simple_root_ints, syndrome, tableau_sign,
    DoubledTableau, TableauReport,
};
pub use enumerate::{
    character_bcd, character_bcd_budget, count_doubled, count_invariants_bcd, count_invariants_bcd_budget,
    enumerate_doubled, DoubledFilter, DEFAULT_BOX_BUDGET,
};
