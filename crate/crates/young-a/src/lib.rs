//! Young diagrams and tableaux of order n, with the filling criteria for
//! Levi subalgebras of sl_n coming from su(p,q) and sl_m(H).

pub mod balanced;
pub mod diagram;
pub mod error;
pub mod slmh;
pub mod tableau;
pub mod thin;
pub mod walk;

pub use balanced::{exists_balanced_filling, slmh_condition, ThetaPattern};
pub use diagram::{shape_stats, ShapeStats, SkewDiagram, YoungDiagram};
pub use error::{Result, YoungError};
pub use slmh::{b_prime_elements, construct_slmh_partner, in_b_prime, induction_pair_ok, BPrime, PartnerSide};
pub use tableau::{check_tableau_a, strip_decompose, strips_to_tableau, TableauA, TableauReport};
pub use thin::{bridges, exists_filling_2row, filling_from_witness, Filling2Row};
pub use walk::{
    character_a, count_fillings, count_null_dominant_a, enumerate_fillings_a, FillingFilter,
    DEFAULT_BOX_BUDGET,
};
