//! Exact root-system, lattice, Weyl-group and real-form data for simple
//! complex Lie algebras, in Bourbaki conventions.

pub mod error;
pub mod lattice;
pub mod linalg;
pub mod real_form;
pub mod roots;
pub mod theta;
pub mod types;
pub mod weight;
pub mod weyl;

pub use error::{LieError, Result};
pub use lattice::{apply_sigma, classify_weight, dominant_representative, dominant_weights_bcd, WeightClass};
pub use real_form::{theta_of, ExceptionalForm, RealForm};
pub use roots::{root_data, RootData};
pub use theta::ThetaSet;
pub use types::{Family, LieType};
pub use weight::{Rat, Weight};
pub use weyl::{bruhat_leq, BruhatPoset, WeylElement, WeylGroup};
