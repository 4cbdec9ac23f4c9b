//! Primitive weights of the exceptional types with frozen dimensions of
//! V_lambda and of its Levi invariants for the non-quasi-split noncompact forms.

use lie_core::{ExceptionalForm, Family};

#[derive(Clone, Copy, Debug)]
pub struct PrimitiveRow {
    pub family: Family,
    /// fundamental-weight coordinates
    pub labels: &'static str,
    pub e_coords: &'static str,
    pub dim: u64,
    /// one entry per form of `forms_for(family)`
    pub invariants: &'static [u64],
    /// image of the previous row under the diagram automorphism of E6
    pub mirrored: bool,
}

pub fn forms_for(family: Family) -> &'static [ExceptionalForm] {
    match family {
        Family::E6 => &[ExceptionalForm::EIII, ExceptionalForm::EIV],
        Family::E7 => &[ExceptionalForm::EVI, ExceptionalForm::EVII],
        Family::E8 => &[ExceptionalForm::EIX],
        Family::F4 => &[ExceptionalForm::FII],
        _ => &[],
    }
}

pub const EXCEPTIONAL_PRIMITIVES: &[PrimitiveRow] = &[
    PrimitiveRow { family: Family::E6, labels: "0,0,0,0,0,3", e_coords: "0,0,0,0,3,-1,-1,1", dim: 3003, invariants: &[2, 1], mirrored: false },
    PrimitiveRow { family: Family::E6, labels: "3,0,0,0,0,0", e_coords: "0,0,0,0,0,-2,-2,2", dim: 3003, invariants: &[2, 1], mirrored: true },
    PrimitiveRow { family: Family::E6, labels: "0,0,0,0,1,1", e_coords: "0,0,0,1,2,-1,-1,1", dim: 5824, invariants: &[8, 2], mirrored: false },
    PrimitiveRow { family: Family::E6, labels: "1,0,1,0,0,0", e_coords: "-1/2,1/2,1/2,1/2,1/2,-3/2,-3/2,3/2", dim: 5824, invariants: &[8, 2], mirrored: true },
    PrimitiveRow { family: Family::E6, labels: "0,0,0,0,3,0", e_coords: "0,0,0,3,3,-2,-2,2", dim: 1_559_376, invariants: &[25, 1], mirrored: false },
    PrimitiveRow { family: Family::E6, labels: "0,0,3,0,0,0", e_coords: "-3/2,3/2,3/2,3/2,3/2,-5/2,-5/2,5/2", dim: 1_559_376, invariants: &[25, 1], mirrored: true },
    PrimitiveRow { family: Family::E6, labels: "0,0,0,1,0,0", e_coords: "0,0,1,1,1,-1,-1,1", dim: 2925, invariants: &[8, 2], mirrored: false },
    PrimitiveRow { family: Family::E6, labels: "0,0,1,0,0,2", e_coords: "-1/2,1/2,1/2,1/2,5/2,-3/2,-3/2,3/2", dim: 78_975, invariants: &[20, 3], mirrored: false },
    PrimitiveRow { family: Family::E6, labels: "2,0,0,0,1,0", e_coords: "0,0,0,1,1,-2,-2,2", dim: 78_975, invariants: &[20, 3], mirrored: true },
    PrimitiveRow { family: Family::E6, labels: "0,0,1,0,1,0", e_coords: "-1/2,1/2,1/2,3/2,3/2,-3/2,-3/2,3/2", dim: 70_070, invariants: &[25, 3], mirrored: false },
    PrimitiveRow { family: Family::E6, labels: "0,0,2,0,0,1", e_coords: "-1,1,1,1,2,-2,-2,2", dim: 600_600, invariants: &[41, 3], mirrored: false },
    PrimitiveRow { family: Family::E6, labels: "1,0,0,0,2,0", e_coords: "0,0,0,2,2,-2,-2,2", dim: 600_600, invariants: &[41, 3], mirrored: true },
    PrimitiveRow { family: Family::E6, labels: "0,1,0,0,0,0", e_coords: "1/2,1/2,1/2,1/2,1/2,-1/2,-1/2,1/2", dim: 78, invariants: &[3, 2], mirrored: false },
    PrimitiveRow { family: Family::E6, labels: "1,0,0,0,0,1", e_coords: "0,0,0,0,1,-1,-1,1", dim: 650, invariants: &[6, 3], mirrored: false },
    PrimitiveRow { family: Family::E7, labels: "0,0,0,0,0,0,2", e_coords: "0,0,0,0,0,2,-1,1", dim: 1463, invariants: &[8, 4], mirrored: false },
    PrimitiveRow { family: Family::E7, labels: "0,0,0,0,0,1,0", e_coords: "0,0,0,0,1,1,-1,1", dim: 1539, invariants: &[12, 6], mirrored: false },
    PrimitiveRow { family: Family::E7, labels: "0,0,0,0,1,0,1", e_coords: "0,0,0,1,1,2,-2,2", dim: 980_343, invariants: &[360, 48], mirrored: false },
    PrimitiveRow { family: Family::E7, labels: "0,0,0,0,2,0,0", e_coords: "0,0,0,2,2,2,-3,3", dim: 109_120_648, invariants: &[4900, 155], mirrored: false },
    PrimitiveRow { family: Family::E7, labels: "0,0,0,1,0,0,0", e_coords: "0,0,1,1,1,1,-2,2", dim: 365_750, invariants: &[200, 30], mirrored: false },
    PrimitiveRow { family: Family::E7, labels: "0,0,1,0,0,0,0", e_coords: "-1/2,1/2,1/2,1/2,1/2,1/2,-3/2,3/2", dim: 8645, invariants: &[26, 9], mirrored: false },
    PrimitiveRow { family: Family::E7, labels: "0,1,0,0,0,0,1", e_coords: "1/2,1/2,1/2,1/2,1/2,3/2,-3/2,3/2", dim: 40_755, invariants: &[60, 16], mirrored: false },
    PrimitiveRow { family: Family::E7, labels: "0,1,0,0,1,0,0", e_coords: "1/2,1/2,1/2,3/2,3/2,3/2,-5/2,5/2", dim: 11_316_305, invariants: &[1553, 103], mirrored: false },
    PrimitiveRow { family: Family::E7, labels: "0,2,0,0,0,0,0", e_coords: "1,1,1,1,1,1,-2,2", dim: 253_935, invariants: &[111, 15], mirrored: false },
    PrimitiveRow { family: Family::E7, labels: "1,0,0,0,0,0,0", e_coords: "0,0,0,0,0,0,-1,1", dim: 133, invariants: &[4, 3], mirrored: false },
    PrimitiveRow { family: Family::E8, labels: "0,0,0,0,0,0,0,1", e_coords: "0,0,0,0,0,0,1,1", dim: 248, invariants: &[4], mirrored: false },
    PrimitiveRow { family: Family::E8, labels: "0,0,0,0,0,0,1,0", e_coords: "0,0,0,0,0,1,1,2", dim: 30_380, invariants: &[26], mirrored: false },
    PrimitiveRow { family: Family::E8, labels: "0,0,0,0,0,1,0,0", e_coords: "0,0,0,0,1,1,1,3", dim: 2_450_240, invariants: &[188], mirrored: false },
    PrimitiveRow { family: Family::E8, labels: "0,0,0,0,1,0,0,0", e_coords: "0,0,0,1,1,1,1,4", dim: 146_325_270, invariants: &[1383], mirrored: false },
    PrimitiveRow { family: Family::E8, labels: "0,0,0,1,0,0,0,0", e_coords: "0,0,1,1,1,1,1,5", dim: 6_899_079_264, invariants: &[10488], mirrored: false },
    PrimitiveRow { family: Family::E8, labels: "0,0,1,0,0,0,0,0", e_coords: "-1/2,1/2,1/2,1/2,1/2,1/2,1/2,7/2", dim: 6_696_000, invariants: &[276], mirrored: false },
    PrimitiveRow { family: Family::E8, labels: "0,1,0,0,0,0,0,0", e_coords: "1/2,1/2,1/2,1/2,1/2,1/2,1/2,5/2", dim: 147_250, invariants: &[43], mirrored: false },
    PrimitiveRow { family: Family::E8, labels: "1,0,0,0,0,0,0,0", e_coords: "0,0,0,0,0,0,0,2", dim: 3875, invariants: &[10], mirrored: false },
    PrimitiveRow { family: Family::F4, labels: "0,0,0,1", e_coords: "1,0,0,0", dim: 26, invariants: &[1], mirrored: false },
    PrimitiveRow { family: Family::F4, labels: "0,0,1,0", e_coords: "3/2,1/2,1/2,1/2", dim: 273, invariants: &[1], mirrored: false },
    PrimitiveRow { family: Family::F4, labels: "0,1,0,0", e_coords: "2,1,1,0", dim: 1274, invariants: &[1], mirrored: false },
    PrimitiveRow { family: Family::F4, labels: "1,0,0,0", e_coords: "1,1,0,0", dim: 52, invariants: &[1], mirrored: false },
];

pub fn rows_for(family: Family) -> impl Iterator<Item = &'static PrimitiveRow> {
    EXCEPTIONAL_PRIMITIVES.iter().filter(move |r| r.family == family)
}
