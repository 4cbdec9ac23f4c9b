//! Simple real forms and their Satake subsets Θ.

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{parse_err, LieError, Result};
use crate::theta::ThetaSet;
use crate::types::{Family, LieType};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ExceptionalForm {
    EI,
    EII,
    EIII,
    EIV,
    EV,
    EVI,
    EVII,
    EVIII,
    EIX,
    FI,
    FII,
    G,
}

impl ExceptionalForm {
    pub const ALL: [ExceptionalForm; 12] = [
        Self::EI,
        Self::EII,
        Self::EIII,
        Self::EIV,
        Self::EV,
        Self::EVI,
        Self::EVII,
        Self::EVIII,
        Self::EIX,
        Self::FI,
        Self::FII,
        Self::G,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Self::EI => "EI",
            Self::EII => "EII",
            Self::EIII => "EIII",
            Self::EIV => "EIV",
            Self::EV => "EV",
            Self::EVI => "EVI",
            Self::EVII => "EVII",
            Self::EVIII => "EVIII",
            Self::EIX => "EIX",
            Self::FI => "FI",
            Self::FII => "FII",
            Self::G => "G",
        }
    }

    pub fn family(self) -> Family {
        match self {
            Self::EI | Self::EII | Self::EIII | Self::EIV => Family::E6,
            Self::EV | Self::EVI | Self::EVII => Family::E7,
            Self::EVIII | Self::EIX => Family::E8,
            Self::FI | Self::FII => Family::F4,
            Self::G => Family::G2,
        }
    }

    /// Black nodes of the Satake diagram, Bourbaki numbering.
    pub fn theta(self) -> ThetaSet {
        let idx: &[usize] = match self {
            Self::EI | Self::EII | Self::EV | Self::EVIII | Self::FI | Self::G => &[],
            Self::EIII => &[3, 4, 5],
            Self::EIV => &[2, 3, 4, 5],
            Self::EVI => &[2, 5, 7],
            Self::EVII => &[2, 3, 4, 5],
            Self::EIX => &[2, 3, 4, 5],
            Self::FII => &[1, 2, 3],
        };
        ThetaSet::from_indices(idx.iter().copied())
    }

    /// Split or quasi-split (Θ empty).
    pub fn is_quasi_split(self) -> bool {
        self.theta().is_empty()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RealForm {
    /// sl_n(R)
    SlR(usize),
    /// su(p,q) with p <= q
    Su(usize, usize),
    /// sl_m(H), complexification A_{2m-1}
    SlH(usize),
    /// so(p,q) with p <= q
    So(usize, usize),
    /// sp_{2r}(R)
    Sp2R(usize),
    /// sp(p,q) with p <= q, complexification C_{p+q}
    Sp2(usize, usize),
    /// so*(2r), stored by r
    SoStar(usize),
    /// A complex simple Lie algebra viewed as a real one.
    Complex(LieType),
    /// The compact form of the given type.
    Compact(LieType),
    Exceptional(ExceptionalForm),
}

impl RealForm {
    pub fn su(p: usize, q: usize) -> Result<Self> {
        Self::validated(Self::Su(p.min(q), p.max(q)))
    }

    pub fn so(p: usize, q: usize) -> Result<Self> {
        Self::validated(Self::So(p.min(q), p.max(q)))
    }

    pub fn sp2(p: usize, q: usize) -> Result<Self> {
        Self::validated(Self::Sp2(p.min(q), p.max(q)))
    }

    fn validated(f: RealForm) -> Result<RealForm> {
        f.complexified().map(|_| f)
    }

    /// Type of the complexification (for complex forms, of one factor).
    pub fn complexified(&self) -> Result<LieType> {
        let bad = |m: String| Err(LieError::InvalidForm(m));
        match *self {
            RealForm::SlR(n) if n >= 2 => Ok(LieType::a(n - 1)),
            RealForm::Su(p, q) if p + q >= 2 => Ok(LieType::a(p + q - 1)),
            RealForm::SlH(m) if m >= 1 => Ok(LieType::a(2 * m - 1)),
            RealForm::So(p, q) => {
                let n = p + q;
                if n % 2 == 1 && n >= 3 {
                    Ok(LieType::b((n - 1) / 2))
                } else if n % 2 == 0 && n >= 6 {
                    Ok(LieType::d(n / 2))
                } else {
                    bad(format!("so({p},{q}) is not simple of type B or D"))
                }
            }
            RealForm::Sp2R(r) if r >= 1 => Ok(LieType::c(r)),
            RealForm::Sp2(p, q) if p + q >= 1 => Ok(LieType::c(p + q)),
            RealForm::SoStar(r) if r >= 3 => Ok(LieType::d(r)),
            RealForm::Complex(t) | RealForm::Compact(t) => Ok(t),
            RealForm::Exceptional(e) => Ok(LieType::exceptional(e.family())),
            _ => bad(format!("parameters out of range for {self:?}")),
        }
    }

    pub fn is_compact(&self) -> bool {
        match *self {
            RealForm::Su(p, _) | RealForm::So(p, _) | RealForm::Sp2(p, _) => p == 0,
            RealForm::Compact(_) => true,
            RealForm::SlH(1) => true,
            _ => false,
        }
    }

    pub fn is_complex(&self) -> bool {
        matches!(self, RealForm::Complex(_))
    }

    /// All classical real forms whose complexification is `ty`.
    pub fn classical_forms_of(ty: LieType) -> Vec<RealForm> {
        let r = ty.rank;
        let mut out = Vec::new();
        match ty.family {
            Family::A => {
                let n = r + 1;
                out.push(RealForm::SlR(n));
                for p in 0..=n / 2 {
                    out.push(RealForm::Su(p, n - p));
                }
                if n % 2 == 0 && n > 2 {
                    out.push(RealForm::SlH(n / 2));
                }
            }
            Family::B => {
                for p in 0..=r {
                    out.push(RealForm::So(p, 2 * r + 1 - p));
                }
            }
            Family::C => {
                out.push(RealForm::Sp2R(r));
                for p in 0..=r / 2 {
                    out.push(RealForm::Sp2(p, r - p));
                }
            }
            Family::D => {
                for p in 0..=r {
                    out.push(RealForm::So(p, 2 * r - p));
                }
                out.push(RealForm::SoStar(r));
            }
            _ => {}
        }
        out.push(RealForm::Complex(ty));
        out
    }
}

pub fn theta_of(form: &RealForm) -> Result<ThetaSet> {
    let ty = form.complexified()?;
    let r = ty.rank;
    Ok(match *form {
        RealForm::SlR(_) | RealForm::Sp2R(_) | RealForm::Complex(_) => ThetaSet::empty(),
        RealForm::Compact(_) => ThetaSet::full(r),
        RealForm::Su(p, q) => {
            if p == 0 {
                ThetaSet::full(r)
            } else {
                ThetaSet::interval(p + 1, p + q - p - 1)
            }
        }
        RealForm::SlH(_) => ThetaSet::odd(r),
        RealForm::So(p, _) => {
            if ty.family == Family::D && p + 1 == r {
                ThetaSet::empty()
            } else {
                ThetaSet::interval(p + 1, r)
            }
        }
        RealForm::Sp2(p, _) => ThetaSet::odd(r).union(&ThetaSet::interval(2 * p + 1, r)),
        RealForm::SoStar(_) => {
            ThetaSet::from_indices(ThetaSet::odd(r).iter().filter(|&i| i != r))
        }
        RealForm::Exceptional(e) => e.theta(),
    })
}

impl fmt::Display for RealForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RealForm::SlR(n) => write!(f, "sl_R({n})"),
            RealForm::Su(p, q) => write!(f, "su({p},{q})"),
            RealForm::SlH(m) => write!(f, "sl_H({m})"),
            RealForm::So(p, q) => write!(f, "so({p},{q})"),
            RealForm::Sp2R(r) => write!(f, "sp2_R({r})"),
            RealForm::Sp2(p, q) => write!(f, "sp2({p},{q})"),
            RealForm::SoStar(r) => write!(f, "so*({})", 2 * r),
            RealForm::Complex(t) => write!(f, "complex({t})"),
            RealForm::Compact(t) => write!(f, "compact({t})"),
            RealForm::Exceptional(e) => f.write_str(e.name()),
        }
    }
}

impl Serialize for RealForm {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

fn args(body: &str, token: &str) -> Result<Vec<usize>> {
    body.split(',')
        .map(|x| x.trim().parse::<usize>().map_err(|_| parse_err("real form", token)))
        .collect()
}

impl FromStr for RealForm {
    type Err = LieError;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        if let Some(e) = ExceptionalForm::ALL.iter().find(|e| e.name() == t) {
            return Ok(RealForm::Exceptional(*e));
        }
        let open = t.find('(').ok_or_else(|| parse_err("real form", s))?;
        if !t.ends_with(')') {
            return Err(parse_err("real form", s));
        }
        let head = &t[..open];
        let body = &t[open + 1..t.len() - 1];
        let form = match head {
            "complex" => RealForm::Complex(body.parse()?),
            "compact" => RealForm::Compact(body.parse()?),
            _ => {
                let a = args(body, s)?;
                match (head, a.as_slice()) {
                    ("sl_R" | "slR", [n]) => RealForm::SlR(*n),
                    ("su", [p, q]) => RealForm::Su(*p.min(q), *p.max(q)),
                    ("sl_H" | "slH", [m]) => RealForm::SlH(*m),
                    ("so", [p, q]) => RealForm::So(*p.min(q), *p.max(q)),
                    ("sp2_R" | "sp_R", [r]) => RealForm::Sp2R(*r),
                    ("sp2" | "sp", [p, q]) => RealForm::Sp2(*p.min(q), *p.max(q)),
                    ("so*" | "so_star", [n]) if n % 2 == 0 => RealForm::SoStar(n / 2),
                    _ => return Err(parse_err("real form", s)),
                }
            }
        };
        form.complexified()?;
        Ok(form)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn th(s: &str) -> ThetaSet {
        theta_of(&s.parse().unwrap()).unwrap()
    }

    #[test]
    fn parse_roundtrip() {
        for s in ["so(2,5)", "su(1,3)", "sl_H(2)", "sp2(1,1)", "so*(6)", "EIV", "sl_R(4)", "sp2_R(3)",
            "complex(B3)", "compact(E6)"]
        {
            let f: RealForm = s.parse().unwrap();
            assert_eq!(f.to_string(), s);
        }
        assert_eq!("su(3,1)".parse::<RealForm>().unwrap(), RealForm::Su(1, 3));
        assert!("so(1,1)".parse::<RealForm>().is_err());
        assert!("so*(5)".parse::<RealForm>().is_err());
        assert!("EX".parse::<RealForm>().is_err());
    }

    #[test]
    fn complexifications() {
        assert_eq!(RealForm::So(2, 5).complexified().unwrap(), LieType::b(3));
        assert_eq!(RealForm::So(3, 3).complexified().unwrap(), LieType::d(3));
        assert_eq!(RealForm::SlH(2).complexified().unwrap(), LieType::a(3));
        assert_eq!(RealForm::SoStar(3).complexified().unwrap(), LieType::d(3));
        assert_eq!(RealForm::Sp2(1, 1).complexified().unwrap(), LieType::c(2));
    }

    #[test]
    fn classical_thetas() {
        assert_eq!(th("so(2,5)"), ThetaSet::from_indices([3]));
        assert_eq!(th("sl_H(2)"), ThetaSet::from_indices([1, 3]));
        assert!(th("sp2_R(3)").is_empty());
        assert_eq!(th("su(1,3)"), ThetaSet::from_indices([2]));
        assert!(th("su(2,2)").is_empty());
        assert_eq!(th("su(0,3)"), ThetaSet::full(2));
        assert!(th("so(3,5)").is_empty());
        assert_eq!(th("so(1,7)"), ThetaSet::from_indices([2, 3, 4]));
        assert_eq!(th("sp2(1,1)"), ThetaSet::from_indices([1]));
        assert_eq!(th("sp2(1,2)"), ThetaSet::from_indices([1, 3]));
        assert_eq!(th("so*(6)"), ThetaSet::from_indices([1]));
        assert_eq!(th("so*(8)"), ThetaSet::from_indices([1, 3]));
        assert_eq!(th("FII"), ThetaSet::from_indices([1, 2, 3]));
    }

    #[test]
    fn form_lists() {
        assert_eq!(RealForm::classical_forms_of(LieType::a(3)).len(), 6);
        assert_eq!(RealForm::classical_forms_of(LieType::d(4)).len(), 7);
        for ty in [LieType::a(4), LieType::b(3), LieType::c(4), LieType::d(3)] {
            for f in RealForm::classical_forms_of(ty) {
                assert_eq!(f.complexified().unwrap(), ty);
                theta_of(&f).unwrap().validate(&ty).unwrap();
            }
        }
    }
}
