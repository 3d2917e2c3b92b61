//! The six non-stable orbits, orbit classification, closure relations, and
//! the pencil text syntax.

use std::fmt;

use crate::error::{Error, Result};
use crate::field::{Fe, Field};
use crate::form::{BinaryForm, ProjPoint};
use crate::invariants::{classify_stability, newstead_point, StabilityClass};
use crate::pencil::{plucker_quadric, Pencil};
use crate::wall::{wall_pencil, Rho};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum OrbitLabel {
    Z1,
    Z2_0,
    Z2_1,
    Z2_2,
    Z3_1,
    Z3_2,
    Stable(ProjPoint),
}

pub const NONSTABLE: [OrbitLabel; 6] =
    [OrbitLabel::Z1, OrbitLabel::Z2_0, OrbitLabel::Z2_1, OrbitLabel::Z2_2, OrbitLabel::Z3_1, OrbitLabel::Z3_2];

impl OrbitLabel {
    pub fn parse(s: &str) -> Option<OrbitLabel> {
        NONSTABLE.into_iter().find(|l| l.to_string() == s)
    }

    /// Orbit dimension.
    pub fn dim(&self) -> usize {
        match self {
            OrbitLabel::Z1 => 1,
            OrbitLabel::Z2_0 | OrbitLabel::Z2_1 | OrbitLabel::Z2_2 => 2,
            OrbitLabel::Z3_1 | OrbitLabel::Z3_2 => 3,
            OrbitLabel::Stable(_) => 3,
        }
    }

    /// Isotropy group name (B₂, T, N(T), ℤ/2) for the non-stable labels.
    pub fn isotropy(&self) -> &'static str {
        match self {
            OrbitLabel::Z1 => "B2",
            OrbitLabel::Z2_0 => "T",
            OrbitLabel::Z2_1 | OrbitLabel::Z2_2 => "N(T)",
            OrbitLabel::Z3_1 | OrbitLabel::Z3_2 => "Z/2",
            OrbitLabel::Stable(_) => "finite",
        }
    }

    /// Number of F_q-points of the isotropy group.
    pub fn isotropy_points(&self, q: u64) -> Option<u64> {
        match self {
            OrbitLabel::Z1 => Some(q * (q - 1)),
            OrbitLabel::Z2_0 => Some(q - 1),
            OrbitLabel::Z2_1 | OrbitLabel::Z2_2 => Some(2 * (q - 1)),
            OrbitLabel::Z3_1 | OrbitLabel::Z3_2 => Some(2),
            OrbitLabel::Stable(_) => None,
        }
    }

    /// Generators of the tabulated representative.
    pub fn representative(&self, field: &Field) -> Option<Pencil> {
        let (f, g) = match self {
            OrbitLabel::Z1 => ([1, 0, 0, 0], [0, 1, 0, 0]),
            OrbitLabel::Z2_0 => ([1, 0, 0, 0], [0, 0, 1, 0]),
            OrbitLabel::Z2_1 => ([0, 0, 1, 0], [0, 1, 0, 0]),
            OrbitLabel::Z2_2 => ([1, 0, 0, 0], [0, 0, 0, 1]),
            OrbitLabel::Z3_1 => ([0, 0, 1, 0], [1, 1, 0, 0]),
            OrbitLabel::Z3_2 => ([1, 0, 0, 0], [0, 0, 1, 1]),
            OrbitLabel::Stable(_) => return None,
        };
        Some(Pencil::from_ints(field, f, g).unwrap())
    }
}

impl fmt::Display for OrbitLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OrbitLabel::Z1 => write!(f, "Z1"),
            OrbitLabel::Z2_0 => write!(f, "Z2_0"),
            OrbitLabel::Z2_1 => write!(f, "Z2_1"),
            OrbitLabel::Z2_2 => write!(f, "Z2_2"),
            OrbitLabel::Z3_1 => write!(f, "Z3_1"),
            OrbitLabel::Z3_2 => write!(f, "Z3_2"),
            OrbitLabel::Stable(x) => {
                let c = x.coords();
                match x.primitive_integer() {
                    Some(v) => write!(f, "STABLE({}:{})", v[0], v[1]),
                    None => write!(f, "STABLE({}:{})", c[0], c[1]),
                }
            }
        }
    }
}

/// Common factor of the pencil's members.
pub fn base_locus(p: &Pencil) -> BinaryForm {
    let [f, g] = p.basis();
    f.gcd(g).expect("generators are nonzero")
}

pub fn classify_orbit(p: &Pencil) -> Result<OrbitLabel> {
    let gcd_deg = || base_locus(p).degree();
    match classify_stability(p) {
        StabilityClass::Stable => Ok(OrbitLabel::Stable(newstead_point(p)?)),
        StabilityClass::Unstable => match gcd_deg() {
            2 => Ok(OrbitLabel::Z1),
            1 => Ok(OrbitLabel::Z2_0),
            _ => Err(Error::UnclassifiableInput),
        },
        StabilityClass::StrictlySemistablePlus => match gcd_deg() {
            2 => Ok(OrbitLabel::Z2_1),
            1 => Ok(OrbitLabel::Z3_1),
            _ => Err(Error::UnclassifiableInput),
        },
        StabilityClass::StrictlySemistableMinus => match p.cube_members(true)?.count() {
            2 => Ok(OrbitLabel::Z2_2),
            1 => Ok(OrbitLabel::Z3_2),
            _ => Err(Error::UnclassifiableInput),
        },
    }
}

/// Closure relations as tabulated, evaluated at a Plücker tuple.
pub fn closure_relations(label: &OrbitLabel, q: &[Fe; 6]) -> Result<Vec<Fe>> {
    if !plucker_quadric(q).is_zero() {
        return Err(Error::NotOnPluckerQuadric);
    }
    let [p01, p02, p03, p12, p13, p23] = q;
    let k = |n: i64| p01.int_like(n);
    match label {
        OrbitLabel::Z2_2 => Ok(vec![
            &(p12 * &(&(&k(9) * p03) + p12)) - &(&k(9) * &(p02 * p13)),
            &(p12 * p12) - &(&k(9) * &(p01 * p23)),
        ]),
        OrbitLabel::Z2_1 => Ok(vec![
            &(&(p02 * p02) - &(p01 * p03)) - &(p01 * p12),
            &(p02 * p03) - &(p01 * p13),
            &(&(p13 * p13) - &(p03 * p23)) - &(p12 * p23),
            &(p03 * p13) - &(p02 * p23),
            &(p01 * p23) - &(p03 * p03),
        ]),
        _ => Err(Error::Unsupported(format!("no closure relations tabulated for {label}"))),
    }
}

/// All tabulated relations for the label vanish.
pub fn closure_predicates(label: &OrbitLabel, q: &[Fe; 6]) -> Result<bool> {
    Ok(closure_relations(label, q)?.iter().all(|x| x.is_zero()))
}

fn parse_vec(field: &Field, s: &str) -> Result<Vec<Fe>> {
    let inner = s
        .trim()
        .strip_prefix('[')
        .and_then(|r| r.strip_suffix(']'))
        .ok_or_else(|| Error::BadElement(s.to_string()))?;
    inner.split(',').map(|t| field.parse_elem(t)).collect()
}

/// `f=[a0,a1,a2,a3];g=[b0,b1,b2,b3]`, `plucker=[p01,…,p23]`, `wall:<rho>` or `rep:<label>`.
pub fn parse_pencil(field: &Field, text: &str) -> Result<Pencil> {
    let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    let bad = |reason: &str| Error::BadPencil { input: text.to_string(), reason: reason.to_string() };
    if let Some(r) = s.strip_prefix("wall:") {
        let rho = Rho::parse(field, r).map_err(|e| bad(&e.to_string()))?;
        return Ok(wall_pencil(field, &rho));
    }
    if let Some(l) = s.strip_prefix("rep:") {
        let label = OrbitLabel::parse(l).ok_or_else(|| bad("unknown orbit label"))?;
        return Ok(label.representative(field).unwrap());
    }
    if let Some(v) = s.strip_prefix("plucker=") {
        let v = parse_vec(field, v).map_err(|e| bad(&e.to_string()))?;
        let arr: [Fe; 6] = v.try_into().map_err(|_| bad("need six coordinates"))?;
        return Pencil::from_plucker(field, arr);
    }
    let (fs, gs) = s.split_once(';').ok_or_else(|| bad("expected f=[..];g=[..]"))?;
    let fv = fs.strip_prefix("f=").ok_or_else(|| bad("expected f=[..]"))?;
    let gv = gs.strip_prefix("g=").ok_or_else(|| bad("expected g=[..]"))?;
    let fv = parse_vec(field, fv).map_err(|e| bad(&e.to_string()))?;
    let gv = parse_vec(field, gv).map_err(|e| bad(&e.to_string()))?;
    if fv.len() != 4 || gv.len() != 4 {
        return Err(bad("cubics need four coefficients"));
    }
    Pencil::new(&BinaryForm::new(field, fv)?, &BinaryForm::new(field, gv)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pgl2::ProjMatrix;

    fn f13() -> Field {
        Field::prime(13).unwrap()
    }

    #[test]
    fn representatives_classify_to_themselves() {
        for field in [f13(), Field::Rational] {
            for l in NONSTABLE {
                let p = l.representative(&field).unwrap();
                assert_eq!(classify_orbit(&p).unwrap(), l, "{l} over {field}");
            }
        }
    }

    #[test]
    fn translate_keeps_label() {
        let f = f13();
        let a = ProjMatrix::from_ints(&f, [3, 1, 4, 1]).unwrap();
        for l in NONSTABLE {
            let p = a.act(&l.representative(&f).unwrap());
            assert_eq!(classify_orbit(&p).unwrap(), l);
        }
    }

    #[test]
    fn stable_label_text() {
        let q = Field::Rational;
        let p = parse_pencil(&q, "wall:2").unwrap();
        assert_eq!(classify_orbit(&p).unwrap().to_string(), "STABLE(74088:-143)");
    }

    #[test]
    fn closure_examples() {
        let f = f13();
        let z22 = OrbitLabel::Z2_2.representative(&f).unwrap();
        let z1 = OrbitLabel::Z1.representative(&f).unwrap();
        assert!(closure_predicates(&OrbitLabel::Z2_2, z22.plucker()).unwrap());
        assert!(closure_predicates(&OrbitLabel::Z2_2, z1.plucker()).unwrap());
        let p2 = parse_pencil(&f, "wall:2").unwrap();
        assert!(!closure_predicates(&OrbitLabel::Z2_2, p2.plucker()).unwrap());
        let z31 = OrbitLabel::Z3_1.representative(&f).unwrap();
        assert!(!closure_predicates(&OrbitLabel::Z2_1, z31.plucker()).unwrap());
        assert_eq!(closure_relations(&OrbitLabel::Z2_1, z31.plucker()).unwrap()[0], f.int(1));
    }

    #[test]
    fn parsing() {
        let q = Field::Rational;
        let a = parse_pencil(&q, "f=[1,0,2,0]; g=[0,2,0,1]").unwrap();
        assert_eq!(a, parse_pencil(&q, "wall:2").unwrap());
        let b = parse_pencil(&q, "plucker=[2,0,1,-4,0,2]").unwrap();
        assert_eq!(a, b);
        assert!(matches!(parse_pencil(&q, "plucker=[1,0,0,0,0,1]"), Err(Error::NotOnPluckerQuadric)));
        assert!(matches!(parse_pencil(&q, "rep:Z9"), Err(Error::BadPencil { .. })));
        assert!(matches!(parse_pencil(&q, "f=[1,0];g=[0,1]"), Err(Error::BadPencil { .. })));
        assert_eq!(parse_pencil(&q, "wall:inf").unwrap(), OrbitLabel::Z2_1.representative(&q).unwrap());
    }
}
