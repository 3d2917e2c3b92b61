//! Invariants of binary quartics and of pencils of cubics; GIT stability.

use std::fmt;

use crate::error::{Error, Result};
use crate::field::Fe;
use crate::form::ProjPoint;
use crate::pencil::Pencil;
use crate::scalar::Scalar;

/// (p₀₁, 2p₀₂, 3p₀₃+p₁₂, 2p₁₃, p₂₃): raw Wronskian coefficients up to the factor 3.
pub fn newstead_vector<S: Scalar>(p: &[S; 6]) -> [S; 5] {
    let two = p[0].lift(2);
    let three = p[0].lift(3);
    [
        p[0].clone(),
        two.clone() * p[1].clone(),
        three * p[2].clone() + p[3].clone(),
        two * p[4].clone(),
        p[5].clone(),
    ]
}

/// Weighted coefficients (c₀,…,c₄) of a quartic c₀t₀⁴ + 4c₁t₀³t₁ + 6c₂t₀²t₁² + 4c₃t₀t₁³ + c₄t₁⁴.
pub fn weighted<S: Scalar>(raw: &[S; 5]) -> [S; 5] {
    [raw[0].clone(), raw[1].div_int(4), raw[2].div_int(6), raw[3].div_int(4), raw[4].clone()]
}

/// I = c₀c₄ − 4c₁c₃ + 3c₂².
pub fn quartic_i<S: Scalar>(c: &[S; 5]) -> S {
    c[0].clone() * c[4].clone() - c[0].lift(4) * c[1].clone() * c[3].clone()
        + c[0].lift(3) * c[2].clone() * c[2].clone()
}

/// J = c₀c₂c₄ + 2c₁c₂c₃ − c₀c₃² − c₁²c₄ − c₂³.
pub fn quartic_j<S: Scalar>(c: &[S; 5]) -> S {
    c[0].clone() * c[2].clone() * c[4].clone() + c[0].lift(2) * c[1].clone() * c[2].clone() * c[3].clone()
        - c[0].clone() * c[3].clone() * c[3].clone()
        - c[1].clone() * c[1].clone() * c[4].clone()
        - c[2].clone() * c[2].clone() * c[2].clone()
}

/// I′ = 3p₀₃ − p₁₂.
pub fn pencil_iprime<S: Scalar>(p: &[S; 6]) -> S {
    p[0].lift(3) * p[2].clone() - p[3].clone()
}

/// J of the pencil: the quartic J at (p₀₁, p₀₂/2, (3p₀₃+p₁₂)/6, p₁₃/2, p₂₃).
pub fn pencil_j<S: Scalar>(p: &[S; 6]) -> S {
    quartic_j(&weighted(&newstead_vector(p)))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuarticInvariants {
    pub i: Fe,
    pub j: Fe,
}

/// I and J of a quartic given in the weighted convention.
pub fn quartic_invariants(c: &[Fe; 5]) -> Result<QuarticInvariants> {
    if c.iter().all(|x| x.is_zero()) {
        return Err(Error::ZeroQuartic);
    }
    Ok(QuarticInvariants { i: quartic_i(c), j: quartic_j(c) })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PencilInvariants {
    pub iprime: Fe,
    pub j: Fe,
}

pub fn pencil_invariants(p: &Pencil) -> PencilInvariants {
    PencilInvariants { iprime: pencil_iprime(p.plucker()), j: pencil_j(p.plucker()) }
}

/// Weighted Wronskian coefficients of a pencil.
pub fn wronskian_weighted(p: &Pencil) -> [Fe; 5] {
    weighted(&newstead_vector(p.plucker()))
}

/// (I′³ : J), or `UnstableNoImage` when both vanish.
pub fn newstead_point(p: &Pencil) -> Result<ProjPoint> {
    let inv = pencil_invariants(p);
    point_of(&inv)
}

pub fn point_of(inv: &PencilInvariants) -> Result<ProjPoint> {
    ProjPoint::new(vec![inv.iprime.pow(3), inv.j.clone()]).map_err(|_| Error::UnstableNoImage)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum StabilityClass {
    Unstable,
    /// (I′³ : J) = (216 : 1).
    StrictlySemistablePlus,
    /// (I′³ : J) = (−216 : 1).
    StrictlySemistableMinus,
    Stable,
}

impl fmt::Display for StabilityClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            StabilityClass::Unstable => "unstable",
            StabilityClass::StrictlySemistablePlus => "semistable(216:1)",
            StabilityClass::StrictlySemistableMinus => "semistable(-216:1)",
            StabilityClass::Stable => "stable",
        })
    }
}

pub fn classify_invariants(inv: &PencilInvariants) -> StabilityClass {
    if inv.iprime.is_zero() && inv.j.is_zero() {
        return StabilityClass::Unstable;
    }
    let c = inv.iprime.pow(3);
    let t = &inv.j * &inv.j.int_like(216);
    if c == t {
        StabilityClass::StrictlySemistablePlus
    } else if c == -&t {
        StabilityClass::StrictlySemistableMinus
    } else {
        StabilityClass::Stable
    }
}

pub fn classify_stability(p: &Pencil) -> StabilityClass {
    classify_invariants(&pencil_invariants(p))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;
    use crate::scalar::MPoly;

    #[test]
    fn quartic_examples() {
        let q = Field::Rational;
        let c = [1, 0, 0, 0, 1].map(|x| q.int(x));
        assert_eq!(quartic_invariants(&c).unwrap(), QuarticInvariants { i: q.int(1), j: q.int(0) });
        let c = [0, 0, 1, 0, 0].map(|x| q.int(x));
        assert_eq!(quartic_invariants(&c).unwrap(), QuarticInvariants { i: q.int(3), j: q.int(-1) });
        assert_eq!(quartic_invariants(&[0, 0, 0, 0, 0].map(|x| q.int(x))), Err(Error::ZeroQuartic));
    }

    #[test]
    fn pencil_examples() {
        let q = Field::Rational;
        let p = Pencil::from_ints(&q, [1, 0, 0, 0], [0, 0, 0, 1]).unwrap();
        assert_eq!(pencil_invariants(&p), PencilInvariants { iprime: q.int(3), j: q.ratio(-1, 8) });
        assert_eq!(newstead_point(&p).unwrap(), ProjPoint::affine(&q.int(-216)));
        assert_eq!(classify_stability(&p), StabilityClass::StrictlySemistableMinus);
        let z1 = Pencil::from_ints(&q, [1, 0, 0, 0], [0, 1, 0, 0]).unwrap();
        assert_eq!(pencil_invariants(&z1), PencilInvariants { iprime: q.int(0), j: q.int(0) });
        assert_eq!(newstead_point(&z1), Err(Error::UnstableNoImage));
        assert_eq!(classify_stability(&z1), StabilityClass::Unstable);
        let z21 = Pencil::from_ints(&q, [0, 1, 0, 0], [0, 0, 1, 0]).unwrap();
        assert_eq!(newstead_point(&z21).unwrap(), ProjPoint::affine(&q.int(216)));
        assert_eq!(classify_stability(&z21), StabilityClass::StrictlySemistablePlus);
        let p2 = Pencil::from_ints(&q, [1, 0, 2, 0], [0, 2, 0, 1]).unwrap();
        assert_eq!(newstead_point(&p2).unwrap().to_string(), "(74088:-143)");
    }

    #[test]
    fn stable_over_f13() {
        let f = Field::prime(13).unwrap();
        let p2 = Pencil::from_ints(&f, [1, 0, 2, 0], [0, 2, 0, 1]).unwrap();
        let inv = pencil_invariants(&p2);
        // 143 = 11·13, so J vanishes mod 13 while I′ does not.
        assert!(inv.j.is_zero() && !inv.iprime.is_zero());
        assert_eq!(newstead_point(&p2).unwrap(), ProjPoint::infinity(&f));
        assert_eq!(classify_stability(&p2), StabilityClass::Stable);
    }

    #[test]
    fn symbolic_iprime_squared_is_12i_modulo_quadric() {
        let v = MPoly::vars(6);
        let p: [MPoly; 6] = std::array::from_fn(|i| v[i].clone());
        let ip = pencil_iprime(&p);
        let i = quartic_i(&weighted(&newstead_vector(&p)));
        let diff = ip.clone() * ip - MPoly::int(6, 12) * i;
        let quad = p[0].clone() * p[5].clone() - p[1].clone() * p[4].clone() + p[2].clone() * p[3].clone();
        assert!(!diff.is_zero());
        assert!(diff.ratio_to(&quad).is_some());
    }
}
