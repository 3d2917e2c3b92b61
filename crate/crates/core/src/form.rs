//! Binary forms f = Σ a_i t₀^{n−i} t₁^i and projective points.

use std::fmt;

use crate::error::{Error, Result};
use crate::field::{Fe, Field};
use crate::poly::UPoly;
use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BinaryForm {
    field: Field,
    coeffs: Vec<Fe>,
}

/// Jacobian ∂f/∂t₀·∂g/∂t₁ − ∂f/∂t₁·∂g/∂t₀ on raw coefficient vectors of equal degree n ≥ 1.
pub fn jacobian_coeffs<S: Scalar>(f: &[S], g: &[S]) -> Vec<S> {
    let n = f.len() - 1;
    let d0 = |h: &[S]| -> Vec<S> { (0..n).map(|i| h[i].clone() * h[i].lift((n - i) as i64)).collect() };
    let d1 = |h: &[S]| -> Vec<S> { (0..n).map(|i| h[i + 1].clone() * h[i].lift((i + 1) as i64)).collect() };
    let mul = |a: &[S], b: &[S]| -> Vec<S> {
        let mut out = vec![a[0].lift(0); a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            for (j, y) in b.iter().enumerate() {
                out[i + j] = out[i + j].clone() + x.clone() * y.clone();
            }
        }
        out
    };
    let p = mul(&d0(f), &d1(g));
    let q = mul(&d1(f), &d0(g));
    p.into_iter().zip(q).map(|(a, b)| a - b).collect()
}

/// Hessian of a cubic divided by 4, as a quadratic (3ac−b², 9ad−bc, 3bd−c²).
pub fn cubic_hessian<S: Scalar>(c: &[S]) -> [S; 3] {
    let (a, b, cc, d) = (&c[0], &c[1], &c[2], &c[3]);
    [
        a.lift(3) * a.clone() * cc.clone() - b.clone() * b.clone(),
        a.lift(9) * a.clone() * d.clone() - b.clone() * cc.clone(),
        a.lift(3) * b.clone() * d.clone() - cc.clone() * cc.clone(),
    ]
}

impl BinaryForm {
    pub fn new(field: &Field, coeffs: Vec<Fe>) -> Result<BinaryForm> {
        if coeffs.is_empty() {
            return Err(Error::Internal("binary form needs at least one coefficient".into()));
        }
        if coeffs.iter().any(|c| c.field() != *field) {
            return Err(Error::FieldMismatch);
        }
        Ok(BinaryForm { field: field.clone(), coeffs })
    }

    pub fn from_ints(field: &Field, c: &[i64]) -> BinaryForm {
        BinaryForm { field: field.clone(), coeffs: c.iter().map(|&x| field.int(x)).collect() }
    }

    pub fn zero(field: &Field, degree: usize) -> BinaryForm {
        BinaryForm { field: field.clone(), coeffs: vec![field.zero(); degree + 1] }
    }

    /// t₀^{n−i} t₁^i.
    pub fn monomial(field: &Field, degree: usize, i: usize) -> BinaryForm {
        let mut f = BinaryForm::zero(field, degree);
        f.coeffs[i] = field.one();
        f
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Fe] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn add(&self, other: &BinaryForm) -> Result<BinaryForm> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch(self.degree(), other.degree()));
        }
        let c = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect();
        Ok(BinaryForm { field: self.field.clone(), coeffs: c })
    }

    pub fn scale(&self, s: &Fe) -> BinaryForm {
        BinaryForm { field: self.field.clone(), coeffs: self.coeffs.iter().map(|a| a * s).collect() }
    }

    pub fn mul(&self, other: &BinaryForm) -> BinaryForm {
        let mut out = vec![self.field.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        BinaryForm { field: self.field.clone(), coeffs: out }
    }

    pub fn eval(&self, t0: &Fe, t1: &Fe) -> Fe {
        let n = self.degree();
        let mut acc = self.field.zero();
        for (i, a) in self.coeffs.iter().enumerate() {
            acc = &acc + &(&(a * &t0.pow((n - i) as u64)) * &t1.pow(i as u64));
        }
        acc
    }

    /// f(a t₀ + b t₁, c t₀ + d t₁).
    pub fn substitute(&self, a: &Fe, b: &Fe, c: &Fe, d: &Fe) -> BinaryForm {
        let n = self.degree();
        let l0 = BinaryForm { field: self.field.clone(), coeffs: vec![a.clone(), b.clone()] };
        let l1 = BinaryForm { field: self.field.clone(), coeffs: vec![c.clone(), d.clone()] };
        let mut p0 = vec![BinaryForm::from_ints(&self.field, &[1])];
        let mut p1 = vec![BinaryForm::from_ints(&self.field, &[1])];
        for k in 0..n {
            p0.push(p0[k].mul(&l0));
            p1.push(p1[k].mul(&l1));
        }
        let mut out = BinaryForm::zero(&self.field, n);
        for (i, ai) in self.coeffs.iter().enumerate() {
            if ai.is_zero() {
                continue;
            }
            let term = p0[n - i].mul(&p1[i]).scale(ai);
            out = out.add(&term).expect("same degree");
        }
        out
    }

    pub fn jacobian(&self, other: &BinaryForm) -> Result<BinaryForm> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch(self.degree(), other.degree()));
        }
        if self.degree() == 0 {
            return Err(Error::WrongDegree { expected: 1, actual: 0 });
        }
        Ok(BinaryForm { field: self.field.clone(), coeffs: jacobian_coeffs(&self.coeffs, &other.coeffs) })
    }

    /// Scale so that the first nonzero coefficient is 1.
    pub fn normalized(&self) -> BinaryForm {
        match self.coeffs.iter().find(|c| !c.is_zero()) {
            None => self.clone(),
            Some(l) => self.scale(&l.inv().unwrap()),
        }
    }

    /// Largest k with t₁^k dividing f.
    fn t1_valuation(&self) -> usize {
        self.coeffs.iter().position(|c| !c.is_zero()).unwrap_or(self.coeffs.len())
    }

    /// f(x, 1) as a univariate polynomial in x (ascending).
    fn dehomogenize(&self) -> UPoly {
        UPoly::new(&self.field, self.coeffs.iter().rev().cloned().collect())
    }

    /// Divides by another form; `None` if the division is not exact.
    pub fn div_exact(&self, d: &BinaryForm) -> Option<BinaryForm> {
        if d.is_zero() || d.degree() > self.degree() {
            return None;
        }
        if self.is_zero() {
            return Some(BinaryForm::zero(&self.field, self.degree() - d.degree()));
        }
        let (q, r) = self.dehomogenize().divrem(&d.dehomogenize());
        if !r.is_zero() {
            return None;
        }
        let qd = self.degree() - d.degree();
        let mut c: Vec<Fe> = q.coeffs().to_vec();
        if c.len() > qd + 1 {
            return None;
        }
        c.resize(qd + 1, self.field.zero());
        c.reverse();
        let q = BinaryForm { field: self.field.clone(), coeffs: c };
        if q.mul(d) == *self {
            Some(q)
        } else {
            None
        }
    }

    /// Greatest common divisor of two forms, normalized to leading coefficient 1.
    /// The gcd of f(x,1), g(x,1) carries every factor except powers of t₁,
    /// which are restored from the t₁-valuations.
    pub fn gcd(&self, other: &BinaryForm) -> Result<BinaryForm> {
        let (fz, gz) = (self.is_zero(), other.is_zero());
        if fz && gz {
            return Err(Error::BothZero);
        }
        if fz {
            return Ok(other.normalized());
        }
        if gz {
            return Ok(self.normalized());
        }
        let k = self.t1_valuation().min(other.t1_valuation());
        let u = self.dehomogenize().gcd(&other.dehomogenize());
        let du = u.degree().unwrap_or(0);
        let total = du + k;
        // homogenize: x^j -> t0^j t1^{du-j}, then multiply by t1^k
        let mut c = vec![self.field.zero(); total + 1];
        for (j, a) in u.coeffs().iter().enumerate() {
            c[total - j] = a.clone();
        }
        Ok(BinaryForm { field: self.field.clone(), coeffs: c }.normalized())
    }

    /// f = L³ over the algebraic closure; for char ∉ {2,3} iff the Hessian vanishes.
    pub fn is_perfect_cube(&self) -> Result<bool> {
        if self.degree() != 3 {
            return Err(Error::WrongDegree { expected: 3, actual: self.degree() });
        }
        if self.is_zero() {
            return Err(Error::ZeroForm);
        }
        Ok(cubic_hessian(&self.coeffs).iter().all(|h| h.is_zero()))
    }

    /// Multiset of roots (t₀:t₁) over the field with multiplicities; finite fields
    /// by scan, ℚ by rational root search.
    pub fn roots(&self) -> Result<Vec<(ProjPoint, usize)>> {
        if self.is_zero() {
            return Err(Error::ZeroForm);
        }
        let mut out = Vec::new();
        // t₁ = 0 is a root of multiplicity n − deg f(x,1)
        let u = self.dehomogenize();
        let d = u.degree().unwrap_or(0);
        if d < self.degree() {
            out.push((ProjPoint::infinity(&self.field), self.degree() - d));
        }
        if d > 0 {
            let rs = if self.field.is_finite() { u.roots_by_scan()? } else { u.rational_roots()? };
            for (x, m) in rs {
                out.push((ProjPoint::affine(&x), m));
            }
        }
        Ok(out)
    }
}

impl fmt::Display for BinaryForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

/// A point of P^n, stored with its first nonzero coordinate equal to 1.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ProjPoint {
    coords: Vec<Fe>,
}

impl ProjPoint {
    pub fn new(coords: Vec<Fe>) -> Result<ProjPoint> {
        let l = coords.iter().find(|c| !c.is_zero()).ok_or(Error::ZeroForm)?.inv().unwrap();
        Ok(ProjPoint { coords: coords.iter().map(|c| c * &l).collect() })
    }

    /// (x : 1).
    pub fn affine(x: &Fe) -> ProjPoint {
        ProjPoint::new(vec![x.clone(), x.one_like()]).unwrap()
    }

    /// (1 : 0).
    pub fn infinity(field: &Field) -> ProjPoint {
        ProjPoint { coords: vec![field.one(), field.zero()] }
    }

    pub fn coords(&self) -> &[Fe] {
        &self.coords
    }

    pub fn dim(&self) -> usize {
        self.coords.len() - 1
    }

    /// For points of P¹: x with (x:1), or `None` at (1:0).
    pub fn affine_value(&self) -> Option<Fe> {
        assert_eq!(self.coords.len(), 2);
        if self.coords[1].is_zero() {
            None
        } else {
            Some(&self.coords[0] / &self.coords[1])
        }
    }

    /// Over ℚ, the integer-primitive representative with positive first nonzero entry.
    pub fn primitive_integer(&self) -> Option<Vec<num_bigint::BigInt>> {
        use num_integer::Integer;
        use num_traits::{Signed, Zero};
        let rs: Vec<_> = self.coords.iter().map(|c| c.as_rational().cloned()).collect::<Option<_>>()?;
        let l = rs.iter().fold(num_bigint::BigInt::from(1), |l, r| l.lcm(r.denom()));
        let ints: Vec<_> = rs.iter().map(|r| r.numer() * (&l / r.denom())).collect();
        let g = ints.iter().fold(num_bigint::BigInt::zero(), |g, x| g.gcd(x));
        let mut out: Vec<_> = ints.into_iter().map(|x| x / &g).collect();
        if out.iter().find(|x| !x.is_zero()).is_some_and(|x| x.is_negative()) {
            out.iter_mut().for_each(|x| *x = -x.clone());
        }
        Some(out)
    }
}

impl fmt::Display for ProjPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = match self.primitive_integer() {
            Some(v) => v.iter().map(|x| x.to_string()).collect(),
            None => self.coords.iter().map(|c| c.to_string()).collect(),
        };
        write!(f, "({})", parts.join(":"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> Field {
        Field::Rational
    }

    #[test]
    fn jacobian_examples() {
        let f = BinaryForm::from_ints(&q(), &[1, 0, 0, 0]);
        let g = BinaryForm::from_ints(&q(), &[0, 0, 0, 1]);
        assert_eq!(f.jacobian(&g).unwrap(), BinaryForm::from_ints(&q(), &[0, 0, 9, 0, 0]));
        let h = BinaryForm::from_ints(&q(), &[1, -2, 5, 7]);
        assert!(h.jacobian(&h).unwrap().is_zero());
        let lin = BinaryForm::from_ints(&q(), &[1, 1]);
        assert_eq!(f.jacobian(&lin), Err(Error::DegreeMismatch(3, 1)));
    }

    #[test]
    fn gcd_examples() {
        let f = BinaryForm::from_ints(&q(), &[1, 0, 0, 0]);
        let g = BinaryForm::from_ints(&q(), &[0, 1, 0, 0]);
        assert_eq!(f.gcd(&g).unwrap(), BinaryForm::from_ints(&q(), &[1, 0, 0]));
        let a = BinaryForm::from_ints(&q(), &[0, 1, 0, 0]);
        let b = BinaryForm::from_ints(&q(), &[0, 0, 1, 0]);
        assert_eq!(a.gcd(&b).unwrap(), BinaryForm::from_ints(&q(), &[0, 1, 0]));
        let c = BinaryForm::from_ints(&q(), &[1, 0, 2, 0]);
        let d = BinaryForm::from_ints(&q(), &[0, 2, 0, 1]);
        assert_eq!(c.gcd(&d).unwrap(), BinaryForm::from_ints(&q(), &[1]));
        let z = BinaryForm::zero(&q(), 3);
        assert_eq!(z.gcd(&z), Err(Error::BothZero));
    }

    #[test]
    fn cube_test() {
        assert!(BinaryForm::from_ints(&q(), &[1, 0, 0, 0]).is_perfect_cube().unwrap());
        assert!(!BinaryForm::from_ints(&q(), &[0, 1, 0, 0]).is_perfect_cube().unwrap());
        assert!(BinaryForm::from_ints(&q(), &[1, 3, 3, 1]).is_perfect_cube().unwrap());
        assert_eq!(BinaryForm::zero(&q(), 3).is_perfect_cube(), Err(Error::ZeroForm));
        assert!(matches!(
            BinaryForm::from_ints(&q(), &[1, 0]).is_perfect_cube(),
            Err(Error::WrongDegree { .. })
        ));
    }

    #[test]
    fn substitution_matches_evaluation() {
        let f = Field::prime(13).unwrap();
        let h = BinaryForm::from_ints(&f, &[2, -1, 0, 5]);
        let (a, b, c, d) = (f.int(3), f.int(1), f.int(-2), f.int(7));
        let s = h.substitute(&a, &b, &c, &d);
        for (x, y) in [(1, 0), (0, 1), (2, 5), (11, 4)] {
            let (x, y) = (f.int(x), f.int(y));
            let lhs = s.eval(&x, &y);
            let rhs = h.eval(&(&(&a * &x) + &(&b * &y)), &(&(&c * &x) + &(&d * &y)));
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn roots_include_infinity() {
        let g = BinaryForm::from_ints(&q(), &[0, 1, -2, 0]); // t0 t1 (t0 - 2 t1)
        let r = g.roots().unwrap();
        assert_eq!(r.len(), 3);
        assert!(r.contains(&(ProjPoint::infinity(&q()), 1)));
        assert!(r.contains(&(ProjPoint::affine(&q().int(0)), 1)));
        assert!(r.contains(&(ProjPoint::affine(&q().int(2)), 1)));
    }

    #[test]
    fn projective_points() {
        let p = ProjPoint::new(vec![q().int(0), q().int(4), q().int(-2)]).unwrap();
        assert_eq!(p.coords()[1], q().int(1));
        assert_eq!(ProjPoint::new(p.coords().to_vec()).unwrap(), p);
        assert_eq!(p.to_string(), "(0:2:-1)");
        assert!(ProjPoint::new(vec![q().int(0), q().int(0)]).is_err());
    }
}
