//! Ring abstraction shared by field elements and symbolic polynomials, so the
//! invariant formulas can be evaluated both pointwise and with indeterminates.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::field::Fe;

pub trait Scalar:
    Clone + PartialEq + Add<Output = Self> + Sub<Output = Self> + Mul<Output = Self> + Neg<Output = Self>
{
    /// The integer `n` in the same ring as `self`.
    fn lift(&self, n: i64) -> Self;
    /// Exact division by a nonzero integer (which is a unit: char ∉ {2,3}).
    fn div_int(&self, n: i64) -> Self;
    fn is_zero_s(&self) -> bool;
}

impl Scalar for Fe {
    fn lift(&self, n: i64) -> Fe {
        self.int_like(n)
    }
    fn div_int(&self, n: i64) -> Fe {
        self / &self.int_like(n)
    }
    fn is_zero_s(&self) -> bool {
        self.is_zero()
    }
}

/// Sparse multivariate polynomial over ℚ. Exponent vectors all have length `nvars`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MPoly {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, BigRational>,
}

impl MPoly {
    pub fn zero(nvars: usize) -> MPoly {
        MPoly { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: BigRational) -> MPoly {
        let mut p = MPoly::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(vec![0; nvars], c);
        }
        p
    }

    pub fn int(nvars: usize, n: i64) -> MPoly {
        MPoly::constant(nvars, BigRational::from_integer(BigInt::from(n)))
    }

    /// The `i`-th indeterminate.
    pub fn var(nvars: usize, i: usize) -> MPoly {
        let mut e = vec![0; nvars];
        e[i] = 1;
        let mut p = MPoly::zero(nvars);
        p.terms.insert(e, BigRational::one());
        p
    }

    /// `n` fresh variables.
    pub fn vars(n: usize) -> Vec<MPoly> {
        (0..n).map(|i| MPoly::var(n, i)).collect()
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &BigRational)> {
        self.terms.iter()
    }

    pub fn scale(&self, c: &BigRational) -> MPoly {
        if c.is_zero() {
            return MPoly::zero(self.nvars);
        }
        MPoly { nvars: self.nvars, terms: self.terms.iter().map(|(e, v)| (e.clone(), v * c)).collect() }
    }

    pub fn pow(&self, k: u32) -> MPoly {
        let mut r = MPoly::int(self.nvars, 1);
        for _ in 0..k {
            r = r * self.clone();
        }
        r
    }

    /// If `self = c * other` for a rational constant `c`, returns `c`.
    pub fn ratio_to(&self, other: &MPoly) -> Option<BigRational> {
        let (e, v) = other.terms.iter().next()?;
        let c = self.terms.get(e).cloned().unwrap_or_else(BigRational::zero) / v;
        if *self == other.scale(&c) {
            Some(c)
        } else {
            None
        }
    }

    fn add_term(&mut self, e: Vec<u32>, c: BigRational) {
        let entry = self.terms.entry(e.clone()).or_insert_with(BigRational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&e);
        }
    }
}

impl Add for MPoly {
    type Output = MPoly;
    fn add(mut self, rhs: MPoly) -> MPoly {
        assert_eq!(self.nvars, rhs.nvars);
        for (e, c) in rhs.terms {
            self.add_term(e, c);
        }
        self
    }
}

impl Neg for MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        MPoly { nvars: self.nvars, terms: self.terms.into_iter().map(|(e, c)| (e, -c)).collect() }
    }
}

impl Sub for MPoly {
    type Output = MPoly;
    fn sub(self, rhs: MPoly) -> MPoly {
        self + (-rhs)
    }
}

impl Mul for MPoly {
    type Output = MPoly;
    fn mul(self, rhs: MPoly) -> MPoly {
        assert_eq!(self.nvars, rhs.nvars);
        let mut out: BTreeMap<Vec<u32>, BigRational> = BTreeMap::new();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                let e: Vec<u32> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                *out.entry(e).or_insert_with(BigRational::zero) += c1 * c2;
            }
        }
        out.retain(|_, v| !v.is_zero());
        MPoly { nvars: self.nvars, terms: out }
    }
}

impl Scalar for MPoly {
    fn lift(&self, n: i64) -> MPoly {
        MPoly::int(self.nvars, n)
    }
    fn div_int(&self, n: i64) -> MPoly {
        self.scale(&BigRational::new(BigInt::one(), BigInt::from(n)))
    }
    fn is_zero_s(&self) -> bool {
        self.is_zero()
    }
}

impl fmt::Display for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms.iter().rev() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({c})")?;
            for (i, k) in e.iter().enumerate() {
                match k {
                    0 => {}
                    1 => write!(f, "*x{i}")?,
                    _ => write!(f, "*x{i}^{k}")?,
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomial_square() {
        let v = MPoly::vars(2);
        let (x, y) = (v[0].clone(), v[1].clone());
        let lhs = (x.clone() + y.clone()).pow(2);
        let rhs = x.clone() * x.clone() + MPoly::int(2, 2) * x.clone() * y.clone() + y.clone() * y;
        assert_eq!(lhs, rhs);
        assert!((lhs - rhs).is_zero());
    }

    #[test]
    fn ratio() {
        let v = MPoly::vars(1);
        let p = v[0].clone() + MPoly::int(1, 1);
        let q = p.clone() * MPoly::int(1, -3);
        assert_eq!(q.ratio_to(&p), Some(BigRational::from_integer((-3).into())));
        assert_eq!(v[0].ratio_to(&p), None);
    }
}
