//! Dense univariate polynomials over a [`Field`], coefficients in ascending degree.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::field::{Fe, Field};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UPoly {
    field: Field,
    c: Vec<Fe>,
}

impl UPoly {
    pub fn new(field: &Field, mut c: Vec<Fe>) -> UPoly {
        while c.last().is_some_and(|x| x.is_zero()) {
            c.pop();
        }
        UPoly { field: field.clone(), c }
    }

    pub fn zero(field: &Field) -> UPoly {
        UPoly { field: field.clone(), c: vec![] }
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn coeffs(&self) -> &[Fe] {
        &self.c
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.c.len().checked_sub(1)
    }

    pub fn lead(&self) -> Option<&Fe> {
        self.c.last()
    }

    pub fn eval(&self, x: &Fe) -> Fe {
        let mut acc = self.field.zero();
        for a in self.c.iter().rev() {
            acc = &(&acc * x) + a;
        }
        acc
    }

    pub fn monic(&self) -> UPoly {
        match self.lead() {
            None => self.clone(),
            Some(l) => {
                let li = l.inv().expect("nonzero lead");
                UPoly::new(&self.field, self.c.iter().map(|a| a * &li).collect())
            }
        }
    }

    pub fn mul(&self, other: &UPoly) -> UPoly {
        if self.is_zero() || other.is_zero() {
            return UPoly::zero(&self.field);
        }
        let mut out = vec![self.field.zero(); self.c.len() + other.c.len() - 1];
        for (i, a) in self.c.iter().enumerate() {
            for (j, b) in other.c.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        UPoly::new(&self.field, out)
    }

    pub fn divrem(&self, d: &UPoly) -> (UPoly, UPoly) {
        let dd = d.degree().expect("division by zero polynomial");
        let li = d.lead().unwrap().inv().unwrap();
        let mut r = self.c.clone();
        if r.len() <= dd {
            return (UPoly::zero(&self.field), self.clone());
        }
        let mut q = vec![self.field.zero(); r.len() - dd];
        for k in (0..q.len()).rev() {
            let coef = &r[k + dd] * &li;
            if !coef.is_zero() {
                for (j, b) in d.c.iter().enumerate() {
                    r[k + j] = &r[k + j] - &(&coef * b);
                }
            }
            q[k] = coef;
        }
        r.truncate(dd);
        (UPoly::new(&self.field, q), UPoly::new(&self.field, r))
    }

    /// Monic gcd; gcd(0, 0) = 0.
    pub fn gcd(&self, other: &UPoly) -> UPoly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.divrem(&b).1;
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Multiplicity of `x` as a root (0 if not a root). Panics on the zero polynomial.
    pub fn root_multiplicity(&self, x: &Fe) -> usize {
        assert!(!self.is_zero());
        let lin = UPoly::new(&self.field, vec![-x, self.field.one()]);
        let mut p = self.clone();
        let mut m = 0;
        loop {
            let (q, r) = p.divrem(&lin);
            if !r.is_zero() {
                return m;
            }
            m += 1;
            p = q;
        }
    }

    /// Roots with multiplicity, by scanning a finite field.
    pub fn roots_by_scan(&self) -> Result<Vec<(Fe, usize)>> {
        let elems = self.field.elements()?;
        Ok(elems
            .into_iter()
            .filter(|x| self.eval(x).is_zero())
            .map(|x| {
                let m = self.root_multiplicity(&x);
                (x, m)
            })
            .collect())
    }

    /// Rational roots with multiplicity, via the rational root test on the
    /// primitive integer multiple. Only for polynomials over ℚ.
    pub fn rational_roots(&self) -> Result<Vec<(Fe, usize)>> {
        if self.field != Field::Rational {
            return Err(Error::Unsupported("rational root search outside Q".into()));
        }
        let mut out = Vec::new();
        if self.is_zero() {
            return Ok(out);
        }
        // strip x^k
        let k = self.c.iter().position(|a| !a.is_zero()).unwrap();
        if k > 0 {
            out.push((self.field.zero(), k));
        }
        let ints = primitive_integer_coeffs(&self.c[k..]);
        if ints.len() <= 1 {
            return Ok(out);
        }
        let a0 = ints[0].abs();
        let an = ints.last().unwrap().abs();
        let shifted = UPoly::new(&self.field, self.c[k..].to_vec());
        let mut cands: Vec<BigRational> = Vec::new();
        for p in divisors(&a0) {
            for q in divisors(&an) {
                for s in [BigInt::one(), -BigInt::one()] {
                    let r = BigRational::new(&p * &s, q.clone());
                    if !cands.contains(&r) {
                        cands.push(r);
                    }
                }
            }
        }
        cands.sort();
        for r in cands {
            let x = Fe::Q(r);
            if shifted.eval(&x).is_zero() {
                let m = shifted.root_multiplicity(&x);
                out.push((x, m));
            }
        }
        out.sort();
        Ok(out)
    }
}

fn primitive_integer_coeffs(c: &[Fe]) -> Vec<BigInt> {
    let mut l = BigInt::one();
    for a in c {
        l = l.lcm(a.as_rational().unwrap().denom());
    }
    let ints: Vec<BigInt> = c
        .iter()
        .map(|a| {
            let r = a.as_rational().unwrap();
            r.numer() * (&l / r.denom())
        })
        .collect();
    let g = ints.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
    ints.into_iter().map(|x| x / &g).collect()
}

/// Positive divisors of a nonzero integer by trial division.
fn divisors(n: &BigInt) -> Vec<BigInt> {
    let n = n.abs();
    let mut primes: Vec<(BigInt, u32)> = Vec::new();
    let mut m = n.clone();
    let mut p = BigInt::from(2);
    while &p * &p <= m {
        let mut e = 0;
        while (&m % &p).is_zero() {
            m /= &p;
            e += 1;
        }
        if e > 0 {
            primes.push((p.clone(), e));
        }
        p += 1;
        if p.to_u64().is_some_and(|v| v > 10_000_000) {
            break;
        }
    }
    if m > BigInt::one() {
        primes.push((m, 1));
    }
    let mut divs = vec![BigInt::one()];
    for (p, e) in primes {
        let mut next = Vec::new();
        for d in &divs {
            let mut pk = BigInt::one();
            for _ in 0..=e {
                next.push(d * &pk);
                pk *= &p;
            }
        }
        divs = next;
    }
    divs.sort();
    divs
}

#[cfg(test)]
mod tests {
    use super::*;

    fn qp(c: &[i64]) -> UPoly {
        let q = Field::Rational;
        UPoly::new(&q, c.iter().map(|&x| q.int(x)).collect())
    }

    #[test]
    fn gcd_and_division() {
        // (x-1)(x+2) and (x-1)(x-3)
        let a = qp(&[-2, 1, 1]);
        let b = qp(&[3, -4, 1]);
        assert_eq!(a.gcd(&b), qp(&[-1, 1]));
        let (q, r) = a.mul(&b).divrem(&a);
        assert_eq!(q, b);
        assert!(r.is_zero());
    }

    #[test]
    fn rational_roots_with_multiplicity() {
        // x^2 (2x - 1)^2 (x + 3)
        let p = qp(&[0, 0, 1]).mul(&qp(&[-1, 2])).mul(&qp(&[-1, 2])).mul(&qp(&[3, 1]));
        let q = Field::Rational;
        let roots = p.rational_roots().unwrap();
        assert_eq!(roots, vec![(q.int(-3), 1), (q.int(0), 2), (q.ratio(1, 2), 2)]);
    }

    #[test]
    fn finite_scan() {
        let f = Field::prime(13).unwrap();
        // x^2 + 1 has roots 5 and 8 mod 13
        let p = UPoly::new(&f, vec![f.int(1), f.int(0), f.int(1)]);
        let r: Vec<Fe> = p.roots_by_scan().unwrap().into_iter().map(|(x, _)| x).collect();
        assert_eq!(r, vec![f.int(5), f.int(8)]);
    }

    #[test]
    fn divisor_list() {
        let d: Vec<i64> = divisors(&BigInt::from(12)).iter().map(|x| x.to_i64().unwrap()).collect();
        assert_eq!(d, vec![1, 2, 3, 4, 6, 12]);
    }
}
