//! Exact scalars: ℚ, F_p and quadratic extensions of either.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::Rng;

use crate::error::{Error, Result};

/// Deterministic Miller-Rabin for 64-bit inputs.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for sp in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n.is_multiple_of(sp) {
            return n == sp;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

#[inline]
fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn pow_mod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1 % p;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(r, a, p);
        }
        a = mul_mod(a, a, p);
        e >>= 1;
    }
    r
}

fn inv_mod(a: u64, p: u64) -> u64 {
    assert!(!a.is_multiple_of(p), "inverse of zero");
    pow_mod(a, p - 2, p)
}

/// Tonelli-Shanks; returns some root when `a` is a square mod the odd prime `p`.
fn sqrt_mod(a: u64, p: u64) -> Option<u64> {
    let a = a % p;
    if a == 0 {
        return Some(0);
    }
    if pow_mod(a, (p - 1) / 2, p) != 1 {
        return None;
    }
    if p % 4 == 3 {
        return Some(pow_mod(a, (p + 1) / 4, p));
    }
    let mut q = p - 1;
    let mut s = 0u32;
    while q.is_multiple_of(2) {
        q /= 2;
        s += 1;
    }
    let mut z = 2;
    while pow_mod(z, (p - 1) / 2, p) != p - 1 {
        z += 1;
    }
    let mut m = s;
    let mut c = pow_mod(z, q, p);
    let mut t = pow_mod(a, q, p);
    let mut r = pow_mod(a, q.div_ceil(2), p);
    while t != 1 {
        let mut i = 0;
        let mut tt = t;
        while tt != 1 {
            tt = mul_mod(tt, tt, p);
            i += 1;
        }
        let b = pow_mod(c, 1 << (m - i - 1), p);
        m = i;
        c = mul_mod(b, b, p);
        t = mul_mod(t, c, p);
        r = mul_mod(r, b, p);
    }
    Some(r)
}

fn bigint_sqrt_exact(n: &BigInt) -> Option<BigInt> {
    if n.is_negative() {
        return None;
    }
    let r = n.sqrt();
    if &r * &r == *n {
        Some(r)
    } else {
        None
    }
}

/// Field descriptor.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Field {
    Rational,
    Prime(u64),
    Quadratic(Arc<QuadraticExt>),
}

/// `base(s)` with `s² = d`.
#[derive(Debug, PartialEq, Eq, Hash)]
pub struct QuadraticExt {
    pub base: Field,
    pub d: Fe,
}

/// A field element. Arithmetic between elements of different fields panics;
/// callers that take user input check [`Fe::field`] first.
#[derive(Clone, Debug)]
pub enum Fe {
    Q(BigRational),
    Fp { v: u64, p: u64 },
    Ext { ext: Arc<QuadraticExt>, a: Box<Fe>, b: Box<Fe> },
}

impl Field {
    pub fn rational() -> Field {
        Field::Rational
    }

    pub fn prime(p: u64) -> Result<Field> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if p == 2 || p == 3 {
            return Err(Error::CharTwoOrThree(p));
        }
        Ok(Field::Prime(p))
    }

    pub fn adjoin_sqrt(&self, d: Fe) -> Result<Field> {
        if let Field::Quadratic(_) = self {
            return Err(Error::Unsupported("towers of quadratic extensions".into()));
        }
        if d.field() != *self {
            return Err(Error::FieldMismatch);
        }
        if d.sqrt().is_some() {
            return Err(Error::SquareDiscriminant(d.to_string()));
        }
        Ok(Field::Quadratic(Arc::new(QuadraticExt { base: self.clone(), d })))
    }

    /// Parses `q`, `fp:<p>`, `q(sqrt:<d>)` or `fp:<p>(sqrt:<d>)`.
    pub fn parse(spec: &str) -> Result<Field> {
        let s: String = spec.chars().filter(|c| !c.is_whitespace()).collect();
        let bad = || Error::BadFieldSpec(spec.to_string());
        let (head, ext) = match s.find('(') {
            Some(i) => {
                let rest = &s[i..];
                let inner = rest
                    .strip_prefix("(sqrt:")
                    .and_then(|r| r.strip_suffix(')'))
                    .ok_or_else(bad)?;
                (&s[..i], Some(inner.to_string()))
            }
            None => (s.as_str(), None),
        };
        let base = if head == "q" || head == "Q" {
            Field::Rational
        } else if let Some(p) = head.strip_prefix("fp:") {
            let p: u64 = p.parse().map_err(|_| bad())?;
            Field::prime(p)?
        } else {
            return Err(bad());
        };
        match ext {
            None => Ok(base),
            Some(d) => {
                let d = base.parse_elem(&d).map_err(|_| bad())?;
                base.adjoin_sqrt(d)
            }
        }
    }

    pub fn spec(&self) -> String {
        match self {
            Field::Rational => "q".into(),
            Field::Prime(p) => format!("fp:{p}"),
            Field::Quadratic(e) => format!("{}(sqrt:{})", e.base.spec(), e.d),
        }
    }

    pub fn base(&self) -> Field {
        match self {
            Field::Quadratic(e) => e.base.clone(),
            f => f.clone(),
        }
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            Field::Rational => 0,
            Field::Prime(p) => *p,
            Field::Quadratic(e) => e.base.characteristic(),
        }
    }

    /// Number of elements, or `None` for infinite fields.
    pub fn order(&self) -> Option<u64> {
        match self {
            Field::Rational => None,
            Field::Prime(p) => Some(*p),
            Field::Quadratic(e) => e.base.order().map(|q| q * q),
        }
    }

    pub fn is_finite(&self) -> bool {
        self.order().is_some()
    }

    pub fn zero(&self) -> Fe {
        self.int(0)
    }

    pub fn one(&self) -> Fe {
        self.int(1)
    }

    pub fn int(&self, n: i64) -> Fe {
        match self {
            Field::Rational => Fe::Q(BigRational::from_integer(BigInt::from(n))),
            Field::Prime(p) => Fe::Fp { v: n.rem_euclid(*p as i64) as u64, p: *p },
            Field::Quadratic(e) => Fe::Ext {
                ext: e.clone(),
                a: Box::new(e.base.int(n)),
                b: Box::new(e.base.zero()),
            },
        }
    }

    pub fn ratio(&self, n: i64, d: i64) -> Fe {
        self.int(n) / self.int(d)
    }

    /// `s`, the adjoined square root, for quadratic extensions.
    pub fn generator(&self) -> Option<Fe> {
        match self {
            Field::Quadratic(e) => Some(Fe::Ext {
                ext: e.clone(),
                a: Box::new(e.base.zero()),
                b: Box::new(e.base.one()),
            }),
            _ => None,
        }
    }

    /// Maps an element of the base field into this field.
    pub fn embed(&self, x: &Fe) -> Result<Fe> {
        let xf = x.field();
        if xf == *self {
            return Ok(x.clone());
        }
        match self {
            Field::Quadratic(e) if e.base == xf => Ok(Fe::Ext {
                ext: e.clone(),
                a: Box::new(x.clone()),
                b: Box::new(e.base.zero()),
            }),
            _ => Err(Error::FieldMismatch),
        }
    }

    /// Element of a quadratic extension from its two base coordinates.
    pub fn ext_elem(&self, a: Fe, b: Fe) -> Result<Fe> {
        match self {
            Field::Quadratic(e) if a.field() == e.base && b.field() == e.base => {
                Ok(Fe::Ext { ext: e.clone(), a: Box::new(a), b: Box::new(b) })
            }
            _ => Err(Error::FieldMismatch),
        }
    }

    /// All elements of a finite field, in a fixed order.
    pub fn elements(&self) -> Result<Vec<Fe>> {
        match self {
            Field::Rational => Err(Error::InfiniteField),
            Field::Prime(p) => Ok((0..*p).map(|v| Fe::Fp { v, p: *p }).collect()),
            Field::Quadratic(e) => {
                let base = e.base.elements()?;
                let mut out = Vec::with_capacity(base.len() * base.len());
                for b in &base {
                    for a in &base {
                        out.push(Fe::Ext {
                            ext: e.clone(),
                            a: Box::new(a.clone()),
                            b: Box::new(b.clone()),
                        });
                    }
                }
                Ok(out)
            }
        }
    }

    /// Random element; over ℚ small numerators and denominators.
    pub fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> Fe {
        match self {
            Field::Rational => {
                let n: i64 = rng.gen_range(-20..=20);
                let d: i64 = rng.gen_range(1..=9);
                self.ratio(n, d)
            }
            Field::Prime(p) => Fe::Fp { v: rng.gen_range(0..*p), p: *p },
            Field::Quadratic(e) => Fe::Ext {
                ext: e.clone(),
                a: Box::new(e.base.random(rng)),
                b: Box::new(e.base.random(rng)),
            },
        }
    }

    pub fn random_nonzero<R: Rng + ?Sized>(&self, rng: &mut R) -> Fe {
        loop {
            let x = self.random(rng);
            if !x.is_zero() {
                return x;
            }
        }
    }

    /// Parses `a/b`, `a`, or over an extension `a+b*s` (either part optional).
    pub fn parse_elem(&self, text: &str) -> Result<Fe> {
        let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        let bad = || Error::BadElement(text.to_string());
        if s.is_empty() {
            return Err(bad());
        }
        match self {
            Field::Rational => {
                let (n, d) = match s.split_once('/') {
                    Some((n, d)) => (n, d),
                    None => (s.as_str(), "1"),
                };
                let n: BigInt = n.parse().map_err(|_| bad())?;
                let d: BigInt = d.parse().map_err(|_| bad())?;
                if d.is_zero() {
                    return Err(bad());
                }
                Ok(Fe::Q(BigRational::new(n, d)))
            }
            Field::Prime(p) => {
                let (n, d) = match s.split_once('/') {
                    Some((n, d)) => (n, d),
                    None => (s.as_str(), "1"),
                };
                let n: BigInt = n.parse().map_err(|_| bad())?;
                let d: BigInt = d.parse().map_err(|_| bad())?;
                let pb = BigInt::from(*p);
                let nv = n.mod_floor(&pb).to_u64().ok_or_else(bad)?;
                let dv = d.mod_floor(&pb).to_u64().ok_or_else(bad)?;
                if dv == 0 {
                    return Err(bad());
                }
                Ok(Fe::Fp { v: mul_mod(nv, inv_mod(dv, *p), *p), p: *p })
            }
            Field::Quadratic(e) => {
                // split into signed terms
                let mut terms: Vec<String> = Vec::new();
                let mut cur = String::new();
                for (i, c) in s.chars().enumerate() {
                    if (c == '+' || c == '-') && i > 0 && !cur.is_empty() {
                        terms.push(std::mem::take(&mut cur));
                    }
                    cur.push(c);
                }
                terms.push(cur);
                let mut a = e.base.zero();
                let mut b = e.base.zero();
                for t in terms {
                    let t = t.strip_prefix('+').unwrap_or(&t).to_string();
                    if let Some(coef) = t.strip_suffix("*s") {
                        b = b + e.base.parse_elem(coef)?;
                    } else if let Some(sign) = t.strip_suffix('s') {
                        let c = match sign {
                            "" => e.base.one(),
                            "-" => -e.base.one(),
                            _ => return Err(bad()),
                        };
                        b = b + c;
                    } else {
                        a = a + e.base.parse_elem(&t)?;
                    }
                }
                Ok(Fe::Ext { ext: e.clone(), a: Box::new(a), b: Box::new(b) })
            }
        }
    }

    /// A fixed quadratic extension in which every element of this field is a square.
    /// For F_p this is F_p(√n) with n the least non-residue; ℚ has none.
    pub fn designated_extension(&self) -> Result<Field> {
        match self {
            Field::Prime(p) => {
                let mut n = 2;
                while pow_mod(n, (p - 1) / 2, *p) == 1 {
                    n += 1;
                }
                self.adjoin_sqrt(self.int(n as i64))
            }
            Field::Quadratic(_) => Ok(self.clone()),
            Field::Rational => Err(Error::InfiniteField),
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.spec())
    }
}

impl Fe {
    pub fn field(&self) -> Field {
        match self {
            Fe::Q(_) => Field::Rational,
            Fe::Fp { p, .. } => Field::Prime(*p),
            Fe::Ext { ext, .. } => Field::Quadratic(ext.clone()),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Fe::Q(x) => x.is_zero(),
            Fe::Fp { v, .. } => *v == 0,
            Fe::Ext { a, b, .. } => a.is_zero() && b.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Fe::Q(x) => x.is_one(),
            Fe::Fp { v, .. } => *v == 1,
            Fe::Ext { a, b, .. } => a.is_one() && b.is_zero(),
        }
    }

    pub fn zero_like(&self) -> Fe {
        self.field().zero()
    }

    pub fn one_like(&self) -> Fe {
        self.field().one()
    }

    pub fn int_like(&self, n: i64) -> Fe {
        self.field().int(n)
    }

    pub fn inv(&self) -> Option<Fe> {
        if self.is_zero() {
            return None;
        }
        Some(match self {
            Fe::Q(x) => Fe::Q(x.recip()),
            Fe::Fp { v, p } => Fe::Fp { v: inv_mod(*v, *p), p: *p },
            Fe::Ext { ext, a, b } => {
                // (a + b s)^{-1} = (a - b s) / (a² - d b²)
                let n = self.norm();
                let ni = n.inv().expect("norm of a nonzero element is nonzero");
                Fe::Ext { ext: ext.clone(), a: Box::new(&**a * &ni), b: Box::new(-(&**b * &ni)) }
            }
        })
    }

    /// Norm to the base field; the identity on ℚ and F_p.
    pub fn norm(&self) -> Fe {
        match self {
            Fe::Ext { ext, a, b } => &(&**a * &**a) - &(&ext.d * &(&**b * &**b)),
            x => x.clone(),
        }
    }

    /// Nontrivial automorphism of a quadratic extension; identity otherwise.
    pub fn conj(&self) -> Fe {
        match self {
            Fe::Ext { ext, a, b } => Fe::Ext { ext: ext.clone(), a: a.clone(), b: Box::new(-&**b) },
            x => x.clone(),
        }
    }

    pub fn pow(&self, mut e: u64) -> Fe {
        let mut r = self.one_like();
        let mut b = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                r = &r * &b;
            }
            b = &b * &b;
            e >>= 1;
        }
        r
    }

    /// Base-field coordinates `(a, b)` of `a + b s`; `(self, 0)` outside extensions.
    pub fn coords(&self) -> (Fe, Fe) {
        match self {
            Fe::Ext { a, b, .. } => ((**a).clone(), (**b).clone()),
            x => (x.clone(), x.zero_like()),
        }
    }

    /// The element lies in the base field (always true outside extensions).
    pub fn is_base(&self) -> bool {
        match self {
            Fe::Ext { b, .. } => b.is_zero(),
            _ => true,
        }
    }

    /// Rational value, if the element is in ℚ.
    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            Fe::Q(x) => Some(x),
            _ => None,
        }
    }

    /// Integer lift: ℚ integers as themselves, F_p residues in (-p/2, p/2].
    pub fn to_symmetric_i64(&self) -> Option<i64> {
        match self {
            Fe::Q(x) if x.is_integer() => x.to_integer().to_i64(),
            Fe::Fp { v, p } => {
                let v = *v as i64;
                let p = *p as i64;
                Some(if v > p / 2 { v - p } else { v })
            }
            Fe::Ext { a, b, .. } if b.is_zero() => a.to_symmetric_i64(),
            _ => None,
        }
    }

    /// Sign normalization used to pick square roots: true for the
    /// "small" representative of `{x, -x}` (0 counts as positive).
    pub fn is_canonical_sign(&self) -> bool {
        match self {
            Fe::Q(x) => !x.is_negative(),
            Fe::Fp { v, p } => *v <= (p - 1) / 2,
            Fe::Ext { a, b, .. } => {
                if !a.is_zero() {
                    a.is_canonical_sign()
                } else {
                    b.is_canonical_sign()
                }
            }
        }
    }

    /// Deterministic square root: the root with canonical sign, and
    /// `s` itself for `d` in `base(√d)`.
    pub fn sqrt(&self) -> Option<Fe> {
        let r = self.sqrt_any()?;
        if let Fe::Ext { ext, .. } = self {
            if let Some(g) = self.field().generator() {
                if self.is_base() && self.coords().0 == ext.d {
                    return Some(g);
                }
            }
        }
        Some(if r.is_canonical_sign() { r } else { -r })
    }

    fn sqrt_any(&self) -> Option<Fe> {
        match self {
            Fe::Q(x) => {
                let n = bigint_sqrt_exact(x.numer())?;
                let d = bigint_sqrt_exact(x.denom())?;
                Some(Fe::Q(BigRational::new(n, d)))
            }
            Fe::Fp { v, p } => sqrt_mod(*v, *p).map(|r| Fe::Fp { v: r, p: *p }),
            Fe::Ext { ext, a, b } => {
                let f = self.field();
                let mk = |x: Fe, y: Fe| f.ext_elem(x, y).expect("same base");
                if b.is_zero() {
                    if let Some(r) = a.sqrt_any() {
                        return Some(mk(r, a.zero_like()));
                    }
                    // a = d c²  =>  sqrt(a) = c s
                    let c = (&**a / &ext.d).sqrt_any()?;
                    return Some(mk(a.zero_like(), c));
                }
                // (x + y s)² = a + b s: x² + d y² = a, 2xy = b.
                let n = self.norm().sqrt_any()?;
                let two = a.int_like(2);
                for sgn in [n.clone(), -n] {
                    let x2 = &(&**a + &sgn) / &two;
                    if let Some(x) = x2.sqrt_any() {
                        if x.is_zero() {
                            continue;
                        }
                        let y = &**b / &(&two * &x);
                        let cand = mk(x, y);
                        if &cand * &cand == *self {
                            return Some(cand);
                        }
                    }
                }
                None
            }
        }
    }

    fn rank(&self) -> u8 {
        match self {
            Fe::Q(_) => 0,
            Fe::Fp { .. } => 1,
            Fe::Ext { .. } => 2,
        }
    }
}

fn check_same(x: &Fe, y: &Fe) {
    match (x, y) {
        (Fe::Fp { p, .. }, Fe::Fp { p: q, .. }) if p == q => {}
        (Fe::Q(_), Fe::Q(_)) => {}
        (Fe::Ext { ext: e1, .. }, Fe::Ext { ext: e2, .. }) if Arc::ptr_eq(e1, e2) || e1 == e2 => {}
        _ => panic!("field mismatch: {} vs {}", x.field(), y.field()),
    }
}

impl PartialEq for Fe {
    fn eq(&self, other: &Fe) -> bool {
        match (self, other) {
            (Fe::Q(x), Fe::Q(y)) => x == y,
            (Fe::Fp { v, p }, Fe::Fp { v: w, p: q }) => v == w && p == q,
            (Fe::Ext { ext: e1, a: a1, b: b1 }, Fe::Ext { ext: e2, a: a2, b: b2 }) => {
                (Arc::ptr_eq(e1, e2) || e1 == e2) && a1 == a2 && b1 == b2
            }
            _ => false,
        }
    }
}
impl Eq for Fe {}

impl Hash for Fe {
    fn hash<H: Hasher>(&self, state: &mut H) {
        match self {
            Fe::Q(x) => {
                0u8.hash(state);
                x.hash(state)
            }
            Fe::Fp { v, p } => {
                1u8.hash(state);
                v.hash(state);
                p.hash(state)
            }
            Fe::Ext { a, b, .. } => {
                2u8.hash(state);
                a.hash(state);
                b.hash(state)
            }
        }
    }
}

impl PartialOrd for Fe {
    fn partial_cmp(&self, other: &Fe) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Total order for canonical listings: numeric on ℚ, by residue on F_p,
/// lexicographic on (a, b) over extensions.
impl Ord for Fe {
    fn cmp(&self, other: &Fe) -> Ordering {
        match (self, other) {
            (Fe::Q(x), Fe::Q(y)) => x.cmp(y),
            (Fe::Fp { v, .. }, Fe::Fp { v: w, .. }) => v.cmp(w),
            (Fe::Ext { a: a1, b: b1, .. }, Fe::Ext { a: a2, b: b2, .. }) => {
                a1.cmp(a2).then_with(|| b1.cmp(b2))
            }
            _ => self.rank().cmp(&other.rank()),
        }
    }
}

impl fmt::Display for Fe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Fe::Q(x) => write!(f, "{x}"),
            Fe::Fp { v, .. } => write!(f, "{v}"),
            Fe::Ext { a, b, .. } => {
                if b.is_zero() {
                    write!(f, "{a}")
                } else if a.is_zero() {
                    write!(f, "{b}*s")
                } else {
                    let bs = b.to_string();
                    if let Some(neg) = bs.strip_prefix('-') {
                        write!(f, "{a}-{neg}*s")
                    } else {
                        write!(f, "{a}+{bs}*s")
                    }
                }
            }
        }
    }
}

fn add(x: &Fe, y: &Fe) -> Fe {
    check_same(x, y);
    match (x, y) {
        (Fe::Q(a), Fe::Q(b)) => Fe::Q(a + b),
        (Fe::Fp { v, p }, Fe::Fp { v: w, .. }) => Fe::Fp { v: (v + w) % p, p: *p },
        (Fe::Ext { ext, a, b }, Fe::Ext { a: c, b: d, .. }) => {
            Fe::Ext { ext: ext.clone(), a: Box::new(add(a, c)), b: Box::new(add(b, d)) }
        }
        _ => unreachable!(),
    }
}

fn neg(x: &Fe) -> Fe {
    match x {
        Fe::Q(a) => Fe::Q(-a),
        Fe::Fp { v, p } => Fe::Fp { v: if *v == 0 { 0 } else { p - v }, p: *p },
        Fe::Ext { ext, a, b } => Fe::Ext { ext: ext.clone(), a: Box::new(neg(a)), b: Box::new(neg(b)) },
    }
}

fn mul(x: &Fe, y: &Fe) -> Fe {
    check_same(x, y);
    match (x, y) {
        (Fe::Q(a), Fe::Q(b)) => Fe::Q(a * b),
        (Fe::Fp { v, p }, Fe::Fp { v: w, .. }) => Fe::Fp { v: mul_mod(*v, *w, *p), p: *p },
        (Fe::Ext { ext, a, b }, Fe::Ext { a: c, b: d, .. }) => {
            let ac = mul(a, c);
            let bd = mul(b, d);
            let re = add(&ac, &mul(&ext.d, &bd));
            let im = add(&mul(a, d), &mul(b, c));
            Fe::Ext { ext: ext.clone(), a: Box::new(re), b: Box::new(im) }
        }
        _ => unreachable!(),
    }
}

macro_rules! binop {
    ($tr:ident, $m:ident, $body:expr) => {
        impl<'a, 'b> $tr<&'b Fe> for &'a Fe {
            type Output = Fe;
            fn $m(self, rhs: &'b Fe) -> Fe {
                let f: fn(&Fe, &Fe) -> Fe = $body;
                f(self, rhs)
            }
        }
        impl $tr<Fe> for Fe {
            type Output = Fe;
            fn $m(self, rhs: Fe) -> Fe {
                (&self).$m(&rhs)
            }
        }
        impl<'b> $tr<&'b Fe> for Fe {
            type Output = Fe;
            fn $m(self, rhs: &'b Fe) -> Fe {
                (&self).$m(rhs)
            }
        }
        impl<'a> $tr<Fe> for &'a Fe {
            type Output = Fe;
            fn $m(self, rhs: Fe) -> Fe {
                self.$m(&rhs)
            }
        }
    };
}

binop!(Add, add, |a, b| add(a, b));
binop!(Sub, sub, |a, b| add(a, &neg(b)));
binop!(Mul, mul, |a, b| mul(a, b));
binop!(Div, div, |a, b| mul(a, &b.inv().expect("division by zero")));

impl Neg for Fe {
    type Output = Fe;
    fn neg(self) -> Fe {
        neg(&self)
    }
}

impl Neg for &Fe {
    type Output = Fe;
    fn neg(self) -> Fe {
        neg(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primes() {
        let small: Vec<u64> = (0..60).filter(|&n| is_prime(n)).collect();
        assert_eq!(small, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59]);
        assert!(is_prime(1_000_000_007));
        assert!(!is_prime(3_215_031_751));
    }

    #[test]
    fn field_specs() {
        assert_eq!(Field::parse("fp:13").unwrap().order(), Some(13));
        assert_eq!(Field::parse("fp:12"), Err(Error::NotPrime(12)));
        assert_eq!(Field::parse("fp:3"), Err(Error::CharTwoOrThree(3)));
        assert_eq!(Field::parse("fp:13(sqrt:2)").unwrap().order(), Some(169));
        assert!(matches!(Field::parse("fp:13(sqrt:3)"), Err(Error::SquareDiscriminant(_))));
        assert!(matches!(Field::parse("q(sqrt:4)"), Err(Error::SquareDiscriminant(_))));
        assert!(Field::parse("q(sqrt:-1)").is_ok());
        assert!(matches!(Field::parse("r"), Err(Error::BadFieldSpec(_))));
        assert_eq!(Field::parse("q(sqrt:-3)").unwrap().spec(), "q(sqrt:-3)");
    }

    #[test]
    fn square_roots() {
        let f = Field::prime(13).unwrap();
        assert_eq!(f.int(-3).sqrt(), Some(f.int(6)));
        assert_eq!(f.int(-1).sqrt(), Some(f.int(5)));
        assert_eq!(f.int(2).sqrt(), None);
        let q = Field::Rational;
        assert_eq!(q.int(2).sqrt(), None);
        assert_eq!(q.ratio(9, 4).sqrt(), Some(q.ratio(3, 2)));
        let e = Field::parse("q(sqrt:2)").unwrap();
        assert_eq!(e.int(2).sqrt(), e.generator());
        assert_eq!(e.int(8).sqrt().map(|r| &r * &r), Some(e.int(8)));
        let e = Field::parse("fp:13(sqrt:2)").unwrap();
        let mut squares = 0;
        for x in e.elements().unwrap() {
            if let Some(r) = x.sqrt() {
                assert_eq!(&r * &r, x);
                squares += 1;
            }
        }
        assert_eq!(squares, 85);
    }

    #[test]
    fn parse_elements() {
        let q = Field::Rational;
        assert_eq!(q.parse_elem("-143/216").unwrap(), q.ratio(-143, 216));
        let f = Field::prime(13).unwrap();
        assert_eq!(f.parse_elem("1/2").unwrap(), f.int(7));
        let e = Field::parse("q(sqrt:-3)").unwrap();
        let x = e.parse_elem("1/2-3/2*s").unwrap();
        assert_eq!(x.coords(), (q.ratio(1, 2), q.ratio(-3, 2)));
        assert_eq!(e.parse_elem(&x.to_string()).unwrap(), x);
        assert_eq!(e.parse_elem("-s").unwrap(), -e.generator().unwrap());
    }

    #[test]
    fn extension_inverse() {
        let e = Field::parse("fp:13(sqrt:2)").unwrap();
        for x in e.elements().unwrap().into_iter().filter(|x| !x.is_zero()) {
            assert!((&x * &x.inv().unwrap()).is_one());
        }
    }

    #[test]
    fn designated_extension_contains_all_roots() {
        let f = Field::prime(13).unwrap();
        let e = f.designated_extension().unwrap();
        for x in f.elements().unwrap() {
            assert!(e.embed(&x).unwrap().sqrt().is_some());
        }
    }
}
