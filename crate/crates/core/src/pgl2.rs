//! PGL₂ over a field: projective matrices, the action on forms and pencils,
//! Klein's finite subgroups, and brute-force stabilizers over finite fields.

use std::collections::{BTreeMap, HashSet, VecDeque};
use std::fmt;

use crate::error::{Error, Result};
use crate::field::{Fe, Field};
use crate::form::BinaryForm;
use crate::par::{self, Exec};
use crate::pencil::Pencil;

/// Invertible 2×2 matrix up to scalars, stored row-major with the first
/// nonzero entry equal to 1.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ProjMatrix {
    m: [Fe; 4],
}

/// f(M⁻¹t) for an explicit (not projectivized) invertible matrix.
pub fn act_form_by(m: &[Fe; 4], f: &BinaryForm) -> BinaryForm {
    let det = &(&m[0] * &m[3]) - &(&m[1] * &m[2]);
    let di = det.inv().expect("invertible");
    let (a, b, c, d) = (&m[3] * &di, -&(&m[1] * &di), -&(&m[2] * &di), &m[0] * &di);
    f.substitute(&a, &b, &c, &d)
}

impl ProjMatrix {
    pub fn new(a: Fe, b: Fe, c: Fe, d: Fe) -> Result<ProjMatrix> {
        let f = a.field();
        if [&b, &c, &d].iter().any(|x| x.field() != f) {
            return Err(Error::FieldMismatch);
        }
        if (&(&a * &d) - &(&b * &c)).is_zero() {
            return Err(Error::Singular);
        }
        Ok(ProjMatrix::canonical(a, b, c, d))
    }

    /// Scales an invertible matrix so its first nonzero entry is 1.
    fn canonical(a: Fe, b: Fe, c: Fe, d: Fe) -> ProjMatrix {
        let l = [&a, &b, &c, &d].into_iter().find(|x| !x.is_zero()).unwrap().inv().unwrap();
        if l.is_one() {
            return ProjMatrix { m: [a, b, c, d] };
        }
        ProjMatrix { m: [&a * &l, &b * &l, &c * &l, &d * &l] }
    }

    pub fn from_ints(field: &Field, m: [i64; 4]) -> Result<ProjMatrix> {
        let [a, b, c, d] = m.map(|x| field.int(x));
        ProjMatrix::new(a, b, c, d)
    }

    pub fn identity(field: &Field) -> ProjMatrix {
        ProjMatrix { m: [field.one(), field.zero(), field.zero(), field.one()] }
    }

    pub fn entries(&self) -> &[Fe; 4] {
        &self.m
    }

    pub fn field(&self) -> Field {
        self.m[0].field()
    }

    pub fn is_identity(&self) -> bool {
        self.m[1].is_zero() && self.m[2].is_zero() && self.m[0] == self.m[3]
    }

    /// Determinant of the canonical representative.
    pub fn det(&self) -> Fe {
        &(&self.m[0] * &self.m[3]) - &(&self.m[1] * &self.m[2])
    }

    pub fn trace(&self) -> Fe {
        &self.m[0] + &self.m[3]
    }

    pub fn mul(&self, o: &ProjMatrix) -> ProjMatrix {
        let (a, b) = (&self.m, &o.m);
        ProjMatrix::canonical(
            &(&a[0] * &b[0]) + &(&a[1] * &b[2]),
            &(&a[0] * &b[1]) + &(&a[1] * &b[3]),
            &(&a[2] * &b[0]) + &(&a[3] * &b[2]),
            &(&a[2] * &b[1]) + &(&a[3] * &b[3]),
        )
    }

    pub fn inv(&self) -> ProjMatrix {
        let m = &self.m;
        ProjMatrix::canonical(m[3].clone(), -&m[1], -&m[2], m[0].clone())
    }

    pub fn conj_by(&self, a: &ProjMatrix) -> ProjMatrix {
        a.mul(self).mul(&a.inv())
    }

    /// Order in PGL₂, or `None` if it exceeds `bound`.
    pub fn order_bounded(&self, bound: u64) -> Option<u64> {
        let mut x = self.clone();
        for k in 1..=bound {
            if x.is_identity() {
                return Some(k);
            }
            x = x.mul(self);
        }
        None
    }

    pub fn order(&self) -> Option<u64> {
        self.order_bounded(100_000)
    }

    /// A representative of determinant 1, if det is a square in the field.
    pub fn unimodular(&self) -> Option<[Fe; 4]> {
        let s = self.det().sqrt()?;
        let si = s.inv()?;
        Some(self.m.clone().map(|x| &x * &si))
    }

    /// (A·f)(t) = f(A⁻¹t) with A the canonical representative.
    pub fn act_form(&self, f: &BinaryForm) -> BinaryForm {
        act_form_by(&self.m, f)
    }

    /// Acts on the stored basis; the result keeps the transformed basis.
    pub fn act(&self, p: &Pencil) -> Pencil {
        let [f, g] = p.basis();
        Pencil::new(&self.act_form(f), &self.act_form(g)).expect("action preserves independence")
    }

    /// Möbius action on P¹ points (x0 : x1) ↦ (a x0 + b x1 : c x0 + d x1).
    pub fn mobius(&self, x0: &Fe, x1: &Fe) -> (Fe, Fe) {
        let m = &self.m;
        (&(&m[0] * x0) + &(&m[1] * x1), &(&m[2] * x0) + &(&m[3] * x1))
    }
}

impl fmt::Display for ProjMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{},{}],[{},{}]]", self.m[0], self.m[1], self.m[2], self.m[3])
    }
}

/// All q³ − q elements of PGL₂(F_q), canonical and distinct.
pub fn enumerate_pgl2(field: &Field) -> Result<Vec<ProjMatrix>> {
    let els = field.elements()?;
    let (zero, one) = (field.zero(), field.one());
    let mut out = Vec::new();
    for b in &els {
        for c in &els {
            for d in &els {
                if d != &(b * c) {
                    out.push(ProjMatrix { m: [one.clone(), b.clone(), c.clone(), d.clone()] });
                }
            }
        }
    }
    for c in &els {
        if c.is_zero() {
            continue;
        }
        for d in &els {
            out.push(ProjMatrix { m: [zero.clone(), one.clone(), c.clone(), d.clone()] });
        }
    }
    Ok(out)
}

/// Explicit list of projective matrices closed under products.
#[derive(Clone, Debug)]
pub struct FiniteSubgroup {
    pub name: String,
    pub generators: Vec<ProjMatrix>,
    elements: Vec<ProjMatrix>,
    index: HashSet<ProjMatrix>,
}

impl FiniteSubgroup {
    /// Closure of the generators. Panics past a million elements.
    pub fn generated(name: &str, field: &Field, gens: Vec<ProjMatrix>) -> FiniteSubgroup {
        let id = ProjMatrix::identity(field);
        let mut index: HashSet<ProjMatrix> = HashSet::from([id.clone()]);
        let mut queue = VecDeque::from([id]);
        while let Some(x) = queue.pop_front() {
            for g in &gens {
                let y = x.mul(g);
                if index.insert(y.clone()) {
                    assert!(index.len() <= 1_000_000, "subgroup closure did not terminate");
                    queue.push_back(y);
                }
            }
        }
        FiniteSubgroup::from_elements(name, gens, index.into_iter().collect())
    }

    /// Wraps an element list that is already known to be a group.
    pub fn from_elements(name: &str, generators: Vec<ProjMatrix>, mut elements: Vec<ProjMatrix>) -> FiniteSubgroup {
        elements.sort();
        elements.dedup();
        let index = elements.iter().cloned().collect();
        FiniteSubgroup { name: name.to_string(), generators, elements, index }
    }

    pub fn elements(&self) -> &[ProjMatrix] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, x: &ProjMatrix) -> bool {
        self.index.contains(x)
    }

    pub fn is_subset_of(&self, other: &FiniteSubgroup) -> bool {
        self.elements.iter().all(|x| other.contains(x))
    }

    pub fn set_eq(&self, other: &FiniteSubgroup) -> bool {
        self.order() == other.order() && self.is_subset_of(other)
    }

    /// Closed under products and inverses (exhaustive check).
    pub fn is_closed(&self) -> bool {
        self.elements.iter().all(|x| self.contains(&x.inv()))
            && self.elements.iter().all(|x| self.elements.iter().all(|y| self.contains(&x.mul(y))))
    }

    /// Sorted element orders.
    pub fn profile(&self) -> Vec<u64> {
        let mut v: Vec<u64> = self.elements.iter().map(|x| x.order().expect("finite group")).collect();
        v.sort();
        v
    }

    /// Isomorphism type guessed from (order, element-order multiset); enough
    /// to separate the groups that occur here.
    pub fn iso_guess(&self) -> String {
        let prof = self.profile();
        let n = prof.len();
        let mut counts: BTreeMap<u64, usize> = BTreeMap::new();
        for o in &prof {
            *counts.entry(*o).or_default() += 1;
        }
        let max = *prof.last().unwrap();
        let c = |k: u64| counts.get(&k).copied().unwrap_or(0);
        if max as usize == n {
            return if n == 1 { "trivial".into() } else { format!("C{n}") };
        }
        let m = (n / 2) as u64;
        let dihedral = n.is_multiple_of(2) && c(m) >= 1 && c(2) == (m + (1 - m % 2)) as usize;
        match (n, c(2), c(3)) {
            (12, 3, 8) => "A4".into(),
            (24, 9, 8) if c(4) == 6 => "S4".into(),
            _ if dihedral => format!("D{n}"),
            _ => format!("order {n}"),
        }
    }
}

impl fmt::Display for FiniteSubgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (order {})", self.name, self.order())
    }
}

/// The distinguished subgroups.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SubgroupName {
    Cyclic(u32),
    /// Dihedral of order 2m, generated by diag(ω_m, 1) and the swap.
    Dihedral(u32),
    /// ⟨diag(1,−1), [[0,−1],[1,0]]⟩.
    D4,
    /// ⟨D4, σ₃⁻¹σ₂⟩.
    D8,
    /// ⟨D4, σ₃⟩.
    A4,
    /// ⟨D4, σ₂, σ₃⟩.
    S4,
}

impl SubgroupName {
    /// `C<m>`, `D<2m>`, `A4`, `S4`; `D4` and `D8` name the fixed embeddings.
    pub fn parse(s: &str) -> Option<SubgroupName> {
        match s {
            "D4" => Some(SubgroupName::D4),
            "D8" => Some(SubgroupName::D8),
            "A4" => Some(SubgroupName::A4),
            "S4" => Some(SubgroupName::S4),
            _ => {
                if let Some(m) = s.strip_prefix('C') {
                    m.parse().ok().filter(|&m| m >= 1).map(SubgroupName::Cyclic)
                } else if let Some(n) = s.strip_prefix('D') {
                    let n: u32 = n.parse().ok()?;
                    (n >= 2 && n.is_multiple_of(2)).then_some(SubgroupName::Dihedral(n / 2))
                } else {
                    None
                }
            }
        }
    }
}

/// A primitive m-th root of unity in the field, smallest in the field's order.
pub fn root_of_unity(field: &Field, m: u32) -> Result<Fe> {
    let is_prim = |x: &Fe| -> bool {
        if !x.pow(m as u64).is_one() {
            return false;
        }
        (1..m).all(|k| !x.pow(k as u64).is_one())
    };
    if m == 1 {
        return Ok(field.one());
    }
    if let Some(q) = field.order() {
        if (q - 1) % m as u64 != 0 {
            return Err(Error::MissingRootOfUnity(m));
        }
        if m == 4 {
            // fixed choice: the canonical square root of −1
            return field.int(-1).sqrt().ok_or(Error::MissingRootOfUnity(4));
        }
        return field.elements()?.into_iter().find(is_prim).ok_or(Error::MissingRootOfUnity(m));
    }
    if m == 4 {
        return field.int(-1).sqrt().ok_or(Error::MissingRootOfUnity(4));
    }
    // infinite fields: only quadratic irrationalities (a + b s) with a, b ∈ {0, ±1, ±1/2} can occur
    let halves = [0, 1, -1, 2, -2].map(|k| field.ratio(k, 2));
    let s = field.generator();
    for a in &halves {
        for b in &halves {
            let x = match &s {
                Some(s) => a + &(b * s),
                None if b.is_zero() => a.clone(),
                None => continue,
            };
            if is_prim(&x) {
                return Ok(x);
            }
        }
    }
    Err(Error::MissingRootOfUnity(m))
}

/// The elements named σ₂, σ₃ in the fixed S₄ (requires ω₄ = √−1).
pub fn sigma2(field: &Field) -> ProjMatrix {
    ProjMatrix::from_ints(field, [-1, 1, 1, 1]).unwrap()
}

pub fn sigma3(field: &Field) -> Result<ProjMatrix> {
    let w = root_of_unity(field, 4)?;
    ProjMatrix::new(w.clone(), field.int(-1), w, field.one())
}

pub fn d4_generators(field: &Field) -> [ProjMatrix; 2] {
    [ProjMatrix::from_ints(field, [1, 0, 0, -1]).unwrap(), ProjMatrix::from_ints(field, [0, -1, 1, 0]).unwrap()]
}

pub fn subgroup(name: SubgroupName, field: &Field) -> Result<FiniteSubgroup> {
    let [d1, d2] = d4_generators(field);
    Ok(match name {
        SubgroupName::Cyclic(m) => {
            let w = root_of_unity(field, m)?;
            let g = ProjMatrix::new(w, field.zero(), field.zero(), field.one())?;
            FiniteSubgroup::generated(&format!("C{m}"), field, vec![g])
        }
        SubgroupName::Dihedral(m) => {
            let w = root_of_unity(field, m)?;
            let g = ProjMatrix::new(w, field.zero(), field.zero(), field.one())?;
            let s = ProjMatrix::from_ints(field, [0, 1, 1, 0])?;
            FiniteSubgroup::generated(&format!("D{}", 2 * m), field, vec![g, s])
        }
        SubgroupName::D4 => FiniteSubgroup::generated("D4", field, vec![d1, d2]),
        SubgroupName::D8 => {
            let s = sigma3(field)?.inv().mul(&sigma2(field));
            FiniteSubgroup::generated("D8", field, vec![d1, d2, s])
        }
        SubgroupName::A4 => FiniteSubgroup::generated("A4", field, vec![d1, d2, sigma3(field)?]),
        SubgroupName::S4 => FiniteSubgroup::generated("S4", field, vec![d1, d2, sigma2(field), sigma3(field)?]),
    })
}

pub fn stabilizer(p: &Pencil) -> Result<FiniteSubgroup> {
    stabilizer_with(p, Exec::default())
}

/// {A : A·p = p} by exhaustive scan of PGL₂(F_q).
pub fn stabilizer_with(p: &Pencil, exec: Exec) -> Result<FiniteSubgroup> {
    let all = enumerate_pgl2(p.field())?;
    let [f, g] = p.basis();
    let els = par::filter_map(&all, exec, |a| (p.contains(&a.act_form(f)) && p.contains(&a.act_form(g))).then(|| a.clone()));
    Ok(FiniteSubgroup::from_elements("Stab", vec![], els))
}

pub fn normalizer(h: &FiniteSubgroup, field: &Field) -> Result<FiniteSubgroup> {
    normalizer_with(h, field, Exec::default())
}

/// {A : A H A⁻¹ = H}; checking generators suffices when they are given,
/// otherwise every element is conjugated.
pub fn normalizer_with(h: &FiniteSubgroup, field: &Field, exec: Exec) -> Result<FiniteSubgroup> {
    let all = enumerate_pgl2(field)?;
    let test: &[ProjMatrix] = if h.generators.is_empty() { h.elements() } else { &h.generators };
    let els = par::filter_map(&all, exec, |a| test.iter().all(|x| h.contains(&x.conj_by(a))).then(|| a.clone()));
    Ok(FiniteSubgroup::from_elements("Norm", vec![], els))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f13() -> Field {
        Field::prime(13).unwrap()
    }

    #[test]
    fn enumeration_sizes() {
        assert_eq!(enumerate_pgl2(&f13()).unwrap().len(), 2184);
        let f5 = enumerate_pgl2(&Field::prime(5).unwrap()).unwrap();
        assert_eq!(f5.len(), 120);
        let set: HashSet<_> = f5.iter().collect();
        assert_eq!(set.len(), 120);
        assert_eq!(enumerate_pgl2(&Field::Rational).unwrap_err(), Error::InfiniteField);
    }

    #[test]
    fn named_subgroups() {
        assert_eq!(subgroup(SubgroupName::D4, &Field::Rational).unwrap().order(), 4);
        let s4 = subgroup(SubgroupName::S4, &f13()).unwrap();
        assert_eq!(s4.order(), 24);
        assert_eq!(s4.iso_guess(), "S4");
        assert!(s4.is_closed());
        let a4 = subgroup(SubgroupName::A4, &f13()).unwrap();
        assert_eq!(a4.order(), 12);
        assert_eq!(a4.iso_guess(), "A4");
        assert!(a4.is_subset_of(&s4));
        let d8 = subgroup(SubgroupName::D8, &f13()).unwrap();
        assert_eq!(d8.order(), 8);
        assert_eq!(d8.iso_guess(), "D8");
        assert!(subgroup(SubgroupName::D4, &f13()).unwrap().is_subset_of(&d8));
        assert_eq!(subgroup(SubgroupName::Cyclic(5), &f13()).unwrap_err(), Error::MissingRootOfUnity(5));
        assert_eq!(subgroup(SubgroupName::Cyclic(6), &f13()).unwrap().iso_guess(), "C6");
        assert_eq!(subgroup(SubgroupName::Dihedral(3), &f13()).unwrap().iso_guess(), "D6");
        assert_eq!(root_of_unity(&f13(), 4).unwrap(), f13().int(5));
    }

    #[test]
    fn s4_over_gaussian_rationals() {
        let f = Field::parse("q(sqrt:-1)").unwrap();
        assert_eq!(subgroup(SubgroupName::S4, &f).unwrap().order(), 24);
        let e = Field::parse("q(sqrt:-3)").unwrap();
        assert_eq!(subgroup(SubgroupName::Cyclic(3), &e).unwrap().order(), 3);
        assert_eq!(subgroup(SubgroupName::S4, &Field::Rational).unwrap_err(), Error::MissingRootOfUnity(4));
    }

    #[test]
    fn action_is_left() {
        let f = f13();
        let a = ProjMatrix::from_ints(&f, [1, 2, 3, 5]).unwrap();
        let b = ProjMatrix::from_ints(&f, [0, 1, 4, 7]).unwrap();
        let p = Pencil::from_ints(&f, [1, 0, 2, 0], [0, 2, 0, 1]).unwrap();
        assert_eq!(a.mul(&b).act(&p), a.act(&b.act(&p)));
        assert_eq!(ProjMatrix::identity(&f).act(&p), p);
    }

    #[test]
    fn parse_names() {
        assert_eq!(SubgroupName::parse("C5"), Some(SubgroupName::Cyclic(5)));
        assert_eq!(SubgroupName::parse("D6"), Some(SubgroupName::Dihedral(3)));
        assert_eq!(SubgroupName::parse("D8"), Some(SubgroupName::D8));
        assert_eq!(SubgroupName::parse("D5"), None);
    }
}
