//! Character tables of the small subgroups (S₄, A₄, D₈, D₄, C₃), realized on
//! their fixed matrix embeddings, with restriction and decomposition.

use std::fmt;

use crate::error::{Error, Result};
use crate::field::{Fe, Field};
use crate::pgl2::{d4_generators, sigma3, subgroup, FiniteSubgroup, ProjMatrix, SubgroupName};

/// Character values live in ℚ(√−3) so that A₄ and C₃ can use ω.
pub fn value_field() -> Field {
    Field::parse("q(sqrt:-3)").expect("-3 is not a rational square")
}

fn omega(vf: &Field) -> Fe {
    &(&vf.int(-1) + &vf.generator().unwrap()) / &vf.int(2)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GroupName {
    S4,
    A4,
    D8,
    D4,
    C3,
}

impl GroupName {
    pub fn parse(s: &str) -> Option<GroupName> {
        match s {
            "S4" => Some(GroupName::S4),
            "A4" => Some(GroupName::A4),
            "D8" => Some(GroupName::D8),
            "D4" => Some(GroupName::D4),
            "C3" => Some(GroupName::C3),
            _ => None,
        }
    }
}

impl fmt::Display for GroupName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

#[derive(Clone, Debug)]
pub struct ConjClass {
    pub label: &'static str,
    pub rep: ProjMatrix,
    pub elements: Vec<ProjMatrix>,
}

impl ConjClass {
    pub fn size(&self) -> usize {
        self.elements.len()
    }
}

#[derive(Clone, Debug)]
pub struct Irrep {
    pub name: &'static str,
    pub values: Vec<Fe>,
}

/// A matrix group with its classes matched to a hardcoded table.
#[derive(Clone, Debug)]
pub struct GroupData {
    pub name: GroupName,
    pub group: FiniteSubgroup,
    pub classes: Vec<ConjClass>,
    pub irreps: Vec<Irrep>,
}

/// One value per conjugacy class of `group`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassFunction {
    pub group: GroupName,
    pub values: Vec<Fe>,
}

enum Sig {
    Identity,
    /// (element order, class size, lies in the fixed D₄; `None` if irrelevant)
    Elem(u64, usize, Option<bool>),
    Contains(ProjMatrix),
}

fn conjugacy_classes(g: &FiniteSubgroup) -> Vec<Vec<ProjMatrix>> {
    let mut seen = std::collections::HashSet::new();
    let mut out = Vec::new();
    for x in g.elements() {
        if seen.contains(x) {
            continue;
        }
        let mut cls: Vec<ProjMatrix> = g.elements().iter().map(|a| x.conj_by(a)).collect();
        cls.sort();
        cls.dedup();
        for y in &cls {
            seen.insert(y.clone());
        }
        out.push(cls);
    }
    out
}

impl GroupData {
    /// Builds the group over `field` (F_p with ω₄, or ℚ(√−1)) and matches classes.
    pub fn builtin(name: GroupName, field: &Field) -> Result<GroupData> {
        let vf = value_field();
        let w = omega(&vf);
        let w2 = &w * &w;
        let v = |xs: &[i64]| -> Vec<Fe> { xs.iter().map(|&x| vf.int(x)).collect() };
        let [da, db] = d4_generators(field);
        let dab = da.mul(&db);
        let d4 = FiniteSubgroup::generated("D4", field, vec![da.clone(), db.clone()]);
        let (group, sigs, irreps): (FiniteSubgroup, Vec<(&'static str, Sig)>, Vec<Irrep>) = match name {
            GroupName::S4 => (
                subgroup(SubgroupName::S4, field)?,
                vec![
                    ("e", Sig::Identity),
                    ("(12)", Sig::Elem(2, 6, Some(false))),
                    ("(12)(34)", Sig::Elem(2, 3, Some(true))),
                    ("(123)", Sig::Elem(3, 8, None)),
                    ("(1234)", Sig::Elem(4, 6, None)),
                ],
                vec![
                    Irrep { name: "triv", values: v(&[1, 1, 1, 1, 1]) },
                    Irrep { name: "sign", values: v(&[1, -1, 1, 1, -1]) },
                    Irrep { name: "V", values: v(&[2, 0, 2, -1, 0]) },
                    Irrep { name: "std", values: v(&[3, 1, -1, 0, -1]) },
                    Irrep { name: "std*sign", values: v(&[3, -1, -1, 0, 1]) },
                ],
            ),
            GroupName::A4 => {
                let s3 = sigma3(field)?;
                (
                    subgroup(SubgroupName::A4, field)?,
                    vec![
                        ("e", Sig::Identity),
                        ("(12)(34)", Sig::Elem(2, 3, Some(true))),
                        ("(123)", Sig::Contains(s3.clone())),
                        ("(132)", Sig::Contains(s3.inv())),
                    ],
                    vec![
                        Irrep { name: "triv", values: v(&[1, 1, 1, 1]) },
                        Irrep { name: "w", values: vec![vf.one(), vf.one(), w.clone(), w2.clone()] },
                        Irrep { name: "w2", values: vec![vf.one(), vf.one(), w2.clone(), w.clone()] },
                        Irrep { name: "std", values: v(&[3, -1, 0, 0]) },
                    ],
                )
            }
            GroupName::D8 => (
                subgroup(SubgroupName::D8, field)?,
                vec![
                    ("e", Sig::Identity),
                    ("z", Sig::Elem(2, 1, Some(true))),
                    ("r", Sig::Elem(4, 2, None)),
                    ("s", Sig::Elem(2, 2, Some(true))),
                    ("sr", Sig::Elem(2, 2, Some(false))),
                ],
                vec![
                    Irrep { name: "triv", values: v(&[1, 1, 1, 1, 1]) },
                    Irrep { name: "k_C4", values: v(&[1, 1, 1, -1, -1]) },
                    Irrep { name: "k_D4", values: v(&[1, 1, -1, 1, -1]) },
                    Irrep { name: "k_V", values: v(&[1, 1, -1, -1, 1]) },
                    Irrep { name: "k2", values: v(&[2, -2, 0, 0, 0]) },
                ],
            ),
            GroupName::D4 => (
                d4.clone(),
                vec![
                    ("e", Sig::Identity),
                    ("a", Sig::Contains(da.clone())),
                    ("b", Sig::Contains(db.clone())),
                    ("ab", Sig::Contains(dab.clone())),
                ],
                vec![
                    Irrep { name: "triv", values: v(&[1, 1, 1, 1]) },
                    Irrep { name: "ker_a", values: v(&[1, 1, -1, -1]) },
                    Irrep { name: "ker_b", values: v(&[1, -1, 1, -1]) },
                    Irrep { name: "ker_ab", values: v(&[1, -1, -1, 1]) },
                ],
            ),
            GroupName::C3 => {
                let s3 = sigma3(field)?;
                (
                    FiniteSubgroup::generated("C3", field, vec![s3.clone()]),
                    vec![("e", Sig::Identity), ("g", Sig::Contains(s3.clone())), ("g2", Sig::Contains(s3.inv()))],
                    vec![
                        Irrep { name: "triv", values: v(&[1, 1, 1]) },
                        Irrep { name: "w", values: vec![vf.one(), w.clone(), w2.clone()] },
                        Irrep { name: "w2", values: vec![vf.one(), w2.clone(), w.clone()] },
                    ],
                )
            }
        };
        let computed = conjugacy_classes(&group);
        if computed.len() != sigs.len() {
            return Err(Error::Internal(format!("{name}: {} classes, table has {}", computed.len(), sigs.len())));
        }
        let mut classes = Vec::new();
        for (label, sig) in sigs {
            let hits: Vec<&Vec<ProjMatrix>> = computed
                .iter()
                .filter(|c| match &sig {
                    Sig::Identity => c.len() == 1 && c[0].is_identity(),
                    Sig::Elem(o, s, ind4) => {
                        c.len() == *s
                            && c[0].order() == Some(*o)
                            && ind4.is_none_or(|b| c.iter().all(|x| d4.contains(x) == b))
                    }
                    Sig::Contains(x) => c.contains(x),
                })
                .collect();
            if hits.len() != 1 {
                return Err(Error::Internal(format!("{name}: class {label} matched {} times", hits.len())));
            }
            classes.push(ConjClass { label, rep: hits[0][0].clone(), elements: hits[0].clone() });
        }
        let data = GroupData { name, group, classes, irreps };
        data.check_orthogonality()?;
        Ok(data)
    }

    pub fn order(&self) -> usize {
        self.group.order()
    }

    pub fn irrep(&self, name: &str) -> Option<ClassFunction> {
        self.irreps
            .iter()
            .find(|r| r.name == name)
            .map(|r| ClassFunction { group: self.name, values: r.values.clone() })
    }

    pub fn trivial(&self) -> ClassFunction {
        self.irrep("triv").unwrap()
    }

    /// Index of the class containing `x`.
    pub fn class_of(&self, x: &ProjMatrix) -> Option<usize> {
        self.classes.iter().position(|c| c.elements.contains(x))
    }

    /// (1/|G|) Σ |C| χ(C) conj(ψ(C)).
    pub fn inner(&self, chi: &[Fe], psi: &[Fe]) -> Fe {
        let vf = value_field();
        let mut acc = vf.zero();
        for ((c, a), b) in self.classes.iter().zip(chi).zip(psi) {
            acc = &acc + &(&vf.int(c.size() as i64) * &(a * &b.conj()));
        }
        &acc / &vf.int(self.order() as i64)
    }

    /// Row and column orthogonality, exactly.
    pub fn check_orthogonality(&self) -> Result<()> {
        let vf = value_field();
        let n = self.classes.len();
        if self.irreps.len() != n {
            return Err(Error::Internal(format!("{}: table is not square", self.name)));
        }
        if self.classes.iter().map(|c| c.size()).sum::<usize>() != self.order() {
            return Err(Error::Internal(format!("{}: class sizes do not sum to the order", self.name)));
        }
        for (i, a) in self.irreps.iter().enumerate() {
            for (j, b) in self.irreps.iter().enumerate() {
                let want = vf.int((i == j) as i64);
                if self.inner(&a.values, &b.values) != want {
                    return Err(Error::Internal(format!("{}: rows {} and {} not orthonormal", self.name, a.name, b.name)));
                }
            }
        }
        for k in 0..n {
            for l in 0..n {
                let mut acc = vf.zero();
                for r in &self.irreps {
                    acc = &acc + &(&r.values[k] * &r.values[l].conj());
                }
                let want = if k == l { vf.int((self.order() / self.classes[k].size()) as i64) } else { vf.zero() };
                if acc != want {
                    return Err(Error::Internal(format!("{}: columns {k} and {l} not orthogonal", self.name)));
                }
            }
        }
        Ok(())
    }

    /// Multiplicities of each irreducible, in table order.
    pub fn decompose(&self, chi: &ClassFunction) -> Result<Vec<i64>> {
        if chi.values.len() != self.classes.len() || chi.group != self.name {
            return Err(Error::NotACharacter("wrong number of class values".into()));
        }
        let mut out = Vec::new();
        for r in &self.irreps {
            let m = self.inner(&chi.values, &r.values);
            let k = m
                .to_symmetric_i64()
                .filter(|&k| k >= 0 && m == m.int_like(k))
                .ok_or_else(|| Error::NotACharacter(format!("multiplicity of {} is {m}", r.name)))?;
            out.push(k);
        }
        Ok(out)
    }

    /// Σ mᵢ χᵢ.
    pub fn assemble(&self, mult: &[i64]) -> ClassFunction {
        let vf = value_field();
        let mut vals = vec![vf.zero(); self.classes.len()];
        for (m, r) in mult.iter().zip(&self.irreps) {
            for (v, x) in vals.iter_mut().zip(&r.values) {
                *v = &*v + &(&vf.int(*m) * x);
            }
        }
        ClassFunction { group: self.name, values: vals }
    }

    /// Trace of conjugation on trace-zero matrices: tr(M)²/det(M) − 1 for any lift M.
    pub fn adjoint_character(&self) -> Result<ClassFunction> {
        let vf = value_field();
        let mut vals = Vec::new();
        for c in &self.classes {
            let m = &c.rep;
            let t = m.trace();
            let x = &(&(&t * &t) / &m.det()) - &t.one_like();
            let k = x
                .to_symmetric_i64()
                .ok_or_else(|| Error::NotACharacter(format!("adjoint trace {x} is not an integer")))?;
            vals.push(vf.int(k));
        }
        Ok(ClassFunction { group: self.name, values: vals })
    }

    /// Restriction of a character of `self` to the classes of `sub`.
    pub fn restrict(&self, chi: &ClassFunction, sub: &GroupData) -> Result<ClassFunction> {
        if !sub.group.is_subset_of(&self.group) {
            return Err(Error::NotASubgroup);
        }
        let vals = sub
            .classes
            .iter()
            .map(|c| self.class_of(&c.rep).map(|k| chi.values[k].clone()).ok_or(Error::NotASubgroup))
            .collect::<Result<Vec<_>>>()?;
        Ok(ClassFunction { group: sub.name, values: vals })
    }
}

/// χ_V: the 2-dimensional irreducible of S₄, or its restriction to D₈.
pub fn v_character(name: GroupName, field: &Field) -> Result<ClassFunction> {
    let s4 = GroupData::builtin(GroupName::S4, field)?;
    let v = s4.irrep("V").unwrap();
    match name {
        GroupName::S4 => Ok(v),
        other => s4.restrict(&v, &GroupData::builtin(other, field)?),
    }
}
