//! Graded presentations, their graded pieces, ideal membership and quotients.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{ChowError, Result};
use crate::lattice::{cokernel, Echelon, Vector};
use crate::parse::{parse_relation, parse_tokens, tokenize, Token};
use crate::poly::{monomials_of_degree, Monomial, Poly};

/// How generator degrees are read.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Grading {
    /// Chow grading: degrees are codimensions.
    Chow,
    /// Cohomological grading: degrees are H-degrees, so every ring stays
    /// integrally graded even with an odd generator. The printed Chow-style
    /// degree halves even H-degrees and keeps odd ones.
    Cohomological,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Generator {
    pub name: String,
    pub degree: u32,
}

/// A relation template in `j`, expanded for j = start, start+1, … up to a degree bound.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Family {
    pub template: String,
    pub start: u32,
    tokens: Vec<Token>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    pub name: String,
    pub grading: Grading,
    gens: Vec<Generator>,
    index: HashMap<String, usize>,
    rels: Vec<Poly>,
    families: Vec<Family>,
}

/// A degree-d piece: ℤ^free ⊕ ⊕ ℤ/nᵢ with n₁ | n₂ | ….
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedPiece {
    pub degree: u32,
    pub free_rank: usize,
    pub invariant_factors: Vec<BigInt>,
    /// Monomial basis of the degree-d part of the polynomial ring.
    pub basis: Vec<Monomial>,
    /// Cyclic generators in the monomial basis, with their order (0 = infinite).
    pub generators: Vec<(Vector, BigInt)>,
}

fn prime_powers(n: &BigInt) -> Vec<(BigInt, BigInt)> {
    let mut out = Vec::new();
    let mut n = n.clone();
    let mut p = BigInt::from(2);
    while &p * &p <= n {
        if (&n % &p).is_zero() {
            let mut q = BigInt::one();
            while (&n % &p).is_zero() {
                n /= &p;
                q *= &p;
            }
            out.push((p.clone(), q));
        }
        p += 1;
    }
    if n > BigInt::one() {
        out.push((n.clone(), n));
    }
    out
}

impl GradedPiece {
    /// Prime-power cyclic factors in increasing order.
    pub fn elementary_divisors(&self) -> Vec<BigInt> {
        let mut v: Vec<BigInt> = self.invariant_factors.iter().flat_map(prime_powers).map(|(_, q)| q).collect();
        v.sort();
        v
    }

    pub fn is_zero(&self) -> bool {
        self.free_rank == 0 && self.invariant_factors.is_empty()
    }

    /// Order of the torsion subgroup.
    pub fn torsion_order(&self) -> BigInt {
        self.invariant_factors.iter().product()
    }
}

impl fmt::Display for GradedPiece {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        parts.extend(self.elementary_divisors().iter().map(|q| format!("Z/{q}")));
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

impl Presentation {
    pub fn new(name: &str, grading: Grading, gens: &[(&str, u32)]) -> Result<Presentation> {
        let mut p = Presentation {
            name: name.to_string(),
            grading,
            gens: Vec::new(),
            index: HashMap::new(),
            rels: Vec::new(),
            families: Vec::new(),
        };
        for &(n, d) in gens {
            p.push_gen(n, d)?;
        }
        Ok(p)
    }

    fn push_gen(&mut self, name: &str, degree: u32) -> Result<()> {
        let toks = tokenize(name)?;
        if toks.len() != 1 || !matches!(toks[0], Token::Ident(_)) || name == "j" {
            return Err(ChowError::Parse(format!("bad generator name {name:?}")));
        }
        if degree == 0 {
            return Err(ChowError::Parse(format!("generator {name} needs positive degree")));
        }
        if self.index.contains_key(name) {
            return Err(ChowError::Parse(format!("duplicate generator {name}")));
        }
        if !self.rels.is_empty() || !self.families.is_empty() {
            return Err(ChowError::Parse("generators must precede relations".into()));
        }
        self.index.insert(name.to_string(), self.gens.len());
        self.gens.push(Generator { name: name.to_string(), degree });
        Ok(())
    }

    /// Parses `gen <name> <degree>; rel <poly>; family <template> j>=1 degbound;`.
    /// Optional statements: `name <text>`, `grading chow|cohomological`.
    pub fn parse(text: &str) -> Result<Presentation> {
        let mut p = Presentation::new("", Grading::Chow, &[])?;
        for stmt in text.split([';', '\n']) {
            let s = stmt.trim();
            if s.is_empty() || s.starts_with('#') {
                continue;
            }
            let (kw, rest) = s.split_once(char::is_whitespace).unwrap_or((s, ""));
            let rest = rest.trim();
            match kw {
                "name" => p.name = rest.to_string(),
                "grading" => {
                    p.grading = match rest {
                        "chow" => Grading::Chow,
                        "cohomological" => Grading::Cohomological,
                        _ => return Err(ChowError::Parse(format!("unknown grading {rest:?}"))),
                    }
                }
                "gen" => {
                    let mut it = rest.split_whitespace();
                    let (Some(n), Some(d), None) = (it.next(), it.next(), it.next()) else {
                        return Err(ChowError::Parse(format!("expected `gen <name> <degree>`: {s:?}")));
                    };
                    let d: u32 = d.parse().map_err(|_| ChowError::Parse(format!("bad degree {d:?}")))?;
                    p.push_gen(n, d)?;
                }
                "rel" => {
                    let r = p.parse_element_rel(rest)?;
                    p.push_relation(r)?;
                }
                "family" => {
                    let (tmpl, cond) = rest
                        .rsplit_once("j>=")
                        .ok_or_else(|| ChowError::Parse(format!("family needs `j>=k`: {s:?}")))?;
                    let start_txt = cond.split_whitespace().next().unwrap_or("");
                    let start: u32 =
                        start_txt.parse().map_err(|_| ChowError::Parse(format!("bad family start {start_txt:?}")))?;
                    p.push_family(tmpl.trim(), start)?;
                }
                _ => return Err(ChowError::Parse(format!("unknown statement {kw:?}"))),
            }
        }
        Ok(p)
    }

    pub fn to_text(&self) -> String {
        let mut out = Vec::new();
        out.push(format!("name {}", self.name));
        if self.grading == Grading::Cohomological {
            out.push("grading cohomological".into());
        }
        for g in &self.gens {
            out.push(format!("gen {} {}", g.name, g.degree));
        }
        for r in &self.rels {
            out.push(format!("rel {}", self.format(r)));
        }
        for f in &self.families {
            out.push(format!("family {} j>={} degbound", f.template, f.start));
        }
        out.join("; ") + ";"
    }

    pub fn gens(&self) -> &[Generator] {
        &self.gens
    }

    pub fn nvars(&self) -> usize {
        self.gens.len()
    }

    pub fn relations(&self) -> &[Poly] {
        &self.rels
    }

    pub fn families(&self) -> &[Family] {
        &self.families
    }

    pub fn names(&self) -> Vec<String> {
        self.gens.iter().map(|g| g.name.clone()).collect()
    }

    pub fn weights(&self) -> Vec<u32> {
        self.gens.iter().map(|g| g.degree).collect()
    }

    pub fn gen_index(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }

    /// Degree as printed: the internal degree, halved for even H-degrees.
    pub fn printed_degree(&self, i: usize) -> u32 {
        let d = self.gens[i].degree;
        match self.grading {
            Grading::Cohomological if d.is_multiple_of(2) => d / 2,
            _ => d,
        }
    }

    pub fn var(&self, name: &str) -> Result<Poly> {
        let i = self.gen_index(name).ok_or_else(|| ChowError::UnknownGenerator(name.to_string()))?;
        Ok(Poly::var(self.nvars(), i))
    }

    pub fn int(&self, c: i64) -> Poly {
        Poly::int(self.nvars(), c)
    }

    fn parse_element_rel(&self, s: &str) -> Result<Poly> {
        parse_relation(s, self.nvars(), |n| self.gen_index(n))
    }

    /// Parses an element; `a = b` means a − b.
    pub fn parse_element(&self, s: &str) -> Result<Poly> {
        self.parse_element_rel(s)
    }

    pub fn format(&self, p: &Poly) -> String {
        p.format(&self.names())
    }

    /// `Some(d)` for a nonzero homogeneous element, `None` for zero.
    pub fn degree_of(&self, p: &Poly) -> Result<Option<u32>> {
        let ds = p.degrees(&self.weights());
        match ds.len() {
            0 => Ok(None),
            1 => Ok(Some(ds[0])),
            _ => Err(ChowError::NotHomogeneous(self.format(p))),
        }
    }

    fn push_relation(&mut self, r: Poly) -> Result<()> {
        self.degree_of(&r)?;
        if !r.is_zero() {
            self.rels.push(r);
        }
        Ok(())
    }

    fn push_family(&mut self, template: &str, start: u32) -> Result<()> {
        let tokens = tokenize(template)?;
        let f = Family { template: template.to_string(), start, tokens };
        // validate at the first two parameters
        let a = self.expand_family(&f, start)?;
        let b = self.expand_family(&f, start + 1)?;
        match (a.1, b.1) {
            (Some(x), Some(y)) if y > x => {}
            _ => return Err(ChowError::FamilyDoesNotGrow(template.to_string())),
        }
        self.families.push(f);
        Ok(())
    }

    fn expand_family(&self, f: &Family, j: u32) -> Result<(Poly, Option<u32>)> {
        let toks: Vec<Token> = f
            .tokens
            .iter()
            .map(|t| match t {
                Token::Ident(n) if n == "j" => Token::Int(BigInt::from(j)),
                t => t.clone(),
            })
            .collect();
        let p = parse_tokens(&toks, self.nvars(), |n| self.gen_index(n))?;
        let d = self.degree_of(&p)?;
        Ok((p, d))
    }

    /// Members of each family with degree ≤ `bound`, as (template index, j, relation).
    pub fn family_expansion(&self, bound: u32) -> Result<Vec<(usize, u32, Poly)>> {
        let mut out = Vec::new();
        for (k, f) in self.families.iter().enumerate() {
            let mut j = f.start;
            let mut last = None;
            loop {
                let (p, d) = self.expand_family(f, j)?;
                let d = d.ok_or_else(|| ChowError::FamilyDoesNotGrow(f.template.clone()))?;
                if last.is_some_and(|l| d <= l) {
                    return Err(ChowError::FamilyDoesNotGrow(f.template.clone()));
                }
                if d > bound {
                    break;
                }
                out.push((k, j, p));
                last = Some(d);
                j += 1;
            }
        }
        Ok(out)
    }

    /// Plain relations plus family members, all of degree ≤ `bound`.
    pub fn relations_up_to(&self, bound: u32) -> Result<Vec<Poly>> {
        let w = self.weights();
        let mut out: Vec<Poly> =
            self.rels.iter().filter(|r| r.degrees(&w).first().is_some_and(|&d| d <= bound)).cloned().collect();
        out.extend(self.family_expansion(bound)?.into_iter().map(|(_, _, p)| p));
        Ok(out)
    }

    pub fn monomials(&self, d: u32) -> Vec<Monomial> {
        monomials_of_degree(&self.weights(), d)
    }

    /// Coordinates of a degree-d element in the monomial basis.
    pub fn coords(&self, basis: &[Monomial], p: &Poly) -> Vector {
        let pos: HashMap<&Monomial, usize> = basis.iter().enumerate().map(|(i, m)| (m, i)).collect();
        coords_with(&pos, basis.len(), p)
    }

    pub fn from_coords(&self, basis: &[Monomial], v: &[BigInt]) -> Poly {
        let mut p = Poly::zero(self.nvars());
        for (m, c) in basis.iter().zip(v) {
            p = p.add(&Poly::term(m.clone(), c.clone()));
        }
        p
    }

    /// Degree-d monomial basis and the lattice of degree-d relation multiples.
    pub fn relation_lattice(&self, d: u32) -> Result<(Vec<Monomial>, Echelon)> {
        let basis = self.monomials(d);
        let pos: HashMap<&Monomial, usize> = basis.iter().enumerate().map(|(i, m)| (m, i)).collect();
        let w = self.weights();
        let mut ech = Echelon::new(basis.len());
        for r in self.relations_up_to(d)? {
            let e = r.degrees(&w)[0];
            for m in monomials_of_degree(&w, d - e) {
                let mut row: Vec<(usize, BigInt)> =
                    r.mul_monomial(&m).terms().iter().map(|(k, c)| (pos[k], c.clone())).collect();
                row.sort_by_key(|(i, _)| *i);
                ech.insert_sparse(row);
            }
        }
        Ok((basis, ech))
    }

    pub fn graded_piece(&self, d: u32) -> Result<GradedPiece> {
        let (basis, ech) = self.relation_lattice(d)?;
        let c = cokernel(&ech);
        Ok(GradedPiece {
            degree: d,
            free_rank: c.free_rank,
            invariant_factors: c.invariant_factors,
            basis,
            generators: c.generators,
        })
    }

    /// Whether a homogeneous element lies in the ideal (zero is always a member).
    pub fn in_ideal(&self, x: &Poly) -> Result<bool> {
        match self.degree_of(x)? {
            None => Ok(true),
            Some(d) => {
                let (basis, ech) = self.relation_lattice(d)?;
                Ok(ech.contains(&self.coords(&basis, x)))
            }
        }
    }

    /// Canonical representative of x modulo the ideal.
    pub fn normal_form(&self, x: &Poly) -> Result<Poly> {
        match self.degree_of(x)? {
            None => Ok(x.clone()),
            Some(d) => {
                let (basis, ech) = self.relation_lattice(d)?;
                Ok(self.from_coords(&basis, &ech.reduce(&self.coords(&basis, x))))
            }
        }
    }

    /// Same generators, extra relations appended.
    pub fn quotient(&self, name: &str, extra: &[Poly]) -> Result<Presentation> {
        let mut p = self.clone();
        p.name = name.to_string();
        for r in extra {
            p.push_relation(r.clone())?;
        }
        Ok(p)
    }

    /// Quotient by relations given as text.
    pub fn quotient_text(&self, name: &str, extra: &[&str]) -> Result<Presentation> {
        let rels = extra.iter().map(|s| self.parse_element(s)).collect::<Result<Vec<_>>>()?;
        self.quotient(name, &rels)
    }

    /// Adds a generator (used to build bundle presentations over a base ring).
    pub fn adjoin(&self, name: &str, gens: &[(&str, u32)], rels: &[&str]) -> Result<Presentation> {
        let old = self.nvars();
        let n = old + gens.len();
        let widen = |p: &Poly| -> Poly {
            let mut q = Poly::zero(n);
            for (m, c) in p.terms() {
                let mut m2 = m.clone();
                m2.resize(n, 0);
                q = q.add(&Poly::term(m2, c.clone()));
            }
            q
        };
        let mut p = Presentation::new(name, self.grading, &[])?;
        for g in self.gens.iter().map(|g| (g.name.as_str(), g.degree)).chain(gens.iter().copied()) {
            p.push_gen(g.0, g.1)?;
        }
        p.rels = self.rels.iter().map(widen).collect();
        p.families = self.families.clone();
        for r in rels {
            let r = p.parse_element(r)?;
            p.push_relation(r)?;
        }
        Ok(p)
    }
}

fn coords_with(pos: &HashMap<&Monomial, usize>, n: usize, p: &Poly) -> Vector {
    let mut v = vec![BigInt::zero(); n];
    for (m, c) in p.terms() {
        v[pos[m]] = c.clone();
    }
    v
}

/// Small helper for callers holding machine integers.
pub fn big(n: i64) -> BigInt {
    BigInt::from(n)
}

#[cfg(test)]
mod tests {
    use super::*;

    const FINAL: &str = "name FINAL; gen alpha 1; gen zeta1 2; gen zeta 1; rel 2alpha; rel 4zeta1; rel 3zeta; rel alpha^2;";

    #[test]
    fn final_pieces() {
        let p = Presentation::parse(FINAL).unwrap();
        let want = ["Z", "Z/2 + Z/3", "Z/3 + Z/4", "Z/2 + Z/3", "Z/3 + Z/4", "Z/2 + Z/3", "Z/3 + Z/4"];
        for (d, w) in want.iter().enumerate() {
            assert_eq!(p.graded_piece(d as u32).unwrap().to_string(), *w, "degree {d}");
        }
        assert_eq!(p.graded_piece(1).unwrap().invariant_factors, vec![big(6)]);
    }

    #[test]
    fn text_round_trip() {
        let p = Presentation::parse(FINAL).unwrap();
        let q = Presentation::parse(&p.to_text()).unwrap();
        assert_eq!(p, q);
    }

    #[test]
    fn families_expand() {
        let p = Presentation::parse(
            "gen alpha 1; gen nu 3; gen zeta1 2; gen eta 2; rel 2alpha; family alpha*nu^j - alpha^(j+1)*(zeta1+alpha^2)^j j>=1 degbound;",
        )
        .unwrap();
        assert_eq!(p.family_expansion(8).unwrap().len(), 2);
        assert_eq!(p.family_expansion(3).unwrap().len(), 0);
        assert!(matches!(Presentation::parse("gen a 1; family a j>=1"), Err(ChowError::FamilyDoesNotGrow(_))));
    }

    #[test]
    fn homogeneity_enforced() {
        assert!(matches!(Presentation::parse("gen a 1; gen b 2; rel a + b"), Err(ChowError::NotHomogeneous(_))));
        let p = Presentation::parse("gen a 1; rel 0").unwrap();
        assert!(p.relations().is_empty());
    }

    #[test]
    fn membership_and_normal_form() {
        let p = Presentation::parse(FINAL).unwrap();
        assert!(p.in_ideal(&p.parse_element("6alpha*zeta").unwrap()).unwrap());
        assert!(p.in_ideal(&p.parse_element("alpha*zeta").unwrap()).unwrap());
        assert!(!p.in_ideal(&p.parse_element("zeta1").unwrap()).unwrap());
        let nf = p.normal_form(&p.parse_element("5zeta1 + 7zeta^2").unwrap()).unwrap();
        assert_eq!(p.format(&nf), "zeta1 + zeta^2");
        assert!(matches!(p.in_ideal(&p.parse_element("alpha + zeta1").unwrap()), Err(ChowError::NotHomogeneous(_))));
    }
}
