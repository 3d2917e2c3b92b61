//! Wall normal forms p_ρ, the S₄ action on the parameter, and fibers of the
//! invariant map and of (A, ρ) ↦ A·p_ρ.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use crate::error::{Error, Result};
use crate::field::{Fe, Field};
use crate::form::{BinaryForm, ProjPoint};
use crate::invariants::{classify_stability, newstead_point, PencilInvariants, StabilityClass};
use crate::par::{self, Exec};
use crate::pencil::Pencil;
use crate::pgl2::{d4_generators, enumerate_pgl2, sigma2, sigma3, FiniteSubgroup, ProjMatrix};

/// A point ρ of P¹: finite or ∞.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Rho {
    Finite(Fe),
    Infinity,
}

impl Rho {
    pub fn int(field: &Field, n: i64) -> Rho {
        Rho::Finite(field.int(n))
    }

    pub fn from_point(p: &ProjPoint) -> Rho {
        match p.affine_value() {
            Some(x) => Rho::Finite(x),
            None => Rho::Infinity,
        }
    }

    /// Homogeneous coordinates (ρ : 1) or (1 : 0).
    pub fn homogeneous(&self, field: &Field) -> (Fe, Fe) {
        match self {
            Rho::Finite(x) => (x.clone(), field.one()),
            Rho::Infinity => (field.one(), field.zero()),
        }
    }

    fn from_homogeneous(x0: &Fe, x1: &Fe) -> Rho {
        if x1.is_zero() {
            Rho::Infinity
        } else {
            Rho::Finite(x0 / x1)
        }
    }

    /// ρ ∈ {0, ±1, ±3, ∞}.
    pub fn in_fwall(&self) -> bool {
        match self {
            Rho::Infinity => true,
            Rho::Finite(x) => [0, 1, -1, 3, -3].iter().any(|&k| *x == x.int_like(k)),
        }
    }

    pub fn parse(field: &Field, s: &str) -> Result<Rho> {
        let t = s.trim();
        if t == "inf" || t == "∞" {
            Ok(Rho::Infinity)
        } else {
            Ok(Rho::Finite(field.parse_elem(t)?))
        }
    }
}

impl fmt::Display for Rho {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Rho::Finite(x) => write!(f, "{x}"),
            Rho::Infinity => write!(f, "inf"),
        }
    }
}

/// p_ρ = ⟨t₀³ + ρt₀t₁², ρt₀²t₁ + t₁³⟩ and p_∞ = ⟨t₀t₁², t₀²t₁⟩.
pub fn wall_pencil(field: &Field, rho: &Rho) -> Pencil {
    match rho {
        Rho::Finite(r) => {
            let (z, o) = (field.zero(), field.one());
            let f = BinaryForm::new(field, vec![o.clone(), z.clone(), r.clone(), z.clone()]).unwrap();
            let g = BinaryForm::new(field, vec![z.clone(), r.clone(), z, o]).unwrap();
            Pencil::new(&f, &g).expect("p_rho is a pencil for every rho")
        }
        Rho::Infinity => Pencil::from_ints(field, [0, 0, 1, 0], [0, 1, 0, 0]).unwrap(),
    }
}

/// (3 + ρ², (ρ²−3)(ρ²−6ρ−3)(ρ²+6ρ−3)/216).
pub fn wall_closed_invariants(rho: &Rho) -> Result<PencilInvariants> {
    let Rho::Finite(r) = rho else { return Err(Error::InfinityParam) };
    let k = |n: i64| r.int_like(n);
    let r2 = r * r;
    let iprime = &k(3) + &r2;
    let a = &r2 - &k(3);
    let b = &(&r2 - &(&k(6) * r)) - &k(3);
    let c = &(&r2 + &(&k(6) * r)) - &k(3);
    let j = &(&(&a * &b) * &c) / &k(216);
    Ok(PencilInvariants { iprime, j })
}

/// The six coset representatives of S₄/D₄ and the Möbius maps they induce on ρ
/// under (A·f)(t) = f(A⁻¹t), as integer matrices (ρ:1) ↦ (aρ+b : cρ+d).
fn coset_table(field: &Field) -> Result<Vec<(ProjMatrix, [i64; 4])>> {
    let s2 = sigma2(field);
    let s3 = sigma3(field)?;
    let s3i = s3.inv();
    let id = ProjMatrix::identity(field);
    Ok(vec![
        (id, [1, 0, 0, 1]),
        (s3.clone(), [-1, -3, 1, -1]),
        (s3i.clone(), [1, -3, 1, 1]),
        (s2.clone(), [-1, 3, 1, 1]),
        (s3i.mul(&s2), [-1, 0, 0, 1]),
        (s3.mul(&s2), [1, 3, 1, -1]),
    ])
}

type MobiusTable = HashMap<ProjMatrix, [i64; 4]>;

/// Every element of the fixed S₄ with the Möbius map it induces, cached per field.
fn s4_mobius_table(field: &Field) -> Result<Arc<MobiusTable>> {
    static CACHE: OnceLock<Mutex<HashMap<Field, Arc<MobiusTable>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(t) = cache.lock().unwrap().get(field) {
        return Ok(t.clone());
    }
    let [a, b] = d4_generators(field);
    let d4 = [ProjMatrix::identity(field), a.mul(&b), a, b];
    let mut table = HashMap::new();
    for (rep, m) in coset_table(field)? {
        for d in &d4 {
            table.insert(rep.mul(d), m);
        }
    }
    let table = Arc::new(table);
    cache.lock().unwrap().insert(field.clone(), table.clone());
    Ok(table)
}

/// σ·ρ for σ in the fixed S₄; D₄ acts trivially.
pub fn s4_on_rho(sigma: &ProjMatrix, rho: &Rho) -> Result<Rho> {
    let field = sigma.field();
    let table = s4_mobius_table(&field)?;
    let m = table.get(sigma).ok_or(Error::NotInS4)?;
    Ok(mobius_int(&field, *m, rho))
}

fn mobius_int(field: &Field, m: [i64; 4], rho: &Rho) -> Rho {
    let (x0, x1) = rho.homogeneous(field);
    let k = |n: i64| field.int(n);
    let y0 = &(&k(m[0]) * &x0) + &(&k(m[1]) * &x1);
    let y1 = &(&k(m[2]) * &x0) + &(&k(m[3]) * &x1);
    Rho::from_homogeneous(&y0, &y1)
}

/// {ρ, −ρ, ±(ρ+3)/(ρ−1), ±(ρ−3)/(ρ+1)}, duplicates merged.
pub fn s4_orbit_rho(field: &Field, rho: &Rho) -> BTreeSet<Rho> {
    const MAPS: [[i64; 4]; 6] =
        [[1, 0, 0, 1], [-1, 0, 0, 1], [1, 3, 1, -1], [-1, -3, 1, -1], [1, -3, 1, 1], [-1, 3, 1, 1]];
    MAPS.iter().map(|m| mobius_int(field, *m, rho)).collect()
}

/// 216·x₁·(ρ²+3σ²)³ − x₀·(ρ²−3σ²)(ρ²−6ρσ−3σ²)(ρ²+6ρσ−3σ²) as a sextic in (ρ:σ).
pub fn fiber_sextic(x: &ProjPoint) -> BinaryForm {
    let field = x.coords()[0].field();
    let q = |c: &[i64]| BinaryForm::from_ints(&field, c);
    let ip = q(&[1, 0, 3]);
    let ip3 = ip.mul(&ip).mul(&ip);
    let nj = q(&[1, 0, -3]).mul(&q(&[1, -6, -3])).mul(&q(&[1, 6, -3]));
    let (x0, x1) = (&x.coords()[0], &x.coords()[1]);
    ip3.scale(&(x1 * &field.int(216))).add(&nj.scale(&-x0)).unwrap()
}

/// Preimages of a Newstead point among Wall parameters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RhoFiber {
    /// Parameters with multiplicity, sorted.
    pub roots: Vec<(Rho, usize)>,
    /// Multiplicities sum to 6 (the sextic splits over the field).
    pub split: bool,
}

impl RhoFiber {
    pub fn set(&self) -> BTreeSet<Rho> {
        self.roots.iter().map(|(r, _)| r.clone()).collect()
    }
}

/// Roots of the fiber sextic over the field: exhaustive over finite fields,
/// rational root search over ℚ.
pub fn invariant_fiber_rho(x: &ProjPoint) -> Result<RhoFiber> {
    let sextic = fiber_sextic(x);
    let mut roots: Vec<(Rho, usize)> =
        sextic.roots()?.into_iter().map(|(p, m)| (Rho::from_point(&p), m)).collect();
    roots.sort();
    let split = roots.iter().map(|(_, m)| m).sum::<usize>() == 6;
    Ok(RhoFiber { roots, split })
}

/// Some (A, ρ) with A·p_ρ = p and ρ ∉ F_Wall.
pub fn wall_normal_form(p: &Pencil) -> Result<(ProjMatrix, Rho)> {
    wall_normal_form_with(p, Exec::default())
}

pub fn wall_normal_form_with(p: &Pencil, exec: Exec) -> Result<(ProjMatrix, Rho)> {
    if classify_stability(p) != StabilityClass::Stable {
        return Err(Error::NotStable);
    }
    let all = enumerate_pgl2(p.field())?;
    let fiber = invariant_fiber_rho(&newstead_point(p)?)?;
    for rho in fiber.set() {
        if rho.in_fwall() {
            continue;
        }
        let w = wall_pencil(p.field(), &rho);
        if let Some(a) = par::find_map_first(&all, exec, |a| (moves_to(a, &w, p)).then(|| a.clone())) {
            return Ok((a, rho));
        }
    }
    Err(Error::NotFoundOverThisField)
}

fn moves_to(a: &ProjMatrix, from: &Pencil, to: &Pencil) -> bool {
    let [f, g] = from.basis();
    to.contains(&a.act_form(f)) && to.contains(&a.act_form(g))
}

pub fn phi_fiber(p: &Pencil) -> Result<Vec<(ProjMatrix, Rho)>> {
    phi_fiber_with(p, Exec::default())
}

/// All (B, ρ′) with ρ′ ∉ F_Wall and B·p_ρ′ = p, sorted by (ρ′, B).
pub fn phi_fiber_with(p: &Pencil, exec: Exec) -> Result<Vec<(ProjMatrix, Rho)>> {
    if classify_stability(p) != StabilityClass::Stable {
        return Err(Error::NotStable);
    }
    let all = enumerate_pgl2(p.field())?;
    let fiber = invariant_fiber_rho(&newstead_point(p)?)?;
    let mut out = Vec::new();
    for rho in fiber.set() {
        if rho.in_fwall() {
            continue;
        }
        let w = wall_pencil(p.field(), &rho);
        let hits = par::filter_map(&all, exec, |a| moves_to(a, &w, p).then(|| a.clone()));
        out.extend(hits.into_iter().map(|a| (a, rho.clone())));
    }
    out.sort_by(|x, y| x.1.cmp(&y.1).then_with(|| x.0.cmp(&y.0)));
    Ok(out)
}

/// λ = (3ρ⁻¹ − ρ + 2)/4.
pub fn anharmonic_lambda(rho: &Rho) -> Result<Rho> {
    match rho {
        Rho::Infinity => Err(Error::PoleParam),
        Rho::Finite(r) if r.is_zero() => Err(Error::PoleParam),
        Rho::Finite(r) => {
            let k = |n: i64| r.int_like(n);
            let l = &(&(&(&k(3) / r) - r) + &k(2)) / &k(4);
            Ok(Rho::Finite(l))
        }
    }
}

/// {λ, 1−λ, 1/λ, 1/(1−λ), (λ−1)/λ, λ/(λ−1)} on P¹.
pub fn anharmonic_orbit(field: &Field, lambda: &Rho) -> BTreeSet<Rho> {
    const MAPS: [[i64; 4]; 6] =
        [[1, 0, 0, 1], [-1, 1, 0, 1], [0, 1, 1, 0], [0, 1, -1, 1], [1, -1, 1, 0], [1, 0, 1, -1]];
    MAPS.iter().map(|m| mobius_int(field, *m, lambda)).collect()
}

/// The fixed S₄ as a group, for callers that need its element list.
pub fn s4(field: &Field) -> Result<FiniteSubgroup> {
    crate::pgl2::subgroup(crate::pgl2::SubgroupName::S4, field)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::invariants::pencil_invariants;
    use crate::pgl2::stabilizer;

    fn f13() -> Field {
        Field::prime(13).unwrap()
    }

    fn set(field: &Field, xs: &[i64]) -> BTreeSet<Rho> {
        xs.iter().map(|&x| Rho::int(field, x)).collect()
    }

    #[test]
    fn wall_pencils() {
        let q = Field::Rational;
        assert_eq!(wall_pencil(&q, &Rho::int(&q, 0)), Pencil::from_ints(&q, [1, 0, 0, 0], [0, 0, 0, 1]).unwrap());
        assert_eq!(wall_pencil(&q, &Rho::Infinity), Pencil::from_ints(&q, [0, 0, 1, 0], [0, 1, 0, 0]).unwrap());
        let p2 = wall_pencil(&q, &Rho::int(&q, 2));
        assert_eq!(p2.basis()[0], BinaryForm::from_ints(&q, &[1, 0, 2, 0]));
        assert_eq!(p2.basis()[1], BinaryForm::from_ints(&q, &[0, 2, 0, 1]));
        let expect = ProjPoint::new([2, 0, -1, 0, 2].iter().map(|&x| q.int(x)).collect()).unwrap();
        assert_eq!(p2.wronskian_point().unwrap(), expect);
    }

    #[test]
    fn closed_invariants() {
        let q = Field::Rational;
        let c = wall_closed_invariants(&Rho::int(&q, 2)).unwrap();
        assert_eq!(c, PencilInvariants { iprime: q.int(7), j: q.ratio(-143, 216) });
        assert_eq!(wall_closed_invariants(&Rho::int(&q, 0)).unwrap().j, q.ratio(-1, 8));
        assert_eq!(wall_closed_invariants(&Rho::int(&q, 1)).unwrap().j, q.ratio(8, 27));
        assert_eq!(wall_closed_invariants(&Rho::Infinity), Err(Error::InfinityParam));
        for r in -5..=5 {
            let rho = Rho::int(&q, r);
            assert_eq!(wall_closed_invariants(&rho).unwrap(), pencil_invariants(&wall_pencil(&q, &rho)));
        }
    }

    #[test]
    fn s4_examples() {
        let f = f13();
        let s2 = sigma2(&f);
        let s3 = sigma3(&f).unwrap();
        assert_eq!(s4_on_rho(&s3.inv(), &Rho::int(&f, 2)).unwrap(), Rho::Finite(f.ratio(-1, 3)));
        assert_eq!(s4_on_rho(&s3, &Rho::int(&f, 2)).unwrap(), Rho::int(&f, -5));
        assert_eq!(s4_on_rho(&s3.inv(), &Rho::Infinity).unwrap(), Rho::int(&f, 1));
        assert_eq!(s4_on_rho(&s2, &Rho::int(&f, 3)).unwrap(), Rho::int(&f, 0));
        let t = ProjMatrix::from_ints(&f, [1, 1, 0, 1]).unwrap();
        assert_eq!(s4_on_rho(&t, &Rho::int(&f, 2)), Err(Error::NotInS4));
    }

    #[test]
    fn orbits() {
        let f = f13();
        assert_eq!(s4_orbit_rho(&f, &Rho::int(&f, 2)), set(&f, &[2, 11, 5, 8, 4, 9]));
        assert_eq!(s4_orbit_rho(&f, &Rho::int(&f, 6)), set(&f, &[6, 7]));
        let mut fw = s4_orbit_rho(&f, &Rho::int(&f, 0));
        fw.extend(s4_orbit_rho(&f, &Rho::int(&f, 1)));
        let mut expect = set(&f, &[0, 1, -1, 3, -3]);
        expect.insert(Rho::Infinity);
        assert_eq!(fw, expect);
    }

    #[test]
    fn fibers() {
        let f = f13();
        let p2 = wall_pencil(&f, &Rho::int(&f, 2));
        let fib = invariant_fiber_rho(&newstead_point(&p2).unwrap()).unwrap();
        assert_eq!(fib.set(), set(&f, &[2, 11, 5, 8, 4, 9]));
        assert!(fib.split);
        let q = Field::Rational;
        let minus = invariant_fiber_rho(&ProjPoint::affine(&q.int(-216))).unwrap().set();
        assert!(set(&q, &[0, 3, -3]).is_subset(&minus));
        assert!(!minus.contains(&Rho::Infinity));
        let plus = invariant_fiber_rho(&ProjPoint::affine(&q.int(216))).unwrap().set();
        assert!(set(&q, &[1, -1]).is_subset(&plus));
        assert!(plus.contains(&Rho::Infinity));
    }

    #[test]
    fn normal_form_and_phi() {
        let f = f13();
        let p2 = wall_pencil(&f, &Rho::int(&f, 2));
        let a = ProjMatrix::from_ints(&f, [2, 5, 1, 7]).unwrap();
        let ap = a.act(&p2);
        let (b, rho) = wall_normal_form(&ap).unwrap();
        assert!(set(&f, &[2, 11, 5, 8, 4, 9]).contains(&rho));
        assert_eq!(b.act(&wall_pencil(&f, &rho)), ap);
        let fib = phi_fiber(&p2).unwrap();
        assert_eq!(fib.len(), 24);
        assert_eq!(stabilizer(&p2).unwrap().order(), 4);
        let z = Pencil::from_ints(&f, [1, 0, 0, 0], [0, 0, 0, 1]).unwrap();
        assert_eq!(wall_normal_form(&z), Err(Error::NotStable));
    }

    #[test]
    fn lambda() {
        let q = Field::Rational;
        assert_eq!(anharmonic_lambda(&Rho::int(&q, 2)).unwrap(), Rho::Finite(q.ratio(3, 8)));
        assert_eq!(anharmonic_lambda(&Rho::int(&q, 0)), Err(Error::PoleParam));
        let l = anharmonic_lambda(&Rho::int(&q, 2)).unwrap();
        let lhs = anharmonic_orbit(&q, &l);
        let rhs: BTreeSet<Rho> =
            s4_orbit_rho(&q, &Rho::int(&q, 2)).iter().map(|r| anharmonic_lambda(r).unwrap()).collect();
        assert_eq!(lhs, rhs);
    }
}
