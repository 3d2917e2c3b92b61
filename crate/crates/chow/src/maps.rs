//! Ring maps between presentations, pullback-constrained solving and the
//! projection-formula pushforward.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{ChowError, Result};
use crate::lattice::solve_affine;
use crate::poly::Poly;
use crate::presentation::Presentation;

/// A graded ring map given by generator images; target degree = `degree_factor` × source degree.
#[derive(Clone, Debug)]
pub struct RingMap {
    pub name: String,
    pub source: Presentation,
    pub target: Presentation,
    pub images: Vec<Poly>,
    pub degree_factor: u32,
}

/// Outcome of checking every source relation up to a degree bound.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MapCheck {
    pub checked: usize,
    /// Source relations whose images are not in the target ideal, formatted.
    pub failures: Vec<String>,
}

impl MapCheck {
    pub fn ok(&self) -> bool {
        self.failures.is_empty()
    }
}

impl RingMap {
    /// `images` pairs a source generator name with target-element text; unnamed generators map to 0.
    pub fn new(
        name: &str,
        source: &Presentation,
        target: &Presentation,
        images: &[(&str, &str)],
        degree_factor: u32,
    ) -> Result<RingMap> {
        let mut imgs = vec![Poly::zero(target.nvars()); source.nvars()];
        for (g, t) in images {
            let i = source.gen_index(g).ok_or_else(|| ChowError::UnknownGenerator(g.to_string()))?;
            imgs[i] = target.parse_element(t)?;
        }
        RingMap::from_images(name, source, target, imgs, degree_factor)
    }

    pub fn from_images(
        name: &str,
        source: &Presentation,
        target: &Presentation,
        images: Vec<Poly>,
        degree_factor: u32,
    ) -> Result<RingMap> {
        for (i, img) in images.iter().enumerate() {
            let want = degree_factor * source.gens()[i].degree;
            if let Some(d) = target.degree_of(img)? {
                if d != want {
                    return Err(ChowError::DegreeMismatch {
                        generator: source.gens()[i].name.clone(),
                        expected: want,
                        actual: d,
                    });
                }
            }
        }
        Ok(RingMap {
            name: name.to_string(),
            source: source.clone(),
            target: target.clone(),
            images,
            degree_factor,
        })
    }

    pub fn apply(&self, x: &Poly) -> Poly {
        x.substitute(&self.images, self.target.nvars())
    }

    /// Every source relation (families expanded to `bound`) must land in the target ideal.
    pub fn check(&self, bound: u32) -> Result<MapCheck> {
        let mut failures = Vec::new();
        let rels = self.source.relations_up_to(bound)?;
        for r in &rels {
            if !self.target.in_ideal(&self.apply(r))? {
                failures.push(self.source.format(r));
            }
        }
        Ok(MapCheck { checked: rels.len(), failures })
    }
}

pub fn verify_map(m: &RingMap, bound: u32) -> Result<bool> {
    Ok(m.check(bound)?.ok())
}

/// Finds x = Σ aᵢ·basisᵢ in `source` with m(x) ≡ value for every constraint.
/// The answer is returned in normal form; it must be unique modulo the source ideal.
pub fn solve_by_pullbacks(source: &Presentation, basis: &[Poly], constraints: &[(&RingMap, Poly)]) -> Result<Poly> {
    let d = basis
        .iter()
        .map(|b| source.degree_of(b))
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .max()
        .unwrap_or(0);
    for b in basis {
        if source.degree_of(b)?.is_some_and(|e| e != d) {
            return Err(ChowError::NotHomogeneous(source.format(b)));
        }
    }
    let mut rows: Vec<Vec<BigInt>> = vec![Vec::new(); basis.len()];
    let mut relations: Vec<Vec<BigInt>> = Vec::new();
    let mut target = Vec::new();
    let mut offset = 0;
    for (m, value) in constraints {
        let td = m.degree_factor * d;
        if m.target.degree_of(value)?.is_some_and(|e| e != td) {
            return Err(ChowError::NotHomogeneous(m.target.format(value)));
        }
        let (mons, ech) = m.target.relation_lattice(td)?;
        let width = mons.len();
        for (row, b) in rows.iter_mut().zip(basis) {
            row.extend(m.target.coords(&mons, &m.apply(b)));
        }
        target.extend(m.target.coords(&mons, value));
        for (_, r) in ech.dense_rows() {
            let mut full = vec![BigInt::zero(); offset];
            full.extend(r);
            relations.push(full);
        }
        offset += width;
    }
    for r in relations.iter_mut() {
        r.resize(offset, BigInt::zero());
    }
    let (a, kernel) = solve_affine(&rows, &relations, &target).ok_or(ChowError::NoSolution)?;
    let combine = |coeffs: &[BigInt]| -> Poly {
        basis.iter().zip(coeffs).fold(Poly::zero(source.nvars()), |acc, (b, c)| acc.add(&b.scale(c)))
    };
    for k in &kernel {
        if !source.in_ideal(&combine(k))? {
            return Err(ChowError::NonUnique);
        }
    }
    source.normal_form(&combine(&a))
}

/// φ_*(φ^*(y)) = y · φ_*(1).
pub fn pushforward_projection(y: &Poly, pushforward_of_one: &Poly) -> Poly {
    y.mul(pushforward_of_one)
}
