//! Pencils of binary cubics as points of Gr(2,4).

use std::fmt;
use std::hash::{Hash, Hasher};

use crate::error::{Error, Result};
use crate::field::{Fe, Field};
use crate::form::{cubic_hessian, BinaryForm, ProjPoint};
use crate::invariants::newstead_vector;

/// Index pairs of the Plücker coordinates, in storage order.
pub const PLUCKER_PAIRS: [(usize, usize); 6] = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];

/// p₀₁p₂₃ − p₀₂p₁₃ + p₀₃p₁₂.
pub fn plucker_quadric(p: &[Fe; 6]) -> Fe {
    &(&(&p[0] * &p[5]) - &(&p[1] * &p[4])) + &(&p[2] * &p[3])
}

pub fn minors(a: &[Fe], b: &[Fe]) -> [Fe; 6] {
    PLUCKER_PAIRS.map(|(i, j)| &(&a[i] * &b[j]) - &(&a[j] * &b[i]))
}

/// A two-dimensional subspace of cubics. Equality and hashing use the RREF only;
/// the generator pair is kept so that Plücker coordinates (and the invariants,
/// which are not scale-free) refer to the basis the caller supplied.
#[derive(Clone, Debug)]
pub struct Pencil {
    field: Field,
    rref: [[Fe; 4]; 2],
    basis: [BinaryForm; 2],
    plucker: [Fe; 6],
}

impl PartialEq for Pencil {
    fn eq(&self, other: &Pencil) -> bool {
        self.rref == other.rref
    }
}
impl Eq for Pencil {}

impl Hash for Pencil {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.rref.hash(state)
    }
}

/// Row-reduces two rows of length 4; `None` if they are dependent.
fn rref2(a: &[Fe], b: &[Fe]) -> Option<[[Fe; 4]; 2]> {
    let mut m = [a.to_vec(), b.to_vec()];
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..4 {
        if row == 2 {
            break;
        }
        let Some(r) = (row..2).find(|&r| !m[r][col].is_zero()) else { continue };
        m.swap(row, r);
        let inv = m[row][col].inv().unwrap();
        m[row] = m[row].iter().map(|x| x * &inv).collect();
        for other in 0..2 {
            if other != row && !m[other][col].is_zero() {
                let f = m[other][col].clone();
                let sub: Vec<Fe> = m[row].iter().map(|x| x * &f).collect();
                m[other] = m[other].iter().zip(&sub).map(|(x, y)| x - y).collect();
            }
        }
        pivots.push(col);
        row += 1;
    }
    if row < 2 {
        return None;
    }
    let conv = |v: &Vec<Fe>| [v[0].clone(), v[1].clone(), v[2].clone(), v[3].clone()];
    Some([conv(&m[0]), conv(&m[1])])
}

impl Pencil {
    /// ⟨f, g⟩ for two independent cubics.
    pub fn new(f: &BinaryForm, g: &BinaryForm) -> Result<Pencil> {
        for h in [f, g] {
            if h.degree() != 3 {
                return Err(Error::WrongDegree { expected: 3, actual: h.degree() });
            }
        }
        if f.field() != g.field() {
            return Err(Error::FieldMismatch);
        }
        let rref = rref2(f.coeffs(), g.coeffs()).ok_or(Error::LinearlyDependent)?;
        Ok(Pencil {
            field: f.field().clone(),
            rref,
            plucker: minors(f.coeffs(), g.coeffs()),
            basis: [f.clone(), g.clone()],
        })
    }

    pub fn from_ints(field: &Field, f: [i64; 4], g: [i64; 4]) -> Result<Pencil> {
        Pencil::new(&BinaryForm::from_ints(field, &f), &BinaryForm::from_ints(field, &g))
    }

    /// Rebuilds a basis whose minors are exactly `p`: for p_ij ≠ 0 the rows
    /// (p_{i0},…,p_{i3}) and (p_{j0},…,p_{j3}) span the pencil, with minors p_ij·p.
    pub fn from_plucker(field: &Field, p: [Fe; 6]) -> Result<Pencil> {
        if p.iter().any(|x| x.field() != *field) {
            return Err(Error::FieldMismatch);
        }
        if p.iter().all(|x| x.is_zero()) {
            return Err(Error::LinearlyDependent);
        }
        if !plucker_quadric(&p).is_zero() {
            return Err(Error::NotOnPluckerQuadric);
        }
        let full = |i: usize, j: usize| -> Fe {
            if i == j {
                return field.zero();
            }
            let (a, b, s) = if i < j { (i, j, false) } else { (j, i, true) };
            let k = PLUCKER_PAIRS.iter().position(|&q| q == (a, b)).unwrap();
            if s {
                -&p[k]
            } else {
                p[k].clone()
            }
        };
        let k = p.iter().position(|x| !x.is_zero()).unwrap();
        let (i, j) = PLUCKER_PAIRS[k];
        let scale = p[k].inv().unwrap();
        let vi: Vec<Fe> = (0..4).map(|c| &full(i, c) * &scale).collect();
        let vj: Vec<Fe> = (0..4).map(|c| full(j, c)).collect();
        let pen = Pencil::new(&BinaryForm::new(field, vi)?, &BinaryForm::new(field, vj)?)?;
        debug_assert_eq!(pen.plucker, p);
        Ok(pen)
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn rref(&self) -> &[[Fe; 4]; 2] {
        &self.rref
    }

    pub fn basis(&self) -> &[BinaryForm; 2] {
        &self.basis
    }

    /// Plücker coordinates of the stored basis, order (p₀₁,p₀₂,p₀₃,p₁₂,p₁₃,p₂₃).
    pub fn plucker(&self) -> &[Fe; 6] {
        &self.plucker
    }

    /// The same pencil with the RREF rows as basis.
    pub fn normalized(&self) -> Pencil {
        let f = BinaryForm::new(&self.field, self.rref[0].to_vec()).unwrap();
        let g = BinaryForm::new(&self.field, self.rref[1].to_vec()).unwrap();
        Pencil::new(&f, &g).unwrap()
    }

    /// Same pencil, new basis (must span the same space).
    pub fn with_basis(&self, f: &BinaryForm, g: &BinaryForm) -> Result<Pencil> {
        let p = Pencil::new(f, g)?;
        if p != *self {
            return Err(Error::Internal("basis spans a different pencil".into()));
        }
        Ok(p)
    }

    pub fn contains(&self, h: &BinaryForm) -> bool {
        if h.degree() != 3 {
            return false;
        }
        // h is in the span iff every 3x3 minor vanishes; reduce against the RREF
        let mut r: Vec<Fe> = h.coeffs().to_vec();
        for row in &self.rref {
            let pc = row.iter().position(|x| !x.is_zero()).unwrap();
            let f = r[pc].clone();
            if !f.is_zero() {
                r = r.iter().zip(row).map(|(x, y)| x - &(y * &f)).collect();
            }
        }
        r.iter().all(|x| x.is_zero())
    }

    /// Newstead normal form of the Wronskian,
    /// (p₀₁ : 2p₀₂ : 3p₀₃+p₁₂ : 2p₁₃ : p₂₃), as a point of P⁴.
    pub fn wronskian_point(&self) -> Result<ProjPoint> {
        let n = newstead_vector(&self.plucker);
        ProjPoint::new(n.to_vec()).map_err(|_| Error::Internal("zero Wronskian for a pencil".into()))
    }

    /// Jacobian of the stored generators (equals 3 times the Newstead vector).
    pub fn jacobian(&self) -> BinaryForm {
        self.basis[0].jacobian(&self.basis[1]).expect("cubics")
    }

    /// Members λf+μg that are cubes of linear forms, as points (λ:μ).
    /// With `use_extension`, roots are sought in the designated quadratic
    /// extension of a finite field (ℚ has none; the flag is then ignored).
    pub fn cube_members(&self, use_extension: bool) -> Result<CubeMembers> {
        let (field, f, g) = if use_extension && self.field.is_finite() {
            let e = self.field.designated_extension()?;
            let emb = |h: &BinaryForm| -> Result<BinaryForm> {
                BinaryForm::new(&e, h.coeffs().iter().map(|x| e.embed(x)).collect::<Result<Vec<_>>>()?)
            };
            (e.clone(), emb(&self.basis[0])?, emb(&self.basis[1])?)
        } else {
            (self.field.clone(), self.basis[0].clone(), self.basis[1].clone())
        };
        // Hessian(λf+μg) coefficients are quadratic forms in (λ, μ); read each off
        // from the values at (1,0), (0,1), (1,1).
        let hess = |l: &Fe, m: &Fe| -> [Fe; 3] {
            let c: Vec<Fe> = f.coeffs().iter().zip(g.coeffs()).map(|(a, b)| &(a * l) + &(b * m)).collect();
            cubic_hessian(&c)
        };
        let (one, zero) = (field.one(), field.zero());
        let h10 = hess(&one, &zero);
        let h01 = hess(&zero, &one);
        let h11 = hess(&one, &one);
        let quads: Vec<BinaryForm> = (0..3)
            .map(|k| {
                let a = h10[k].clone();
                let c = h01[k].clone();
                let b = &(&h11[k] - &a) - &c;
                BinaryForm::new(&field, vec![a, b, c]).unwrap()
            })
            .collect();
        let nonzero: Vec<&BinaryForm> = quads.iter().filter(|q| !q.is_zero()).collect();
        if nonzero.is_empty() {
            return Err(Error::Internal("every member of a pencil is a cube".into()));
        }
        let mut common = nonzero[0].clone();
        for q in &nonzero[1..] {
            common = common.gcd(q)?;
        }
        let mut points: Vec<ProjPoint> = if common.degree() == 0 {
            vec![]
        } else {
            common.roots()?.into_iter().map(|(p, _)| p).collect()
        };
        points.sort();
        points.dedup();
        Ok(CubeMembers { field, points })
    }
}

/// Result of [`Pencil::cube_members`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CubeMembers {
    /// Field the points live in.
    pub field: Field,
    pub points: Vec<ProjPoint>,
}

impl CubeMembers {
    pub fn count(&self) -> usize {
        self.points.len()
    }
}

impl fmt::Display for Pencil {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "f={};g={}", self.basis[0], self.basis[1])
    }
}
