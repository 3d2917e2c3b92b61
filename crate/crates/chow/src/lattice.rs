//! Integer lattices: sparse echelon bases with coset normal forms, Smith
//! normal form with column transforms, cokernels and affine solving.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub type Vector = Vec<BigInt>;
/// Sparse vector: (column, nonzero value), columns increasing.
pub type Sparse = Vec<(usize, BigInt)>;

pub fn to_sparse(v: &[BigInt]) -> Sparse {
    v.iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(i, x)| (i, x.clone())).collect()
}

pub fn to_dense(v: &Sparse, n: usize) -> Vector {
    let mut out = vec![BigInt::zero(); n];
    for (i, x) in v {
        out[*i] = x.clone();
    }
    out
}

/// a·x + b·y.
fn lincomb(a: &BigInt, x: &Sparse, b: &BigInt, y: &Sparse) -> Sparse {
    let mut out = Vec::with_capacity(x.len() + y.len());
    let (mut i, mut j) = (0, 0);
    while i < x.len() || j < y.len() {
        let (c, v) = match (x.get(i), y.get(j)) {
            (Some((cx, vx)), Some((cy, _))) if cx < cy => {
                i += 1;
                (*cx, a * vx)
            }
            (Some((cx, _)), Some((cy, vy))) if cy < cx => {
                j += 1;
                (*cy, b * vy)
            }
            (Some((cx, vx)), Some((_, vy))) => {
                i += 1;
                j += 1;
                (*cx, a * vx + b * vy)
            }
            (Some((cx, vx)), None) => {
                i += 1;
                (*cx, a * vx)
            }
            (None, Some((cy, vy))) => {
                j += 1;
                (*cy, b * vy)
            }
            (None, None) => unreachable!(),
        };
        if !v.is_zero() {
            out.push((c, v));
        }
    }
    out
}

fn axpy_dense(y: &mut [BigInt], a: &BigInt, x: &Sparse) {
    for (i, v) in x {
        y[*i] += a * v;
    }
}

fn entry(x: &Sparse, c: usize) -> BigInt {
    x.binary_search_by_key(&c, |(i, _)| *i).map(|k| x[k].1.clone()).unwrap_or_default()
}

/// Echelon basis of a sublattice of ℤⁿ: one row per pivot column, positive pivots.
#[derive(Clone, Debug, Default)]
pub struct Echelon {
    ncols: usize,
    rows: BTreeMap<usize, Sparse>,
}

impl Echelon {
    pub fn new(ncols: usize) -> Echelon {
        Echelon { ncols, rows: BTreeMap::new() }
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Rows as (pivot column, dense row).
    pub fn dense_rows(&self) -> Vec<(usize, Vector)> {
        self.rows.iter().map(|(c, r)| (*c, to_dense(r, self.ncols))).collect()
    }

    pub fn insert(&mut self, v: &[BigInt]) {
        assert_eq!(v.len(), self.ncols);
        self.insert_sparse(to_sparse(v));
    }

    pub fn insert_sparse(&mut self, mut v: Sparse) {
        while let Some((c, _)) = v.first() {
            let c = *c;
            match self.rows.remove(&c) {
                None => {
                    if v[0].1.is_negative() {
                        v.iter_mut().for_each(|(_, x)| *x = -&*x);
                    }
                    self.rows.insert(c, v);
                    return;
                }
                Some(r) => {
                    let (a, b) = (r[0].1.clone(), v[0].1.clone());
                    if (&b % &a).is_zero() {
                        // cheap case: v -= (b/a)·r
                        let q = &b / &a;
                        v = lincomb(&BigInt::one(), &v, &-q, &r);
                        self.rows.insert(c, r);
                        continue;
                    }
                    let e = a.extended_gcd(&b);
                    let mut piv = lincomb(&e.x, &r, &e.y, &v);
                    let rest = lincomb(&(&a / &e.gcd), &v, &-(&b / &e.gcd), &r);
                    if piv[0].1.is_negative() {
                        piv.iter_mut().for_each(|(_, x)| *x = -&*x);
                    }
                    self.rows.insert(c, piv);
                    v = rest;
                }
            }
        }
    }

    /// Canonical coset representative: 0 ≤ r_c < pivot_c at every pivot column.
    pub fn reduce(&self, v: &[BigInt]) -> Vector {
        let mut r = v.to_vec();
        for (&c, row) in &self.rows {
            let q = r[c].div_floor(&row[0].1);
            if !q.is_zero() {
                axpy_dense(&mut r, &-q, row);
            }
        }
        r
    }

    pub fn contains(&self, v: &[BigInt]) -> bool {
        self.reduce(v).iter().all(|x| x.is_zero())
    }
}

/// Result of a Smith normal form computation on the row lattice of a matrix.
///
/// For rows R (m×n) we find unimodular V with rowspan(R·V) = rowspan(diag);
/// generator i of the cokernel is row i of `v_inv`.
#[derive(Clone, Debug)]
pub struct Smith {
    pub diag: Vec<BigInt>,
    pub v_inv: Vec<Vector>,
}

pub fn smith(rows: &[Vector], ncols: usize) -> Smith {
    let mut a: Vec<Vector> = rows.iter().filter(|r| r.iter().any(|x| !x.is_zero())).cloned().collect();
    let m = a.len();
    let n = ncols;
    let mut v_inv: Vec<Vector> = (0..n)
        .map(|i| (0..n).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }).collect())
        .collect();
    let mut diag = Vec::new();
    let mut t = 0;
    while t < m.min(n) {
        let mut best: Option<(usize, usize)> = None;
        'scan: for i in t..m {
            for j in t..n {
                if !a[i][j].is_zero() && best.is_none_or(|(bi, bj)| a[i][j].abs() < a[bi][bj].abs()) {
                    best = Some((i, j));
                    if a[i][j].abs().is_one() {
                        break 'scan;
                    }
                }
            }
        }
        let Some((bi, bj)) = best else { break };
        a.swap(t, bi);
        if bj != t {
            for row in a.iter_mut() {
                row.swap(t, bj);
            }
            v_inv.swap(t, bj);
        }
        let mut done = true;
        let pivot_row = a[t].clone();
        for i in t + 1..m {
            if !a[i][t].is_zero() {
                let q = a[i][t].div_floor(&pivot_row[t]);
                for j in t..n {
                    if !pivot_row[j].is_zero() {
                        let d = &q * &pivot_row[j];
                        a[i][j] -= d;
                    }
                }
                if !a[i][t].is_zero() {
                    done = false;
                }
            }
        }
        let col_rows: Vec<usize> = (0..m).filter(|&i| !a[i][t].is_zero()).collect();
        for j in t + 1..n {
            if !a[t][j].is_zero() {
                let q = a[t][j].div_floor(&a[t][t]);
                for &i in &col_rows {
                    let d = &q * &a[i][t];
                    a[i][j] -= d;
                }
                let rj = v_inv[j].clone();
                for (x, y) in v_inv[t].iter_mut().zip(&rj) {
                    if !y.is_zero() {
                        *x += &q * y;
                    }
                }
                if !a[t][j].is_zero() {
                    done = false;
                }
            }
        }
        if !done {
            continue;
        }
        let piv = a[t][t].clone();
        let bad = (t + 1..m).find(|&i| (t + 1..n).any(|j| !(&a[i][j] % &piv).is_zero()));
        if let Some(i) = bad {
            let ri = a[i].clone();
            for (x, y) in a[t].iter_mut().zip(&ri) {
                *x += y;
            }
            continue;
        }
        diag.push(piv.abs());
        t += 1;
    }
    Smith { diag, v_inv }
}

/// ℤⁿ / L as (free rank, cyclic generators with orders > 1, free generators).
#[derive(Clone, Debug)]
pub struct Cokernel {
    pub free_rank: usize,
    pub invariant_factors: Vec<BigInt>,
    /// (generator in ℤⁿ, order; 0 for free generators)
    pub generators: Vec<(Vector, BigInt)>,
}

/// Cokernel of an echelon lattice. Unit pivots are eliminated first (each one
/// just removes a basis vector), then the rest goes through [`smith`].
pub fn cokernel(ech: &Echelon) -> Cokernel {
    let n = ech.ncols;
    let mut rows: BTreeMap<usize, Sparse> = ech.rows.clone();
    let units: Vec<usize> = rows.iter().filter(|(_, r)| r[0].1.is_one()).map(|(c, _)| *c).collect();
    for &c in &units {
        let r = rows[&c].clone();
        for (&k, other) in rows.iter_mut() {
            if k != c {
                let x = entry(other, c);
                if !x.is_zero() {
                    *other = lincomb(&BigInt::one(), other, &-x, &r);
                }
            }
        }
    }
    for c in &units {
        rows.remove(c);
    }
    let removed: std::collections::BTreeSet<usize> = units.into_iter().collect();
    let keep: Vec<usize> = (0..n).filter(|c| !removed.contains(c)).collect();
    let pos: BTreeMap<usize, usize> = keep.iter().enumerate().map(|(i, c)| (*c, i)).collect();
    let small: Vec<Vector> = rows
        .values()
        .map(|r| {
            let mut v = vec![BigInt::zero(); keep.len()];
            for (c, x) in r {
                v[pos[c]] = x.clone();
            }
            v
        })
        .collect();
    let s = smith(&small, keep.len());
    let embed = |v: &Vector| -> Vector {
        let mut out = vec![BigInt::zero(); n];
        for (i, x) in v.iter().enumerate() {
            out[keep[i]] = x.clone();
        }
        out
    };
    let mut invariant_factors = Vec::new();
    let mut generators = Vec::new();
    for (i, q) in s.diag.iter().enumerate() {
        if !q.is_one() {
            invariant_factors.push(q.clone());
            generators.push((embed(&s.v_inv[i]), q.clone()));
        }
    }
    for i in s.diag.len()..keep.len() {
        generators.push((embed(&s.v_inv[i]), BigInt::zero()));
    }
    Cokernel { free_rank: keep.len() - s.diag.len(), invariant_factors, generators }
}

/// Solutions a ∈ ℤᵏ of Σ aᵢ·bᵢ ≡ target modulo the lattice spanned by `relations`,
/// where bᵢ, target, relations live in ℤⁿ. Returns a particular solution and
/// generators of the homogeneous solution lattice.
pub fn solve_affine(basis: &[Vector], relations: &[Vector], target: &[BigInt]) -> Option<(Vector, Vec<Vector>)> {
    let n = target.len();
    let k = basis.len();
    let mut ech = Echelon::new(n + k);
    for (i, b) in basis.iter().enumerate() {
        let mut row = b.clone();
        row.extend((0..k).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }));
        ech.insert(&row);
    }
    for r in relations {
        let mut row = r.clone();
        row.extend(std::iter::repeat_n(BigInt::zero(), k));
        ech.insert(&row);
    }
    let mut t = target.to_vec();
    t.extend(std::iter::repeat_n(BigInt::zero(), k));
    for (&c, row) in &ech.rows {
        if c >= n {
            break;
        }
        let (q, rem) = t[c].div_rem(&row[0].1);
        if !rem.is_zero() {
            return None;
        }
        axpy_dense(&mut t, &-q, row);
    }
    if t[..n].iter().any(|x| !x.is_zero()) {
        return None;
    }
    let particular: Vector = t[n..].iter().map(|x| -x).collect();
    let kernel = ech.rows.iter().filter(|(&c, _)| c >= n).map(|(_, r)| to_dense(r, n + k)[n..].to_vec()).collect();
    Some((particular, kernel))
}
