//! Independent checks of the lattice code: determinantal divisors for Smith
//! forms, and a closed form for presentations whose relations are monomials.

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use pencil_chow::lattice::smith;
use pencil_chow::{builtin, Presentation};
use proptest::prelude::*;

fn gcd(a: i128, b: i128) -> i128 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

fn det(m: &[Vec<i128>]) -> i128 {
    let n = m.len();
    if n == 1 {
        return m[0][0];
    }
    (0..n)
        .map(|j| {
            let minor: Vec<Vec<i128>> =
                m[1..].iter().map(|r| r.iter().enumerate().filter(|(k, _)| *k != j).map(|(_, x)| *x).collect()).collect();
            let s = if j % 2 == 0 { 1 } else { -1 };
            s * m[0][j] * det(&minor)
        })
        .sum()
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    if n < k {
        return vec![];
    }
    let mut out = subsets(n - 1, k);
    for mut s in subsets(n - 1, k - 1) {
        s.push(n - 1);
        out.push(s);
    }
    out
}

/// Invariant factors as ratios of successive gcds of k×k minors.
fn determinantal_factors(a: &[Vec<i128>]) -> Vec<i128> {
    let (m, n) = (a.len(), a[0].len());
    let mut prev = 1;
    let mut out = Vec::new();
    for k in 1..=m.min(n) {
        let mut g = 0;
        for rs in subsets(m, k) {
            for cs in subsets(n, k) {
                let sub: Vec<Vec<i128>> = rs.iter().map(|&r| cs.iter().map(|&c| a[r][c]).collect()).collect();
                g = gcd(g, det(&sub));
            }
        }
        if g == 0 {
            break;
        }
        out.push(g / prev);
        prev = g;
    }
    out
}

proptest! {
    #[test]
    fn smith_matches_determinantal_divisors(m in 1usize..5, n in 1usize..5, seed in prop::collection::vec(-12i64..12, 16)) {
        let a: Vec<Vec<i128>> = (0..m).map(|i| (0..n).map(|j| seed[i * 4 + j] as i128).collect()).collect();
        let rows: Vec<Vec<BigInt>> = a.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
        let s = smith(&rows, n);
        let got: Vec<i128> = s.diag.iter().map(|x| x.to_i128().unwrap()).collect();
        prop_assert_eq!(got, determinantal_factors(&a));
    }
}

/// Degree-d piece of ℤ[x]/(monomial relations): each monomial m contributes
/// ℤ/g(m), g(m) the gcd of coefficients c over relations c·m' with m' | m.
fn monomial_oracle(p: &Presentation, d: u32) -> (usize, Vec<u64>) {
    let rels: Vec<(Vec<u32>, u64)> = p
        .relations()
        .iter()
        .map(|r| {
            assert_eq!(r.terms().len(), 1, "oracle needs monomial relations");
            let (m, c) = r.terms().iter().next().unwrap();
            (m.clone(), c.to_u64().unwrap())
        })
        .collect();
    let mut free = 0;
    let mut divisors = Vec::new();
    for m in p.monomials(d) {
        let g = rels
            .iter()
            .filter(|(r, _)| r.iter().zip(&m).all(|(a, b)| a <= b))
            .fold(0u64, |g, (_, c)| gcd(g as i128, *c as i128) as u64);
        if g == 0 {
            free += 1;
            continue;
        }
        let mut g = g;
        let mut q = 2;
        while g > 1 {
            let mut pw = 1;
            while g % q == 0 {
                g /= q;
                pw *= q;
            }
            if pw > 1 {
                divisors.push(pw);
            }
            q += 1;
        }
    }
    divisors.sort();
    (free, divisors)
}

#[test]
fn final_and_pgl2_pieces_match_the_monomial_oracle() {
    for name in ["FINAL", "PGL2_PT", "P1"] {
        let p = builtin(name).unwrap();
        for d in 0..=8 {
            let piece = p.graded_piece(d).unwrap();
            let got: Vec<u64> = piece.elementary_divisors().iter().map(|x| x.to_u64().unwrap()).collect();
            assert_eq!((piece.free_rank, got), monomial_oracle(&p, d), "{name} degree {d}");
        }
    }
}

#[test]
fn oracle_values_for_final_and_pgl2() {
    let fin = builtin("FINAL").unwrap();
    let want = [(0, vec![2, 3]), (0, vec![3, 4]), (0, vec![2, 3]), (0, vec![3, 4]), (0, vec![2, 3]), (0, vec![3, 4])];
    for (d, w) in (1..=6).zip(want) {
        assert_eq!(monomial_oracle(&fin, d), w);
    }
    let pgl = builtin("PGL2_PT").unwrap();
    let want = [(1, vec![]), (0, vec![]), (1, vec![]), (0, vec![2]), (1, vec![]), (0, vec![2]), (1, vec![2])];
    for (d, w) in (0..=6).zip(want) {
        assert_eq!(monomial_oracle(&pgl, d), w);
    }
}
