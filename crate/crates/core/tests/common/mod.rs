//! Independent dense oracles over ℚ used to cross-check the library.
//!
//! Nothing here calls the library's deciders: structure constants are read
//! out once and everything else is plain Gaussian elimination.

#![allow(dead_code)]

use contactlie::{LieAlgebra, Rational, RationalAlgebra, Scalar};
use num_traits::{One, Zero};
use rand::Rng;

/// `c[i][j][k]` with `[e_i, e_j] = Σ_k c[i][j][k] e_k`.
pub type Table = Vec<Vec<Vec<Rational>>>;

pub fn q(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

pub fn table_of<S: contactlie::Coefficient>(l: &LieAlgebra<S>) -> Table {
    let n = l.dim();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    (0..n)
                        .map(|k| {
                            let c = l.constant(i, j, k).to_scalar();
                            c.as_rational().cloned().expect("rational structure constants")
                        })
                        .collect()
                })
                .collect()
        })
        .collect()
}

pub fn det(mut m: Vec<Vec<Rational>>) -> Rational {
    let n = m.len();
    let mut sign = Rational::one();
    let mut out = Rational::one();
    for col in 0..n {
        let Some(p) = (col..n).find(|&r| !m[r][col].is_zero()) else {
            return Rational::zero();
        };
        if p != col {
            m.swap(p, col);
            sign = -sign;
        }
        let pivot = m[col][col].clone();
        out *= &pivot;
        for r in (col + 1)..n {
            if m[r][col].is_zero() {
                continue;
            }
            let f = &m[r][col] / &pivot;
            for c in col..n {
                let t = &f * &m[col][c];
                m[r][c] -= t;
            }
        }
    }
    out * sign
}

/// `M_ij = dη(e_i, e_j) = -η([e_i, e_j])`.
pub fn d_matrix(t: &Table, eta: &[Rational]) -> Vec<Vec<Rational>> {
    let n = t.len();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| -(0..n).map(|k| &eta[k] * &t[i][j][k]).fold(Rational::zero(), |a, b| a + b))
                .collect()
        })
        .collect()
}

/// η ∧ (dη)^n ≠ 0 iff the bordered skew matrix [[M, η], [-ηᵀ, 0]] is invertible.
pub fn contact_oracle(t: &Table, eta: &[Rational]) -> bool {
    let n = t.len();
    assert!(n % 2 == 1);
    let mut m = d_matrix(t, eta);
    for (i, row) in m.iter_mut().enumerate() {
        row.push(eta[i].clone());
    }
    let mut last: Vec<Rational> = eta.iter().map(|x| -x.clone()).collect();
    last.push(Rational::zero());
    m.push(last);
    !det(m).is_zero()
}

pub fn frobenius_oracle(t: &Table, alpha: &[Rational]) -> bool {
    assert!(t.len() % 2 == 0);
    !det(d_matrix(t, alpha)).is_zero()
}

pub fn jacobi_oracle(t: &Table) -> bool {
    let n = t.len();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                for l in 0..n {
                    let mut s = Rational::zero();
                    for m in 0..n {
                        s += &t[i][j][m] * &t[m][k][l] + &t[j][k][m] * &t[m][i][l] + &t[k][i][m] * &t[m][j][l];
                    }
                    if !s.is_zero() {
                        return false;
                    }
                }
            }
        }
    }
    true
}

pub fn from_table(t: &Table) -> RationalAlgebra {
    let n = t.len();
    let mut l = LieAlgebra::abelian(n);
    for i in 0..n {
        for j in (i + 1)..n {
            if t[i][j].iter().any(|c| !c.is_zero()) {
                l.set_bracket(i, j, t[i][j].clone()).unwrap();
            }
        }
    }
    l
}

/// Samples from a small integer box; for checks that hold off a proper subvariety.
pub fn random_covector(rng: &mut impl Rng, n: usize, bound: i64) -> Vec<Rational> {
    (0..n).map(|_| q(rng.gen_range(-bound..=bound))).collect()
}

/// Generic nondegeneracy in a family: true if some random covector works.
pub fn some_random_form(rng: &mut impl Rng, t: &Table, tries: usize, check: impl Fn(&Table, &[Rational]) -> bool) -> bool {
    (0..tries).any(|_| check(t, &random_covector(rng, t.len(), 7)))
}

pub fn covector(n: usize, entries: &[(usize, i64)]) -> Vec<Rational> {
    let mut v = vec![Rational::zero(); n];
    for (i, c) in entries {
        v[*i] = q(*c);
    }
    v
}

pub fn is_rational_nonzero(s: &Scalar) -> bool {
    s.as_rational().is_some_and(|r| !r.is_zero())
}
