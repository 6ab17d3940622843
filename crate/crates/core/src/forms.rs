//! Left-invariant exterior forms on a Lie algebra.
//!
//! A k-form on an n-dimensional algebra is stored sparsely as a map from
//! k-element subsets of `0..n` (bitmasks) to coefficients: the entry for
//! `{i1 < ... < ik}` is the coefficient of `e_i1* ∧ ... ∧ e_ik*`, which equals
//! the value of the form on `(e_i1, ..., e_ik)`.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::liealg::{format_combination, Assignment, LieAlgebra};
use crate::linalg::{Subspace, Vector};
use crate::scalar::{Coefficient, Scalar};

/// Largest supported dimension (masks are `u64`).
pub const MAX_DIM: usize = 64;

/// Homogeneous exterior form of a fixed degree.
#[derive(Debug, Clone, PartialEq)]
pub struct KForm<S> {
    dim: usize,
    degree: usize,
    terms: BTreeMap<u64, S>,
}

/// Indices set in `mask`, ascending.
pub fn mask_indices(mask: u64) -> Vec<usize> {
    (0..64).filter(|i| mask & (1 << i) != 0).collect()
}

fn mask_of(indices: &[usize]) -> Option<(u64, bool)> {
    // mask and whether sorting needs an odd permutation
    let mut mask = 0u64;
    let mut odd = false;
    for (pos, &i) in indices.iter().enumerate() {
        if i >= MAX_DIM || mask & (1 << i) != 0 {
            return None;
        }
        let greater_before = indices[..pos].iter().filter(|&&j| j > i).count();
        odd ^= greater_before % 2 == 1;
        mask |= 1 << i;
    }
    Some((mask, odd))
}

/// Sign of `e_A ∧ e_B` relative to `e_{A ∪ B}`, for disjoint masks.
fn wedge_sign(a: u64, b: u64) -> bool {
    let mut inversions = 0u32;
    let mut rest = b;
    while rest != 0 {
        let j = rest.trailing_zeros();
        inversions += (a >> (j + 1)).count_ones();
        rest &= rest - 1;
    }
    inversions % 2 == 1
}

impl<S: Coefficient> KForm<S> {
    pub fn zero(dim: usize, degree: usize) -> Self {
        assert!(dim <= MAX_DIM, "dimension above {MAX_DIM} unsupported");
        KForm {
            dim,
            degree,
            terms: BTreeMap::new(),
        }
    }

    /// Constant 0-form.
    pub fn scalar(dim: usize, c: S) -> Self {
        let mut out = Self::zero(dim, 0);
        out.insert(0, c);
        out
    }

    /// Dual basis covector `e_i*`.
    pub fn covector(dim: usize, i: usize) -> Self {
        let mut out = Self::zero(dim, 1);
        out.insert(1 << i, S::one());
        out
    }

    /// 1-form with the given coordinates in the dual basis.
    pub fn from_covector(coords: &[S]) -> Self {
        let mut out = Self::zero(coords.len(), 1);
        for (i, c) in coords.iter().enumerate() {
            out.insert(1 << i, c.clone());
        }
        out
    }

    /// Form from `(indices, coefficient)` pairs; indices may be unsorted.
    pub fn from_terms(dim: usize, degree: usize, terms: impl IntoIterator<Item = (Vec<usize>, S)>) -> Result<Self> {
        let mut out = Self::zero(dim, degree);
        for (idx, c) in terms {
            if idx.len() != degree {
                return Err(Error::Arity {
                    degree,
                    given: idx.len(),
                });
            }
            if idx.iter().any(|&i| i >= dim) {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: idx.iter().max().map_or(0, |m| m + 1),
                });
            }
            let Some((mask, odd)) = mask_of(&idx) else {
                continue;
            };
            out.insert(mask, if odd { -c } else { c });
        }
        Ok(out)
    }

    fn insert(&mut self, mask: u64, c: S) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(mask).or_insert_with(S::zero);
        *entry = entry.clone() + c;
        if entry.is_zero() {
            self.terms.remove(&mask);
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Nonzero terms as `(mask, coefficient)`.
    pub fn terms(&self) -> impl Iterator<Item = (u64, &S)> {
        self.terms.iter().map(|(m, c)| (*m, c))
    }

    /// Coefficient of `e_i1* ∧ ... ∧ e_ik*` for arbitrary index order.
    pub fn coefficient(&self, indices: &[usize]) -> S {
        match mask_of(indices) {
            Some((mask, odd)) if indices.len() == self.degree => {
                let c = self.terms.get(&mask).cloned().unwrap_or_else(S::zero);
                if odd {
                    -c
                } else {
                    c
                }
            }
            _ => S::zero(),
        }
    }

    /// Coordinates of a 1-form.
    pub fn as_covector(&self) -> Result<Vector<S>> {
        self.require_degree(1, "covector coordinates")?;
        Ok((0..self.dim).map(|i| self.coefficient(&[i])).collect())
    }

    fn require_degree(&self, degree: usize, what: &str) -> Result<()> {
        if self.degree != degree {
            return Err(Error::Precondition(format!(
                "{what} needs a {degree}-form, got degree {}",
                self.degree
            )));
        }
        Ok(())
    }

    fn same_space(&self, other: &KForm<S>) -> Result<()> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: other.dim,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &KForm<S>) -> Result<KForm<S>> {
        self.same_space(other)?;
        if self.degree != other.degree && !self.is_zero() && !other.is_zero() {
            return Err(Error::Precondition(format!(
                "cannot add forms of degree {} and {}",
                self.degree, other.degree
            )));
        }
        let mut out = if self.is_zero() { other.clone() } else { self.clone() };
        let src = if self.is_zero() { self } else { other };
        for (m, c) in &src.terms {
            out.insert(*m, c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &KForm<S>) -> Result<KForm<S>> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> KForm<S> {
        self.scale(&-S::one())
    }

    pub fn scale(&self, c: &S) -> KForm<S> {
        let mut out = Self::zero(self.dim, self.degree);
        for (m, x) in &self.terms {
            out.insert(*m, c.clone() * x.clone());
        }
        out
    }

    pub fn wedge(&self, other: &KForm<S>) -> Result<KForm<S>> {
        self.same_space(other)?;
        let mut out = Self::zero(self.dim, self.degree + other.degree);
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                if a & b != 0 {
                    continue;
                }
                let v = x.clone() * y.clone();
                out.insert(a | b, if wedge_sign(*a, *b) { -v } else { v });
            }
        }
        Ok(out)
    }

    /// `θ^k`; `θ^0` is the constant 1.
    pub fn power(&self, k: usize) -> KForm<S> {
        let mut out = Self::scalar(self.dim, S::one());
        for _ in 0..k {
            if out.is_zero() {
                return Self::zero(self.dim, self.degree * k);
            }
            out = out.wedge(self).expect("same space");
        }
        out
    }

    /// Chevalley-Eilenberg differential:
    /// `dθ(x0..xk) = Σ_{i<j} (-1)^{i+j} θ([xi, xj], x0..x̂i..x̂j..xk)`.
    pub fn ce_d(&self, algebra: &LieAlgebra<S>) -> Result<KForm<S>> {
        if algebra.dim() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: algebra.dim(),
                found: self.dim,
            });
        }
        let mut out = Self::zero(self.dim, self.degree + 1);
        for (&(a, b), bracket) in algebra.structure_constants() {
            for (&l, c) in bracket {
                for (&t_mask, t) in &self.terms {
                    if t_mask & (1 << l) == 0 {
                        continue;
                    }
                    let rest = t_mask & !(1 << l);
                    if rest & ((1 << a) | (1 << b)) != 0 {
                        continue;
                    }
                    let target = rest | (1 << a) | (1 << b);
                    let pos_a = (target & ((1 << a) - 1)).count_ones();
                    let pos_b = (target & ((1 << b) - 1)).count_ones();
                    let below_l = (rest & ((1 << l) - 1)).count_ones();
                    let odd = (pos_a + pos_b + below_l) % 2 == 1;
                    let v = c.clone() * t.clone();
                    out.insert(target, if odd { -v } else { v });
                }
            }
        }
        Ok(out)
    }

    /// Contraction `i_v θ`, inserting `v` in the first slot.
    pub fn interior(&self, v: &[S]) -> Result<KForm<S>> {
        if v.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: v.len(),
            });
        }
        if self.degree == 0 {
            return Err(Error::Arity { degree: 0, given: 1 });
        }
        let mut out = Self::zero(self.dim, self.degree - 1);
        for (&mask, c) in &self.terms {
            for (pos, i) in mask_indices(mask).into_iter().enumerate() {
                if v[i].is_zero() {
                    continue;
                }
                let x = v[i].clone() * c.clone();
                out.insert(mask & !(1 << i), if pos % 2 == 1 { -x } else { x });
            }
        }
        Ok(out)
    }

    /// `θ(v1, ..., vk)`.
    pub fn eval(&self, vectors: &[Vector<S>]) -> Result<S> {
        if vectors.len() != self.degree {
            return Err(Error::Arity {
                degree: self.degree,
                given: vectors.len(),
            });
        }
        let mut current = self.clone();
        for v in vectors {
            current = current.interior(v)?;
        }
        Ok(current.terms.get(&0).cloned().unwrap_or_else(S::zero))
    }

    /// Coefficient of the volume form `e_1* ∧ ... ∧ e_n*` of a top-degree form.
    pub fn top_coefficient(&self) -> Result<S> {
        if self.degree != self.dim {
            return Err(Error::Precondition(format!(
                "top coefficient needs an {}-form, got degree {}",
                self.dim, self.degree
            )));
        }
        let full = if self.dim == 64 { u64::MAX } else { (1u64 << self.dim) - 1 };
        Ok(self.terms.get(&full).cloned().unwrap_or_else(S::zero))
    }

    /// Antisymmetric matrix `ω(e_i, e_j)` of a 2-form.
    pub fn two_form_matrix(&self) -> Result<Vec<Vector<S>>> {
        self.require_degree(2, "two-form matrix")?;
        let n = self.dim;
        let mut m = vec![vec![S::zero(); n]; n];
        for (&mask, c) in &self.terms {
            let idx = mask_indices(mask);
            m[idx[0]][idx[1]] = c.clone();
            m[idx[1]][idx[0]] = -c.clone();
        }
        Ok(m)
    }

    /// `{x : ω(x, ·) = 0}` for a 2-form.
    pub fn radical(&self, constraints: &[S]) -> Result<Subspace<S>> {
        let m = self.two_form_matrix()?;
        Subspace::kernel(self.dim, m, constraints)
    }

    /// Rank of a 2-form (twice the largest `k` with `ω^k ≠ 0`).
    pub fn rank(&self, constraints: &[S]) -> Result<usize> {
        let r = self.radical(constraints)?;
        Ok(self.dim - r.dim())
    }

    /// Pull back along the linear map sending new basis vector `i` to
    /// `images[i]` (old coordinates).
    pub fn pullback(&self, images: &[Vector<S>]) -> Result<KForm<S>> {
        let m = images.len();
        let mut out = Self::zero(m, self.degree);
        if self.degree > m {
            return Ok(out);
        }
        for_each_subset(m, self.degree, &mut |subset| {
            let vs: Vec<Vector<S>> = subset.iter().map(|&i| images[i].clone()).collect();
            let v = self.eval(&vs)?;
            let (mask, _) = mask_of(subset).expect("sorted distinct");
            out.insert(mask, v);
            Ok(())
        })?;
        Ok(out)
    }

    /// Same form viewed on a larger algebra whose first basis vectors are ours.
    pub fn extend_dim(&self, dim: usize) -> KForm<S> {
        assert!(dim >= self.dim);
        KForm {
            dim,
            degree: self.degree,
            terms: self.terms.clone(),
        }
    }

    /// Pullback to the span of the first `k` basis vectors.
    pub fn restrict_leading(&self, k: usize) -> KForm<S> {
        let keep = if k >= 64 { u64::MAX } else { (1u64 << k) - 1 };
        KForm {
            dim: k,
            degree: self.degree,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| *m & !keep == 0)
                .map(|(m, c)| (*m, c.clone()))
                .collect(),
        }
    }

    pub fn map<T: Coefficient>(&self, f: impl Fn(&S) -> T) -> KForm<T> {
        let mut out = KForm::zero(self.dim, self.degree);
        for (m, c) in &self.terms {
            out.insert(*m, f(c));
        }
        out
    }

    pub fn to_symbolic(&self) -> KForm<Scalar> {
        self.map(|c| c.to_scalar())
    }

    /// Text form using the given basis labels, e.g. `e1* + 2 e2*^e3*`.
    pub fn format_with(&self, labels: &[String]) -> String {
        if self.degree == 0 {
            return self.terms.get(&0).map_or("0".into(), |c| c.to_string());
        }
        let symbols: Vec<String> = self
            .terms
            .keys()
            .map(|&m| {
                mask_indices(m)
                    .iter()
                    .map(|&i| match labels.get(i) {
                        Some(l) => format!("{l}*"),
                        None => format!("e{}*", i + 1),
                    })
                    .collect::<Vec<_>>()
                    .join("^")
            })
            .collect();
        format_combination(self.terms.values().zip(symbols.iter().map(String::as_str)))
    }
}

impl KForm<Scalar> {
    pub fn substitute(&self, assignment: &Assignment) -> KForm<Scalar> {
        self.map(|c| c.substitute_partial(assignment))
    }

    /// Variables occurring in the coefficients.
    pub fn variables(&self) -> Vec<String> {
        let mut vars: Vec<String> = self.terms.values().flat_map(|c| c.variables().iter().cloned()).collect();
        vars.sort();
        vars.dedup();
        vars
    }
}

impl<S: Coefficient> std::fmt::Display for KForm<S> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.format_with(&[]))
    }
}

/// Visit every sorted `k`-subset of `0..n`.
pub fn for_each_subset(n: usize, k: usize, f: &mut impl FnMut(&[usize]) -> Result<()>) -> Result<()> {
    fn rec(start: usize, n: usize, k: usize, acc: &mut Vec<usize>, f: &mut impl FnMut(&[usize]) -> Result<()>) -> Result<()> {
        if acc.len() == k {
            return f(acc);
        }
        for i in start..n {
            if n - i < k - acc.len() {
                break;
            }
            acc.push(i);
            rec(i + 1, n, k, acc, f)?;
            acc.pop();
        }
        Ok(())
    }
    rec(0, n, k, &mut Vec::with_capacity(k), f)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::basis_vector;

    type F = KForm<Scalar>;

    fn s(v: i64) -> Scalar {
        Scalar::int(v)
    }

    fn e(n: usize, i: usize) -> F {
        F::covector(n, i)
    }

    #[test]
    fn wedge_is_antisymmetric_on_covectors() {
        let a = e(3, 0).wedge(&e(3, 1)).unwrap();
        let b = e(3, 1).wedge(&e(3, 0)).unwrap();
        assert_eq!(a, b.neg());
        assert!(e(3, 2).wedge(&e(3, 2)).unwrap().is_zero());
        assert_eq!(a.coefficient(&[1, 0]), s(-1));
    }

    #[test]
    fn differential_on_aff_and_heisenberg() {
        let aff = LieAlgebra::from_brackets(2, &[(0, 1, &[(1, s(1))])]);
        assert!(e(2, 0).ce_d(&aff).unwrap().is_zero());
        let d2 = e(2, 1).ce_d(&aff).unwrap();
        assert_eq!(d2.coefficient(&[0, 1]), s(-1));
        let h3 = LieAlgebra::from_brackets(3, &[(0, 1, &[(2, s(1))])]);
        let d3 = e(3, 2).ce_d(&h3).unwrap();
        assert_eq!(d3.coefficient(&[0, 1]), s(-1));
    }

    #[test]
    fn differential_squares_to_zero_on_sl2() {
        let sl2 = LieAlgebra::from_brackets(3, &[(0, 1, &[(1, s(2))]), (0, 2, &[(2, s(-2))]), (1, 2, &[(0, s(1))])]);
        for i in 0..3 {
            let d = e(3, i).ce_d(&sl2).unwrap();
            assert!(d.ce_d(&sl2).unwrap().is_zero());
        }
    }

    #[test]
    fn evaluation_and_interior() {
        let w = e(4, 0).wedge(&e(4, 1)).unwrap().add(&e(4, 2).wedge(&e(4, 3)).unwrap()).unwrap();
        assert_eq!(w.eval(&[basis_vector(4, 0), basis_vector(4, 1)]).unwrap(), s(1));
        assert_eq!(w.eval(&[basis_vector(4, 1), basis_vector(4, 0)]).unwrap(), s(-1));
        let i = w.interior(&basis_vector(4, 2)).unwrap();
        assert_eq!(i, e(4, 3));
        assert!(matches!(w.eval(&[basis_vector(4, 0)]), Err(Error::Arity { .. })));
        assert_eq!(w.rank(&[]).unwrap(), 4);
        assert_eq!(w.power(2).top_coefficient().unwrap(), s(2));
    }

    #[test]
    fn radical_of_degenerate_form() {
        let w = e(3, 0).wedge(&e(3, 1)).unwrap();
        let r = w.radical(&[]).unwrap();
        assert_eq!(r.dim(), 1);
        assert!(r.contains(&basis_vector(3, 2), &[]).unwrap());
    }

    #[test]
    fn pullback_along_swap() {
        let w = e(2, 0).wedge(&e(2, 1)).unwrap();
        let swapped = w.pullback(&[basis_vector(2, 1), basis_vector(2, 0)]).unwrap();
        assert_eq!(swapped, w.neg());
    }

    #[test]
    fn display() {
        let labels: Vec<String> = vec!["e1".into(), "e2".into(), "e3".into()];
        let f = F::from_covector(&[s(1), s(0), Scalar::var("p") - s(1)]);
        assert_eq!(f.format_with(&labels), "e1* + (p - 1) e3*");
        let w = e(3, 0).wedge(&e(3, 2)).unwrap().scale(&s(-2));
        assert_eq!(w.format_with(&labels), "-2 e1*^e3*");
    }
}
