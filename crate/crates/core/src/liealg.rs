//! Lie algebras given by structure constants.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::linalg::{self, basis_vector, is_zero_vector, zero_vector, ScaledVector, Subspace, Vector};
use num_traits::Zero;

use crate::scalar::{Certainty, Coefficient, Rational, Scalar};

/// Parameter values, keyed by parameter name.
pub type Assignment = BTreeMap<String, Rational>;

/// Finite-dimensional Lie algebra over a coefficient ring.
///
/// Only brackets `[e_i, e_j]` with `i < j` are stored; the rest follow by
/// antisymmetry. Parameters name the polynomial variables that may occur in
/// the structure constants, and `constraints` lists polynomials required to be
/// nonzero (the admissible parameter locus).
#[derive(Debug, Clone, PartialEq)]
pub struct LieAlgebra<S> {
    labels: Vec<String>,
    params: Vec<String>,
    constraints: Vec<S>,
    brackets: BTreeMap<(usize, usize), BTreeMap<usize, S>>,
}

/// Result of the Jacobi identity check.
#[derive(Debug, Clone)]
pub struct JacobiReport<S> {
    /// Triples `(i, j, k)` with nonvanishing Jacobiator, and the residual.
    pub failures: Vec<((usize, usize, usize), Vector<S>)>,
}

impl<S> JacobiReport<S> {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Membership properties of a subspace.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SubspaceProperties {
    pub is_subalgebra: bool,
    pub is_ideal: bool,
    pub is_abelian: bool,
}

fn default_labels(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("e{i}")).collect()
}

impl<S: Coefficient> LieAlgebra<S> {
    /// Abelian algebra on the given basis labels.
    pub fn abelian_with_labels(labels: Vec<String>) -> Self {
        LieAlgebra {
            labels,
            params: Vec::new(),
            constraints: Vec::new(),
            brackets: BTreeMap::new(),
        }
    }

    /// Abelian algebra of dimension `n` with basis `e1..en`.
    pub fn abelian(n: usize) -> Self {
        Self::abelian_with_labels(default_labels(n))
    }

    /// Algebra with basis `e1..en` from a list of `(i, j, [(k, c)])` meaning
    /// `[e_i, e_j] = sum c e_k`, indices zero based.
    pub fn from_brackets(n: usize, table: &[(usize, usize, &[(usize, S)])]) -> Self {
        let mut out = Self::abelian(n);
        for (i, j, rhs) in table {
            let mut v: Vector<S> = zero_vector(n);
            for (k, c) in rhs.iter() {
                v[*k] = v[*k].clone() + c.clone();
            }
            out.set_bracket(*i, *j, v).expect("valid bracket table");
        }
        out
    }

    pub fn with_params(mut self, params: Vec<String>) -> Self {
        self.params = params;
        self
    }

    pub fn with_constraints(mut self, constraints: Vec<S>) -> Self {
        self.constraints = constraints;
        self
    }

    pub fn set_labels(&mut self, labels: Vec<String>) -> Result<()> {
        if labels.len() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: labels.len(),
            });
        }
        self.labels = labels;
        Ok(())
    }

    /// Set `[e_i, e_j] = value` (and by antisymmetry `[e_j, e_i]`).
    pub fn set_bracket(&mut self, i: usize, j: usize, value: Vector<S>) -> Result<()> {
        let n = self.dim();
        if value.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: value.len(),
            });
        }
        if i >= n || j >= n {
            return Err(Error::Precondition(format!("basis index out of range in [{i},{j}]")));
        }
        if i == j {
            if is_zero_vector(&value) {
                return Ok(());
            }
            return Err(Error::Precondition(format!(
                "[{0},{0}] must vanish",
                self.labels[i]
            )));
        }
        let (a, b, value) = if i < j {
            (i, j, value)
        } else {
            (j, i, value.into_iter().map(|x| -x).collect())
        };
        let sparse: BTreeMap<usize, S> = value
            .into_iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .collect();
        if sparse.is_empty() {
            self.brackets.remove(&(a, b));
        } else {
            self.brackets.insert((a, b), sparse);
        }
        Ok(())
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label_index(&self, name: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == name)
    }

    pub fn params(&self) -> &[String] {
        &self.params
    }

    pub fn constraints(&self) -> &[S] {
        &self.constraints
    }

    /// Nonzero stored brackets `(i, j) -> [e_i, e_j]` with `i < j`.
    pub fn structure_constants(&self) -> impl Iterator<Item = (&(usize, usize), &BTreeMap<usize, S>)> {
        self.brackets.iter()
    }

    pub fn is_abelian(&self) -> bool {
        self.brackets.is_empty()
    }

    /// Structure constant `c_ij^k`.
    pub fn constant(&self, i: usize, j: usize, k: usize) -> S {
        if i == j {
            return S::zero();
        }
        let (a, b, sign) = if i < j { (i, j, false) } else { (j, i, true) };
        match self.brackets.get(&(a, b)).and_then(|m| m.get(&k)) {
            Some(c) if sign => -c.clone(),
            Some(c) => c.clone(),
            None => S::zero(),
        }
    }

    /// `[e_i, e_j]` as a coordinate vector.
    pub fn bracket_basis(&self, i: usize, j: usize) -> Vector<S> {
        let mut v = zero_vector(self.dim());
        if i == j {
            return v;
        }
        let (a, b, negate) = if i < j { (i, j, false) } else { (j, i, true) };
        if let Some(m) = self.brackets.get(&(a, b)) {
            for (k, c) in m {
                v[*k] = if negate { -c.clone() } else { c.clone() };
            }
        }
        v
    }

    fn check_len(&self, v: &[S]) -> Result<()> {
        if v.len() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: v.len(),
            });
        }
        Ok(())
    }

    /// Bilinear extension of the bracket.
    pub fn bracket(&self, x: &[S], y: &[S]) -> Result<Vector<S>> {
        self.check_len(x)?;
        self.check_len(y)?;
        Ok(self.bracket_unchecked(x, y))
    }

    pub(crate) fn bracket_unchecked(&self, x: &[S], y: &[S]) -> Vector<S> {
        let mut out: Vector<S> = zero_vector(self.dim());
        for (&(i, j), m) in &self.brackets {
            let w = x[i].clone() * y[j].clone() - x[j].clone() * y[i].clone();
            if w.is_zero() {
                continue;
            }
            for (k, c) in m {
                out[*k] = out[*k].clone() + w.clone() * c.clone();
            }
        }
        out
    }

    /// Matrix of `ad_x` as rows: `row[k][j]` is the `e_k` coefficient of `[x, e_j]`.
    pub fn ad_matrix(&self, x: &[S]) -> Result<Vec<Vector<S>>> {
        self.check_len(x)?;
        let n = self.dim();
        let cols: Vec<Vector<S>> = (0..n)
            .map(|j| self.bracket_unchecked(x, &basis_vector(n, j)))
            .collect();
        Ok((0..n).map(|k| (0..n).map(|j| cols[j][k].clone()).collect()).collect())
    }

    /// Jacobi identity on every basis triple, as an identity in the parameters.
    pub fn jacobi_check(&self) -> JacobiReport<S> {
        let n = self.dim();
        let mut failures = Vec::new();
        for i in 0..n {
            for j in (i + 1)..n {
                for k in (j + 1)..n {
                    let ei = basis_vector(n, i);
                    let ej = basis_vector(n, j);
                    let ek = basis_vector(n, k);
                    let a = self.bracket_unchecked(&ei, &self.bracket_basis(j, k));
                    let b = self.bracket_unchecked(&ej, &self.bracket_basis(k, i));
                    let c = self.bracket_unchecked(&ek, &self.bracket_basis(i, j));
                    let sum = linalg::add(&linalg::add(&a, &b), &c);
                    if !is_zero_vector(&sum) {
                        failures.push(((i, j, k), sum));
                    }
                }
            }
        }
        JacobiReport { failures }
    }

    /// `trace(ad_{e_i})`.
    pub fn trace_ad(&self, i: usize) -> S {
        (0..self.dim()).fold(S::zero(), |acc, j| acc + self.constant(i, j, j))
    }

    pub fn is_unimodular(&self) -> bool {
        (0..self.dim()).all(|i| self.trace_ad(i).is_zero())
    }

    pub fn subspace(&self, vectors: Vec<Vector<S>>) -> Result<Subspace<S>> {
        Subspace::span(self.dim(), vectors, &self.constraints)
    }

    /// Center: common kernel of all `ad_x`.
    pub fn center(&self) -> Result<Subspace<S>> {
        self.centralizer(&Subspace::full(self.dim()))
    }

    /// Centralizer `{x : [x, s] = 0 for all s in S}`.
    pub fn centralizer(&self, sub: &Subspace<S>) -> Result<Subspace<S>> {
        let n = self.dim();
        let mut rows = Vec::new();
        for s in sub.basis() {
            // [x, s] = sum_i x_i [e_i, s]; one equation per output coordinate
            let images: Vec<Vector<S>> = (0..n)
                .map(|i| self.bracket_unchecked(&basis_vector(n, i), s))
                .collect();
            for k in 0..n {
                let row: Vector<S> = images.iter().map(|v| v[k].clone()).collect();
                if !is_zero_vector(&row) {
                    rows.push(row);
                }
            }
        }
        Subspace::kernel(n, rows, &self.constraints)
    }

    /// `[A, B]` for subspaces `A` and `B`.
    pub fn bracket_subspaces(&self, a: &Subspace<S>, b: &Subspace<S>) -> Result<Subspace<S>> {
        let mut vectors = Vec::new();
        for x in a.basis() {
            for y in b.basis() {
                let v = self.bracket_unchecked(x, y);
                if !is_zero_vector(&v) {
                    vectors.push(v);
                }
            }
        }
        self.subspace(vectors)
    }

    pub fn derived_ideal(&self) -> Result<Subspace<S>> {
        let n = self.dim();
        let vectors = self.brackets.keys().map(|&(i, j)| self.bracket_basis(i, j)).collect();
        Subspace::span(n, vectors, &self.constraints)
    }

    /// `L ⊇ [L, L] ⊇ [[L, L], [L, L]] ⊇ ...` until it stabilises.
    pub fn derived_series(&self) -> Result<Vec<Subspace<S>>> {
        let mut series = vec![Subspace::full(self.dim())];
        loop {
            let last = series.last().expect("nonempty");
            let next = self.bracket_subspaces(last, last)?;
            if next.dim() == last.dim() {
                return Ok(series);
            }
            let done = next.dim() == 0;
            series.push(next);
            if done {
                return Ok(series);
            }
        }
    }

    /// `L ⊇ [L, L] ⊇ [L, [L, L]] ⊇ ...` until it stabilises.
    pub fn lower_central_series(&self) -> Result<Vec<Subspace<S>>> {
        let full = Subspace::full(self.dim());
        let mut series = vec![full.clone()];
        loop {
            let last = series.last().expect("nonempty");
            let next = self.bracket_subspaces(&full, last)?;
            if next.dim() == last.dim() {
                return Ok(series);
            }
            let done = next.dim() == 0;
            series.push(next);
            if done {
                return Ok(series);
            }
        }
    }

    pub fn is_solvable(&self) -> Result<bool> {
        Ok(self.derived_series()?.last().map_or(true, |s| s.dim() == 0))
    }

    pub fn is_nilpotent(&self) -> Result<bool> {
        Ok(self.lower_central_series()?.last().map_or(true, |s| s.dim() == 0))
    }

    /// Nilpotency step (length of the lower central series), when nilpotent.
    pub fn nilpotency_step(&self) -> Result<Option<usize>> {
        let series = self.lower_central_series()?;
        if series.last().map_or(true, |s| s.dim() == 0) {
            Ok(Some(series.len() - 1))
        } else {
            Ok(None)
        }
    }

    /// Subalgebra, ideal and abelian tests for `sub`.
    pub fn subspace_properties(&self, sub: &Subspace<S>) -> Result<SubspaceProperties> {
        if sub.ambient() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: sub.ambient(),
            });
        }
        let mut is_abelian = true;
        let mut is_subalgebra = true;
        for (a, x) in sub.basis().iter().enumerate() {
            for y in &sub.basis()[a + 1..] {
                let v = self.bracket_unchecked(x, y);
                if !is_zero_vector(&v) {
                    is_abelian = false;
                    if !sub.contains(&v, &self.constraints)? {
                        is_subalgebra = false;
                    }
                }
            }
        }
        let mut is_ideal = true;
        'outer: for i in 0..self.dim() {
            for y in sub.basis() {
                let v = self.bracket_unchecked(&basis_vector(self.dim(), i), y);
                if !sub.contains(&v, &self.constraints)? {
                    is_ideal = false;
                    break 'outer;
                }
            }
        }
        Ok(SubspaceProperties {
            is_subalgebra,
            is_ideal,
            is_abelian,
        })
    }

    /// Direct sum `A ⊕ B`, basis of `A` first. Colliding labels of `B` get a
    /// prime appended until unique.
    pub fn direct_sum(&self, other: &LieAlgebra<S>) -> LieAlgebra<S> {
        let shift = self.dim();
        let n = shift + other.dim();
        let mut labels = self.labels.clone();
        for l in &other.labels {
            let mut candidate = l.clone();
            while labels.contains(&candidate) {
                candidate.push('\'');
            }
            labels.push(candidate);
        }
        let mut params = self.params.clone();
        for p in &other.params {
            if !params.contains(p) {
                params.push(p.clone());
            }
        }
        let mut constraints = self.constraints.clone();
        constraints.extend(other.constraints.iter().cloned());
        let mut brackets = self.brackets.clone();
        for (&(i, j), m) in &other.brackets {
            let shifted = m.iter().map(|(k, c)| (k + shift, c.clone())).collect();
            brackets.insert((i + shift, j + shift), shifted);
        }
        debug_assert_eq!(labels.len(), n);
        LieAlgebra {
            labels,
            params,
            constraints,
            brackets,
        }
    }

    /// Opposite algebra `[x, y]_op = -[x, y]`.
    pub fn opposite(&self) -> LieAlgebra<S> {
        let mut out = self.clone();
        for m in out.brackets.values_mut() {
            for c in m.values_mut() {
                *c = -c.clone();
            }
        }
        out
    }

    /// `L / span(z)` for a nonzero central `z`, realised on the complement
    /// spanned by the basis vectors other than one coordinate where `z` is a
    /// unit.
    pub fn quotient_by_central_line(&self, z: &[S]) -> Result<LieAlgebra<S>> {
        self.check_len(z)?;
        let n = self.dim();
        if is_zero_vector(z) {
            return Err(Error::NotCentral("zero vector".into()));
        }
        for i in 0..n {
            if !is_zero_vector(&self.bracket_unchecked(z, &basis_vector(n, i))) {
                return Err(Error::NotCentral(format!("[z, {}] != 0", self.labels[i])));
            }
        }
        let k = (0..n)
            .rev()
            .find(|&k| z[k].is_unit())
            .ok_or_else(|| Error::Precondition("central vector has no unit coordinate".into()))?;
        let keep: Vec<usize> = (0..n).filter(|&i| i != k).collect();
        let mut out = LieAlgebra::abelian_with_labels(keep.iter().map(|&i| self.labels[i].clone()).collect())
            .with_params(self.params.clone())
            .with_constraints(self.constraints.clone());
        for (a, &i) in keep.iter().enumerate() {
            for (b, &j) in keep.iter().enumerate().skip(a + 1) {
                let w = self.bracket_basis(i, j);
                let t = w[k].exact_div(&z[k]).expect("unit pivot");
                let projected = linalg::sub(&w, &linalg::scale(&t, z));
                let v: Vector<S> = keep.iter().map(|&c| projected[c].clone()).collect();
                out.set_bracket(a, b, v)?;
            }
        }
        Ok(out)
    }

    /// Structure constants in a new basis (rows of `basis`, in old coordinates).
    pub fn change_basis(&self, basis: &[Vector<S>]) -> Result<LieAlgebra<S>> {
        let n = self.dim();
        if basis.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: basis.len(),
            });
        }
        // columns of the transposed system: new basis vectors
        let transposed: Vec<Vector<S>> = (0..n).map(|i| basis.iter().map(|b| b[i].clone()).collect()).collect();
        let mut out = LieAlgebra::abelian(n)
            .with_params(self.params.clone())
            .with_constraints(self.constraints.clone());
        out.labels = self.labels.clone();
        for a in 0..n {
            for b in (a + 1)..n {
                let w = self.bracket(&basis[a], &basis[b])?;
                if is_zero_vector(&w) {
                    continue;
                }
                let coords = linalg::solve(&transposed, &w, &self.constraints)?;
                let coords = coords.as_exact().ok_or_else(|| {
                    Error::Precondition("basis change does not have an exact inverse over the coefficients".into())
                })?;
                out.set_bracket(a, b, coords.to_vec())?;
            }
        }
        Ok(out)
    }

    /// Reorder the basis: new basis vector `i` is old basis vector `order[i]`.
    pub fn permuted(&self, order: &[usize]) -> Result<LieAlgebra<S>> {
        let n = self.dim();
        let mut seen = vec![false; n];
        if order.len() != n || order.iter().any(|&i| i >= n || std::mem::replace(&mut seen[i], true)) {
            return Err(Error::Precondition("not a permutation of the basis".into()));
        }
        let mut inverse = vec![0; n];
        for (new, &old) in order.iter().enumerate() {
            inverse[old] = new;
        }
        let mut out = LieAlgebra::abelian_with_labels(order.iter().map(|&i| self.labels[i].clone()).collect())
            .with_params(self.params.clone())
            .with_constraints(self.constraints.clone());
        for (&(i, j), m) in &self.brackets {
            let mut v = zero_vector(n);
            for (k, c) in m {
                v[inverse[*k]] = c.clone();
            }
            out.set_bracket(inverse[i], inverse[j], v)?;
        }
        Ok(out)
    }

    /// Equality of structure constants, ignoring labels, parameters and constraints.
    pub fn same_structure(&self, other: &LieAlgebra<S>) -> bool {
        self.dim() == other.dim() && self.brackets == other.brackets
    }

    /// Subalgebra spanned by the first `k` basis vectors, when it is closed.
    pub fn leading_subalgebra(&self, k: usize) -> Result<LieAlgebra<S>> {
        let mut out = LieAlgebra::abelian_with_labels(self.labels[..k].to_vec())
            .with_params(self.params.clone())
            .with_constraints(self.constraints.clone());
        for (&(i, j), m) in &self.brackets {
            if i < k && j < k {
                if m.keys().any(|&c| c >= k) {
                    return Err(Error::Precondition(format!(
                        "first {k} basis vectors do not span a subalgebra"
                    )));
                }
                out.brackets.insert((i, j), m.clone());
            }
        }
        Ok(out)
    }

    /// Structure constants of a subalgebra in the basis stored by `sub`.
    pub fn subalgebra(&self, sub: &Subspace<S>) -> Result<LieAlgebra<S>> {
        let k = sub.dim();
        let mut out = LieAlgebra::abelian(k)
            .with_params(self.params.clone())
            .with_constraints(self.constraints.clone());
        for a in 0..k {
            for b in (a + 1)..k {
                let v = self.bracket(&sub.basis()[a], &sub.basis()[b])?;
                if is_zero_vector(&v) {
                    continue;
                }
                let coords = sub
                    .coordinates(&v, &self.constraints)?
                    .ok_or_else(|| Error::Precondition("subspace is not closed under the bracket".into()))?;
                let coords = coords
                    .as_exact()
                    .ok_or_else(|| Error::Precondition("subalgebra coordinates are not exact".into()))?;
                out.set_bracket(a, b, coords.to_vec())?;
            }
        }
        Ok(out)
    }

    /// Center of the subalgebra `sub`, as vectors of the ambient algebra.
    pub fn center_of(&self, sub: &Subspace<S>) -> Result<Subspace<S>> {
        let inner = self.subalgebra(sub)?;
        let z = inner.center()?;
        let vectors = z
            .basis()
            .iter()
            .map(|c| {
                c.iter()
                    .zip(sub.basis())
                    .fold(zero_vector(self.dim()), |acc, (ci, b)| linalg::add(&acc, &linalg::scale(ci, b)))
            })
            .collect();
        self.subspace(vectors)
    }

    /// Apply `f` to every coefficient.
    pub fn map<T: Coefficient>(&self, f: impl Fn(&S) -> T) -> LieAlgebra<T> {
        let brackets = self
            .brackets
            .iter()
            .map(|(k, m)| {
                let m: BTreeMap<usize, T> = m
                    .iter()
                    .map(|(i, c)| (*i, f(c)))
                    .filter(|(_, c)| !c.is_zero())
                    .collect();
                (*k, m)
            })
            .filter(|(_, m)| !m.is_empty())
            .collect();
        LieAlgebra {
            labels: self.labels.clone(),
            params: self.params.clone(),
            constraints: self.constraints.iter().map(&f).collect(),
            brackets,
        }
    }

    pub fn to_symbolic(&self) -> LieAlgebra<Scalar> {
        self.map(|c| c.to_scalar())
    }

    /// Whether `value` is certainly nonzero on the constrained locus.
    pub fn certainty(&self, value: &S) -> Certainty {
        value.nonzero_under(&self.constraints)
    }

    /// Solve for coordinates in the full basis; convenience for reports.
    pub fn coordinates_in(&self, sub: &Subspace<S>, v: &[S]) -> Result<Option<ScaledVector<S>>> {
        sub.coordinates(v, &self.constraints)
    }

    /// Human-readable vector `2 e1 - e3`.
    pub fn format_vector(&self, v: &[S]) -> String {
        format_combination(v.iter().enumerate().map(|(i, c)| (c, self.labels[i].as_str())))
    }
}

/// Format a linear combination `c1 x1 + c2 x2 ...` with the symbols given.
pub(crate) fn format_combination<'a, S: Coefficient>(terms: impl Iterator<Item = (&'a S, &'a str)>) -> String {
    let mut out = String::new();
    for (c, sym) in terms {
        if c.is_zero() {
            continue;
        }
        let text = c.to_string();
        let compound = text.contains(' ') || text[1..].contains(['+', '-', '*', '^']);
        let (negative, body) = if !compound && text.starts_with('-') {
            (true, text[1..].to_string())
        } else {
            (false, text)
        };
        if out.is_empty() {
            if negative {
                out.push('-');
            }
        } else {
            out.push_str(if negative { " - " } else { " + " });
        }
        if compound {
            out.push_str(&format!("({body}) {sym}"));
        } else if body == "1" {
            out.push_str(sym);
        } else {
            out.push_str(&format!("{body} {sym}"));
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

impl LieAlgebra<Scalar> {
    /// Evaluate the parameters, producing a rational-valued algebra.
    pub fn substitute(&self, assignment: &Assignment) -> Result<LieAlgebra<Scalar>> {
        for p in &self.params {
            if !assignment.contains_key(p) {
                return Err(Error::MissingVariable(p.clone()));
            }
        }
        let brackets_vars_ok = self
            .brackets
            .values()
            .flat_map(|m| m.values())
            .flat_map(|c| c.variables())
            .find(|v| !assignment.contains_key(*v));
        if let Some(v) = brackets_vars_ok {
            return Err(Error::MissingVariable(v.clone()));
        }
        let mut out = self.map(|c| c.substitute_partial(assignment));
        out.params.clear();
        out.constraints.clear();
        Ok(out)
    }

    /// Whether every constraint is nonzero at the assignment.
    pub fn satisfies_constraints(&self, assignment: &Assignment) -> Result<bool> {
        for c in &self.constraints {
            if c.substitute(assignment)?.is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Rational-valued copy when no parameters occur.
    pub fn to_rational(&self) -> Option<LieAlgebra<Rational>> {
        if self.brackets.values().flat_map(|m| m.values()).any(|c| !c.is_constant()) {
            return None;
        }
        Some(LieAlgebra {
            labels: self.labels.clone(),
            params: Vec::new(),
            constraints: self
                .constraints
                .iter()
                .filter_map(|c| c.as_rational().cloned())
                .collect(),
            brackets: self
                .brackets
                .iter()
                .map(|(k, m)| {
                    (
                        *k,
                        m.iter()
                            .map(|(i, c)| (*i, c.as_rational().expect("constant").clone()))
                            .collect(),
                    )
                })
                .collect(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Scalar as Sc;

    fn s(v: i64) -> Sc {
        Sc::int(v)
    }

    fn heisenberg3() -> LieAlgebra<Sc> {
        LieAlgebra::from_brackets(3, &[(0, 1, &[(2, s(1))])])
    }

    fn aff() -> LieAlgebra<Sc> {
        LieAlgebra::from_brackets(2, &[(0, 1, &[(1, s(1))])])
    }

    fn sl2() -> LieAlgebra<Sc> {
        // H, X, Y
        LieAlgebra::from_brackets(
            3,
            &[(0, 1, &[(1, s(2))]), (0, 2, &[(2, s(-2))]), (1, 2, &[(0, s(1))])],
        )
    }

    fn so3() -> LieAlgebra<Sc> {
        LieAlgebra::from_brackets(3, &[(0, 1, &[(2, s(1))]), (1, 2, &[(0, s(1))]), (0, 2, &[(1, s(-1))])])
    }

    fn e(n: usize, i: usize) -> Vector<Sc> {
        basis_vector(n, i)
    }

    #[test]
    fn aff_bracket() {
        assert_eq!(aff().bracket(&e(2, 0), &e(2, 1)).unwrap(), e(2, 1));
        assert_eq!(aff().bracket(&e(2, 1), &e(2, 0)).unwrap(), vec![s(0), s(-1)]);
        let x = vec![s(3), Sc::var("p")];
        assert!(is_zero_vector(&aff().bracket(&x, &x).unwrap()));
    }

    #[test]
    fn sl2_bracket_x_y_is_h() {
        assert_eq!(sl2().bracket(&e(3, 1), &e(3, 2)).unwrap(), e(3, 0));
    }

    #[test]
    fn bracket_dimension_mismatch() {
        assert!(matches!(aff().bracket(&e(3, 0), &e(2, 1)), Err(Error::DimensionMismatch { .. })));
    }

    #[test]
    fn jacobi() {
        assert!(sl2().jacobi_check().passed());
        assert!(so3().jacobi_check().passed());
        assert!(LieAlgebra::<Sc>::abelian(4).jacobi_check().passed());
        let mut bad = heisenberg3();
        bad.set_bracket(0, 2, e(3, 0)).unwrap();
        let report = bad.jacobi_check();
        assert!(!report.passed());
        assert_eq!(report.failures[0].0, (0, 1, 2));
    }

    #[test]
    fn centers() {
        let z = heisenberg3().center().unwrap();
        assert_eq!(z.dim(), 1);
        assert!(z.contains(&e(3, 2), &[]).unwrap());
        assert_eq!(sl2().center().unwrap().dim(), 0);
    }

    #[test]
    fn five_dim_item_one_center_and_derived() {
        // [e2,e4] = e1, [e3,e5] = e1
        let l = LieAlgebra::from_brackets(5, &[(1, 3, &[(0, s(1))]), (2, 4, &[(0, s(1))])]);
        let d = l.derived_ideal().unwrap();
        let z = l.center().unwrap();
        assert_eq!(d.dim(), 1);
        assert_eq!(z.dim(), 1);
        assert!(d.equals(&z, &[]).unwrap());
        assert!(z.contains(&e(5, 0), &[]).unwrap());
    }

    #[test]
    fn series() {
        let h = heisenberg3();
        assert!(h.is_nilpotent().unwrap());
        assert_eq!(h.nilpotency_step().unwrap(), Some(2));
        assert!(!sl2().is_solvable().unwrap());
        assert_eq!(sl2().derived_series().unwrap().last().unwrap().dim(), 3);
        assert!(aff().is_solvable().unwrap());
        assert!(!aff().is_nilpotent().unwrap());
    }

    #[test]
    fn unimodularity() {
        assert!(heisenberg3().is_unimodular());
        assert!(!aff().is_unimodular());
        assert_eq!(aff().trace_ad(0), s(1));
        assert!(so3().is_unimodular());
    }

    #[test]
    fn sums_and_opposites() {
        let sum = aff().direct_sum(&so3());
        assert_eq!(sum.dim(), 5);
        assert!(sum.jacobi_check().passed());
        assert_eq!(sum.labels()[2], "e1'");
        let first = sum.subspace(vec![e(5, 0), e(5, 1)]).unwrap();
        let second = sum.subspace(vec![e(5, 2), e(5, 3), e(5, 4)]).unwrap();
        assert!(sum.subspace_properties(&first).unwrap().is_ideal);
        assert!(sum.subspace_properties(&second).unwrap().is_ideal);
        assert_eq!(sl2().opposite().opposite(), sl2());
        assert_eq!(LieAlgebra::<Sc>::abelian(3).opposite(), LieAlgebra::abelian(3));
    }

    #[test]
    fn subspace_predicates() {
        let a = aff();
        let line = a.subspace(vec![e(2, 1)]).unwrap();
        let p = a.subspace_properties(&line).unwrap();
        assert!(p.is_ideal && p.is_abelian);
        let h = heisenberg3();
        let ker = h.subspace(vec![e(3, 0), e(3, 1)]).unwrap();
        assert!(!h.subspace_properties(&ker).unwrap().is_subalgebra);
        assert!(h.subspace_properties(&Subspace::full(3)).unwrap().is_ideal);
    }

    #[test]
    fn central_quotients() {
        let q = heisenberg3().quotient_by_central_line(&e(3, 2)).unwrap();
        assert_eq!(q.dim(), 2);
        assert!(q.is_abelian());
        // H5: [e1,e3] = e5, [e2,e4] = e5
        let h5 = LieAlgebra::from_brackets(5, &[(0, 2, &[(4, s(1))]), (1, 3, &[(4, s(1))])]);
        assert!(h5.quotient_by_central_line(&e(5, 4)).unwrap().is_abelian());
        let trivial = sl2().direct_sum(&LieAlgebra::abelian(1));
        let back = trivial.quotient_by_central_line(&e(4, 3)).unwrap();
        assert!(back.same_structure(&sl2()));
        assert!(matches!(sl2().quotient_by_central_line(&e(3, 0)), Err(Error::NotCentral(_))));
    }

    #[test]
    fn change_of_basis_preserves_jacobi() {
        let basis = vec![vec![s(1), s(1), s(0)], vec![s(0), s(1), s(2)], vec![s(1), s(0), s(1)]];
        let conj = sl2().change_basis(&basis).unwrap();
        assert!(conj.jacobi_check().passed());
        assert_eq!(conj.derived_ideal().unwrap().dim(), 3);
    }

    #[test]
    fn parameter_substitution() {
        let p = Sc::var("p");
        let l = LieAlgebra::from_brackets(2, &[(0, 1, &[(1, s(1) + p.clone())])])
            .with_params(vec!["p".into()])
            .with_constraints(vec![s(1) + p]);
        let at = |v: i64| -> Assignment { [("p".to_string(), Rational::from_integer(v.into()))].into() };
        assert!(l.satisfies_constraints(&at(2)).unwrap());
        assert!(!l.satisfies_constraints(&at(-1)).unwrap());
        let sub = l.substitute(&at(2)).unwrap();
        assert_eq!(sub.constant(0, 1, 1), s(3));
        assert!(l.substitute(&Assignment::new()).is_err());
    }
}
