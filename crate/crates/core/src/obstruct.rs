//! Structural obstructions to contact and Frobenius forms, ad-invariant
//! metrics, and the five-dimensional case analysis.
//!
//! Each obstruction reports whether its hypothesis holds and, when it rules a
//! form out, whether the generic polynomial of the decider is identically zero.
//! The two must never disagree.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::contact::{admits_contact_form, contact_exists, contact_polynomial, frobenius_polynomial, FormKind};
use crate::error::{Error, Result};
use crate::forms::{mask_indices, KForm};
use crate::liealg::LieAlgebra;
use crate::linalg::{self, basis_vector, determinant, is_zero_vector, zero_vector, Subspace, Vector};
use crate::report::{Check, Report};
use crate::scalar::{Coefficient, Rational, Scalar};

/// Symmetric bilinear form given by its Gram matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct BilinearForm<S> {
    pub matrix: Vec<Vector<S>>,
}

impl<S: Coefficient> BilinearForm<S> {
    pub fn dim(&self) -> usize {
        self.matrix.len()
    }

    pub fn eval(&self, x: &[S], y: &[S]) -> S {
        let mut acc = S::zero();
        for (i, row) in self.matrix.iter().enumerate() {
            if x[i].is_zero() {
                continue;
            }
            acc = acc + x[i].clone() * linalg::dot(row, y);
        }
        acc
    }

    pub fn is_symmetric(&self) -> bool {
        let n = self.dim();
        (0..n).all(|i| (0..i).all(|j| self.matrix[i][j] == self.matrix[j][i]))
    }

    pub fn determinant(&self) -> S {
        determinant(&self.matrix)
    }

    /// Invariance `b([x,y],z) + b(y,[x,z]) = 0` on basis vectors.
    pub fn is_invariant(&self, l: &LieAlgebra<S>) -> bool {
        let n = l.dim();
        (0..n).all(|a| {
            (0..n).all(|i| {
                (0..n).all(|j| {
                    let ai = l.bracket_basis(a, i);
                    let aj = l.bracket_basis(a, j);
                    (self.eval(&ai, &basis_vector(n, j)) + self.eval(&basis_vector(n, i), &aj)).is_zero()
                })
            })
        })
    }

    /// `{x : b(x, j) = 0 for all j in J}`.
    pub fn orthogonal(&self, sub: &Subspace<S>, constraints: &[S]) -> Result<Subspace<S>> {
        let n = self.dim();
        let rows = sub
            .basis()
            .iter()
            .map(|j| (0..n).map(|i| self.eval(&basis_vector(n, i), j)).collect())
            .collect();
        Subspace::kernel(n, rows, constraints)
    }

    pub fn map<T: Coefficient>(&self, f: impl Fn(&S) -> T) -> BilinearForm<T> {
        BilinearForm {
            matrix: self.matrix.iter().map(|r| r.iter().map(&f).collect()).collect(),
        }
    }
}

/// Basis of the space of ad-invariant symmetric bilinear forms.
pub fn invariant_form_space<S: Coefficient>(l: &LieAlgebra<S>) -> Result<Vec<BilinearForm<S>>> {
    let n = l.dim();
    let mut index = BTreeMap::new();
    for i in 0..n {
        for j in i..n {
            let k = index.len();
            index.insert((i, j), k);
        }
    }
    let var = |i: usize, j: usize| index[&(i.min(j), i.max(j))];
    let unknowns = index.len();
    let mut rows = Vec::new();
    for a in 0..n {
        for i in 0..n {
            for j in i..n {
                // Σ_k c_ai^k b_kj + Σ_k c_aj^k b_ik = 0
                let mut row: Vector<S> = zero_vector(unknowns);
                for (k, c) in l.bracket_basis(a, i).into_iter().enumerate() {
                    if !c.is_zero() {
                        let v = var(k, j);
                        row[v] = row[v].clone() + c;
                    }
                }
                for (k, c) in l.bracket_basis(a, j).into_iter().enumerate() {
                    if !c.is_zero() {
                        let v = var(i, k);
                        row[v] = row[v].clone() + c;
                    }
                }
                if !is_zero_vector(&row) {
                    rows.push(row);
                }
            }
        }
    }
    let kernel = linalg::nullspace(rows, unknowns, l.constraints())?;
    Ok(kernel
        .into_iter()
        .map(|sol| {
            let matrix = (0..n).map(|i| (0..n).map(|j| sol[var(i, j)].clone()).collect()).collect();
            BilinearForm { matrix }
        })
        .collect())
}

/// Outcome of the search for a nondegenerate invariant form.
#[derive(Debug, Clone)]
pub struct OrthogonalVerdict<S> {
    pub space: Vec<BilinearForm<S>>,
    pub exists: bool,
    /// `det(Σ t_i B_i)` in fresh variables `t1, t2, ...`; computed only when
    /// no witness turned up among the small combinations tried first.
    pub determinant: Option<Scalar>,
    pub witness: Option<BilinearForm<S>>,
}

fn combine<S: Coefficient>(space: &[BilinearForm<S>], coeffs: &[i64]) -> BilinearForm<S> {
    let n = space[0].dim();
    let mut m = vec![zero_vector::<S>(n); n];
    for (b, &c) in space.iter().zip(coeffs) {
        if c == 0 {
            continue;
        }
        let c = S::from_i64(c);
        for i in 0..n {
            for j in 0..n {
                m[i][j] = m[i][j].clone() + c.clone() * b.matrix[i][j].clone();
            }
        }
    }
    BilinearForm { matrix: m }
}

fn small_combinations(k: usize) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    for i in 0..k {
        let mut v = vec![0; k];
        v[i] = 1;
        out.push(v);
    }
    for i in 0..k {
        for j in (i + 1)..k {
            for sign in [1, -1] {
                let mut v = vec![0; k];
                v[i] = 1;
                v[j] = sign;
                out.push(v);
            }
        }
    }
    out.push(vec![1; k]);
    out.push((1..=k as i64).collect());
    out
}

/// Decide whether `l` carries a nondegenerate ad-invariant symmetric form.
pub fn orthogonal_exists<S: Coefficient>(l: &LieAlgebra<S>) -> Result<OrthogonalVerdict<S>> {
    let space = invariant_form_space(l)?;
    let mut verdict = OrthogonalVerdict {
        exists: false,
        determinant: None,
        witness: None,
        space,
    };
    if l.dim() == 0 {
        verdict.exists = true;
        return Ok(verdict);
    }
    if verdict.space.is_empty() {
        verdict.determinant = Some(Scalar::zero());
        return Ok(verdict);
    }
    let k = verdict.space.len();
    for c in small_combinations(k) {
        let b = combine(&verdict.space, &c);
        if !b.determinant().is_zero() {
            verdict.exists = true;
            verdict.witness = Some(b);
            return Ok(verdict);
        }
    }
    let vars: Vec<Scalar> = (1..=k).map(|i| Scalar::var(&format!("t{i}"))).collect();
    let n = l.dim();
    let mut pencil = vec![vec![Scalar::zero(); n]; n];
    for (b, t) in verdict.space.iter().zip(&vars) {
        for i in 0..n {
            for j in 0..n {
                let entry = b.matrix[i][j].to_scalar();
                if !entry.is_zero() {
                    pencil[i][j] = pencil[i][j].clone() + entry * t.clone();
                }
            }
        }
    }
    let det = determinant(&pencil);
    verdict.exists = !det.is_zero();
    if verdict.exists {
        // degree <= n in each t_i, so n + 1 values per coordinate suffice
        let side = n as i64 + 1;
        let total = (side as usize).saturating_pow(k as u32);
        for mut idx in 0..total {
            let c: Vec<i64> = (0..k)
                .map(|_| {
                    let d = (idx % side as usize) as i64;
                    idx /= side as usize;
                    d
                })
                .collect();
            let b = combine(&verdict.space, &c);
            if !b.determinant().is_zero() {
                verdict.witness = Some(b);
                break;
            }
        }
    }
    verdict.determinant = Some(det);
    Ok(verdict)
}

/// Whether `centralizer(J) ⊇ J^⊥` for an ideal `J` of `(l, b)`.
pub fn orthogonal_centralizer_check<S: Coefficient>(l: &LieAlgebra<S>, b: &BilinearForm<S>, ideal: &Subspace<S>) -> Result<bool> {
    let perp = b.orthogonal(ideal, l.constraints())?;
    let centralizer = l.centralizer(ideal)?;
    centralizer.contains_subspace(&perp, l.constraints())
}

/// Orthogonal and contact only in dimension three; there, the vector `x̄`
/// with `b(x̄, ·) = η` has one-dimensional kernel of `ad`, and
/// `L = ker(ad_x̄) ⊕ Im(ad_x̄) = [L, L]`.
pub fn orthogonal_contact_cross_check(l: &LieAlgebra<Rational>) -> Result<Report> {
    let mut report = Report::new("orthogonal and contact");
    let orth = orthogonal_exists(l)?;
    let contact = if l.dim() % 2 == 1 {
        Some(contact_exists(l)?)
    } else {
        None
    };
    let is_contact = contact.as_ref().is_some_and(|c| c.exists);
    report.push(Check::info("orthogonal", if orth.exists { "yes" } else { "no" }));
    report.push(Check::info("contact", if is_contact { "yes" } else { "no" }));
    let both = orth.exists && is_contact;
    report.push(Check::assert(
        "tripwire",
        !both || l.dim() == 3,
        if both {
            format!("orthogonal and contact in dimension {}", l.dim())
        } else {
            "not both".to_string()
        },
    ));
    if !both {
        return Ok(report);
    }
    let b = orth.witness.expect("witness for an existing orthogonal structure");
    let eta = contact
        .and_then(|c| c.witness)
        .ok_or_else(|| Error::Precondition("contact witness missing".into()))?;
    let n = l.dim();
    let xbar = linalg::solve(&b.matrix, &eta.as_covector()?, &[])?;
    let xbar = xbar.as_exact().expect("rational solve").to_vec();
    let ad = l.ad_matrix(&xbar)?;
    let kernel = Subspace::kernel(n, ad.clone(), &[])?;
    let columns: Vec<Vector<Rational>> = (0..n).map(|j| ad.iter().map(|r| r[j].clone()).collect()).collect();
    let image = Subspace::span(n, columns, &[])?;
    let sum = kernel.sum(&image, &[])?;
    report.push(Check::assert("ad-kernel-line", kernel.dim() == 1, format!("dim ker(ad x̄) = {}", kernel.dim())).with("xbar", l.format_vector(&xbar)));
    report.push(Check::assert(
        "kernel-image-split",
        sum.dim() == n && kernel.dim() + image.dim() == n,
        format!("dim ker + dim im = {} + {}", kernel.dim(), image.dim()),
    ));
    let derived = l.derived_ideal()?;
    report.push(Check::assert("perfect", derived.dim() == n, format!("dim [L,L] = {}", derived.dim())));
    Ok(report)
}

/// A structural criterion ruling out contact or Frobenius forms.
#[derive(Debug, Clone)]
pub struct Obstruction {
    pub name: &'static str,
    /// The hypothesis of the criterion holds.
    pub applies: bool,
    pub blocks_contact: bool,
    pub blocks_frobenius: bool,
    pub detail: String,
    /// For each blocked kind, whether the generic polynomial is identically zero.
    pub confirmations: Vec<(FormKind, bool)>,
}

impl Obstruction {
    fn inapplicable(name: &'static str, detail: impl Into<String>) -> Self {
        Obstruction {
            name,
            applies: false,
            blocks_contact: false,
            blocks_frobenius: false,
            detail: detail.into(),
            confirmations: Vec::new(),
        }
    }

    /// The decider confirms every nonexistence claim.
    pub fn agrees(&self) -> bool {
        self.confirmations.iter().all(|(_, zero)| *zero)
    }

    pub fn to_report(&self) -> Report {
        let mut report = Report::new(format!("obstruction: {}", self.name));
        report.push(Check::info(
            "applies",
            format!("{}: {}", if self.applies { "yes" } else { "no" }, self.detail),
        ));
        for (kind, zero) in &self.confirmations {
            report.push(Check::assert(
                format!("{}-polynomial-vanishes", kind.name()),
                *zero,
                if *zero {
                    "generic polynomial is identically zero"
                } else {
                    "generic polynomial is NOT identically zero"
                },
            ));
        }
        report
    }
}

fn confirm<S: Coefficient>(l: &LieAlgebra<S>, contact: bool, frobenius: bool) -> Result<Vec<(FormKind, bool)>> {
    let mut out = Vec::new();
    if contact && l.dim() % 2 == 1 {
        out.push((FormKind::Contact, contact_polynomial(l)?.polynomial.is_zero()));
    }
    if frobenius && l.dim() % 2 == 0 {
        out.push((FormKind::Frobenius, frobenius_polynomial(l)?.polynomial.is_zero()));
    }
    Ok(out)
}

fn blocking<S: Coefficient>(l: &LieAlgebra<S>, name: &'static str, contact: bool, frobenius: bool, detail: String) -> Result<Obstruction> {
    let contact = contact && l.dim() % 2 == 1;
    let frobenius = frobenius && l.dim() % 2 == 0;
    Ok(Obstruction {
        name,
        applies: true,
        blocks_contact: contact,
        blocks_frobenius: frobenius,
        detail,
        confirmations: confirm(l, contact, frobenius)?,
    })
}

/// A contact algebra has center of dimension at most one.
pub fn center_obstruction<S: Coefficient>(l: &LieAlgebra<S>) -> Result<Obstruction> {
    const NAME: &str = "center-dim";
    if l.dim() % 2 == 0 {
        return Ok(Obstruction::inapplicable(NAME, "even dimension"));
    }
    let z = l.center()?.dim();
    if z < 2 {
        return Ok(Obstruction::inapplicable(NAME, format!("center has dimension {z}")));
    }
    blocking(l, NAME, true, false, format!("center has dimension {z} > 1"))
}

/// Whether `ad_v` acts on `z` (a 2-dimensional invariant subspace) as a scalar
/// for every basis vector `v`: then `z1`, `z2` and `z1 + z2` are all eigenvectors.
fn acts_by_scalars<S: Coefficient>(l: &LieAlgebra<S>, z: &Subspace<S>) -> bool {
    let parallel = |v: &[S], w: &[S]| {
        (0..v.len()).all(|a| (a + 1..v.len()).all(|b| (v[a].clone() * w[b].clone() - v[b].clone() * w[a].clone()).is_zero()))
    };
    let (z1, z2) = (&z.basis()[0], &z.basis()[1]);
    let sum = linalg::add(z1, z2);
    (0..l.dim()).all(|i| {
        let e = basis_vector(l.dim(), i);
        [z1, z2, &sum].iter().all(|v| parallel(v, &l.bracket_unchecked(&e, v)))
    })
}

/// Facts about the derived ideal used by the codimension-one criteria.
#[derive(Debug, Clone)]
pub struct DerivedIdealData<S> {
    pub derived: Subspace<S>,
    /// Center of the derived ideal as an algebra.
    pub center: Subspace<S>,
    /// When the center is 2-dimensional: whether every `ad_v` acts on it as a scalar.
    pub scalar_action: Option<bool>,
}

pub fn derived_ideal_data<S: Coefficient>(l: &LieAlgebra<S>) -> Result<DerivedIdealData<S>> {
    let derived = l.derived_ideal()?;
    let center = l.center_of(&derived)?;
    let scalar_action = (center.dim() == 2).then(|| acts_by_scalars(l, &center));
    Ok(DerivedIdealData {
        derived,
        center,
        scalar_action,
    })
}

/// Necessary conditions for a contact form on an odd-dimensional solvable
/// algebra whose derived ideal `N` has codimension one: `dim Z(N) <= 2`;
/// if `dim Z(N) = 2`, some `ad_e` is not scalar on `Z(N)`; and some 1-form
/// `α` on `N` has `(dα)^{n-1} ∧ α ≠ 0`, where `dim L = 2n + 1`.
pub fn codim1_derived_criteria<S: Coefficient>(l: &LieAlgebra<S>) -> Result<Obstruction> {
    const NAME: &str = "codim1-derived";
    if l.dim() % 2 == 0 {
        return Err(Error::Parity {
            operation: "codimension-one derived ideal criteria",
            expected: "odd",
            dim: l.dim(),
        });
    }
    if !l.is_solvable()? {
        return Err(Error::Precondition("algebra is not solvable".into()));
    }
    let data = derived_ideal_data(l)?;
    if data.derived.dim() + 1 != l.dim() {
        return Err(Error::Precondition(format!(
            "derived ideal has dimension {}, expected {}",
            data.derived.dim(),
            l.dim() - 1
        )));
    }
    let zdim = data.center.dim();
    if zdim > 2 {
        return blocking(l, NAME, true, false, format!("dim Z(N) = {zdim} > 2"));
    }
    if data.scalar_action == Some(true) {
        return blocking(l, NAME, true, false, "dim Z(N) = 2 and every ad_e is scalar on Z(N)".into());
    }
    let n_alg = l.subalgebra(&data.derived)?.to_symbolic();
    let half = l.dim() / 2;
    let vars: Vec<Scalar> = (1..=n_alg.dim()).map(|i| Scalar::var(&format!("a{i}"))).collect();
    let alpha = KForm::from_covector(&vars);
    let form = alpha.ce_d(&n_alg)?.power(half - 1).wedge(&alpha)?;
    if form.is_zero() {
        return blocking(l, NAME, true, false, format!("(dα)^{} ∧ α vanishes for every α on N", half - 1));
    }
    Ok(Obstruction::inapplicable(
        NAME,
        format!(
            "dim Z(N) = {zdim}{}; necessary conditions hold",
            if zdim == 2 { ", non-scalar action" } else { "" }
        ),
    ))
}

/// 1-forms `φ` whose kernel is abelian: `φ ∧ β_k = 0` for each bracket
/// component `β_k = Σ c_ij^k e_i* ∧ e_j*`. Linear in `φ`.
pub fn abelian_hyperplanes<S: Coefficient>(l: &LieAlgebra<S>) -> Result<Subspace<S>> {
    let n = l.dim();
    let mut rows: BTreeMap<(usize, u64), Vector<S>> = BTreeMap::new();
    for (&(a, b), bracket) in l.structure_constants() {
        for (&k, c) in bracket {
            for i in (0..n).filter(|&i| i != a && i != b) {
                let mask = (1u64 << i) | (1 << a) | (1 << b);
                let pos = mask_indices(mask).iter().position(|&x| x == i).expect("member");
                let row = rows.entry((k, mask)).or_insert_with(|| zero_vector(n));
                row[i] = if pos % 2 == 1 {
                    row[i].clone() - c.clone()
                } else {
                    row[i].clone() + c.clone()
                };
            }
        }
    }
    let rows: Vec<Vector<S>> = rows.into_values().filter(|r| !is_zero_vector(r)).collect();
    Subspace::kernel(n, rows, l.constraints())
}

/// In dimension at least four, a codimension-one abelian subalgebra rules out
/// contact and exact symplectic forms.
///
/// All such hyperplanes are found by linear algebra (see
/// [`abelian_hyperplanes`]); `hyperplanes` are additional candidates given as
/// 1-forms, tested directly.
pub fn codim1_abelian_obstruction<S: Coefficient>(l: &LieAlgebra<S>, hyperplanes: &[Vector<S>]) -> Result<Obstruction> {
    const NAME: &str = "codim1-abelian";
    let n = l.dim();
    if n < 4 {
        return Ok(Obstruction::inapplicable(NAME, format!("dimension {n} < 4")));
    }
    let mut found: Option<(Vector<S>, bool)> = None;
    for phi in hyperplanes {
        if phi.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: phi.len(),
            });
        }
        let kernel = Subspace::kernel(n, vec![phi.clone()], l.constraints())?;
        if kernel.dim() + 1 == n {
            let props = l.subspace_properties(&kernel)?;
            if props.is_abelian {
                found = Some((phi.clone(), props.is_ideal));
                break;
            }
        }
    }
    if found.is_none() {
        let space = abelian_hyperplanes(l)?;
        let derived = l.derived_ideal()?;
        // hyperplanes containing [L, L] are ideals
        let mut rows: Vec<Vector<S>> = Vec::new();
        for d in derived.basis() {
            rows.push(space.basis().iter().map(|phi| linalg::dot(phi, d)).collect());
        }
        let ideal_coeffs = if space.dim() == 0 {
            Vec::new()
        } else {
            linalg::nullspace(rows, space.dim(), l.constraints())?
        };
        if let Some(c) = ideal_coeffs.first() {
            let phi = c
                .iter()
                .zip(space.basis())
                .fold(zero_vector(n), |acc, (ci, b)| linalg::add(&acc, &linalg::scale(ci, b)));
            found = Some((phi, true));
        } else if let Some(phi) = space.basis().first() {
            found = Some((phi.clone(), false));
        }
    }
    match found {
        None => Ok(Obstruction::inapplicable(NAME, "no codimension-one abelian subalgebra")),
        Some((phi, ideal)) => {
            let form = KForm::from_covector(&phi).format_with(l.labels());
            blocking(
                l,
                NAME,
                true,
                true,
                format!("Ker({form}) is an abelian {}", if ideal { "ideal" } else { "subalgebra" }),
            )
        }
    }
}

/// Brackets of the form `[x, y] = l(y) x - l(x) y`.
///
/// Taking the trace of `ad_x` gives `trace(ad_x) = -(n - 1) l(x)`, so the only
/// candidate is `l(x) = -trace(ad_x) / (n - 1)`. Such algebras have
/// `dα ∧ α = 0` and `(dα)^2 = 0` for every 1-form, which rules out contact
/// forms in odd dimension at least 3 and Frobenius forms in even dimension at
/// least 4.
pub fn rank_one_bracket_detect<S: Coefficient>(l: &LieAlgebra<S>) -> Result<(Obstruction, Option<Vector<S>>)> {
    const NAME: &str = "rank-one-bracket";
    let n = l.dim();
    if n < 2 {
        return Err(Error::Precondition("dimension below 2".into()));
    }
    let inv = S::from_rational(&Rational::new((-1).into(), ((n - 1) as i64).into()));
    let ell: Vector<S> = (0..n).map(|i| inv.clone() * l.trace_ad(i)).collect();
    let holds = (0..n).all(|i| {
        (i + 1..n).all(|j| {
            let expected = linalg::sub(
                &linalg::scale(&ell[j], &basis_vector(n, i)),
                &linalg::scale(&ell[i], &basis_vector(n, j)),
            );
            l.bracket_basis(i, j) == expected
        })
    });
    if !holds {
        return Ok((Obstruction::inapplicable(NAME, "bracket is not of the form l(y)x - l(x)y"), None));
    }
    let detail = format!("[x,y] = l(y)x - l(x)y with l = {}", KForm::from_covector(&ell).format_with(l.labels()));
    let obstruction = if n >= 3 {
        blocking(l, NAME, true, true, detail)?
    } else {
        Obstruction {
            applies: true,
            ..Obstruction::inapplicable(NAME, detail + " (dimension 2: no contact question, Frobenius possible)")
        }
    };
    Ok((obstruction, Some(ell)))
}

/// Prediction of the five-dimensional case analysis for solvable,
/// nondecomposable algebras with trivial center.
#[derive(Debug, Clone)]
pub struct Dim5Decision {
    pub case: String,
    /// `None` when the case analysis makes no claim.
    pub predicted: Option<bool>,
    pub actual: bool,
}

impl Dim5Decision {
    pub fn agrees(&self) -> bool {
        self.predicted.map_or(true, |p| p == self.actual)
    }

    pub fn to_report(&self) -> Report {
        let mut report = Report::new("five-dimensional decision");
        report.push(Check::info("case", self.case.clone()));
        let predicted = match self.predicted {
            Some(true) => "contact",
            Some(false) => "not contact",
            None => "no prediction",
        };
        report.push(Check::assert(
            "prediction",
            self.agrees(),
            format!("predicted {predicted}, decider says {}", if self.actual { "contact" } else { "not contact" }),
        ));
        report
    }
}

pub fn dim5_decision<S: Coefficient>(l: &LieAlgebra<S>, nondecomposable: bool) -> Result<Dim5Decision> {
    if l.dim() != 5 {
        return Err(Error::Precondition(format!("dimension {} is not 5", l.dim())));
    }
    if !nondecomposable {
        return Err(Error::Precondition("algebra is flagged decomposable".into()));
    }
    if !l.is_solvable()? {
        return Err(Error::Precondition("algebra is not solvable".into()));
    }
    let z = l.center()?.dim();
    if z != 0 {
        return Err(Error::Precondition(format!("center has dimension {z}")));
    }
    let data = derived_ideal_data(l)?;
    let (case, predicted) = match data.derived.dim() {
        3 => {
            let abelian = l.subspace_properties(&data.derived)?.is_abelian;
            if abelian {
                ("dim [L,L] = 3, abelian".to_string(), None)
            } else {
                ("dim [L,L] = 3, nonabelian".to_string(), Some(true))
            }
        }
        4 => match (data.center.dim(), data.scalar_action) {
            (1, _) => ("dim [L,L] = 4, dim Z([L,L]) = 1".to_string(), Some(true)),
            (2, Some(false)) => ("dim [L,L] = 4, dim Z([L,L]) = 2, non-scalar action".to_string(), Some(true)),
            (2, _) => ("dim [L,L] = 4, dim Z([L,L]) = 2, scalar action".to_string(), Some(false)),
            (d, _) => (format!("dim [L,L] = 4, dim Z([L,L]) = {d}"), Some(false)),
        },
        d => (format!("dim [L,L] = {d}"), None),
    };
    Ok(Dim5Decision {
        case,
        predicted,
        actual: admits_contact_form(l)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(v: i64) -> Scalar {
        Scalar::int(v)
    }

    fn sl2() -> LieAlgebra<Scalar> {
        LieAlgebra::from_brackets(3, &[(0, 1, &[(1, s(2))]), (0, 2, &[(2, s(-2))]), (1, 2, &[(0, s(1))])])
    }

    fn so3() -> LieAlgebra<Scalar> {
        LieAlgebra::from_brackets(3, &[(0, 1, &[(2, s(1))]), (1, 2, &[(0, s(1))]), (0, 2, &[(1, s(-1))])])
    }

    fn aff() -> LieAlgebra<Scalar> {
        LieAlgebra::from_brackets(2, &[(0, 1, &[(1, s(1))])])
    }

    fn h3() -> LieAlgebra<Scalar> {
        LieAlgebra::from_brackets(3, &[(0, 1, &[(2, s(1))])])
    }

    #[test]
    fn invariant_forms() {
        assert_eq!(invariant_form_space(&so3()).unwrap().len(), 1);
        assert_eq!(invariant_form_space(&LieAlgebra::<Scalar>::abelian(3)).unwrap().len(), 6);
        for b in invariant_form_space(&aff()).unwrap() {
            assert!(b.determinant().is_zero());
            assert!(b.is_invariant(&aff()));
        }
    }

    #[test]
    fn orthogonality() {
        assert!(orthogonal_exists(&sl2()).unwrap().exists);
        assert!(!orthogonal_exists(&aff()).unwrap().exists);
        assert!(!orthogonal_exists(&h3()).unwrap().exists);
        let v = orthogonal_exists(&so3()).unwrap();
        assert!(v.witness.unwrap().is_invariant(&so3()));
    }

    #[test]
    fn centers() {
        let h3r2 = h3().direct_sum(&LieAlgebra::abelian(2));
        let o = center_obstruction(&h3r2).unwrap();
        assert!(o.blocks_contact && o.agrees());
        assert!(!center_obstruction(&h3()).unwrap().applies);
        assert!(!center_obstruction(&sl2()).unwrap().applies);
    }

    #[test]
    fn abelian_hyperplane_search() {
        // aff ⊕ R²: span(e2, e3, e4) is an abelian ideal
        let l = aff().direct_sum(&LieAlgebra::abelian(2));
        let o = codim1_abelian_obstruction(&l, &[]).unwrap();
        assert!(o.blocks_frobenius && o.agrees(), "{}", o.detail);
        let h5 = LieAlgebra::from_brackets(5, &[(0, 2, &[(4, s(1))]), (1, 3, &[(4, s(1))])]);
        assert!(!codim1_abelian_obstruction(&h5, &[]).unwrap().applies);
        assert!(!codim1_abelian_obstruction(&h3(), &[]).unwrap().applies);
    }

    #[test]
    fn rank_one() {
        let r2id = LieAlgebra::from_brackets(3, &[(2, 0, &[(0, s(1))]), (2, 1, &[(1, s(1))])]);
        let (o, ell) = rank_one_bracket_detect(&r2id).unwrap();
        assert!(o.blocks_contact && o.agrees());
        assert_eq!(ell.unwrap(), vec![s(0), s(0), s(-1)]);
        assert!(!rank_one_bracket_detect(&sl2()).unwrap().0.applies);
        let (o, ell) = rank_one_bracket_detect(&LieAlgebra::<Scalar>::abelian(3)).unwrap();
        assert!(o.applies);
        assert_eq!(ell.unwrap(), vec![s(0); 3]);
    }

    #[test]
    fn cross_check_on_simple_algebras() {
        for l in [sl2(), so3()] {
            let r = orthogonal_contact_cross_check(&l.to_rational().unwrap()).unwrap();
            assert!(r.passed(), "{r}");
            assert!(r.find("ad-kernel-line").is_some());
        }
    }
}
