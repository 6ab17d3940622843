//! Codimension-one extensions and the constructions built on them:
//! contactization of exact symplectic algebras, exact symplectization of
//! contact algebras, and central extensions by a symplectic cocycle together
//! with their inverse.
//!
//! Extensions append a new basis vector `e0` last, with brackets
//! `[x, e0] = ψ(x) + f(x) e0` for `x` in the base.


use crate::contact::{is_contact_form, is_exact_symplectic, liouville_vector, reeb_vector, ContactVerdict};
use crate::error::{Error, Result};
use crate::forms::KForm;
use crate::liealg::LieAlgebra;
use crate::linalg::{self, basis_vector, dot, is_zero_vector, zero_vector, Vector};
use crate::report::{Check, Report};
use crate::scalar::{Certainty, Coefficient};

/// Extension datum `(ψ, f, s)` on a base algebra of dimension `m`.
#[derive(Debug, Clone, PartialEq)]
pub struct ExtensionData<S> {
    /// `psi[j] = ψ(e_j)`.
    pub psi: Vec<Vector<S>>,
    pub f: Vector<S>,
    pub s: S,
}

impl<S: Coefficient> ExtensionData<S> {
    pub fn new(psi: Vec<Vector<S>>, f: Vector<S>, s: S) -> Self {
        ExtensionData { psi, f, s }
    }

    /// `ψ = 0`, `f = 0`.
    pub fn trivial(m: usize, s: S) -> Self {
        ExtensionData {
            psi: vec![zero_vector(m); m],
            f: zero_vector(m),
            s,
        }
    }

    pub fn apply_psi(&self, x: &[S]) -> Vector<S> {
        let m = self.f.len();
        let mut out = zero_vector(m);
        for (xj, col) in x.iter().zip(&self.psi) {
            if !xj.is_zero() {
                out = linalg::add(&out, &linalg::scale(xj, col));
            }
        }
        out
    }
}

fn check_shapes<S: Coefficient>(h: &LieAlgebra<S>, psi: &[Vector<S>], f: &[S]) -> Result<()> {
    let m = h.dim();
    for len in std::iter::once(psi.len()).chain(psi.iter().map(Vec::len)).chain(std::iter::once(f.len())) {
        if len != m {
            return Err(Error::DimensionMismatch { expected: m, found: len });
        }
    }
    Ok(())
}

/// Check that `f` is closed and `ψ([x,y]) = [ψx,y] + [x,ψy] - f(x)ψ(y) + f(y)ψ(x)`
/// on all basis pairs.
pub fn check_extension_cocycle<S: Coefficient>(h: &LieAlgebra<S>, psi: &[Vector<S>], f: &[S]) -> Result<Report> {
    check_shapes(h, psi, f)?;
    let m = h.dim();
    let data = ExtensionData::new(psi.to_vec(), f.to_vec(), S::zero());
    let mut report = Report::new("extension cocycle");
    let mut closed_failures = Vec::new();
    let mut cocycle_failures = Vec::new();
    for i in 0..m {
        for j in (i + 1)..m {
            let bracket = h.bracket_basis(i, j);
            let fb = dot(f, &bracket);
            if !fb.is_zero() {
                closed_failures.push(format!("f([{}, {}]) = {fb}", h.labels()[i], h.labels()[j]));
            }
            let lhs = data.apply_psi(&bracket);
            let (x, y) = (basis_vector(m, i), basis_vector(m, j));
            let rhs = linalg::add(
                &linalg::add(&h.bracket(&psi[i], &y)?, &h.bracket(&x, &psi[j])?),
                &linalg::sub(&linalg::scale(&f[j], &psi[i]), &linalg::scale(&f[i], &psi[j])),
            );
            let residual = linalg::sub(&lhs, &rhs);
            if !is_zero_vector(&residual) {
                cocycle_failures.push(format!(
                    "({}, {}): residual {}",
                    h.labels()[i],
                    h.labels()[j],
                    h.format_vector(&residual)
                ));
            }
        }
    }
    report.push(Check::assert(
        "f-closed",
        closed_failures.is_empty(),
        if closed_failures.is_empty() {
            "f vanishes on the derived ideal".to_string()
        } else {
            closed_failures.join("; ")
        },
    ));
    report.push(Check::assert(
        "psi-cocycle",
        cocycle_failures.is_empty(),
        if cocycle_failures.is_empty() {
            "δψ = f∧ψ on all basis pairs".to_string()
        } else {
            cocycle_failures.join("; ")
        },
    ));
    Ok(report)
}

fn require_cocycle<S: Coefficient>(h: &LieAlgebra<S>, psi: &[Vector<S>], f: &[S]) -> Result<()> {
    let report = check_extension_cocycle(h, psi, f)?;
    if let Some(c) = report.failures().next() {
        return Err(Error::Cocycle(format!("{}: {}", c.name, c.detail)));
    }
    Ok(())
}

fn fresh_label(labels: &[String], base: &str) -> String {
    let mut label = base.to_string();
    while labels.contains(&label) {
        label.push('\'');
    }
    label
}

/// `H ⊕ ℝ e0` with `[x, e0] = ψ(x) + f(x) e0`.
pub fn build_extension<S: Coefficient>(h: &LieAlgebra<S>, psi: &[Vector<S>], f: &[S]) -> Result<LieAlgebra<S>> {
    require_cocycle(h, psi, f)?;
    let m = h.dim();
    let mut labels = h.labels().to_vec();
    labels.push(fresh_label(h.labels(), "e0"));
    let mut g = LieAlgebra::abelian_with_labels(labels)
        .with_params(h.params().to_vec())
        .with_constraints(h.constraints().to_vec());
    for (&(i, j), _) in h.structure_constants() {
        let mut v = h.bracket_basis(i, j);
        v.push(S::zero());
        g.set_bracket(i, j, v)?;
    }
    for i in 0..m {
        let mut v = psi[i].clone();
        v.push(f[i].clone());
        g.set_bracket(i, m, v)?;
    }
    debug_assert!(g.jacobi_check().passed());
    Ok(g)
}

/// `ω(x0, ψ(x0)) + s (1 + f(x0))`, where `x0` is the Liouville vector of `α`.
///
/// When the Liouville vector has a denominator `W` that does not divide out,
/// the value is returned multiplied by `W²` (same nonvanishing locus).
pub fn contactization_condition<S: Coefficient>(h: &LieAlgebra<S>, alpha: &KForm<S>, data: &ExtensionData<S>) -> Result<S> {
    check_shapes(h, &data.psi, &data.f)?;
    let x0 = liouville_vector(h, alpha)?;
    let omega = alpha.ce_d(h)?;
    let w = x0.denom.clone();
    let n = x0.numer.clone();
    let first = omega.eval(&[n.clone(), data.apply_psi(&n)])?;
    let scaled = first + data.s.clone() * (w.clone() * w.clone() + w.clone() * dot(&data.f, &n));
    let w2 = w.clone() * w;
    Ok(scaled.exact_div(&w2).unwrap_or(scaled))
}

/// Output of [`contactize`].
#[derive(Debug, Clone)]
pub struct Contactization<S> {
    pub algebra: LieAlgebra<S>,
    /// `η_s = α + s e0*`.
    pub form: KForm<S>,
    pub condition: S,
    pub verdict: ContactVerdict<S>,
    /// `η_s` restricted to the base equals `α`.
    pub restricts_to_base_form: bool,
}

/// Build `G = H ⊕ ℝ e0` from `(ψ, f)` and verify that `α + s e0*` is contact.
pub fn contactize<S: Coefficient>(h: &LieAlgebra<S>, alpha: &KForm<S>, data: &ExtensionData<S>) -> Result<Contactization<S>> {
    require_cocycle(h, &data.psi, &data.f)?;
    let condition = contactization_condition(h, alpha, data)?;
    if h.certainty(&condition) == Certainty::Zero {
        return Err(Error::Inadmissible(condition.to_string()));
    }
    let g = build_extension(h, &data.psi, &data.f)?;
    let m = h.dim();
    let form = alpha
        .extend_dim(m + 1)
        .add(&KForm::covector(m + 1, m).scale(&data.s))?;
    let verdict = is_contact_form(&g, &form)?;
    if !verdict.is_contact() {
        return Err(Error::NotContact(format!(
            "constructed form {} has top coefficient 0",
            form.format_with(g.labels())
        )));
    }
    let restricts_to_base_form = form.restrict_leading(m) == *alpha;
    Ok(Contactization {
        algebra: g,
        form,
        condition,
        verdict,
        restricts_to_base_form,
    })
}

/// `H ×_ω ℝξ`: `[x, y] = [x, y]_H + ω(x, y) ξ`, with `ξ` appended last, and
/// the contact form `ξ*`.
pub fn central_extension<S: Coefficient>(h: &LieAlgebra<S>, omega: &KForm<S>) -> Result<(LieAlgebra<S>, KForm<S>)> {
    if omega.dim() != h.dim() || omega.degree() != 2 {
        return Err(Error::Precondition("expected a 2-form on the base algebra".into()));
    }
    if !omega.ce_d(h)?.is_zero() {
        return Err(Error::Cocycle("ω is not closed".into()));
    }
    if omega.rank(h.constraints())? != h.dim() {
        return Err(Error::Degenerate("ω is degenerate".into()));
    }
    let m = h.dim();
    let mut labels = h.labels().to_vec();
    labels.push(fresh_label(h.labels(), "xi"));
    let mut g = LieAlgebra::abelian_with_labels(labels)
        .with_params(h.params().to_vec())
        .with_constraints(h.constraints().to_vec());
    for i in 0..m {
        for j in (i + 1)..m {
            let mut v = h.bracket_basis(i, j);
            v.push(omega.coefficient(&[i, j]));
            g.set_bracket(i, j, v)?;
        }
    }
    Ok((g, KForm::covector(m + 1, m)))
}

/// Output of [`reduce_by_center`].
#[derive(Debug, Clone)]
pub struct CenterReduction<S> {
    /// Quotient by the center, on a basis of `Ker(η)`.
    pub base: LieAlgebra<S>,
    /// Induced symplectic form `ω(x, y) = η([x, y])` on the base.
    pub omega: KForm<S>,
    /// The original algebra in the adapted basis (kernel basis, then `ξ`).
    pub adapted: LieAlgebra<S>,
    /// Adapted basis vectors in the original coordinates.
    pub basis: Vec<Vector<S>>,
}

/// Present a contact algebra with one-dimensional center as a central
/// extension of a symplectic algebra.
pub fn reduce_by_center<S: Coefficient>(g: &LieAlgebra<S>, eta: &KForm<S>) -> Result<CenterReduction<S>> {
    let n = g.dim();
    let verdict = is_contact_form(g, eta)?;
    if !verdict.is_contact() {
        return Err(Error::NotContact(eta.format_with(g.labels())));
    }
    let center = g.center()?;
    if center.dim() != 1 {
        return Err(Error::Precondition(format!("center has dimension {}, expected 1", center.dim())));
    }
    let z = center.basis()[0].clone();
    let coords = eta.as_covector()?;
    let ez = dot(&coords, &z);
    if g.certainty(&ez) != Certainty::NonZero {
        return Err(Error::Precondition("η may vanish on the center".into()));
    }
    let xi: Vector<S> = z
        .iter()
        .map(|c| c.exact_div(&ez))
        .collect::<Option<_>>()
        .ok_or_else(|| Error::Precondition("η(z) does not divide the central vector".into()))?;
    let k = (0..n)
        .find(|&k| coords[k].is_unit())
        .ok_or_else(|| Error::Precondition("η has no unit coordinate".into()))?;
    let mut basis: Vec<Vector<S>> = Vec::with_capacity(n);
    let mut labels = Vec::with_capacity(n);
    for j in (0..n).filter(|&j| j != k) {
        let mut b = basis_vector(n, j);
        let t = coords[j].exact_div(&coords[k]).expect("unit");
        b[k] = -t;
        basis.push(b);
        labels.push(g.labels()[j].clone());
    }
    basis.push(xi);
    labels.push(g.labels()[k].clone());
    let mut adapted = g.change_basis(&basis)?;
    adapted.set_labels(labels.clone())?;
    let m = n - 1;
    let mut base = LieAlgebra::abelian_with_labels(labels[..m].to_vec())
        .with_params(g.params().to_vec())
        .with_constraints(g.constraints().to_vec());
    let mut omega = KForm::zero(m, 2);
    for i in 0..m {
        for j in (i + 1)..m {
            let v = adapted.bracket_basis(i, j);
            base.set_bracket(i, j, v[..m].to_vec())?;
            if !v[m].is_zero() {
                omega = omega.add(&KForm::from_terms(m, 2, [(vec![i, j], v[m].clone())])?)?;
            }
        }
    }
    Ok(CenterReduction {
        base,
        omega,
        adapted,
        basis,
    })
}

/// Output of [`exact_symplectization`].
#[derive(Debug, Clone)]
pub struct Symplectization<S> {
    pub algebra: LieAlgebra<S>,
    /// `α_s = η + s ē0*`.
    pub form: KForm<S>,
    /// `η(ψ(ξ)) + s f(ξ)` with `ξ` the Reeb vector.
    pub condition: S,
    /// Coefficient of the volume form in `(dα_s)^{m}`.
    pub top_coefficient: S,
}

/// Extend a contact algebra `(G, η)` by `(ψ, f)` and verify that
/// `α_s = η + s ē0*` is exact symplectic.
pub fn exact_symplectization<S: Coefficient>(g: &LieAlgebra<S>, eta: &KForm<S>, data: &ExtensionData<S>) -> Result<Symplectization<S>> {
    require_cocycle(g, &data.psi, &data.f)?;
    let reeb = reeb_vector(g, eta)?;
    let coords = eta.as_covector()?;
    let xi = reeb.numer.clone();
    let w = reeb.denom.clone();
    // scaled by the Reeb denominator when it does not divide out
    let scaled = dot(&coords, &data.apply_psi(&xi)) + data.s.clone() * dot(&data.f, &xi);
    let condition = scaled.exact_div(&w).unwrap_or(scaled);
    if g.certainty(&condition) == Certainty::Zero {
        return Err(Error::Inadmissible(condition.to_string()));
    }
    let extended = build_extension(g, &data.psi, &data.f)?;
    let n = g.dim();
    let form = eta.extend_dim(n + 1).add(&KForm::covector(n + 1, n).scale(&data.s))?;
    let verdict = is_exact_symplectic(&extended, &form)?;
    if !verdict.is_symplectic() {
        return Err(Error::Degenerate(format!(
            "constructed form {} is degenerate",
            form.format_with(extended.labels())
        )));
    }
    Ok(Symplectization {
        algebra: extended,
        form,
        condition,
        top_coefficient: verdict.top_coefficient,
    })
}
