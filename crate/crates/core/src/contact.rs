//! Contact and exact symplectic forms: predicates, Reeb and Liouville vectors,
//! and the symbolic existence deciders.
//!
//! A 1-form `η` on a `(2n+1)`-dimensional algebra is contact when the top
//! coefficient of `(dη)^n ∧ η` is nonzero; on a `2m`-dimensional algebra a
//! 1-form `α` is exact symplectic (Frobenius) when `(dα)^m ≠ 0`. Existence is
//! decided by expanding these coefficients for the generic form
//! `Σ a_i e_i*`: a form exists iff the resulting polynomial is not identically
//! zero.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::forms::KForm;
use crate::liealg::{Assignment, LieAlgebra};
use crate::linalg::{basis_vector, ScaledVector, Subspace, Vector};
use crate::report::{Check, Report};
use crate::scalar::{Certainty, Coefficient, Rational, Scalar};

/// Verdict on a candidate contact form.
#[derive(Debug, Clone)]
pub struct ContactVerdict<S> {
    pub form: KForm<S>,
    /// Coefficient of `e_1* ∧ ... ∧ e_N*` in `(dη)^n ∧ η`.
    pub top_coefficient: S,
    /// Nonvanishing of the top coefficient on the constrained locus.
    pub certainty: Certainty,
    /// Reeb vector, present iff the form is contact.
    pub reeb: Option<ScaledVector<S>>,
}

impl<S: Coefficient> ContactVerdict<S> {
    /// Contact for generic admissible parameters.
    pub fn is_contact(&self) -> bool {
        self.certainty != Certainty::Zero
    }

    /// Contact at every point of the constrained locus.
    pub fn holds_everywhere(&self) -> bool {
        self.certainty == Certainty::NonZero
    }
}

/// Verdict on a candidate symplectic 2-form.
#[derive(Debug, Clone)]
pub struct SymplecticVerdict<S> {
    pub form: KForm<S>,
    pub closed: bool,
    /// Coefficient of the volume form in `ω^m`.
    pub top_coefficient: S,
    pub certainty: Certainty,
}

impl<S: Coefficient> SymplecticVerdict<S> {
    pub fn is_symplectic(&self) -> bool {
        self.closed && self.certainty != Certainty::Zero
    }

    pub fn holds_everywhere(&self) -> bool {
        self.closed && self.certainty == Certainty::NonZero
    }
}

/// Which kind of form an existence question is about.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FormKind {
    Contact,
    Frobenius,
}

impl FormKind {
    pub fn name(self) -> &'static str {
        match self {
            FormKind::Contact => "contact",
            FormKind::Frobenius => "frobenius",
        }
    }
}

/// Top coefficient of the generic form, as a polynomial in fresh variables.
#[derive(Debug, Clone)]
pub struct GenericPolynomial {
    pub kind: FormKind,
    pub polynomial: Scalar,
    /// Coefficient variables; variable `i` multiplies `e_i*`.
    pub variables: Vec<String>,
}

/// Result of an existence decision.
#[derive(Debug, Clone)]
pub struct ExistenceVerdict {
    pub kind: FormKind,
    pub polynomial: Scalar,
    pub variables: Vec<String>,
    pub exists: bool,
    /// Parameter point at which the witness was found (empty without parameters).
    pub sample: Option<Assignment>,
    /// Rational form verified directly at `sample`.
    pub witness: Option<KForm<Rational>>,
}

fn require_parity<S: Coefficient>(l: &LieAlgebra<S>, odd: bool, operation: &'static str) -> Result<()> {
    if (l.dim() % 2 == 1) != odd {
        return Err(Error::Parity {
            operation,
            expected: if odd { "odd" } else { "even" },
            dim: l.dim(),
        });
    }
    Ok(())
}

fn require_one_form<S: Coefficient>(l: &LieAlgebra<S>, form: &KForm<S>) -> Result<()> {
    if form.dim() != l.dim() {
        return Err(Error::DimensionMismatch {
            expected: l.dim(),
            found: form.dim(),
        });
    }
    if form.degree() != 1 {
        return Err(Error::Precondition(format!("expected a 1-form, got degree {}", form.degree())));
    }
    Ok(())
}

/// `(dη)^n` and the top coefficient of `(dη)^n ∧ η`.
fn contact_top<S: Coefficient>(l: &LieAlgebra<S>, eta: &KForm<S>) -> Result<(KForm<S>, S)> {
    let n = l.dim() / 2;
    let power = eta.ce_d(l)?.power(n);
    let top = power.wedge(eta)?.top_coefficient()?;
    Ok((power, top))
}

/// Reeb vector from `i_ξ vol = (dη)^n`, where `vol = (dη)^n ∧ η`:
/// `ξ_i = (-1)^i [(dη)^n]_{î} / T`.
fn reeb_from_power<S: Coefficient>(power: &KForm<S>, top: &S) -> ScaledVector<S> {
    let dim = power.dim();
    let numer = (0..dim)
        .map(|i| {
            let rest: Vec<usize> = (0..dim).filter(|&j| j != i).collect();
            let c = power.coefficient(&rest);
            if i % 2 == 1 {
                -c
            } else {
                c
            }
        })
        .collect();
    ScaledVector {
        numer,
        denom: top.clone(),
    }
    .simplify()
}

/// Decide whether `eta` is a contact form on `l`.
pub fn is_contact_form<S: Coefficient>(l: &LieAlgebra<S>, eta: &KForm<S>) -> Result<ContactVerdict<S>> {
    require_parity(l, true, "contact form test")?;
    require_one_form(l, eta)?;
    let (power, top) = contact_top(l, eta)?;
    let certainty = l.certainty(&top);
    let reeb = (certainty != Certainty::Zero).then(|| reeb_from_power(&power, &top));
    Ok(ContactVerdict {
        form: eta.clone(),
        top_coefficient: top,
        certainty,
        reeb,
    })
}

/// The unique `ξ` with `i_ξ dη = 0` and `η(ξ) = 1`.
pub fn reeb_vector<S: Coefficient>(l: &LieAlgebra<S>, eta: &KForm<S>) -> Result<ScaledVector<S>> {
    let v = is_contact_form(l, eta)?;
    v.reeb
        .ok_or_else(|| Error::NotContact(format!("top coefficient of (dη)^n∧η vanishes for η = {}", eta.format_with(l.labels()))))
}

/// Decide whether `omega` is a symplectic 2-form on `l`.
pub fn is_symplectic<S: Coefficient>(l: &LieAlgebra<S>, omega: &KForm<S>) -> Result<SymplecticVerdict<S>> {
    require_parity(l, false, "symplectic form test")?;
    if omega.degree() != 2 || omega.dim() != l.dim() {
        return Err(Error::Precondition("expected a 2-form on the algebra".into()));
    }
    let closed = omega.ce_d(l)?.is_zero();
    let top = omega.power(l.dim() / 2).top_coefficient()?;
    Ok(SymplecticVerdict {
        form: omega.clone(),
        closed,
        certainty: l.certainty(&top),
        top_coefficient: top,
    })
}

/// Decide whether `dα` is symplectic.
pub fn is_exact_symplectic<S: Coefficient>(l: &LieAlgebra<S>, alpha: &KForm<S>) -> Result<SymplecticVerdict<S>> {
    require_one_form(l, alpha)?;
    require_parity(l, false, "exact symplectic test")?;
    is_symplectic(l, &alpha.ce_d(l)?)
}

/// The vector `x0` with `i_{x0} dα = α`.
///
/// From `i_{x0} ω^m = m α ∧ ω^{m-1}` and `ω^m = W vol`:
/// `x0_i = (-1)^i m [α ∧ ω^{m-1}]_{î} / W`.
pub fn liouville_vector<S: Coefficient>(l: &LieAlgebra<S>, alpha: &KForm<S>) -> Result<ScaledVector<S>> {
    let verdict = is_exact_symplectic(l, alpha)?;
    if !verdict.is_symplectic() {
        return Err(Error::Degenerate(format!("d({}) is degenerate", alpha.format_with(l.labels()))));
    }
    let m = l.dim() / 2;
    let omega = &verdict.form;
    let rest = alpha.wedge(&omega.power(m - 1))?;
    let mult = S::from_i64(m as i64);
    let dim = l.dim();
    let numer = (0..dim)
        .map(|i| {
            let others: Vec<usize> = (0..dim).filter(|&j| j != i).collect();
            let c = mult.clone() * rest.coefficient(&others);
            if i % 2 == 1 {
                -c
            } else {
                c
            }
        })
        .collect();
    Ok(ScaledVector {
        numer,
        denom: verdict.top_coefficient,
    }
    .simplify())
}

/// Name prefix for the generic coefficients that collides with no parameter.
fn fresh_prefix(params: &[String]) -> &'static str {
    const PREFIXES: [&str; 6] = ["a", "b", "c", "u", "w", "z"];
    PREFIXES
        .into_iter()
        .find(|p| {
            !params
                .iter()
                .any(|q| q.strip_prefix(p).is_some_and(|rest| rest.chars().all(|c| c.is_ascii_digit())))
        })
        .unwrap_or("coef")
}

fn generic_form(l: &LieAlgebra<Scalar>) -> (KForm<Scalar>, Vec<String>) {
    let prefix = fresh_prefix(l.params());
    let vars: Vec<String> = (1..=l.dim()).map(|i| format!("{prefix}{i}")).collect();
    let coords: Vec<Scalar> = vars.iter().map(|v| Scalar::var(v)).collect();
    (KForm::from_covector(&coords), vars)
}

/// Top coefficient of `(dη)^n ∧ η` for the generic `η = Σ a_i e_i*`.
pub fn contact_polynomial<S: Coefficient>(l: &LieAlgebra<S>) -> Result<GenericPolynomial> {
    require_parity(l, true, "contact polynomial")?;
    let l = l.to_symbolic();
    let (eta, variables) = generic_form(&l);
    let (_, top) = contact_top(&l, &eta)?;
    Ok(GenericPolynomial {
        kind: FormKind::Contact,
        polynomial: top,
        variables,
    })
}

/// Top coefficient of `(dα)^m` for the generic `α = Σ a_i e_i*`.
pub fn frobenius_polynomial<S: Coefficient>(l: &LieAlgebra<S>) -> Result<GenericPolynomial> {
    require_parity(l, false, "Frobenius polynomial")?;
    let l = l.to_symbolic();
    let (alpha, variables) = generic_form(&l);
    let top = alpha.ce_d(&l)?.power(l.dim() / 2).top_coefficient()?;
    Ok(GenericPolynomial {
        kind: FormKind::Frobenius,
        polynomial: top,
        variables,
    })
}

fn integer(v: i64) -> Rational {
    Rational::from_integer(v.into())
}

/// Integer points of `{-k..k}^m` ordered by max-norm, then lexicographically.
fn grid_points(m: usize, k: i64) -> impl Iterator<Item = Vec<i64>> {
    (0..=k).flat_map(move |radius| {
        let side = (2 * radius + 1) as usize;
        let total = side.checked_pow(m as u32).unwrap_or(usize::MAX);
        (0..total).filter_map(move |mut idx| {
            let mut point = Vec::with_capacity(m);
            for _ in 0..m {
                point.push((idx % side) as i64 - radius);
                idx /= side;
            }
            point.iter().any(|x| x.abs() == radius).then_some(point)
        })
    })
}

/// Candidate parameter values in the order tried.
const SAMPLE_VALUES: [i64; 11] = [1, 2, -1, 3, -2, 0, 5, -3, 4, 7, -5];

fn parameter_candidates(params: &[String], preferred: &[Assignment]) -> Vec<Assignment> {
    let mut out: Vec<Assignment> = preferred.to_vec();
    if params.is_empty() {
        out.push(Assignment::new());
        return out;
    }
    let side = SAMPLE_VALUES.len();
    let total = side.pow(params.len().min(4) as u32);
    let mut points: Vec<Vec<usize>> = (0..total)
        .map(|mut idx| {
            (0..params.len())
                .map(|_| {
                    let d = idx % side;
                    idx /= side;
                    d
                })
                .collect()
        })
        .collect();
    points.sort_by_key(|p| (p.iter().copied().max().unwrap_or(0), p.clone()));
    for p in points {
        out.push(
            params
                .iter()
                .zip(p)
                .map(|(name, d)| (name.clone(), integer(SAMPLE_VALUES[d])))
                .collect(),
        );
    }
    out
}

/// Rational form with the given coordinates.
fn rational_form(coords: &[i64]) -> KForm<Rational> {
    KForm::from_covector(&coords.iter().map(|&c| integer(c)).collect::<Vec<_>>())
}

fn verify_witness(kind: FormKind, l: &LieAlgebra<Rational>, form: &KForm<Rational>) -> Result<bool> {
    Ok(match kind {
        FormKind::Contact => is_contact_form(l, form)?.is_contact(),
        FormKind::Frobenius => is_exact_symplectic(l, form)?.is_symplectic(),
    })
}

/// Deterministic witness search on a parameter-free algebra:
/// basis covectors, then sums of two, then the integer grid.
fn search_witness(kind: FormKind, l: &LieAlgebra<Rational>, poly: &Scalar, vars: &[String]) -> Result<Option<KForm<Rational>>> {
    let n = l.dim();
    let value_at = |coords: &[i64]| -> Result<bool> {
        let at: Assignment = vars.iter().cloned().zip(coords.iter().map(|&c| integer(c))).collect();
        Ok(!poly.substitute(&at)?.is_zero())
    };
    let mut candidates: Vec<Vec<i64>> = (0..n)
        .map(|i| {
            let mut v = vec![0; n];
            v[i] = 1;
            v
        })
        .collect();
    for i in 0..n {
        for j in (i + 1)..n {
            let mut v = vec![0; n];
            v[i] = 1;
            v[j] = 1;
            candidates.push(v);
        }
    }
    for c in &candidates {
        if value_at(c)? {
            let form = rational_form(c);
            if verify_witness(kind, l, &form)? {
                return Ok(Some(form));
            }
        }
    }
    // A nonzero polynomial of degree <= d in each variable cannot vanish on
    // a grid with d + 1 values per coordinate.
    let degree = match kind {
        FormKind::Contact => n / 2 + 1,
        FormKind::Frobenius => n / 2,
    } as i64;
    let k = std::cmp::max(2, (degree + 1) / 2);
    for point in grid_points(n, k) {
        if value_at(&point)? {
            let form = rational_form(&point);
            if verify_witness(kind, l, &form)? {
                return Ok(Some(form));
            }
        }
    }
    Ok(None)
}

fn decide(kind: FormKind, l: &LieAlgebra<Scalar>, generic: GenericPolynomial, samples: &[Assignment]) -> Result<ExistenceVerdict> {
    let mut verdict = ExistenceVerdict {
        kind,
        exists: !generic.polynomial.is_zero(),
        polynomial: generic.polynomial,
        variables: generic.variables,
        sample: None,
        witness: None,
    };
    if !verdict.exists {
        return Ok(verdict);
    }
    for at in parameter_candidates(l.params(), samples) {
        if !l.satisfies_constraints(&at)? {
            continue;
        }
        let specialised = verdict.polynomial.substitute_partial(&at);
        if specialised.is_zero() {
            continue;
        }
        let concrete = l
            .substitute(&at)?
            .to_rational()
            .ok_or_else(|| Error::Precondition("parameters remain after substitution".into()))?;
        if let Some(w) = search_witness(kind, &concrete, &specialised, &verdict.variables)? {
            verdict.witness = Some(w);
            verdict.sample = Some(at);
            return Ok(verdict);
        }
    }
    Ok(verdict)
}

/// Decide whether some contact form exists (generically in the parameters),
/// trying the `samples` first when searching for a witness.
pub fn contact_exists_with_samples<S: Coefficient>(l: &LieAlgebra<S>, samples: &[Assignment]) -> Result<ExistenceVerdict> {
    let generic = contact_polynomial(l)?;
    decide(FormKind::Contact, &l.to_symbolic(), generic, samples)
}

pub fn contact_exists<S: Coefficient>(l: &LieAlgebra<S>) -> Result<ExistenceVerdict> {
    contact_exists_with_samples(l, &[])
}

pub fn frobenius_exists_with_samples<S: Coefficient>(l: &LieAlgebra<S>, samples: &[Assignment]) -> Result<ExistenceVerdict> {
    let generic = frobenius_polynomial(l)?;
    decide(FormKind::Frobenius, &l.to_symbolic(), generic, samples)
}

pub fn frobenius_exists<S: Coefficient>(l: &LieAlgebra<S>) -> Result<ExistenceVerdict> {
    frobenius_exists_with_samples(l, &[])
}

/// Whether the contact polynomial is not identically zero; false in even dimension.
pub fn admits_contact_form<S: Coefficient>(l: &LieAlgebra<S>) -> Result<bool> {
    if l.dim() % 2 == 0 {
        return Ok(false);
    }
    Ok(!contact_polynomial(l)?.polynomial.is_zero())
}

/// Whether the Frobenius polynomial is not identically zero; false in odd dimension.
pub fn admits_frobenius_form<S: Coefficient>(l: &LieAlgebra<S>) -> Result<bool> {
    if l.dim() % 2 == 1 {
        return Ok(false);
    }
    Ok(!frobenius_polynomial(l)?.polynomial.is_zero())
}

/// For a contact `η`: the kernel of `η` is not a subalgebra, and the radical
/// of `dη` is the Reeb line.
pub fn kernel_radical_check<S: Coefficient>(l: &LieAlgebra<S>, eta: &KForm<S>) -> Result<Report> {
    let verdict = is_contact_form(l, eta)?;
    let Some(reeb) = verdict.reeb.clone() else {
        return Err(Error::NotContact(eta.format_with(l.labels())));
    };
    let mut report = Report::new(format!("kernel and radical of {}", eta.format_with(l.labels())));
    let kernel = Subspace::kernel(l.dim(), vec![eta.as_covector()?], l.constraints())?;
    let props = l.subspace_properties(&kernel)?;
    report.push(Check::assert(
        "kernel-not-subalgebra",
        !props.is_subalgebra,
        if props.is_subalgebra {
            "Ker(η) is closed under the bracket"
        } else {
            "Ker(η) is not closed under the bracket"
        },
    ));
    let radical = eta.ce_d(l)?.radical(l.constraints())?;
    let reeb_line = Subspace::span(l.dim(), vec![reeb.numer.clone()], l.constraints())?;
    let ok = radical.dim() == 1 && radical.equals(&reeb_line, l.constraints())?;
    report.push(
        Check::assert(
            "radical-is-reeb-line",
            ok,
            format!("dim Rad(dη) = {}", radical.dim()),
        )
        .with("reeb", format_scaled(l, &reeb)),
    );
    Ok(report)
}

/// Print a scaled vector in the basis labels of `l`.
pub fn format_scaled<S: Coefficient>(l: &LieAlgebra<S>, v: &ScaledVector<S>) -> String {
    let body = l.format_vector(&v.numer);
    if v.denom.is_one() {
        body
    } else {
        format!("({body}) / ({})", v.denom)
    }
}

/// For `A ⊕ B` of odd dimension: contact iff one summand is contact and the
/// other exact symplectic. Cross-checks the decider on the sum against the
/// deciders on the summands.
pub fn decomposable_criterion<S: Coefficient>(a: &LieAlgebra<S>, b: &LieAlgebra<S>) -> Result<Report> {
    let sum = a.direct_sum(b);
    let mut report = Report::new(format!("direct sum of dimensions {} and {}", a.dim(), b.dim()));
    if sum.dim() % 2 == 0 {
        report.push(Check::fail("parity", "the direct sum has even dimension"));
        return Ok(report);
    }
    let whole = admits_contact_form(&sum)?;
    let predicted = (admits_contact_form(a)? && admits_frobenius_form(b)?)
        || (admits_contact_form(b)? && admits_frobenius_form(a)?);
    report.push(Check::info("sum-contact", if whole { "the sum admits a contact form" } else { "the sum admits no contact form" }));
    report.push(Check::assert(
        "summand-criterion",
        whole == predicted,
        format!("summand criterion predicts {}, decider says {}", yes_no(predicted), yes_no(whole)),
    ));
    Ok(report)
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

/// Contact verdict at each sample point, for a form with parameters.
pub fn contact_at_samples(l: &LieAlgebra<Scalar>, eta: &KForm<Scalar>, samples: &[Assignment]) -> Result<BTreeMap<String, bool>> {
    let mut out = BTreeMap::new();
    for at in samples {
        let concrete = l.substitute(at)?;
        let form = eta.substitute(at);
        let key = at.iter().map(|(k, v)| format!("{k}={v}")).collect::<Vec<_>>().join(",");
        out.insert(key, is_contact_form(&concrete, &form)?.holds_everywhere());
    }
    Ok(out)
}

/// Coordinates of a vector whose denominator divides out.
pub fn exact_vector<S: Coefficient>(v: &ScaledVector<S>) -> Option<Vector<S>> {
    v.as_exact().map(<[S]>::to_vec)
}

/// `η(ξ)` and `dη(ξ, e_j)`; used by tests to re-verify a Reeb vector.
pub fn reeb_residuals<S: Coefficient>(l: &LieAlgebra<S>, eta: &KForm<S>, reeb: &ScaledVector<S>) -> Result<(S, Vector<S>)> {
    let de = eta.ce_d(l)?;
    let value = eta.eval(&[reeb.numer.clone()])?;
    let residual = (0..l.dim())
        .map(|j| de.eval(&[reeb.numer.clone(), basis_vector(l.dim(), j)]))
        .collect::<Result<Vec<S>>>()?;
    Ok((value - reeb.denom.clone(), residual))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::is_zero_vector;

    fn s(v: i64) -> Scalar {
        Scalar::int(v)
    }

    fn h3() -> LieAlgebra<Scalar> {
        LieAlgebra::from_brackets(3, &[(0, 1, &[(2, s(1))])])
    }

    fn sl2() -> LieAlgebra<Scalar> {
        LieAlgebra::from_brackets(3, &[(0, 1, &[(1, s(2))]), (0, 2, &[(2, s(-2))]), (1, 2, &[(0, s(1))])])
    }

    fn aff() -> LieAlgebra<Scalar> {
        LieAlgebra::from_brackets(2, &[(0, 1, &[(1, s(1))])])
    }

    fn cov(n: usize, i: usize) -> KForm<Scalar> {
        KForm::covector(n, i)
    }

    #[test]
    fn heisenberg_contact_and_reeb() {
        let v = is_contact_form(&h3(), &cov(3, 2)).unwrap();
        assert!(v.holds_everywhere());
        assert_eq!(exact_vector(v.reeb.as_ref().unwrap()).unwrap(), basis_vector(3, 2));
        assert!(!is_contact_form(&h3(), &cov(3, 0)).unwrap().is_contact());
    }

    #[test]
    fn sl2_contact_with_reeb_h() {
        let v = is_contact_form(&sl2(), &cov(3, 0)).unwrap();
        assert!(v.is_contact());
        assert!(v.top_coefficient == s(1) || v.top_coefficient == s(-1));
        assert_eq!(exact_vector(v.reeb.as_ref().unwrap()).unwrap(), basis_vector(3, 0));
    }

    #[test]
    fn abelian_is_never_contact() {
        let l = LieAlgebra::<Scalar>::abelian(3);
        let eta = KForm::from_covector(&[s(1), s(2), s(3)]);
        assert!(!is_contact_form(&l, &eta).unwrap().is_contact());
        assert!(matches!(reeb_vector(&l, &eta), Err(Error::NotContact(_))));
        assert!(contact_polynomial(&l).unwrap().polynomial.is_zero());
    }

    #[test]
    fn even_dimension_rejected() {
        assert!(matches!(is_contact_form(&aff(), &cov(2, 0)), Err(Error::Parity { .. })));
        assert!(matches!(is_exact_symplectic(&h3(), &cov(3, 0)), Err(Error::Parity { .. })));
    }

    #[test]
    fn aff_liouville() {
        assert!(is_exact_symplectic(&aff(), &cov(2, 1)).unwrap().is_symplectic());
        let x0 = liouville_vector(&aff(), &cov(2, 1)).unwrap();
        assert_eq!(exact_vector(&x0).unwrap(), vec![s(-1), s(0)]);
        // scaling α scales both sides of i_x dα = α
        let x0 = liouville_vector(&aff(), &cov(2, 1).scale(&s(2))).unwrap();
        assert_eq!(exact_vector(&x0).unwrap(), vec![s(-1), s(0)]);
        assert!(!is_exact_symplectic(&LieAlgebra::<Scalar>::abelian(2), &cov(2, 0)).unwrap().is_symplectic());
    }

    #[test]
    fn heisenberg_polynomial() {
        let p = contact_polynomial(&h3()).unwrap();
        let a3 = Scalar::var(&p.variables[2]);
        assert!(p.polynomial == -(a3.clone() * a3.clone()) || p.polynomial == a3.clone() * a3);
    }

    #[test]
    fn existence_with_witness() {
        let v = contact_exists(&h3()).unwrap();
        assert!(v.exists);
        let w = v.witness.unwrap();
        assert!(is_contact_form(&h3().to_rational().unwrap(), &w).unwrap().is_contact());
        let so3 = LieAlgebra::from_brackets(3, &[(0, 1, &[(2, s(1))]), (1, 2, &[(0, s(1))]), (0, 2, &[(1, s(-1))])]);
        let v = contact_exists(&so3).unwrap();
        assert_eq!(v.witness.unwrap(), KForm::covector(3, 0));
        assert!(frobenius_exists(&aff()).unwrap().exists);
    }

    #[test]
    fn parameter_collision_avoided() {
        let l = LieAlgebra::from_brackets(3, &[(0, 1, &[(2, Scalar::var("a1"))])])
            .with_params(vec!["a1".into()])
            .with_constraints(vec![Scalar::var("a1")]);
        let p = contact_polynomial(&l).unwrap();
        assert!(p.variables[0].starts_with('b'));
        let v = contact_exists(&l).unwrap();
        assert!(v.exists);
        assert!(v.sample.unwrap()["a1"] != integer(0));
    }

    #[test]
    fn kernel_and_radical() {
        let r = kernel_radical_check(&h3(), &cov(3, 2)).unwrap();
        assert!(r.passed(), "{r}");
        let r = kernel_radical_check(&sl2(), &cov(3, 0)).unwrap();
        assert!(r.passed(), "{r}");
    }

    #[test]
    fn reeb_residuals_vanish() {
        let eta = KForm::from_covector(&[s(1), s(1), s(1)]);
        let reeb = reeb_vector(&sl2(), &eta).unwrap();
        let (value, res) = reeb_residuals(&sl2(), &eta, &reeb).unwrap();
        assert!(value.is_zero());
        assert!(is_zero_vector(&res));
    }
}
