//! Built-in library of named Lie algebras with their claimed contact and
//! Frobenius forms, parameter samples and structural flags.
//!
//! Entries keep the basis ordering in which they are usually written down.
//! When a construction needs a different ordering (the extension vector
//! last), the permutation is stored in [`CatalogEntry::remap`].

use std::sync::OnceLock;

use num_traits::{One, Zero};

use crate::construct::ExtensionData;
use crate::error::{Error, Result};
use crate::format::{parse_assignment, parse_lie, parse_one_form, parse_vector};
use crate::forms::KForm;
use crate::liealg::{Assignment, LieAlgebra};
use crate::linalg::Vector;
use crate::report::{Check, Report, Verdict};
use crate::scalar::{Rational, Scalar};

/// Structural flags, computed at a parameter sample.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Flags {
    pub solvable: bool,
    pub nilpotent: bool,
    /// Declared, not computed; `None` when not recorded.
    pub nondecomposable: Option<bool>,
}

/// Basis reordering used by a construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Remap {
    pub purpose: String,
    /// New basis vector `i` is entry basis vector `order[i]`.
    pub order: Vec<usize>,
}

#[derive(Debug, Clone)]
pub struct CatalogEntry {
    pub id: String,
    pub title: String,
    /// Where the entry comes from, in words.
    pub locus: String,
    pub algebra: LieAlgebra<Scalar>,
    /// Claimed contact forms.
    pub contact_forms: Vec<KForm<Scalar>>,
    /// Claimed 1-forms `α` with `dα` nondegenerate.
    pub frobenius_forms: Vec<KForm<Scalar>>,
    /// Claimed existence of some contact form; `None` when no claim is made.
    pub contact: Option<bool>,
    pub frobenius: Option<bool>,
    /// Parameter values satisfying the constraints.
    pub samples: Vec<Assignment>,
    /// Parameter values violating some constraint.
    pub excluded: Vec<Assignment>,
    pub flags: Flags,
    pub remap: Option<Remap>,
    /// Liouville vector of the first Frobenius form, when recorded.
    pub liouville: Option<Vector<Scalar>>,
    /// Extension data (for contactization or symplectization) on this algebra.
    pub extension: Option<ExtensionData<Scalar>>,
    pub notes: Vec<String>,
}

impl CatalogEntry {
    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn is_parameterized(&self) -> bool {
        !self.algebra.params().is_empty()
    }

    /// The algebra at every stored sample, or the algebra itself when it has no parameters.
    pub fn instances(&self) -> Result<Vec<(Assignment, LieAlgebra<Scalar>)>> {
        if !self.is_parameterized() {
            return Ok(vec![(Assignment::new(), self.algebra.clone())]);
        }
        self.samples
            .iter()
            .map(|s| Ok((s.clone(), self.algebra.substitute(s)?)))
            .collect()
    }

    /// The algebra at the first sample.
    pub fn instance(&self) -> Result<LieAlgebra<Scalar>> {
        Ok(self.instances()?.remove(0).1)
    }

    /// Text in the `.lie` format, with the claims as comments.
    pub fn export(&self) -> String {
        let labels = self.algebra.labels();
        let mut out = format!("# {}: {}\n# {}\n", self.id, self.title, self.locus);
        for f in &self.contact_forms {
            out.push_str(&format!("# contact form: {}\n", f.format_with(labels)));
        }
        for f in &self.frobenius_forms {
            out.push_str(&format!("# frobenius form: {}\n", f.format_with(labels)));
        }
        for s in &self.samples {
            out.push_str(&format!("# sample: {}\n", format_assignment(s)));
        }
        out.push_str(&crate::format::emit_lie(&self.algebra, self.extension.as_ref()));
        out
    }
}

pub fn format_assignment(a: &Assignment) -> String {
    a.iter().map(|(k, v)| format!("{k}={v}")).collect::<Vec<_>>().join(",")
}

struct Builder {
    entry: CatalogEntry,
}

fn build(id: &str, title: &str, locus: &str, text: &str) -> Builder {
    let file = parse_lie(text).unwrap_or_else(|e| panic!("catalog entry {id}: {e}"));
    Builder {
        entry: CatalogEntry {
            id: id.to_string(),
            title: title.to_string(),
            locus: locus.to_string(),
            algebra: file.algebra,
            contact_forms: Vec::new(),
            frobenius_forms: Vec::new(),
            contact: None,
            frobenius: None,
            samples: Vec::new(),
            excluded: Vec::new(),
            flags: Flags {
                solvable: false,
                nilpotent: false,
                nondecomposable: None,
            },
            remap: None,
            liouville: None,
            extension: file.extension,
            notes: Vec::new(),
        },
    }
}

/// Bracket list `[e2,e4]=e1; [e3,e5]=e1` on the basis `e1..en` as `.lie` text.
fn table(n: usize, params: &str, constraints: &[&str], brackets: &str) -> String {
    let mut text = format!("dim {n}\n");
    if !params.is_empty() {
        text.push_str(&format!("params {params}\n"));
    }
    for c in constraints {
        text.push_str(&format!("constrain {c}\n"));
    }
    for b in brackets.split(';').map(str::trim).filter(|s| !s.is_empty()) {
        text.push_str(&format!("bracket {b}\n"));
    }
    text
}

impl Builder {
    fn form(&self, text: &str) -> KForm<Scalar> {
        let a = &self.entry.algebra;
        parse_one_form(text, a.labels(), Some(a.params())).unwrap_or_else(|e| panic!("{}: {e}", self.entry.id))
    }

    fn contact(mut self, forms: &[&str]) -> Self {
        self.entry.contact_forms = forms.iter().map(|f| self.form(f)).collect();
        self.entry.contact = Some(true);
        self
    }

    fn no_contact(mut self) -> Self {
        self.entry.contact = Some(false);
        self
    }

    fn contact_claim(mut self) -> Self {
        self.entry.contact = Some(true);
        self
    }

    fn frobenius(mut self, forms: &[&str]) -> Self {
        self.entry.frobenius_forms = forms.iter().map(|f| self.form(f)).collect();
        self.entry.frobenius = Some(true);
        self
    }

    fn frobenius_claim(mut self, exists: bool) -> Self {
        self.entry.frobenius = Some(exists);
        self
    }

    fn samples(mut self, samples: &[&str]) -> Self {
        self.entry.samples = samples.iter().map(|s| parse_assignment(s).expect("sample")).collect();
        self
    }

    fn excluded(mut self, samples: &[&str]) -> Self {
        self.entry.excluded = samples.iter().map(|s| parse_assignment(s).expect("sample")).collect();
        self
    }

    fn nondecomposable(mut self, value: bool) -> Self {
        self.entry.flags.nondecomposable = Some(value);
        self
    }

    fn remap(mut self, purpose: &str, order: &[usize]) -> Self {
        self.entry.remap = Some(Remap {
            purpose: purpose.to_string(),
            order: order.to_vec(),
        });
        self
    }

    fn liouville(mut self, v: &str) -> Self {
        let a = &self.entry.algebra;
        self.entry.liouville = Some(parse_vector(v, a.labels(), Some(a.params())).expect("liouville"));
        self
    }

    fn note(mut self, text: &str) -> Self {
        self.entry.notes.push(text.to_string());
        self
    }

    fn finish(mut self) -> CatalogEntry {
        let instance = self.entry.instance().unwrap_or_else(|e| panic!("{}: {e}", self.entry.id));
        self.entry.flags.solvable = instance.is_solvable().expect("solvability at a sample");
        self.entry.flags.nilpotent = instance.is_nilpotent().expect("nilpotency at a sample");
        self.entry
    }
}

fn rational_matrix(n: usize) -> Vec<Vec<Rational>> {
    vec![vec![Rational::zero(); n]; n]
}

fn elementary(n: usize, i: usize, j: usize) -> Vec<Vec<Rational>> {
    let mut m = rational_matrix(n);
    m[i][j] = Rational::one();
    m
}

fn commutator(a: &[Vec<Rational>], b: &[Vec<Rational>]) -> Vec<Vec<Rational>> {
    let n = a.len();
    let mut out = rational_matrix(n);
    for i in 0..n {
        for j in 0..n {
            let mut acc = Rational::zero();
            for k in 0..n {
                acc += &a[i][k] * &b[k][j] - &b[i][k] * &a[k][j];
            }
            out[i][j] = acc;
        }
    }
    out
}

/// Matrix Lie algebra spanned by `basis`. Each basis matrix must have an
/// entry where every other basis matrix vanishes.
fn matrix_algebra(labels: Vec<String>, basis: &[Vec<Vec<Rational>>]) -> LieAlgebra<Scalar> {
    let n = basis[0].len();
    let pivots: Vec<(usize, usize)> = basis
        .iter()
        .enumerate()
        .map(|(b, m)| {
            (0..n * n)
                .map(|x| (x / n, x % n))
                .find(|&(i, j)| !m[i][j].is_zero() && basis.iter().enumerate().all(|(o, other)| o == b || other[i][j].is_zero()))
                .expect("basis matrix with a private entry")
        })
        .collect();
    let mut out = LieAlgebra::abelian_with_labels(labels);
    for a in 0..basis.len() {
        for b in (a + 1)..basis.len() {
            let c = commutator(&basis[a], &basis[b]);
            let coords: Vec<Rational> = pivots
                .iter()
                .zip(basis)
                .map(|(&(i, j), m)| &c[i][j] / &m[i][j])
                .collect();
            let mut rebuilt = rational_matrix(n);
            for (k, m) in basis.iter().enumerate() {
                for i in 0..n {
                    for j in 0..n {
                        rebuilt[i][j] += &coords[k] * &m[i][j];
                    }
                }
            }
            assert_eq!(rebuilt, c, "matrix basis is not closed under commutators");
            out.set_bracket(a, b, coords.into_iter().map(Scalar::Rational).collect())
                .expect("bracket");
        }
    }
    out
}

fn from_algebra(id: &str, title: &str, locus: &str, algebra: LieAlgebra<Scalar>) -> Builder {
    let mut b = build(id, title, locus, &format!("dim {}\n", algebra.dim()));
    b.entry.algebra = algebra;
    b
}

/// `aff(R^n)`: basis `t1..tn` (translations) then `Eij` in row-major order,
/// with `[Eij, Ekl] = δjk Eil - δli Ekj` and `[Eij, tk] = δjk ti`.
///
/// Frobenius form `α = t1* + Σ E(i+1)i*`, i.e. `α(x, M) = x1 + trace(Mα M)`
/// with `(Mα)ij = δ(i+1)j`; Liouville vector `diag(-1, ..., -n)`.
pub fn gen_aff(n: usize) -> CatalogEntry {
    assert!((1..=9).contains(&n), "gen_aff supports 1 <= n <= 9");
    let size = n + 1;
    let mut labels = Vec::new();
    let mut basis = Vec::new();
    for k in 0..n {
        labels.push(format!("t{}", k + 1));
        basis.push(elementary(size, k, n));
    }
    for i in 0..n {
        for j in 0..n {
            labels.push(format!("E{}{}", i + 1, j + 1));
            basis.push(elementary(size, i, j));
        }
    }
    let algebra = matrix_algebra(labels, &basis);
    let mut alpha = vec!["t1*".to_string()];
    alpha.extend((1..n).map(|i| format!("E{}{}*", i + 1, i)));
    let liouville: Vec<String> = (1..=n).map(|i| format!("-{i} E{i}{i}")).collect();
    from_algebra(
        &format!("gen.aff.{n}"),
        &format!("aff(R^{n})"),
        "affine algebra of R^n with the principal nilpotent Frobenius form",
        algebra,
    )
    .frobenius(&[&alpha.join(" + ")])
    .liouville(&liouville.join(" "))
    .finish()
}

/// Endomorphisms of `R^n` preserving a `p`-dimensional subspace and acting on
/// it by homotheties, as block matrices `[[A, B], [0, λ I_p]]` with `A` of
/// size `n - p`. Basis: `h` (the homothety block), then `Aij`, then `Bij`.
///
/// Its dimension is `n(n - p) + 1`. A contact structure is claimed when `p`
/// divides `n`; the claim is recorded in `contact`.
pub fn gen_matrix_preserving(n: usize, p: usize) -> CatalogEntry {
    assert!(p >= 1 && p < n && n <= 9, "need 1 <= p < n <= 9");
    let m = n - p;
    let mut labels = vec!["h".to_string()];
    let mut h = rational_matrix(n);
    for i in m..n {
        h[i][i] = Rational::one();
    }
    let mut basis = vec![h];
    for i in 0..m {
        for j in 0..m {
            labels.push(format!("A{}{}", i + 1, j + 1));
            basis.push(elementary(n, i, j));
        }
    }
    for i in 0..m {
        for j in 0..p {
            labels.push(format!("B{}{}", i + 1, j + 1));
            basis.push(elementary(n, i, m + j));
        }
    }
    let algebra = matrix_algebra(labels, &basis);
    let divides = n % p == 0;
    let mut b = from_algebra(
        &format!("gen.preserving.{n}.{p}"),
        &format!("endomorphisms of R^{n} preserving a {p}-plane with homothety restriction"),
        "matrix algebra preserving a subspace, homothety on the subspace",
        algebra,
    )
    .note(&format!("p divides n: {divides}"));
    if divides {
        b = b.contact_claim();
    }
    b.finish()
}

/// `M(n,p) ⋊ gl(n)`: `(n+p)`-square matrices whose last `p` rows vanish.
/// Basis: `Eij` for `i <= n`, row-major.
pub fn gen_mnp(n: usize, p: usize) -> CatalogEntry {
    assert!(n >= 1 && p >= 1 && n + p <= 9, "need n, p >= 1 and n + p <= 9");
    let size = n + p;
    let mut labels = Vec::new();
    let mut basis = Vec::new();
    for i in 0..n {
        for j in 0..size {
            labels.push(format!("E{}{}", i + 1, j + 1));
            basis.push(elementary(size, i, j));
        }
    }
    let algebra = matrix_algebra(labels, &basis);
    let b = from_algebra(
        &format!("gen.mnp.{n}.{p}"),
        &format!("M({n},{p}) x gl({n})"),
        "matrices with vanishing last p rows",
        algebra,
    );
    if n % p == 0 {
        b.frobenius_claim(true).finish()
    } else {
        b.finish()
    }
}

/// The seven-dimensional nilpotent algebra `G_t` at a rational `t`.
pub fn gen_gt(t: &Rational) -> CatalogEntry {
    let text = table(
        7,
        "",
        &[],
        &format!("[e1,e4]=e7; [e2,e5]=e7; [e3,e6]=e7; [e1,e2]=e4 + ({t}) e5; [e1,e3]=e6; [e2,e3]=e5"),
    );
    build(
        &format!("dim7.Gt.{t}"),
        &format!("G_t at t = {t}"),
        "seven-dimensional nilpotent family G_t",
        &text,
    )
    .contact(&["e7*"])
    .nondecomposable(true)
    .finish()
}

fn heisenberg(m: usize) -> CatalogEntry {
    let n = 2 * m + 1;
    let brackets: Vec<String> = (1..=m).map(|i| format!("[e{i},e{}]=e{n}", m + i)).collect();
    build(
        &format!("heisenberg.{n}"),
        &format!("Heisenberg algebra H{n}"),
        "Heisenberg algebras",
        &table(n, "", &[], &brackets.join(";")),
    )
    .contact(&[&format!("e{n}*")])
    .finish()
}

fn semidirect_plane(id: &str, title: &str, d: [[&str; 2]; 2], params: &str, constraints: &[&str]) -> Builder {
    // [e3, x] = D x for x in span(e1, e2)
    let col = |j: usize| format!("({}) e1 + ({}) e2", d[0][j], d[1][j]);
    let text = table(3, params, constraints, &format!("[e3,e1]={}; [e3,e2]={}", col(0), col(1)));
    build(id, title, "three-dimensional semidirect products R^2 x D", &text)
}

const SOLVABLE_5: [(&str, &str, &[&str], &str, &str); 24] = [
    ("", "", &[], "[e2,e4]=e1; [e3,e5]=e1", "e1*"),
    ("", "", &[], "[e3,e4]=e1; [e2,e5]=e1; [e3,e5]=e2", "e1*"),
    ("", "", &[], "[e3,e4]=e1; [e2,e5]=e1; [e3,e5]=e2; [e4,e5]=e3", "e1*"),
    (
        "p q",
        "",
        &["q", "p + 1 - q"],
        "[e2,e3]=e1; [e1,e5]=(1+p) e1; [e2,e5]=e2; [e3,e5]=p e3; [e4,e5]=q e4",
        "e1* + e4*",
    ),
    (
        "p",
        "",
        &[],
        "[e2,e3]=e1; [e1,e5]=(1+p) e1; [e2,e5]=e2; [e3,e5]=p e3; [e4,e5]=e1 + (1+p) e4",
        "e1*",
    ),
    ("", "", &[], "[e2,e3]=e1; [e1,e5]=2 e1; [e2,e5]=e2+e3; [e3,e5]=e3+e4; [e4,e5]=e4", "e1* + e4*"),
    ("", "", &[], "[e2,e3]=e1; [e2,e5]=e3; [e4,e5]=e4", "e1* + e4*"),
    ("p", "", &["p", "p - 2"], "[e2,e3]=e1; [e1,e5]=2 e1; [e2,e5]=e2+e3; [e3,e5]=e3; [e4,e5]=p e4", "e1* + e4*"),
    ("eps", "", &["eps"], "[e2,e3]=e1; [e1,e5]=2 e1; [e2,e5]=e2+e3; [e3,e5]=e3; [e4,e5]=eps e1 + 2 e4", "e1*"),
    (
        "p q",
        "",
        &["q - 2p", "q"],
        "[e2,e3]=e1; [e1,e5]=2p e1; [e2,e5]=p e2 + e3; [e3,e5]=-e2 + p e3; [e4,e5]=q e4",
        "e1* + e4*",
    ),
    (
        "p eps",
        "",
        &["eps"],
        "[e2,e3]=e1; [e1,e5]=2p e1; [e2,e5]=p e2 + e3; [e3,e5]=-e2 + p e3; [e4,e5]=eps e1 + 2p e4",
        "e1*",
    ),
    ("", "", &[], "[e2,e3]=e1; [e1,e5]=e1; [e3,e5]=e3+e4; [e4,e5]=e1+e4", "e1*"),
    ("p", "", &["p"], "[e2,e3]=e1; [e1,e5]=(1+p) e1; [e2,e5]=p e2; [e3,e5]=e3+e4; [e4,e5]=e4", "e1* + e4*"),
    ("", "", &[], "[e2,e3]=e1; [e1,e5]=e1; [e2,e5]=e2; [e3,e5]=e4", "e1* + e4*"),
    (
        "p",
        "",
        &[],
        "[e2,e4]=e1; [e3,e4]=e2; [e1,e5]=(2+p) e1; [e2,e5]=(1+p) e2; [e3,e5]=p e3; [e4,e5]=e4",
        "e1* + e3*",
    ),
    ("", "", &[], "[e2,e4]=e1; [e3,e4]=e2; [e1,e5]=3 e1; [e2,e5]=2 e2; [e3,e5]=e3; [e4,e5]=e3+e4", "e1* + e2*"),
    ("p", "", &[], "[e2,e4]=e1; [e3,e4]=e2; [e1,e5]=e1; [e2,e5]=e2; [e3,e5]=p e1 + e3", "e1* + (1-p) e3*"),
    (
        "p q",
        "",
        &["p^2 + q^2", "p + q - 1"],
        "[e1,e4]=e1; [e3,e4]=p e3; [e2,e5]=e2; [e3,e5]=q e3",
        "e1* + e2* + e3*",
    ),
    ("p", "", &["p - 1"], "[e1,e4]=p e1; [e2,e4]=e2; [e3,e4]=e3; [e1,e5]=e1; [e3,e5]=e2", "e1* + e2*"),
    (
        "p q",
        "",
        &["p^2 + q^2", "p - 1"],
        "[e1,e4]=p e1; [e2,e4]=e2; [e3,e4]=e3; [e1,e5]=q e1; [e2,e5]=-e3; [e3,e5]=e2",
        "e1* + e2*",
    ),
    ("", "", &[], "[e2,e3]=e1; [e1,e4]=e1; [e2,e4]=e2; [e2,e5]=-e2; [e3,e5]=e3", "e1* + e5*"),
    ("", "", &[], "[e2,e3]=e1; [e1,e4]=2 e1; [e2,e4]=e2; [e3,e4]=e3; [e2,e5]=-e3; [e3,e5]=e2", "e1* + e5*"),
    ("", "", &[], "[e1,e4]=e1; [e2,e5]=e2; [e4,e5]=e3", "e1* + e2* + e3*"),
    ("", "", &[], "[e1,e4]=e1; [e2,e4]=e2; [e1,e5]=-e2; [e2,e5]=e1; [e4,e5]=e3", "e1* + e3*"),
];

/// Allowed and excluded samples for the parameterized five-dimensional items.
fn solvable5_samples(item: usize) -> (&'static [&'static str], &'static [&'static str]) {
    match item {
        4 => (&["p=1,q=1", "p=2,q=-1", "p=-1/2,q=3"], &["p=1,q=2", "p=0,q=1", "p=3,q=0"]),
        5 => (&["p=0", "p=1", "p=-3", "p=1/2"], &[]),
        8 => (&["p=1", "p=-1", "p=3"], &["p=0", "p=2"]),
        9 => (&["eps=1", "eps=-1", "eps=2"], &["eps=0"]),
        10 => (&["p=0,q=1", "p=1,q=1", "p=-1,q=3"], &["p=1,q=2", "p=1,q=0"]),
        11 => (&["p=0,eps=1", "p=1,eps=-1", "p=-2,eps=1"], &["p=1,eps=0"]),
        13 => (&["p=1", "p=-1", "p=2"], &["p=0"]),
        15 => (&["p=0", "p=1", "p=-2", "p=1/2"], &[]),
        // no constraint is stated; at p = 0 the stated form degenerates and no contact form exists
        17 => (&["p=1", "p=-2", "p=1/2"], &[]),
        18 => (&["p=1,q=1", "p=2,q=0", "p=-1,q=3"], &["p=0,q=0", "p=1,q=0", "p=3,q=-2"]),
        19 => (&["p=0", "p=2", "p=-1"], &["p=1"]),
        20 => (&["p=0,q=1", "p=2,q=1", "p=-1,q=0"], &["p=1,q=1", "p=1,q=0"]),
        _ => (&[], &[]),
    }
}

fn solvable5(item: usize) -> CatalogEntry {
    let (params, _, constraints, brackets, form) = SOLVABLE_5[item - 1];
    let (samples, excluded) = solvable5_samples(item);
    let mut b = build(
        &format!("dim5.solv.{item:02}"),
        &format!("five-dimensional solvable contact algebra, item {item}"),
        &format!("list of five-dimensional nondecomposable solvable contact algebras, item {item}"),
        &table(5, params, constraints, brackets),
    )
    .contact(&[form])
    .nondecomposable(true)
    .samples(samples)
    .excluded(excluded);
    if item == 15 {
        b = b.note("stated form mixes e3 and covectors; read as e1* + e3*");
    }
    if item == 9 || item == 11 {
        b = b.note("eps = ±1 in the source; every nonzero eps gives an isomorphic algebra (rescale e4)");
    }
    if item == 17 {
        b = b.note("no constraint is stated, but the stated form degenerates at p = 0 and the algebra has no contact form there");
    }
    if item == 18 || item == 20 {
        b = b.note("p^2 + q^2 != 0 means (p, q) != (0, 0)");
    }
    b.finish()
}

const SL2: &str = "[e1,e2]=2 e2; [e1,e3]=-2 e3; [e2,e3]=e1";
const SO3: &str = "[e1,e2]=e3; [e2,e3]=e1; [e3,e1]=e2";

fn entries() -> Vec<CatalogEntry> {
    let mut out = vec![
        build("abelian.3", "abelian R^3", "abelian algebras", &table(3, "", &[], ""))
            .no_contact()
            .finish(),
        build("aff.1", "aff(R)", "affine algebra of the line", &table(2, "", &[], "[e1,e2]=e2"))
            .frobenius(&["e2*"])
            .liouville("-e1")
            .remap("basis of gen.aff.1 (t1, E11)", &[1, 0])
            .finish(),
    ];
    out.extend((1..=3).map(gen_aff));
    out.extend((1..=3).map(heisenberg));
    out.push(build("sl2", "sl(2,R)", "simple algebras", &table(3, "", &[], SL2)).contact(&["e1*"]).finish());
    out.push(build("so3", "so(3)", "simple algebras", &table(3, "", &[], SO3)).contact(&["e1*"]).finish());
    out.push(semidirect_plane("dim3.r2_id", "R^2 x R id", [["1", "0"], ["0", "1"]], "", &[]).no_contact().finish());
    out.push(
        semidirect_plane("dim3.r2_rot", "R^2 x R D0 (no real eigenvalue)", [["1", "-1"], ["1", "1"]], "", &[])
            .contact_claim()
            .finish(),
    );
    out.push(semidirect_plane("dim3.e2", "e(2)", [["0", "-1"], ["1", "0"]], "", &[]).contact_claim().finish());
    out.push(
        semidirect_plane("dim3.r2_diag", "R^2 x R diag(1, l)", [["1", "0"], ["0", "l"]], "l", &["l - 1"])
            .contact_claim()
            .samples(&["l=-1", "l=0", "l=2", "l=1/2"])
            .excluded(&["l=1"])
            .finish(),
    );
    out.extend((1..=24).map(solvable5));

    // five-dimensional nonsolvable
    let aff = table(2, "", &[], "[e1,e2]=e2");
    let sum = |id: &str, title: &str, simple: &str| {
        let a = parse_lie(&aff).expect("aff").algebra;
        let s = parse_lie(&table(3, "", &[], simple)).expect("simple").algebra;
        let mut sum = a.direct_sum(&s);
        sum.set_labels((1..=5).map(|i| format!("e{i}")).collect()).expect("labels");
        from_algebra(id, title, "five-dimensional nonsolvable contact algebras", sum)
            .contact(&["e2* + e3*"])
            .nondecomposable(false)
            .finish()
    };
    out.push(sum("dim5.aff_sl2", "aff(R) + sl(2)", SL2));
    out.push(sum("dim5.aff_so3", "aff(R) + so(3)", SO3));
    out.push(
        build(
            "dim5.r2_sl2",
            "R^2 x sl(2)",
            "special affine algebra, five-dimensional nonsolvable",
            "params s\nconstrain s\nbasis e1 e2 X Y H\n\
             bracket [X,e2] = e1\nbracket [Y,e1] = e2\nbracket [H,e1] = e1\nbracket [H,e2] = -e2\n\
             bracket [X,Y] = H\nbracket [H,X] = 2 X\nbracket [H,Y] = -2 Y\n",
        )
        .contact(&["e1* + s Y*"])
        .samples(&["s=1", "s=-1", "s=2"])
        .excluded(&["s=0"])
        .remap("contactization order e1 e2 e3=X e4=H e0=Y", &[0, 1, 2, 4, 3])
        .nondecomposable(true)
        .finish(),
    );

    // seven-dimensional
    out.push(
        build(
            "dim7.Gt",
            "G_t",
            "seven-dimensional nilpotent family G_t",
            &table(7, "t", &[], "[e1,e4]=e7; [e2,e5]=e7; [e3,e6]=e7; [e1,e2]=e4 + t e5; [e1,e3]=e6; [e2,e3]=e5"),
        )
        .contact(&["e7*"])
        .samples(&["t=-2", "t=0", "t=1", "t=5"])
        .nondecomposable(true)
        .finish(),
    );
    out.push(
        build(
            "dim7.r4_sl2.a",
            "R^4 x sl(2), first action",
            "seven-dimensional nonsolvable, item 2",
            &table(
                7,
                "",
                &[],
                "[e1,e2]=2 e2; [e1,e3]=-2 e3; [e2,e3]=e1; [e1,e4]=3 e4; [e2,e5]=3 e4; [e3,e4]=e5; [e1,e5]=e5; \
                 [e2,e6]=2 e5; [e3,e5]=2 e6; [e1,e6]=-e6; [e2,e7]=e6; [e3,e6]=3 e7; [e1,e7]=-3 e7",
            ),
        )
        .contact(&["e5* + e7*"])
        .nondecomposable(true)
        .finish(),
    );
    out.push(
        build(
            "dim7.r4_sl2.b",
            "R^4 x sl(2), two copies of the standard representation",
            "seven-dimensional nonsolvable, item 3",
            &table(
                7,
                "",
                &[],
                "[e1,e2]=2 e2; [e1,e3]=-2 e3; [e2,e3]=e1; [e1,e4]=e4; [e2,e5]=e4; [e3,e4]=e5; [e1,e5]=-e5; \
                 [e1,e6]=e6; [e2,e7]=e6; [e3,e6]=e7; [e1,e7]=-e7",
            ),
        )
        .contact(&["e4* + e7*"])
        .nondecomposable(true)
        .note("as printed, [e2,e7] = -e6 violates the Jacobi identity on (e2,e3,e6); stored with [e2,e7] = e6")
        .finish(),
    );
    out.push(
        build(
            "dim7.so3.mixed",
            "so(3) acting on R^3, extended by a homothety",
            "seven-dimensional nonsolvable, item 4",
            &table(
                7,
                "",
                &[],
                "[e1,e2]=e3; [e2,e3]=e1; [e3,e1]=e2; [e1,e5]=e6; [e2,e4]=-e6; [e3,e4]=e5; [e1,e6]=-e5; \
                 [e2,e6]=e4; [e3,e5]=-e4; [e4,e7]=e4; [e5,e7]=e5; [e6,e7]=e6",
            ),
        )
        .contact(&["e1* + e4*"])
        .nondecomposable(true)
        .finish(),
    );
    out.push(
        build(
            "dim7.so3.semidirect",
            "R^4 x so(3)",
            "seven-dimensional nonsolvable, item 5",
            &table(
                7,
                "",
                &[],
                "[e1,e2]=e3; [e2,e3]=e1; [e3,e1]=e2; \
                 [e1,e4]=1/2 e7; [e1,e5]=1/2 e6; [e1,e6]=-1/2 e5; [e1,e7]=-1/2 e4; \
                 [e2,e4]=1/2 e5; [e2,e5]=-1/2 e4; [e2,e6]=1/2 e7; [e2,e7]=-1/2 e6; \
                 [e3,e4]=1/2 e6; [e3,e5]=-1/2 e7; [e3,e6]=-1/2 e4; [e3,e7]=1/2 e5",
            ),
        )
        .contact(&["e4*", "e5*", "e6*", "e7*"])
        .nondecomposable(true)
        .note("as printed, all action coefficients are +1/2 and the Jacobi identity fails; stored with the signs of a representation")
        .finish(),
    );

    // matrix generators
    out.extend([(2, 1), (3, 1), (3, 2)].map(|(n, p)| gen_matrix_preserving(n, p)));
    out.extend([(1, 1), (2, 1), (2, 2)].map(|(n, p)| gen_mnp(n, p)));

    // obstruction specimens
    let h3 = parse_lie(&table(3, "", &[], "[e1,e2]=e3")).expect("h3").algebra;
    let mut h3r2 = h3.direct_sum(&LieAlgebra::abelian(2));
    h3r2.set_labels((1..=5).map(|i| format!("e{i}")).collect()).expect("labels");
    out.push(
        from_algebra("specimen.h3_r2", "H3 + R^2", "center of dimension 3", h3r2)
            .no_contact()
            .nondecomposable(false)
            .finish(),
    );
    out.push(
        build(
            "specimen.n22_scalar",
            "(H3 + R) x diag(2,1,1,2)",
            "derived ideal with two-dimensional center acted on by scalars",
            &table(5, "", &[], "[e2,e3]=e1; [e5,e1]=2 e1; [e5,e2]=e2; [e5,e3]=e3; [e5,e4]=2 e4"),
        )
        .no_contact()
        .nondecomposable(true)
        .finish(),
    );
    out.push(
        build(
            "specimen.n22_mixed",
            "(H3 + R) x diag(2,1,1,3)",
            "derived ideal with two-dimensional center, non-scalar action",
            &table(5, "", &[], "[e2,e3]=e1; [e5,e1]=2 e1; [e5,e2]=e2; [e5,e3]=e3; [e5,e4]=3 e4"),
        )
        .contact_claim()
        .nondecomposable(true)
        .finish(),
    );
    out.push(
        build(
            "specimen.center3",
            "N x R with dim Z(N) = 3",
            "derived ideal with three-dimensional center",
            "basis x1 x2 x3 z1 z2 r e\n\
             bracket [x1,x2] = z1\nbracket [x1,x3] = z2\n\
             bracket [e,x1] = x1\nbracket [e,x2] = x2\nbracket [e,x3] = x3\n\
             bracket [e,z1] = 2 z1\nbracket [e,z2] = 2 z2\nbracket [e,r] = r\n",
        )
        .no_contact()
        .finish(),
    );

    // extension data
    out.push(
        build(
            "ext.aff_to_sl2",
            "aff(R) with the extension data producing sl(2)",
            "contactization of aff(R)",
            &(table(2, "", &[], "[e1,e2]=e2") + "extend psi e2 -> 2 e1\nextend f = -e1*\nextend s = s\n"),
        )
        .frobenius(&["e2*"])
        .finish(),
    );
    out.push(
        build(
            "ext.r2_sl2",
            "four-dimensional subalgebra of R^2 x sl(2) with extension data",
            "contactization producing the special affine algebra",
            &(table(4, "", &[], "[e2,e3]=-e1; [e1,e4]=-e1; [e2,e4]=e2; [e3,e4]=-2 e3")
                + "extend psi e1 -> -e2 ; e3 -> e4\nextend f = -2 e4*\nextend s = s\n"),
        )
        .frobenius(&["e1*"])
        .finish(),
    );
    out.push(
        build(
            "ext.g3_rotation",
            "exact symplectic R^4 with a form-preserving derivation",
            "contactization by a derivation preserving the primitive",
            &(table(4, "", &[], "[e1,e2]=e3; [e4,e1]=e1; [e4,e3]=e3")
                + "extend psi e1 -> e1 ; e2 -> -e2\nextend f = 0\nextend s = s\n"),
        )
        .frobenius(&["e3*"])
        .liouville("-e4")
        .finish(),
    );
    out.push(
        build(
            "ext.h3_symplectization",
            "H3 with a derivation for exact symplectization",
            "exact symplectization of H3",
            &(table(3, "", &[], "[e1,e2]=e3") + "extend psi e1 -> e1 ; e2 -> e2 ; e3 -> 2 e3\nextend f = 0\nextend s = s\n"),
        )
        .contact(&["e3*"])
        .finish(),
    );
    out
}

/// Every catalog entry, in a fixed order.
pub fn all() -> &'static [CatalogEntry] {
    static CATALOG: OnceLock<Vec<CatalogEntry>> = OnceLock::new();
    CATALOG.get_or_init(entries)
}

pub fn get(id: &str) -> Result<&'static CatalogEntry> {
    all().iter().find(|e| e.id == id).ok_or_else(|| Error::UnknownEntry(id.to_string()))
}

/// Conjunction of terms such as `solvable`, `!nilpotent`, `dim=5`,
/// `contact`, `frobenius`, `parameterized`, `nondecomposable`, `prefix=dim5`.
#[derive(Debug, Clone, Default)]
pub struct Filter {
    terms: Vec<(bool, String, Option<String>)>,
}

impl Filter {
    pub fn parse(text: &str) -> Result<Filter> {
        let mut terms = Vec::new();
        for raw in text.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            let (negated, body) = match raw.strip_prefix('!') {
                Some(rest) => (true, rest),
                None => (false, raw),
            };
            let (key, value) = match body.split_once('=') {
                Some((k, v)) => (k.trim().to_string(), Some(v.trim().to_string())),
                None => (body.to_string(), None),
            };
            let known = matches!(
                (key.as_str(), value.is_some()),
                ("dim" | "prefix", true)
                    | ("solvable" | "nilpotent" | "nondecomposable" | "contact" | "frobenius" | "parameterized", false)
            );
            if !known {
                return Err(Error::Parse {
                    line: 0,
                    message: format!("unknown filter term `{raw}`"),
                });
            }
            if key == "dim" && value.as_deref().and_then(|v| v.parse::<usize>().ok()).is_none() {
                return Err(Error::Parse {
                    line: 0,
                    message: format!("invalid dimension in `{raw}`"),
                });
            }
            terms.push((negated, key, value));
        }
        Ok(Filter { terms })
    }

    pub fn matches(&self, e: &CatalogEntry) -> bool {
        self.terms.iter().all(|(negated, key, value)| {
            let hit = match key.as_str() {
                "dim" => value.as_deref().and_then(|v| v.parse().ok()) == Some(e.dim()),
                "prefix" => e.id.starts_with(value.as_deref().unwrap_or("")),
                "solvable" => e.flags.solvable,
                "nilpotent" => e.flags.nilpotent,
                "nondecomposable" => e.flags.nondecomposable == Some(true),
                "contact" => e.contact == Some(true),
                "frobenius" => e.frobenius == Some(true),
                "parameterized" => e.is_parameterized(),
                _ => false,
            };
            hit != *negated
        })
    }
}

pub fn list(filter: &Filter) -> Vec<&'static CatalogEntry> {
    all().iter().filter(|e| filter.matches(e)).collect()
}

/// How the constraints of a parameterized entry relate to the degeneracy
/// locus of one claimed contact form.
#[derive(Debug, Clone)]
pub struct Tightness {
    pub form: String,
    /// Top coefficient of `(dη)^n ∧ η` as a polynomial in the parameters.
    pub top: Scalar,
    /// Constraints dividing the top coefficient: the form degenerates on their zero set.
    pub matched: Vec<Scalar>,
    /// Constraints not dividing it: imposed for other reasons, the form may survive there.
    pub unmatched: Vec<Scalar>,
    /// What is left of the top coefficient after removing the matched
    /// constraints; nonconstant means a degeneracy locus no constraint excludes.
    pub residual: Scalar,
    /// Whether the top coefficient vanishes at each excluded sample.
    pub excluded: Vec<(Assignment, bool)>,
}

impl Tightness {
    /// The constraints cut out exactly the degeneracy locus of the form.
    pub fn is_tight(&self) -> bool {
        self.unmatched.is_empty() && self.residual.is_constant()
    }
}

/// Compare the constraints of `entry` with the zero set of each claimed
/// contact form's top coefficient.
pub fn constraint_tightness(entry: &CatalogEntry) -> Result<Vec<Tightness>> {
    use crate::scalar::Coefficient;
    let mut out = Vec::new();
    for form in &entry.contact_forms {
        let top = crate::contact::is_contact_form(&entry.algebra, form)?.top_coefficient;
        let mut residual = top.clone();
        let mut matched = Vec::new();
        let mut unmatched = Vec::new();
        for c in entry.algebra.constraints() {
            let mut hit = false;
            while !residual.is_constant() {
                match residual.exact_div(c) {
                    Some(q) => {
                        residual = q;
                        hit = true;
                    }
                    None => break,
                }
            }
            if hit {
                matched.push(c.clone());
            } else {
                unmatched.push(c.clone());
            }
        }
        let excluded = entry
            .excluded
            .iter()
            .map(|s| Ok((s.clone(), top.substitute(s)?.is_zero())))
            .collect::<Result<Vec<_>>>()?;
        out.push(Tightness {
            form: form.format_with(entry.algebra.labels()),
            top,
            matched,
            unmatched,
            residual,
            excluded,
        });
    }
    Ok(out)
}

fn sample_label(s: &Assignment) -> String {
    if s.is_empty() {
        String::new()
    } else {
        format!(" at {}", format_assignment(s))
    }
}

/// Every assertion the catalog makes about one entry, re-derived.
///
/// Claimed forms are checked at each sample; claimed existence is compared
/// with the deciders; each structural obstruction that fires must agree with
/// the generic polynomial; the orthogonal/contact tripwire and the
/// five-dimensional case analysis are cross-checked where they apply.
pub fn golden_report(entry: &CatalogEntry) -> Result<Report> {
    use crate::contact::{contact_exists, frobenius_exists, is_contact_form, is_exact_symplectic, liouville_vector, exact_vector};
    use crate::obstruct::{
        center_obstruction, codim1_abelian_obstruction, codim1_derived_criteria, dim5_decision,
        orthogonal_contact_cross_check, rank_one_bracket_detect, Obstruction,
    };

    let mut report = Report::new(format!("{} ({})", entry.id, entry.title));
    let jacobi = entry.algebra.jacobi_check();
    let mut jac = Check::assert(
        "jacobi",
        jacobi.passed(),
        if jacobi.passed() {
            "holds identically".to_string()
        } else {
            format!("{} failing triples", jacobi.failures.len())
        },
    );
    if let Some(((i, j, k), _)) = jacobi.failures.first() {
        let l = entry.algebra.labels();
        jac = jac.with("triple", format!("({},{},{})", l[*i], l[*j], l[*k]));
    }
    report.push(jac);
    if !jacobi.passed() {
        return Ok(report);
    }
    let labels = entry.algebra.labels();
    for (s, inst) in entry.instances()? {
        let at = sample_label(&s);
        for form in &entry.contact_forms {
            let eta = form.substitute(&s);
            let v = is_contact_form(&inst, &eta)?;
            let mut c = Check::assert(
                "contact-form",
                v.is_contact(),
                format!("{}{at}: {}", eta.format_with(labels), if v.is_contact() { "contact" } else { "NOT contact" }),
            );
            if let Some(r) = &v.reeb {
                c = c.with("reeb", crate::contact::format_scaled(&inst, r));
            }
            report.push(c);
        }
        for form in &entry.frobenius_forms {
            let alpha = form.substitute(&s);
            let v = is_exact_symplectic(&inst, &alpha)?;
            report.push(Check::assert(
                "frobenius-form",
                v.is_symplectic(),
                format!("d({}){at}: {}", alpha.format_with(labels), if v.is_symplectic() { "nondegenerate" } else { "DEGENERATE" }),
            ));
            if let (Some(expected), true) = (&entry.liouville, v.is_symplectic()) {
                let x0 = liouville_vector(&inst, &alpha)?;
                let ok = exact_vector(&x0).is_some_and(|x| x == *expected);
                report.push(Check::assert(
                    "liouville",
                    ok,
                    format!("x0{at} = {}", crate::contact::format_scaled(&inst, &x0)),
                ));
            }
        }
        let odd = inst.dim() % 2 == 1;
        if let (Some(claim), true) = (entry.contact, odd) {
            let v = contact_exists(&inst)?;
            let mut c = Check::assert(
                "contact-exists",
                v.exists == claim,
                format!("decider{at}: {}, claimed {}", yes_no(v.exists), yes_no(claim)),
            );
            if let Some(w) = &v.witness {
                c = c.with("witness", w.format_with(labels));
            }
            report.push(c);
        }
        if let (Some(claim), false) = (entry.frobenius, odd) {
            let v = frobenius_exists(&inst)?;
            report.push(Check::assert(
                "frobenius-exists",
                v.exists == claim,
                format!("decider{at}: {}, claimed {}", yes_no(v.exists), yes_no(claim)),
            ));
        }

        let mut obstructions: Vec<Obstruction> = vec![center_obstruction(&inst)?, codim1_abelian_obstruction(&inst, &[])?];
        if inst.dim() >= 2 {
            obstructions.push(rank_one_bracket_detect(&inst)?.0);
        }
        if odd && inst.is_solvable()? && inst.derived_ideal()?.dim() + 1 == inst.dim() {
            obstructions.push(codim1_derived_criteria(&inst)?);
        }
        for o in obstructions.iter().filter(|o| o.applies && (o.blocks_contact || o.blocks_frobenius)) {
            report.push(Check::assert(
                format!("obstruction: {}", o.name),
                o.agrees(),
                format!("{}{at}; generic polynomial {}", o.detail, if o.agrees() { "vanishes" } else { "does NOT vanish" }),
            ));
        }

        if inst.dim() == 5 && entry.flags.nondecomposable == Some(true) && inst.is_solvable()? && inst.center()?.dim() == 0 {
            let d = dim5_decision(&inst, true)?;
            let predicted = match d.predicted {
                Some(true) => "contact",
                Some(false) => "not contact",
                None => "no prediction",
            };
            report.push(Check::assert(
                "decision: dim5",
                d.agrees(),
                format!("{}{at}: predicted {predicted}, decider {}", d.case, yes_no(d.actual)),
            ));
        }

        if let Some(r) = inst.to_rational() {
            let cross = orthogonal_contact_cross_check(&r)?;
            let both = cross.find("orthogonal").is_some_and(|c| c.detail == "yes")
                && cross.find("contact").is_some_and(|c| c.detail == "yes");
            for c in cross.checks {
                if c.verdict == Verdict::Info {
                    continue;
                }
                if c.name == "tripwire" && !both {
                    continue;
                }
                report.push(Check { name: format!("tripwire: {}", c.name), detail: format!("{}{at}", c.detail), ..c });
            }
        }
    }
    for (s, inst) in entry.excluded.iter().map(|s| (s, entry.algebra.substitute(s))) {
        let inst = inst?;
        for form in &entry.contact_forms {
            let eta = form.substitute(s);
            let v = is_contact_form(&inst, &eta)?;
            report.push(Check::info(
                "excluded-degenerates",
                format!(
                    "{}{}: top coefficient {}",
                    eta.format_with(labels),
                    sample_label(s),
                    if v.top_coefficient.is_zero() { "vanishes" } else { "does NOT vanish (finding)" }
                ),
            ));
        }
    }
    if entry.is_parameterized() {
        for t in constraint_tightness(entry)? {
            let detail = if t.is_tight() {
                format!("{}: constraints cut out exactly the degeneracy locus of the form", t.form)
            } else {
                let mut parts = Vec::new();
                if !t.unmatched.is_empty() {
                    let list: Vec<String> = t.unmatched.iter().map(|c| format!("{c} != 0")).collect();
                    parts.push(format!("not needed for the form: {}", list.join(", ")));
                }
                if !t.residual.is_constant() {
                    parts.push(format!("form also degenerates where {} = 0", t.residual));
                }
                format!("{}: {} (finding)", t.form, parts.join("; "))
            };
            report.push(Check::info("constraint-tightness", detail).with("top", &t.top));
        }
    }
    Ok(report)
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

/// Golden reports for every catalog entry.
pub fn suite() -> Result<Vec<Report>> {
    all().iter().map(golden_report).collect()
}
