//! Exact coefficient arithmetic.
//!
//! Every structure constant, form coefficient and parameter lives in one of the
//! types implementing [`Coefficient`]. The workhorse is [`Scalar`]: either a
//! reduced rational or a sparse multivariate polynomial with rational
//! coefficients over named variables. Polynomials are kept canonical (no zero
//! terms, no unused variables, constants collapse to the rational variant), so
//! structural equality is mathematical equality and `is_zero` is exact.
//!
//! Variables are ordered by a natural order on their names (`a2 < a10`) and
//! monomials by graded lexicographic order on that variable list.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Arbitrary precision rational number.
pub type Rational = BigRational;

/// Build a rational from a numerator and denominator.
pub fn rat(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

/// Whether a value is certainly nonzero given a set of nonvanishing constraints.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Certainty {
    Zero,
    NonZero,
    /// Nonzero as a polynomial, but may vanish somewhere on the constrained locus.
    Unknown,
}

/// Coefficient ring for algebras and forms.
///
/// Implementors form an integral domain with exact zero testing. Division is
/// only partial ([`Coefficient::exact_div`]); the linear algebra is written
/// fraction-free so that polynomial coefficients work unchanged.
pub trait Coefficient:
    Clone
    + PartialEq
    + fmt::Debug
    + fmt::Display
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Send
    + Sync
    + 'static
{
    fn from_rational(value: &Rational) -> Self;

    /// Quotient when `divisor` divides `self` exactly, `None` otherwise.
    fn exact_div(&self, divisor: &Self) -> Option<Self>;

    /// Nonzero constant.
    fn is_unit(&self) -> bool;

    /// Embed into the symbolic scalar type used by the existence deciders.
    fn to_scalar(&self) -> Scalar;

    fn from_i64(value: i64) -> Self {
        Self::from_rational(&Rational::from_integer(BigInt::from(value)))
    }

    /// Decide nonvanishing on the locus where every constraint is nonzero.
    ///
    /// A value is certainly nonzero when it is a unit times a product of
    /// constraint powers.
    fn nonzero_under(&self, constraints: &[Self]) -> Certainty {
        if self.is_zero() {
            return Certainty::Zero;
        }
        if self.is_unit() {
            return Certainty::NonZero;
        }
        let mut rest = self.clone();
        loop {
            let mut progressed = false;
            for c in constraints {
                if c.is_zero() || c.is_unit() {
                    continue;
                }
                if let Some(q) = rest.exact_div(c) {
                    rest = q;
                    progressed = true;
                    if rest.is_unit() {
                        return Certainty::NonZero;
                    }
                }
            }
            if !progressed {
                return Certainty::Unknown;
            }
        }
    }
}

impl Coefficient for Rational {
    fn from_rational(value: &Rational) -> Self {
        value.clone()
    }

    fn exact_div(&self, divisor: &Self) -> Option<Self> {
        if divisor.is_zero() {
            None
        } else {
            Some(self / divisor)
        }
    }

    fn is_unit(&self) -> bool {
        !self.is_zero()
    }

    fn to_scalar(&self) -> Scalar {
        Scalar::Rational(self.clone())
    }
}

/// Floating point coefficients. Zero tests compare against exact `0.0`, so
/// verdicts computed over `f64` are only indicative.
impl Coefficient for f64 {
    fn from_rational(value: &Rational) -> Self {
        value.to_f64().unwrap_or(f64::NAN)
    }

    fn exact_div(&self, divisor: &Self) -> Option<Self> {
        if *divisor == 0.0 {
            None
        } else {
            Some(self / divisor)
        }
    }

    fn is_unit(&self) -> bool {
        *self != 0.0
    }

    fn to_scalar(&self) -> Scalar {
        Scalar::Rational(Rational::from_float(*self).unwrap_or_else(Rational::zero))
    }
}

/// Exponent vector, ordered graded lexicographically.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    fn div(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

fn natural_key(name: &str) -> (&str, Option<u64>) {
    let split = name
        .char_indices()
        .rev()
        .take_while(|(_, c)| c.is_ascii_digit())
        .last()
        .map(|(i, _)| i);
    match split {
        Some(i) if i > 0 => (&name[..i], name[i..].parse().ok()),
        _ => (name, None),
    }
}

fn var_order(a: &str, b: &str) -> Ordering {
    natural_key(a).cmp(&natural_key(b)).then_with(|| a.cmp(b))
}

/// Sparse multivariate polynomial with rational coefficients.
///
/// Invariants: at least one nonconstant term, no zero coefficients, every
/// listed variable occurs in some term, variables sorted in natural order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polynomial {
    vars: Vec<String>,
    terms: BTreeMap<Monomial, Rational>,
}

impl Polynomial {
    pub fn variables(&self) -> &[String] {
        &self.vars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    /// Largest exponent of `var` in any term.
    pub fn degree_in(&self, var: &str) -> u32 {
        match self.vars.iter().position(|v| v == var) {
            Some(i) => self.terms.keys().map(|m| m.0[i]).max().unwrap_or(0),
            None => 0,
        }
    }

    /// Whether every term has the same total degree.
    pub fn is_homogeneous(&self) -> bool {
        let mut degrees = self.terms.keys().map(Monomial::degree);
        let first = degrees.next();
        degrees.all(|d| Some(d) == first)
    }
}

/// Working representation on an explicit variable list.
#[derive(Debug, Clone)]
struct Dense {
    vars: Vec<String>,
    terms: BTreeMap<Monomial, Rational>,
}

impl Dense {
    fn constant(vars: Vec<String>, c: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial::one(vars.len()), c);
        }
        Dense { vars, terms }
    }

    fn from_scalar(s: &Scalar, vars: &[String]) -> Self {
        match s {
            Scalar::Rational(r) => Dense::constant(vars.to_vec(), r.clone()),
            Scalar::Polynomial(p) => {
                if p.vars == vars {
                    return Dense {
                        vars: vars.to_vec(),
                        terms: p.terms.clone(),
                    };
                }
                let map: Vec<usize> = p
                    .vars
                    .iter()
                    .map(|v| vars.iter().position(|w| w == v).expect("variable in universe"))
                    .collect();
                let terms = p
                    .terms
                    .iter()
                    .map(|(m, c)| {
                        let mut e = vec![0; vars.len()];
                        for (i, &k) in map.iter().enumerate() {
                            e[k] = m.0[i];
                        }
                        (Monomial(e), c.clone())
                    })
                    .collect();
                Dense {
                    vars: vars.to_vec(),
                    terms,
                }
            }
        }
    }

    fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get() + &c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    fn mul(&self, other: &Dense) -> Dense {
        let mut out = Dense::constant(self.vars.clone(), Rational::zero());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }

    fn leading(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next_back()
    }

    fn into_scalar(self) -> Scalar {
        let Dense { vars, terms } = self;
        if terms.is_empty() {
            return Scalar::zero();
        }
        let used: Vec<usize> = (0..vars.len())
            .filter(|&i| terms.keys().any(|m| m.0[i] > 0))
            .collect();
        if used.is_empty() {
            let c = terms.into_values().next().expect("nonempty");
            return Scalar::Rational(c);
        }
        if used.len() == vars.len() {
            return Scalar::Polynomial(Polynomial { vars, terms });
        }
        let new_vars = used.iter().map(|&i| vars[i].clone()).collect();
        let new_terms = terms
            .into_iter()
            .map(|(m, c)| (Monomial(used.iter().map(|&i| m.0[i]).collect()), c))
            .collect();
        Scalar::Polynomial(Polynomial {
            vars: new_vars,
            terms: new_terms,
        })
    }
}

fn merged_vars(a: &Scalar, b: &Scalar) -> Vec<String> {
    let mut out: Vec<String> = a.variables().to_vec();
    for v in b.variables() {
        if !out.contains(v) {
            out.push(v.clone());
        }
    }
    out.sort_by(|x, y| var_order(x, y));
    out
}

/// Exact scalar: a reduced rational or a polynomial in named parameters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Scalar {
    Rational(Rational),
    Polynomial(Polynomial),
}

impl Scalar {
    pub fn int(v: i64) -> Self {
        Scalar::Rational(Rational::from_integer(BigInt::from(v)))
    }

    pub fn frac(n: i64, d: i64) -> Self {
        Scalar::Rational(rat(n, d))
    }

    /// The polynomial consisting of a single variable.
    pub fn var(name: &str) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(Monomial(vec![1]), Rational::one());
        Scalar::Polynomial(Polynomial {
            vars: vec![name.to_string()],
            terms,
        })
    }

    pub fn variables(&self) -> &[String] {
        match self {
            Scalar::Rational(_) => &[],
            Scalar::Polynomial(p) => &p.vars,
        }
    }

    pub fn is_constant(&self) -> bool {
        matches!(self, Scalar::Rational(_))
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        match self {
            Scalar::Rational(r) => Some(r),
            Scalar::Polynomial(_) => None,
        }
    }

    pub fn as_polynomial(&self) -> Option<&Polynomial> {
        match self {
            Scalar::Rational(_) => None,
            Scalar::Polynomial(p) => Some(p),
        }
    }

    pub fn total_degree(&self) -> u32 {
        match self {
            Scalar::Rational(_) => 0,
            Scalar::Polynomial(p) => p.total_degree(),
        }
    }

    pub fn pow(&self, exp: u32) -> Scalar {
        let mut out = Scalar::one();
        for _ in 0..exp {
            out = out * self.clone();
        }
        out
    }

    /// Replace the assigned variables, leaving the others symbolic.
    pub fn substitute_partial(&self, assignment: &BTreeMap<String, Rational>) -> Scalar {
        let p = match self {
            Scalar::Rational(_) => return self.clone(),
            Scalar::Polynomial(p) => p,
        };
        if !p.vars.iter().any(|v| assignment.contains_key(v)) {
            return self.clone();
        }
        let values: Vec<Option<&Rational>> = p.vars.iter().map(|v| assignment.get(v)).collect();
        let mut out = Dense::constant(p.vars.clone(), Rational::zero());
        for (m, c) in &p.terms {
            let mut coeff = c.clone();
            let mut rest = m.0.clone();
            for (i, value) in values.iter().enumerate() {
                if let Some(value) = value {
                    if m.0[i] > 0 {
                        coeff *= num_traits::pow::pow((*value).clone(), m.0[i] as usize);
                    }
                    rest[i] = 0;
                }
            }
            out.add_term(Monomial(rest), coeff);
        }
        out.into_scalar()
    }

    /// Evaluate at a point covering every variable.
    pub fn substitute(&self, assignment: &BTreeMap<String, Rational>) -> Result<Rational> {
        if let Some(missing) = self
            .variables()
            .iter()
            .find(|v| !assignment.contains_key(*v))
        {
            return Err(Error::MissingVariable(missing.clone()));
        }
        match self.substitute_partial(assignment) {
            Scalar::Rational(r) => Ok(r),
            Scalar::Polynomial(_) => unreachable!("all variables assigned"),
        }
    }

    /// Coefficients with respect to the monomials in `vars`, the other
    /// variables kept in the coefficients.
    pub fn coefficients_in(&self, vars: &[String]) -> BTreeMap<Vec<u32>, Scalar> {
        let mut out: BTreeMap<Vec<u32>, Scalar> = BTreeMap::new();
        let p = match self {
            Scalar::Rational(r) => {
                if !r.is_zero() {
                    out.insert(vec![0; vars.len()], self.clone());
                }
                return out;
            }
            Scalar::Polynomial(p) => p,
        };
        let idx: Vec<Option<usize>> = vars
            .iter()
            .map(|v| p.vars.iter().position(|w| w == v))
            .collect();
        for (m, c) in &p.terms {
            let key: Vec<u32> = idx
                .iter()
                .map(|i| i.map(|i| m.0[i]).unwrap_or(0))
                .collect();
            let mut rest = m.0.clone();
            for i in idx.iter().flatten() {
                rest[*i] = 0;
            }
            let mut d = Dense::constant(p.vars.clone(), Rational::zero());
            d.add_term(Monomial(rest), c.clone());
            let term = d.into_scalar();
            let slot = out.entry(key).or_insert_with(Scalar::zero);
            *slot = slot.clone() + term;
        }
        out.retain(|_, v| !v.is_zero());
        out
    }

    fn binary(a: &Scalar, b: &Scalar, op: impl Fn(&Dense, &Dense) -> Dense) -> Scalar {
        let vars = merged_vars(a, b);
        let da = Dense::from_scalar(a, &vars);
        let db = Dense::from_scalar(b, &vars);
        op(&da, &db).into_scalar()
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let negative = c.is_negative();
            if i == 0 {
                if negative {
                    write!(f, "-")?;
                }
            } else if negative {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let abs = c.abs();
            let mono: Vec<String> = m
                .0
                .iter()
                .zip(&self.vars)
                .filter(|(e, _)| **e > 0)
                .map(|(e, v)| if *e == 1 { v.clone() } else { format!("{v}^{e}") })
                .collect();
            if mono.is_empty() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{}", mono.join("*"))?;
            } else {
                write!(f, "{abs}*{}", mono.join("*"))?;
            }
        }
        Ok(())
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(r) => write!(f, "{r}"),
            Scalar::Polynomial(p) => write!(f, "{p}"),
        }
    }
}

impl From<Rational> for Scalar {
    fn from(r: Rational) -> Self {
        Scalar::Rational(r)
    }
}

impl From<i64> for Scalar {
    fn from(v: i64) -> Self {
        Scalar::int(v)
    }
}

impl Zero for Scalar {
    fn zero() -> Self {
        Scalar::Rational(Rational::zero())
    }

    fn is_zero(&self) -> bool {
        matches!(self, Scalar::Rational(r) if r.is_zero())
    }
}

impl One for Scalar {
    fn one() -> Self {
        Scalar::Rational(Rational::one())
    }
}

impl Add for Scalar {
    type Output = Scalar;

    fn add(self, rhs: Scalar) -> Scalar {
        match (&self, &rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a + b),
            _ if rhs.is_zero() => self,
            _ if self.is_zero() => rhs,
            _ => Scalar::binary(&self, &rhs, |a, b| {
                let mut out = a.clone();
                for (m, c) in &b.terms {
                    out.add_term(m.clone(), c.clone());
                }
                out
            }),
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;

    fn neg(self) -> Scalar {
        match self {
            Scalar::Rational(r) => Scalar::Rational(-r),
            Scalar::Polynomial(mut p) => {
                for c in p.terms.values_mut() {
                    *c = -c.clone();
                }
                Scalar::Polynomial(p)
            }
        }
    }
}

impl Sub for Scalar {
    type Output = Scalar;

    fn sub(self, rhs: Scalar) -> Scalar {
        self + (-rhs)
    }
}

impl Mul for Scalar {
    type Output = Scalar;

    fn mul(self, rhs: Scalar) -> Scalar {
        match (&self, &rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a * b),
            _ if self.is_zero() || rhs.is_zero() => Scalar::zero(),
            (Scalar::Rational(a), Scalar::Polynomial(p))
            | (Scalar::Polynomial(p), Scalar::Rational(a)) => {
                let mut p = p.clone();
                for c in p.terms.values_mut() {
                    *c = &*c * a;
                }
                Scalar::Polynomial(p)
            }
            _ => Scalar::binary(&self, &rhs, Dense::mul),
        }
    }
}

impl Coefficient for Scalar {
    fn from_rational(value: &Rational) -> Self {
        Scalar::Rational(value.clone())
    }

    /// Single-divisor multivariate division; a one-element set is a Gröbner
    /// basis of its principal ideal, so a nonzero remainder means the
    /// division is not exact.
    fn exact_div(&self, divisor: &Self) -> Option<Self> {
        if divisor.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Scalar::zero());
        }
        if let Scalar::Rational(d) = divisor {
            return Some(self.clone() * Scalar::Rational(d.recip()));
        }
        let vars = merged_vars(self, divisor);
        let mut rem = Dense::from_scalar(self, &vars);
        let g = Dense::from_scalar(divisor, &vars);
        let (lm_g, lc_g) = {
            let (m, c) = g.leading().expect("nonzero divisor");
            (m.clone(), c.clone())
        };
        let mut quot = Dense::constant(vars.clone(), Rational::zero());
        while let Some((lm, lc)) = rem.leading() {
            if !lm_g.divides(lm) {
                return None;
            }
            let m = lm.div(&lm_g);
            let c = lc / &lc_g;
            quot.add_term(m.clone(), c.clone());
            let mut t = Dense::constant(vars.clone(), Rational::zero());
            t.add_term(m, -c);
            let prod = t.mul(&g);
            for (pm, pc) in prod.terms {
                rem.add_term(pm, pc);
            }
        }
        Some(quot.into_scalar())
    }

    fn is_unit(&self) -> bool {
        matches!(self, Scalar::Rational(r) if !r.is_zero())
    }

    fn to_scalar(&self) -> Scalar {
        self.clone()
    }
}

/// Parse a rational literal such as `-3` or `5/7`.
pub fn parse_rational(text: &str) -> Option<Rational> {
    let text = text.trim();
    let (n, d) = match text.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (text, "1"),
    };
    let n: BigInt = n.parse().ok()?;
    let d: BigInt = d.parse().ok()?;
    if d.is_zero() {
        return None;
    }
    Some(Rational::new(n, d))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p() -> Scalar {
        Scalar::var("p")
    }

    fn q() -> Scalar {
        Scalar::var("q")
    }

    fn at(pairs: &[(&str, i64)]) -> BTreeMap<String, Rational> {
        pairs
            .iter()
            .map(|(k, v)| (k.to_string(), Rational::from_integer((*v).into())))
            .collect()
    }

    #[test]
    fn rational_sum() {
        assert_eq!(Scalar::frac(1, 2) + Scalar::frac(1, 3), Scalar::frac(5, 6));
    }

    #[test]
    fn difference_of_squares() {
        let lhs = (p() + q()) * (p() - q());
        let rhs = p() * p() - q() * q();
        assert_eq!(lhs, rhs);
        assert_eq!(lhs.to_string(), "p^2 - q^2");
    }

    #[test]
    fn cancellation_gives_rational_zero() {
        let a = Scalar::one() + p();
        let z = a.clone() - a;
        assert_eq!(z, Scalar::Rational(Rational::zero()));
        assert!(z.is_zero());
        assert!((p() + Scalar::one() - p() - Scalar::one()).is_zero());
        assert!(!(p() - q()).is_zero());
    }

    #[test]
    fn substitution() {
        assert_eq!((Scalar::one() + p()).substitute(&at(&[("p", 1)])).unwrap(), rat(2, 1));
        let d = p() * p() - q() * q();
        assert_eq!(d.substitute(&at(&[("p", 3), ("q", 2)])).unwrap(), rat(5, 1));
        assert_eq!(Scalar::int(7).substitute(&at(&[])).unwrap(), rat(7, 1));
        assert_eq!(
            d.substitute(&at(&[("p", 3)])),
            Err(Error::MissingVariable("q".into()))
        );
    }

    #[test]
    fn unused_variables_are_dropped() {
        let s = p() * q() - p() * q() + p();
        assert_eq!(s.variables(), &["p".to_string()]);
    }

    #[test]
    fn natural_variable_order() {
        let s = Scalar::var("a10") + Scalar::var("a2");
        assert_eq!(s.variables(), &["a2".to_string(), "a10".to_string()]);
    }

    #[test]
    fn graded_lex_printing() {
        let s = p() * q() + q() * q() * q() + p() + Scalar::int(3) - Scalar::frac(1, 2) * p() * p();
        assert_eq!(s.to_string(), "q^3 - 1/2*p^2 + p*q + p + 3");
    }

    #[test]
    fn exact_division() {
        let f = (p() + q()) * (p() - Scalar::int(2) * q() + Scalar::one());
        assert_eq!(f.exact_div(&(p() + q())), Some(p() - Scalar::int(2) * q() + Scalar::one()));
        assert_eq!((p() * p() + Scalar::one()).exact_div(&p()), None);
        assert_eq!(Scalar::int(3).exact_div(&p()), None);
        assert_eq!((Scalar::int(4) * p()).exact_div(&Scalar::int(2)), Some(Scalar::int(2) * p()));
    }

    #[test]
    fn constraint_certainty() {
        let c1 = q();
        let c2 = p() + Scalar::one() - q();
        let cons = [c1.clone(), c2.clone()];
        assert_eq!(
            (Scalar::int(-3) * c1.clone() * c2.clone() * c2.clone()).nonzero_under(&cons),
            Certainty::NonZero
        );
        assert_eq!(p().nonzero_under(&cons), Certainty::Unknown);
        assert_eq!(Scalar::zero().nonzero_under(&cons), Certainty::Zero);
        assert_eq!(Scalar::int(2).nonzero_under(&[]), Certainty::NonZero);
    }

    #[test]
    fn coefficient_extraction() {
        let a1 = Scalar::var("a1");
        let s = a1.clone() * a1.clone() * p() + a1 * Scalar::int(2) + p();
        let cs = s.coefficients_in(&["a1".to_string()]);
        assert_eq!(cs[&vec![2]], p());
        assert_eq!(cs[&vec![1]], Scalar::int(2));
        assert_eq!(cs[&vec![0]], p());
    }

    #[test]
    fn parse_rational_literals() {
        assert_eq!(parse_rational("-4/6"), Some(rat(-2, 3)));
        assert_eq!(parse_rational("7"), Some(rat(7, 1)));
        assert_eq!(parse_rational("1/0"), None);
    }
}
