//! The `.lie` text format and the expression syntax for scalars, vectors and
//! 1-forms.
//!
//! ```text
//! # comment
//! dim 5
//! params p q
//! constrain q
//! basis e1 e2 e3 e4 e5
//! bracket [e2,e3] = e1
//! bracket [e1,e5] = (1+p) e1
//! extend psi e1 -> 0 ; e2 -> 2 e1
//! extend f = -e1*
//! extend s = 1
//! ```
//!
//! Expressions allow `+ - * / ^`, parentheses and implicit multiplication
//! (`2 p e1`). Division is only by nonzero rational constants. In 1-form
//! expressions basis covectors are written with a trailing star, `e1*`.

use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};

use crate::construct::ExtensionData;
use crate::error::{Error, Result};
use crate::forms::KForm;
use crate::liealg::LieAlgebra;
use crate::linalg::{zero_vector, Vector};
use crate::scalar::{Coefficient, Rational, Scalar};

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Num(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    Open,
    Close,
}

fn tokenize(text: &str) -> std::result::Result<Vec<Token>, String> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let digits: String = chars[start..i].iter().collect();
            out.push(Token::Num(digits.parse().expect("digits")));
            continue;
        }
        if c.is_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_' || chars[i] == '\'') {
                i += 1;
            }
            out.push(Token::Ident(chars[start..i].iter().collect()));
            continue;
        }
        out.push(match c {
            '+' => Token::Plus,
            '-' | '−' => Token::Minus,
            '*' => Token::Star,
            '/' => Token::Slash,
            '^' => Token::Caret,
            '(' => Token::Open,
            ')' => Token::Close,
            other => return Err(format!("unexpected character `{other}`")),
        });
        i += 1;
    }
    Ok(out)
}

/// What basis symbols denote while parsing.
#[derive(Debug, Clone, Copy, PartialEq)]
enum Mode {
    Scalar,
    Vector,
    Covector,
}

#[derive(Debug, Clone)]
enum Value {
    Scalar(Scalar),
    Linear(Vector<Scalar>),
}

struct Parser<'a> {
    tokens: Vec<Token>,
    pos: usize,
    mode: Mode,
    labels: &'a [String],
    /// Allowed parameter names; `None` accepts any identifier.
    params: Option<&'a [String]>,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn next(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).cloned();
        self.pos += 1;
        t
    }

    fn add(&self, a: Value, b: Value, negate: bool) -> std::result::Result<Value, String> {
        let b = if negate { self.neg(b) } else { b };
        match (a, b) {
            (Value::Scalar(x), Value::Scalar(y)) => Ok(Value::Scalar(x + y)),
            (Value::Linear(x), Value::Linear(y)) => Ok(Value::Linear(x.into_iter().zip(y).map(|(a, b)| a + b).collect())),
            (Value::Scalar(x), Value::Linear(v)) | (Value::Linear(v), Value::Scalar(x)) => {
                if x.is_zero() {
                    Ok(Value::Linear(v))
                } else {
                    Err("cannot add a scalar to a basis combination".into())
                }
            }
        }
    }

    fn neg(&self, v: Value) -> Value {
        match v {
            Value::Scalar(x) => Value::Scalar(-x),
            Value::Linear(v) => Value::Linear(v.into_iter().map(|x| -x).collect()),
        }
    }

    fn mul(&self, a: Value, b: Value) -> std::result::Result<Value, String> {
        match (a, b) {
            (Value::Scalar(x), Value::Scalar(y)) => Ok(Value::Scalar(x * y)),
            (Value::Scalar(x), Value::Linear(v)) | (Value::Linear(v), Value::Scalar(x)) => {
                Ok(Value::Linear(v.into_iter().map(|c| x.clone() * c).collect()))
            }
            (Value::Linear(_), Value::Linear(_)) => Err("product of two basis combinations".into()),
        }
    }

    fn div(&self, a: Value, b: Value) -> std::result::Result<Value, String> {
        let d = match b {
            Value::Scalar(Scalar::Rational(r)) if !r.is_zero() => r,
            Value::Scalar(Scalar::Rational(_)) => return Err("division by zero".into()),
            _ => return Err("division only by nonzero rational constants".into()),
        };
        let inv = Scalar::Rational(d.recip());
        self.mul(a, Value::Scalar(inv))
    }

    fn expr(&mut self) -> std::result::Result<Value, String> {
        let mut acc = match self.peek() {
            Some(Token::Minus) => {
                self.next();
                let t = self.term()?;
                self.neg(t)
            }
            Some(Token::Plus) => {
                self.next();
                self.term()?
            }
            _ => self.term()?,
        };
        loop {
            match self.peek() {
                Some(Token::Plus) => {
                    self.next();
                    let t = self.term()?;
                    acc = self.add(acc, t, false)?;
                }
                Some(Token::Minus) => {
                    self.next();
                    let t = self.term()?;
                    acc = self.add(acc, t, true)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> std::result::Result<Value, String> {
        let mut acc = self.power()?;
        loop {
            match self.peek() {
                Some(Token::Star) => {
                    self.next();
                    let f = self.power()?;
                    acc = self.mul(acc, f)?;
                }
                Some(Token::Slash) => {
                    self.next();
                    let f = self.power()?;
                    acc = self.div(acc, f)?;
                }
                Some(Token::Num(_) | Token::Ident(_) | Token::Open) => {
                    let f = self.power()?;
                    acc = self.mul(acc, f)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn power(&mut self) -> std::result::Result<Value, String> {
        let base = self.atom()?;
        if self.peek() != Some(&Token::Caret) {
            return Ok(base);
        }
        self.next();
        let exp = match self.next() {
            Some(Token::Num(n)) => n.to_u32().ok_or("exponent too large")?,
            _ => return Err("expected a nonnegative integer exponent".into()),
        };
        match base {
            Value::Scalar(x) => Ok(Value::Scalar(x.pow(exp))),
            Value::Linear(_) => Err("power of a basis combination".into()),
        }
    }

    fn atom(&mut self) -> std::result::Result<Value, String> {
        match self.next() {
            Some(Token::Num(n)) => Ok(Value::Scalar(Scalar::Rational(Rational::from_integer(n)))),
            Some(Token::Minus) => {
                let v = self.power()?;
                Ok(self.neg(v))
            }
            Some(Token::Open) => {
                let v = self.expr()?;
                match self.next() {
                    Some(Token::Close) => Ok(v),
                    _ => Err("missing `)`".into()),
                }
            }
            Some(Token::Ident(name)) => self.identifier(name),
            Some(t) => Err(format!("unexpected `{}`", describe(&t))),
            None => Err("unexpected end of expression".into()),
        }
    }

    fn identifier(&mut self, name: String) -> std::result::Result<Value, String> {
        if self.mode != Mode::Scalar {
            if let Some(i) = self.labels.iter().position(|l| *l == name) {
                let starred = self.peek() == Some(&Token::Star);
                match (self.mode, starred) {
                    (Mode::Covector, true) => {
                        self.next();
                    }
                    (Mode::Covector, false) => return Err(format!("expected covector `{name}*`")),
                    (Mode::Vector, true) => {
                        // `e1*` in a vector expression is a covector; `e1 * 2` is a product
                        if matches!(self.tokens.get(self.pos + 1), None | Some(Token::Plus | Token::Minus | Token::Close)) {
                            return Err(format!("covector `{name}*` where a vector is expected"));
                        }
                    }
                    _ => {}
                }
                let mut v = zero_vector::<Scalar>(self.labels.len());
                v[i] = Scalar::one();
                return Ok(Value::Linear(v));
            }
        }
        if let Some(allowed) = self.params {
            if !allowed.contains(&name) {
                return Err(format!("unknown symbol `{name}`"));
            }
        }
        Ok(Value::Scalar(Scalar::var(&name)))
    }
}

fn describe(t: &Token) -> String {
    match t {
        Token::Num(n) => n.to_string(),
        Token::Ident(s) => s.clone(),
        Token::Plus => "+".into(),
        Token::Minus => "-".into(),
        Token::Star => "*".into(),
        Token::Slash => "/".into(),
        Token::Caret => "^".into(),
        Token::Open => "(".into(),
        Token::Close => ")".into(),
    }
}

fn parse_value(text: &str, mode: Mode, labels: &[String], params: Option<&[String]>) -> std::result::Result<Value, String> {
    let tokens = tokenize(text)?;
    if tokens.is_empty() {
        return Err("empty expression".into());
    }
    let mut p = Parser {
        tokens,
        pos: 0,
        mode,
        labels,
        params,
    };
    let v = p.expr()?;
    if let Some(t) = p.peek() {
        return Err(format!("unexpected `{}`", describe(t)));
    }
    Ok(v)
}

fn expect_linear(v: Value, n: usize) -> std::result::Result<Vector<Scalar>, String> {
    match v {
        Value::Linear(v) => Ok(v),
        Value::Scalar(x) if x.is_zero() => Ok(zero_vector(n)),
        Value::Scalar(x) => Err(format!("scalar `{x}` where a basis combination is expected")),
    }
}

fn parse_error(message: String) -> Error {
    Error::Parse { line: 0, message }
}

/// Parse a polynomial expression. With `params = None` any identifier is a variable.
pub fn parse_scalar(text: &str, params: Option<&[String]>) -> Result<Scalar> {
    match parse_value(text, Mode::Scalar, &[], params).map_err(parse_error)? {
        Value::Scalar(x) => Ok(x),
        Value::Linear(_) => unreachable!("scalar mode"),
    }
}

/// Parse `(1+p) e1 - 2 e3` against the basis labels.
pub fn parse_vector(text: &str, labels: &[String], params: Option<&[String]>) -> Result<Vector<Scalar>> {
    let v = parse_value(text, Mode::Vector, labels, params).map_err(parse_error)?;
    expect_linear(v, labels.len()).map_err(parse_error)
}

/// Parse `e1* + (1-p) e3*` into a 1-form.
pub fn parse_one_form(text: &str, labels: &[String], params: Option<&[String]>) -> Result<KForm<Scalar>> {
    let v = parse_value(text, Mode::Covector, labels, params).map_err(parse_error)?;
    let v = expect_linear(v, labels.len()).map_err(parse_error)?;
    Ok(KForm::from_covector(&v))
}

/// Parse `p=1,q=-2/3` into an assignment.
pub fn parse_assignment(text: &str) -> Result<crate::liealg::Assignment> {
    let mut out = crate::liealg::Assignment::new();
    for part in text.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let (name, value) = part
            .split_once('=')
            .ok_or_else(|| parse_error(format!("expected name=value, found `{part}`")))?;
        let value = parse_scalar(value, Some(&[]))?;
        let value = value
            .as_rational()
            .cloned()
            .ok_or_else(|| parse_error(format!("value of `{name}` is not a rational number")))?;
        out.insert(name.trim().to_string(), value);
    }
    Ok(out)
}

/// Contents of a `.lie` file.
#[derive(Debug, Clone)]
pub struct LieFile {
    pub algebra: LieAlgebra<Scalar>,
    pub extension: Option<ExtensionData<Scalar>>,
}

#[derive(Default)]
struct ExtensionParts {
    psi: Option<Vec<Vector<Scalar>>>,
    f: Option<Vector<Scalar>>,
    s: Option<Scalar>,
}

/// Parse the text of a `.lie` file.
pub fn parse_lie(text: &str) -> Result<LieFile> {
    let mut dim: Option<usize> = None;
    let mut params: Vec<String> = Vec::new();
    let mut constraint_text: Vec<(usize, String)> = Vec::new();
    let mut labels: Option<Vec<String>> = None;
    let mut brackets: Vec<(usize, String, String, String)> = Vec::new();
    let mut extension: Vec<(usize, String, String)> = Vec::new();
    let err = |line: usize, message: String| Error::Parse { line, message };

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let (keyword, rest) = content.split_once(char::is_whitespace).unwrap_or((content, ""));
        let rest = rest.trim();
        match keyword {
            "dim" => {
                if dim.is_some() {
                    return Err(err(line, "duplicate `dim`".into()));
                }
                let n: usize = rest.parse().map_err(|_| err(line, format!("invalid dimension `{rest}`")))?;
                if n == 0 {
                    return Err(err(line, "dimension must be positive".into()));
                }
                dim = Some(n);
            }
            "params" => params.extend(rest.split_whitespace().map(String::from)),
            "constrain" => {
                if rest.is_empty() {
                    return Err(err(line, "`constrain` needs an expression".into()));
                }
                constraint_text.push((line, rest.to_string()));
            }
            "basis" => {
                if labels.is_some() {
                    return Err(err(line, "duplicate `basis`".into()));
                }
                let ls: Vec<String> = rest.split_whitespace().map(String::from).collect();
                for (i, l) in ls.iter().enumerate() {
                    if ls[..i].contains(l) {
                        return Err(err(line, format!("repeated basis label `{l}`")));
                    }
                    if !l.chars().next().is_some_and(|c| c.is_alphabetic() || c == '_')
                        || !l.chars().all(|c| c.is_alphanumeric() || c == '_' || c == '\'')
                    {
                        return Err(err(line, format!("invalid basis label `{l}`")));
                    }
                }
                labels = Some(ls);
            }
            "bracket" => {
                let (lhs, rhs) = rest
                    .split_once('=')
                    .ok_or_else(|| err(line, "expected `bracket [a,b] = ...`".into()))?;
                let inner = lhs
                    .trim()
                    .strip_prefix('[')
                    .and_then(|s| s.strip_suffix(']'))
                    .ok_or_else(|| err(line, "expected `[a,b]`".into()))?;
                let (a, b) = inner
                    .split_once(',')
                    .ok_or_else(|| err(line, "expected `[a,b]`".into()))?;
                brackets.push((line, a.trim().to_string(), b.trim().to_string(), rhs.trim().to_string()));
            }
            "extend" => {
                let (what, body) = rest.split_once(char::is_whitespace).unwrap_or((rest, ""));
                extension.push((line, what.to_string(), body.trim().to_string()));
            }
            other => return Err(err(line, format!("unknown statement `{other}`"))),
        }
    }

    let labels = match (dim, labels) {
        (Some(n), Some(ls)) if ls.len() != n => {
            return Err(err(0, format!("`dim {n}` but {} basis labels", ls.len())));
        }
        (_, Some(ls)) => ls,
        (Some(n), None) => (1..=n).map(|i| format!("e{i}")).collect(),
        (None, None) => return Err(err(0, "missing `dim` or `basis`".into())),
    };
    for p in &params {
        if labels.contains(p) {
            return Err(err(0, format!("`{p}` is both a parameter and a basis label")));
        }
    }
    let n = labels.len();
    let mut algebra = LieAlgebra::abelian_with_labels(labels.clone()).with_params(params.clone());
    let index = |line: usize, name: &str| {
        labels
            .iter()
            .position(|l| l == name)
            .ok_or_else(|| err(line, format!("unknown basis label `{name}`")))
    };
    let mut seen = std::collections::BTreeSet::new();
    for (line, a, b, rhs) in brackets {
        let (i, j) = (index(line, &a)?, index(line, &b)?);
        if i == j {
            return Err(err(line, format!("[{a},{a}] is zero by antisymmetry")));
        }
        if !seen.insert((i.min(j), i.max(j))) {
            return Err(err(line, format!("bracket [{a},{b}] given twice")));
        }
        let v = parse_vector(&rhs, &labels, Some(&params)).map_err(|e| relocate(e, line))?;
        algebra.set_bracket(i, j, v).map_err(|e| err(line, e.to_string()))?;
    }
    let mut constraints = Vec::new();
    for (line, c) in constraint_text {
        let c = parse_scalar(&c, Some(&params)).map_err(|e| relocate(e, line))?;
        if c.is_zero() {
            return Err(err(line, "constraint is identically zero".into()));
        }
        constraints.push(c);
    }
    let algebra = algebra.with_constraints(constraints);

    let mut parts = ExtensionParts::default();
    for (line, what, body) in &extension {
        let line = *line;
        match what.as_str() {
            "psi" => {
                if parts.psi.is_some() {
                    return Err(err(line, "duplicate `extend psi`".into()));
                }
                let mut psi = vec![zero_vector::<Scalar>(n); n];
                for entry in body.split(';').map(str::trim).filter(|s| !s.is_empty()) {
                    let (src, dst) = entry
                        .split_once("->")
                        .ok_or_else(|| err(line, format!("expected `label -> vector`, found `{entry}`")))?;
                    let i = index(line, src.trim())?;
                    psi[i] = parse_vector(dst, &labels, Some(&params)).map_err(|e| relocate(e, line))?;
                }
                parts.psi = Some(psi);
            }
            "f" | "s" => {
                let body = body
                    .strip_prefix('=')
                    .ok_or_else(|| err(line, format!("expected `extend {what} = ...`")))?
                    .trim();
                if what == "f" {
                    if parts.f.is_some() {
                        return Err(err(line, "duplicate `extend f`".into()));
                    }
                    let form = parse_one_form(body, &labels, Some(&params)).map_err(|e| relocate(e, line))?;
                    parts.f = Some(form.as_covector().map_err(|e| err(line, e.to_string()))?);
                } else {
                    if parts.s.is_some() {
                        return Err(err(line, "duplicate `extend s`".into()));
                    }
                    parts.s = Some(parse_scalar(body, None).map_err(|e| relocate(e, line))?);
                }
            }
            other => return Err(err(line, format!("unknown extension field `{other}`"))),
        }
    }
    let extension = if extension.is_empty() {
        None
    } else {
        Some(ExtensionData::new(
            parts.psi.unwrap_or_else(|| vec![zero_vector(n); n]),
            parts.f.unwrap_or_else(|| zero_vector(n)),
            parts.s.unwrap_or_else(Scalar::one),
        ))
    };
    Ok(LieFile { algebra, extension })
}

fn relocate(e: Error, line: usize) -> Error {
    match e {
        Error::Parse { message, .. } => Error::Parse { line, message },
        other => other,
    }
}

/// Emit an algebra (and optional extension block) in the `.lie` format.
pub fn emit_lie(algebra: &LieAlgebra<Scalar>, extension: Option<&ExtensionData<Scalar>>) -> String {
    let mut out = String::new();
    let labels = algebra.labels();
    writeln!(out, "dim {}", algebra.dim()).unwrap();
    if !algebra.params().is_empty() {
        writeln!(out, "params {}", algebra.params().join(" ")).unwrap();
    }
    for c in algebra.constraints() {
        writeln!(out, "constrain {c}").unwrap();
    }
    writeln!(out, "basis {}", labels.join(" ")).unwrap();
    for (&(i, j), rhs) in algebra.structure_constants() {
        let mut v = zero_vector::<Scalar>(algebra.dim());
        for (&k, c) in rhs {
            v[k] = c.clone();
        }
        writeln!(out, "bracket [{},{}] = {}", labels[i], labels[j], algebra.format_vector(&v)).unwrap();
    }
    if let Some(ext) = extension {
        let entries: Vec<String> = ext
            .psi
            .iter()
            .enumerate()
            .filter(|(_, v)| v.iter().any(|c| !c.is_zero()))
            .map(|(i, v)| format!("{} -> {}", labels[i], algebra.format_vector(v)))
            .collect();
        if entries.is_empty() {
            writeln!(out, "extend psi").unwrap();
        } else {
            writeln!(out, "extend psi {}", entries.join(" ; ")).unwrap();
        }
        writeln!(out, "extend f = {}", KForm::from_covector(&ext.f).format_with(labels)).unwrap();
        writeln!(out, "extend s = {}", ext.s).unwrap();
    }
    out
}

/// Format a 1-form or vector coefficient list for reports.
pub fn format_covector<S: Coefficient>(v: &[S], labels: &[String]) -> String {
    KForm::from_covector(v).format_with(labels)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn labels(n: usize) -> Vec<String> {
        (1..=n).map(|i| format!("e{i}")).collect()
    }

    fn p() -> Scalar {
        Scalar::var("p")
    }

    #[test]
    fn scalars() {
        assert_eq!(parse_scalar("1+p", None).unwrap(), p() + Scalar::one());
        assert_eq!(parse_scalar("2p^2 - p/2", None).unwrap(), Scalar::int(2) * p() * p() - Scalar::frac(1, 2) * p());
        assert_eq!(parse_scalar("-(p - 1)", None).unwrap(), Scalar::one() - p());
        assert_eq!(parse_scalar("5/7", Some(&[])).unwrap(), Scalar::frac(5, 7));
        assert!(parse_scalar("q", Some(&["p".to_string()])).is_err());
        assert!(parse_scalar("1/0", None).is_err());
        assert!(parse_scalar("1/p", None).is_err());
    }

    #[test]
    fn vectors_and_forms() {
        let ls = labels(3);
        let params = vec!["p".to_string()];
        let v = parse_vector("(1+p) e1 - 2 e3", &ls, Some(&params)).unwrap();
        assert_eq!(v, vec![p() + Scalar::one(), Scalar::zero(), Scalar::int(-2)]);
        let eta = parse_one_form("e1* + (1-p) e3*", &ls, Some(&params)).unwrap();
        assert_eq!(eta.as_covector().unwrap(), vec![Scalar::one(), Scalar::zero(), Scalar::one() - p()]);
        assert_eq!(parse_one_form("-e2*", &ls, None).unwrap().format_with(&ls), "-e2*");
        assert!(parse_one_form("e1", &ls, None).is_err());
        assert!(parse_vector("e1 + 1", &ls, None).is_err());
        assert!(parse_vector("e1 e2", &ls, None).is_err());
        assert_eq!(parse_vector("0", &ls, None).unwrap(), zero_vector::<Scalar>(3));
    }

    #[test]
    fn parse_file() {
        let text = "# item\ndim 5\nparams p q\nconstrain q\nbasis e1 e2 e3 e4 e5\nbracket [e2,e3] = e1\nbracket [e5,e1] = (1+p) e1\n";
        let file = parse_lie(text).unwrap();
        let l = file.algebra;
        assert_eq!(l.dim(), 5);
        assert_eq!(l.constant(0, 4, 0), -(p() + Scalar::one()));
        assert_eq!(l.constraints(), &[Scalar::var("q")]);
        assert!(file.extension.is_none());
    }

    #[test]
    fn errors_carry_lines() {
        let e = parse_lie("dim 2\nbracket [e1,e3] = e1\n").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 2, .. }), "{e}");
        let e = parse_lie("dim 2\n\nbracket [e1,e2] = x e1\n").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 3, .. }), "{e}");
        assert!(parse_lie("dim 2\nfoo\n").is_err());
        assert!(parse_lie("dim 2\nbasis a b c\n").is_err());
    }

    #[test]
    fn round_trip() {
        let text = "dim 3\nparams p\nconstrain p - 1\nbracket [e1,e2] = p^2 e3 - 1/2 e1\nbracket [e2,e3] = (p - 1) e1\nextend psi e1 -> 2 e2 ; e3 -> -e1\nextend f = -e1* + p e3*\nextend s = s\n";
        let file = parse_lie(text).unwrap();
        let emitted = emit_lie(&file.algebra, file.extension.as_ref());
        let again = parse_lie(&emitted).unwrap();
        assert!(again.algebra.same_structure(&file.algebra));
        assert_eq!(again.algebra.constraints(), file.algebra.constraints());
        let (a, b) = (again.extension.unwrap(), file.extension.unwrap());
        assert_eq!(a.psi, b.psi);
        assert_eq!(a.f, b.f);
        assert_eq!(a.s, b.s);
        assert_eq!(emit_lie(&again.algebra, Some(&a)), emitted);
    }

    #[test]
    fn assignments() {
        let a = parse_assignment("p=1, q=-2/3").unwrap();
        assert_eq!(a["q"], Rational::new((-2).into(), 3.into()));
        assert!(parse_assignment("p").is_err());
        assert!(parse_assignment("p=x").is_err());
    }
}
