//! Fraction-free linear algebra over a [`Coefficient`] ring.
//!
//! Pivots must be certainly nonzero on the constrained parameter locus; when
//! the only candidate pivots in a column are polynomials that might vanish
//! there, elimination stops with [`Error::RankInstability`] carrying the
//! offending polynomial.

use crate::error::{Error, Result};
use crate::scalar::{Certainty, Coefficient};

pub type Vector<S> = Vec<S>;

pub fn zero_vector<S: Coefficient>(n: usize) -> Vector<S> {
    vec![S::zero(); n]
}

pub fn basis_vector<S: Coefficient>(n: usize, i: usize) -> Vector<S> {
    let mut v = zero_vector(n);
    v[i] = S::one();
    v
}

pub fn is_zero_vector<S: Coefficient>(v: &[S]) -> bool {
    v.iter().all(|x| x.is_zero())
}

pub fn scale<S: Coefficient>(c: &S, v: &[S]) -> Vector<S> {
    v.iter().map(|x| c.clone() * x.clone()).collect()
}

pub fn add<S: Coefficient>(a: &[S], b: &[S]) -> Vector<S> {
    a.iter().zip(b).map(|(x, y)| x.clone() + y.clone()).collect()
}

pub fn sub<S: Coefficient>(a: &[S], b: &[S]) -> Vector<S> {
    a.iter().zip(b).map(|(x, y)| x.clone() - y.clone()).collect()
}

pub fn dot<S: Coefficient>(a: &[S], b: &[S]) -> S {
    a.iter()
        .zip(b)
        .fold(S::zero(), |acc, (x, y)| acc + x.clone() * y.clone())
}

/// A vector known up to a nonzero denominator: the value is `numer / denom`.
///
/// Produced by solvers whose answer may involve rational functions of the
/// parameters. [`ScaledVector::simplify`] divides through when exact.
#[derive(Debug, Clone, PartialEq)]
pub struct ScaledVector<S> {
    pub numer: Vector<S>,
    pub denom: S,
}

impl<S: Coefficient> ScaledVector<S> {
    pub fn exact(v: Vector<S>) -> Self {
        ScaledVector {
            numer: v,
            denom: S::one(),
        }
    }

    pub fn simplify(self) -> Self {
        if self.denom.is_one() {
            return self;
        }
        let divided: Option<Vec<S>> = self.numer.iter().map(|x| x.exact_div(&self.denom)).collect();
        match divided {
            Some(v) => ScaledVector::exact(v),
            None => self,
        }
    }

    /// The plain vector when the denominator has been divided out.
    pub fn as_exact(&self) -> Option<&[S]> {
        if self.denom.is_one() {
            Some(&self.numer)
        } else {
            None
        }
    }
}

impl<S: Coefficient> std::fmt::Display for ScaledVector<S> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.numer.iter().map(|x| x.to_string()).collect();
        write!(f, "[{}]", parts.join(", "))?;
        if !self.denom.is_one() {
            write!(f, " / ({})", self.denom)?;
        }
        Ok(())
    }
}

/// Reduced row echelon form, fraction-free.
///
/// Each stored row has its pivot at `pivots[r]`, and every other row is zero
/// in that column. Over a field the pivots are normalised to one, which makes
/// the form canonical.
#[derive(Debug, Clone)]
pub struct Echelon<S> {
    pub cols: usize,
    pub rows: Vec<Vector<S>>,
    pub pivots: Vec<usize>,
}

fn pick_pivot<S: Coefficient>(
    rows: &[Vector<S>],
    start: usize,
    col: usize,
    constraints: &[S],
) -> Result<Option<usize>> {
    let mut best: Option<(usize, usize)> = None;
    let mut unknown: Option<usize> = None;
    for (i, row) in rows.iter().enumerate().skip(start) {
        let entry = &row[col];
        let rank_key = if entry.is_unit() {
            0
        } else {
            match entry.nonzero_under(constraints) {
                Certainty::Zero => continue,
                Certainty::NonZero => entry.to_scalar().as_polynomial().map_or(1, |p| 1 + p.num_terms()),
                Certainty::Unknown => {
                    unknown.get_or_insert(i);
                    continue;
                }
            }
        };
        if best.map_or(true, |(_, k)| rank_key < k) {
            best = Some((i, rank_key));
            if rank_key == 0 {
                break;
            }
        }
    }
    match (best, unknown) {
        (Some((i, _)), _) => Ok(Some(i)),
        (None, Some(i)) => Err(Error::RankInstability {
            pivot: rows[i][col].to_string(),
        }),
        (None, None) => Ok(None),
    }
}

/// Row reduce `rows` (each of length `cols`).
///
/// A column whose only candidate pivots may vanish on the constrained locus is
/// skipped and revisited once the other columns are reduced; the rank is only
/// reported unstable if such entries survive to the end.
pub fn echelon<S: Coefficient>(mut rows: Vec<Vector<S>>, cols: usize, constraints: &[S]) -> Result<Echelon<S>> {
    rows.retain(|r| !is_zero_vector(r));
    let mut pivots = Vec::new();
    let mut rank = 0;
    let mut progressed = true;
    while progressed && rank < rows.len() {
        progressed = false;
        let mut unstable = None;
        for col in 0..cols {
            if rank == rows.len() {
                break;
            }
            if pivots.contains(&col) {
                continue;
            }
            let pr = match pick_pivot(&rows, rank, col, constraints) {
                Ok(Some(pr)) => pr,
                Ok(None) => continue,
                Err(e) => {
                    unstable.get_or_insert(e);
                    continue;
                }
            };
            rows.swap(rank, pr);
            eliminate(&mut rows, rank, col);
            pivots.push(col);
            rank += 1;
            progressed = true;
        }
        rows.retain(|r| !is_zero_vector(r));
        if !progressed && rank < rows.len() {
            return Err(unstable.unwrap_or_else(|| Error::RankInstability {
                pivot: "unresolved".into(),
            }));
        }
    }
    rows.truncate(rank);
    let mut order: Vec<usize> = (0..rank).collect();
    order.sort_by_key(|&r| pivots[r]);
    let rows = order.iter().map(|&r| rows[r].clone()).collect();
    let pivots = order.iter().map(|&r| pivots[r]).collect();
    Ok(Echelon { cols, rows, pivots })
}

fn eliminate<S: Coefficient>(rows: &mut [Vector<S>], rank: usize, col: usize) {
    let pivot = rows[rank][col].clone();
    if !pivot.is_one() {
        let normalised: Option<Vec<S>> = rows[rank].iter().map(|x| x.exact_div(&pivot)).collect();
        if let Some(n) = normalised {
            rows[rank] = n;
        }
    }
    let prow = rows[rank].clone();
    let p = prow[col].clone();
    for (i, row) in rows.iter_mut().enumerate() {
        if i == rank || row[col].is_zero() {
            continue;
        }
        let factor = row[col].clone();
        let updated: Vec<S> = row
            .iter()
            .zip(&prow)
            .map(|(x, y)| p.clone() * x.clone() - factor.clone() * y.clone())
            .collect();
        *row = updated;
    }
}

impl<S: Coefficient> Echelon<S> {
    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Basis of `{x : M x = 0}` for the reduced matrix `M`.
    pub fn nullspace(&self) -> Vec<Vector<S>> {
        let free: Vec<usize> = (0..self.cols).filter(|c| !self.pivots.contains(c)).collect();
        let all_unit = self.rows.iter().zip(&self.pivots).all(|(r, &c)| r[c].is_one());
        free.iter()
            .map(|&j| {
                let mut v = zero_vector(self.cols);
                if all_unit {
                    v[j] = S::one();
                    for (row, &pc) in self.rows.iter().zip(&self.pivots) {
                        v[pc] = -row[j].clone();
                    }
                } else {
                    let pivots: Vec<S> = self.rows.iter().zip(&self.pivots).map(|(r, &c)| r[c].clone()).collect();
                    v[j] = pivots.iter().fold(S::one(), |a, p| a * p.clone());
                    for (r, (row, &pc)) in self.rows.iter().zip(&self.pivots).enumerate() {
                        let others = pivots
                            .iter()
                            .enumerate()
                            .filter(|(s, _)| *s != r)
                            .fold(S::one(), |a, (_, p)| a * p.clone());
                        v[pc] = -(row[j].clone() * others);
                    }
                }
                v
            })
            .collect()
    }
}

pub fn rank<S: Coefficient>(rows: &[Vector<S>], cols: usize, constraints: &[S]) -> Result<usize> {
    Ok(echelon(rows.to_vec(), cols, constraints)?.rank())
}

/// Kernel of the matrix whose rows are `rows`.
pub fn nullspace<S: Coefficient>(rows: Vec<Vector<S>>, cols: usize, constraints: &[S]) -> Result<Vec<Vector<S>>> {
    Ok(echelon(rows, cols, constraints)?.nullspace())
}

/// Solve `A x = b` for square invertible `A`, fraction-free.
pub fn solve<S: Coefficient>(a: &[Vector<S>], b: &[S], constraints: &[S]) -> Result<ScaledVector<S>> {
    let n = a.len();
    let rows: Vec<Vector<S>> = a
        .iter()
        .zip(b)
        .map(|(r, bi)| {
            let mut row = r.clone();
            row.push(bi.clone());
            row
        })
        .collect();
    let ech = echelon(rows, n + 1, constraints)?;
    if ech.pivots.len() < n || ech.pivots.iter().take(n).enumerate().any(|(i, &c)| i != c) {
        return Err(Error::Degenerate("singular linear system".into()));
    }
    let pivots: Vec<S> = (0..n).map(|i| ech.rows[i][i].clone()).collect();
    let denom = pivots.iter().fold(S::one(), |a, p| a * p.clone());
    let numer = (0..n)
        .map(|i| {
            let others = pivots
                .iter()
                .enumerate()
                .filter(|(s, _)| *s != i)
                .fold(S::one(), |a, (_, p)| a * p.clone());
            ech.rows[i][n].clone() * others
        })
        .collect();
    Ok(ScaledVector { numer, denom }.simplify())
}

/// Determinant by cofactor expansion with memoised minors (no division).
pub fn determinant<S: Coefficient>(m: &[Vector<S>]) -> S {
    let n = m.len();
    if n == 0 {
        return S::one();
    }
    assert!(n <= 20, "determinant: matrix too large for subset expansion");
    // minors[mask] = det of rows 0..popcount(mask) restricted to columns in mask
    let mut minors: Vec<Option<S>> = vec![None; 1 << n];
    minors[0] = Some(S::one());
    for mask in 1usize..(1 << n) {
        let row = mask.count_ones() as usize - 1;
        let mut acc = S::zero();
        for col in 0..n {
            if mask & (1 << col) == 0 {
                continue;
            }
            let entry = &m[row][col];
            if !entry.is_zero() {
                let sub = minors[mask & !(1 << col)].as_ref().expect("computed");
                if !sub.is_zero() {
                    let term = entry.clone() * sub.clone();
                    // sign of moving column `col` to the last position among `mask`
                    let after = (mask >> (col + 1)).count_ones() as usize;
                    acc = if after % 2 == 0 { acc + term } else { acc - term };
                }
            }
        }
        minors[mask] = Some(acc);
    }
    minors[(1 << n) - 1].take().expect("computed")
}

/// Linear subspace of `S^ambient`, stored by a reduced spanning basis.
#[derive(Debug, Clone)]
pub struct Subspace<S> {
    ambient: usize,
    basis: Vec<Vector<S>>,
}

impl<S: Coefficient> Subspace<S> {
    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Vec::new(),
        }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: (0..ambient).map(|i| basis_vector(ambient, i)).collect(),
        }
    }

    /// Span of `vectors`, reduced to a basis.
    pub fn span(ambient: usize, vectors: Vec<Vector<S>>, constraints: &[S]) -> Result<Self> {
        for v in &vectors {
            if v.len() != ambient {
                return Err(Error::DimensionMismatch {
                    expected: ambient,
                    found: v.len(),
                });
            }
        }
        let ech = echelon(vectors, ambient, constraints)?;
        Ok(Subspace {
            ambient,
            basis: ech.rows,
        })
    }

    /// Solution space of `rows · x = 0`.
    pub fn kernel(ambient: usize, rows: Vec<Vector<S>>, constraints: &[S]) -> Result<Self> {
        let null = nullspace(rows, ambient, constraints)?;
        Subspace::span(ambient, null, constraints)
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vector<S>] {
        &self.basis
    }

    pub fn contains(&self, v: &[S], constraints: &[S]) -> Result<bool> {
        if is_zero_vector(v) {
            return Ok(true);
        }
        let mut rows = self.basis.clone();
        rows.push(v.to_vec());
        Ok(rank(&rows, self.ambient, constraints)? == self.dim())
    }

    pub fn contains_subspace(&self, other: &Subspace<S>, constraints: &[S]) -> Result<bool> {
        let mut rows = self.basis.clone();
        rows.extend(other.basis.iter().cloned());
        Ok(rank(&rows, self.ambient, constraints)? == self.dim())
    }

    pub fn equals(&self, other: &Subspace<S>, constraints: &[S]) -> Result<bool> {
        Ok(self.dim() == other.dim() && self.contains_subspace(other, constraints)?)
    }

    pub fn sum(&self, other: &Subspace<S>, constraints: &[S]) -> Result<Subspace<S>> {
        let mut rows = self.basis.clone();
        rows.extend(other.basis.iter().cloned());
        Subspace::span(self.ambient, rows, constraints)
    }

    /// Coordinates of `v` in this subspace's basis, when `v` lies in it.
    pub fn coordinates(&self, v: &[S], constraints: &[S]) -> Result<Option<ScaledVector<S>>> {
        // Solve basis^T c = v through the kernel of [basis^T | -v].
        let k = self.dim();
        let rows: Vec<Vector<S>> = (0..self.ambient)
            .map(|i| {
                let mut row: Vec<S> = self.basis.iter().map(|b| b[i].clone()).collect();
                row.push(-v[i].clone());
                row
            })
            .collect();
        let null = nullspace(rows, k + 1, constraints)?;
        for n in null {
            if !n[k].is_zero() {
                let denom = n[k].clone();
                return Ok(Some(
                    ScaledVector {
                        numer: n[..k].to_vec(),
                        denom,
                    }
                    .simplify(),
                ));
            }
        }
        Ok(None)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{Rational, Scalar};
    use num_traits::{One, Zero};

    fn r(v: i64) -> Rational {
        Rational::from_integer(v.into())
    }

    #[test]
    fn rational_rank_and_kernel() {
        let rows = vec![vec![r(1), r(2), r(3)], vec![r(2), r(4), r(6)], vec![r(0), r(1), r(1)]];
        let ech = echelon(rows.clone(), 3, &[]).unwrap();
        assert_eq!(ech.rank(), 2);
        let null = ech.nullspace();
        assert_eq!(null.len(), 1);
        for row in &rows {
            assert!(dot(row, &null[0]).is_zero());
        }
    }

    #[test]
    fn polynomial_pivot_under_constraint() {
        let q = Scalar::var("q");
        let rows = vec![vec![q.clone(), Scalar::int(1)], vec![Scalar::zero(), Scalar::zero()]];
        assert_eq!(rank(&rows, 2, &[q.clone()]).unwrap(), 1);
        // without the constraint the unit in column two still fixes rank 1
        assert_eq!(rank(&rows, 2, &[]).unwrap(), 1);
        let rows = vec![vec![q.clone(), Scalar::zero()], vec![Scalar::zero(), Scalar::var("p")]];
        assert!(matches!(rank(&rows, 2, &[q.clone()]), Err(Error::RankInstability { .. })));
        assert_eq!(rank(&rows, 2, &[q, Scalar::var("p")]).unwrap(), 2);
    }

    #[test]
    fn symbolic_solve() {
        let p = Scalar::var("p");
        let a = vec![vec![p.clone(), Scalar::zero()], vec![Scalar::zero(), Scalar::int(2)]];
        let b = vec![Scalar::one(), Scalar::one()];
        let x = solve(&a, &b, &[p.clone()]).unwrap();
        // x = (1/p, 1/2)
        assert_eq!(x.numer[0].clone() * p.clone(), x.denom);
        assert_eq!(x.numer[1].clone() * Scalar::int(2), x.denom);
    }

    #[test]
    fn determinant_matches_hand_value() {
        let m = vec![vec![r(2), r(0), r(1)], vec![r(1), r(3), r(2)], vec![r(1), r(1), r(1)]];
        // 2(3-2) - 0 + 1(1-3) = 0
        assert_eq!(determinant(&m), r(0));
        let m = vec![vec![r(0), r(1)], vec![r(1), r(0)]];
        assert_eq!(determinant(&m), r(-1));
        let m = vec![vec![r(1), r(2), r(0)], vec![r(0), r(1), r(4)], vec![r(5), r(6), r(0)]];
        assert_eq!(determinant(&m), r(16));
    }

    #[test]
    fn subspace_equality_and_coordinates() {
        let a = Subspace::span(3, vec![vec![r(1), r(1), r(0)], vec![r(0), r(1), r(0)]], &[]).unwrap();
        let b = Subspace::span(3, vec![vec![r(1), r(0), r(0)], vec![r(0), r(2), r(0)]], &[]).unwrap();
        assert!(a.equals(&b, &[]).unwrap());
        assert!(!a.contains(&[r(0), r(0), r(1)], &[]).unwrap());
        let c = a.coordinates(&[r(3), r(5), r(0)], &[]).unwrap().unwrap();
        let c = c.as_exact().unwrap();
        let rebuilt = add(&scale(&c[0], &a.basis()[0]), &scale(&c[1], &a.basis()[1]));
        assert_eq!(rebuilt, vec![r(3), r(5), r(0)]);
    }
}
