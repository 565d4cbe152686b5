//! Dense matrices over one semifield instance, permutation-census
//! determinants and monomial (invertible) matrices.

use std::fmt;

use num::BigRational;
use rayon::prelude::*;

use crate::assignment::min_cost_assignment;
use crate::error::{Error, Result};
use crate::semifield::{Mag, Semifield, SemifieldValue};

/// Column vectors are plain value sequences throughout the crate.
pub type Vector = Vec<SemifieldValue>;

/// Full permutation census is capped here; 9! = 362880 weights.
pub const DET_ENUMERATION_LIMIT: usize = 9;
/// The assignment-based determinant value handles larger inputs.
pub const DET_FAST_LIMIT: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    semifield: Semifield,
    rows: usize,
    cols: usize,
    entries: Vec<SemifieldValue>,
}

impl Matrix {
    /// Builds a matrix from row-major entries, checking the count and that
    /// every entry belongs to `semifield`.
    pub fn new(
        semifield: Semifield,
        rows: usize,
        cols: usize,
        entries: Vec<SemifieldValue>,
    ) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::Construction(format!(
                "{}x{} matrix needs {} entries, got {}",
                rows,
                cols,
                rows * cols,
                entries.len()
            )));
        }
        for e in &entries {
            if e.semifield() != semifield {
                return Err(Error::DomainMismatch {
                    left: semifield.to_string(),
                    right: e.semifield().to_string(),
                });
            }
        }
        Ok(Matrix {
            semifield,
            rows,
            cols,
            entries,
        })
    }

    /// Builds a matrix from rows; the instance is inferred from the first
    /// entry, so the matrix must be nonempty.
    pub fn from_rows(rows: Vec<Vector>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if r == 0 || c == 0 {
            return Err(Error::Construction(
                "from_rows needs at least one entry; use Matrix::new for empty shapes".into(),
            ));
        }
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::Construction("ragged rows".into()));
        }
        let semifield = rows[0][0].semifield();
        Matrix::new(semifield, r, c, rows.into_iter().flatten().collect())
    }

    /// Builds the matrix whose columns are the given family of vectors.
    pub fn from_cols(semifield: Semifield, dim: usize, cols: &[Vector]) -> Result<Self> {
        for v in cols {
            if v.len() != dim {
                return Err(Error::LengthMismatch {
                    left: v.len(),
                    right: dim,
                });
            }
        }
        let mut entries = Vec::with_capacity(dim * cols.len());
        for i in 0..dim {
            for v in cols {
                entries.push(v[i].clone());
            }
        }
        Matrix::new(semifield, dim, cols.len(), entries)
    }

    pub fn zero(semifield: Semifield, rows: usize, cols: usize) -> Self {
        let z = semifield.zero();
        Matrix {
            semifield,
            rows,
            cols,
            entries: vec![z; rows * cols],
        }
    }

    pub fn identity(semifield: Semifield, n: usize) -> Self {
        let mut m = Matrix::zero(semifield.clone(), n, n);
        let one = semifield.one();
        for i in 0..n {
            m.entries[i * n + i] = one.clone();
        }
        m
    }

    pub fn semifield(&self) -> &Semifield {
        &self.semifield
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &SemifieldValue {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: SemifieldValue) -> Result<()> {
        if v.semifield() != self.semifield {
            return Err(Error::DomainMismatch {
                left: self.semifield.to_string(),
                right: v.semifield().to_string(),
            });
        }
        self.entries[i * self.cols + j] = v;
        Ok(())
    }

    pub fn row_slice(&self, i: usize) -> &[SemifieldValue] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn col(&self, j: usize) -> Vector {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vector> {
        (0..self.cols).map(|j| self.col(j)).collect()
    }

    pub fn is_zero_matrix(&self) -> bool {
        self.entries.iter().all(SemifieldValue::is_zero)
    }

    pub fn transpose(&self) -> Matrix {
        let mut entries = Vec::with_capacity(self.entries.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                entries.push(self.get(i, j).clone());
            }
        }
        Matrix {
            semifield: self.semifield.clone(),
            rows: self.cols,
            cols: self.rows,
            entries,
        }
    }

    /// The submatrix with the given row and column index sets, in order.
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Matrix {
        let entries = rows
            .iter()
            .flat_map(|&i| cols.iter().map(move |&j| self.get(i, j).clone()))
            .collect();
        Matrix {
            semifield: self.semifield.clone(),
            rows: rows.len(),
            cols: cols.len(),
            entries,
        }
    }

    pub(crate) fn check_vec_compatible(&self, x: &[SemifieldValue]) -> Result<()> {
        if x.len() != self.cols {
            return Err(Error::DimensionMismatch {
                op: "matrix-vector product",
                left: (self.rows, self.cols),
                right: (x.len(), 1),
            });
        }
        for v in x {
            if v.semifield() != self.semifield {
                return Err(Error::DomainMismatch {
                    left: self.semifield.to_string(),
                    right: v.semifield().to_string(),
                });
            }
        }
        Ok(())
    }

    /// Entrywise sum-of-products matrix product.
    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch {
                op: "matrix product",
                left: (self.rows, self.cols),
                right: (other.rows, other.cols),
            });
        }
        if self.semifield != other.semifield {
            return Err(Error::DomainMismatch {
                left: self.semifield.to_string(),
                right: other.semifield.to_string(),
            });
        }
        let mut entries = Vec::with_capacity(self.rows * other.cols);
        for i in 0..self.rows {
            for k in 0..other.cols {
                let mut acc = self.semifield.zero();
                for j in 0..self.cols {
                    acc = acc.add(&self.get(i, j).mul(other.get(j, k))?)?;
                }
                entries.push(acc);
            }
        }
        Matrix::new(self.semifield.clone(), self.rows, other.cols, entries)
    }

    pub fn mul_vec(&self, x: &[SemifieldValue]) -> Result<Vector> {
        self.check_vec_compatible(x)?;
        let mut out = Vec::with_capacity(self.rows);
        for i in 0..self.rows {
            let mut acc = self.semifield.zero();
            for j in 0..self.cols {
                acc = acc.add(&self.get(i, j).mul(&x[j])?)?;
            }
            out.push(acc);
        }
        Ok(out)
    }

    /// Entrywise addition.
    pub fn add(&self, other: &Matrix) -> Result<Matrix> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimensionMismatch {
                op: "matrix sum",
                left: (self.rows, self.cols),
                right: (other.rows, other.cols),
            });
        }
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a.add(b))
            .collect::<Result<_>>()?;
        Matrix::new(self.semifield.clone(), self.rows, self.cols, entries)
    }

    /// Entrywise natural-order dominance: `self >= other` everywhere.
    pub fn dominates(&self, other: &Matrix) -> Result<bool> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimensionMismatch {
                op: "entrywise comparison",
                left: (self.rows, self.cols),
                right: (other.rows, other.cols),
            });
        }
        for (a, b) in self.entries.iter().zip(&other.entries) {
            if !b.natural_leq(a)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Supports are entrywise disjoint.
    pub fn orthogonal_to(&self, other: &Matrix) -> Result<bool> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimensionMismatch {
                op: "orthogonality",
                left: (self.rows, self.cols),
                right: (other.rows, other.cols),
            });
        }
        Ok(self
            .entries
            .iter()
            .zip(&other.entries)
            .all(|(a, b)| a.is_zero() || b.is_zero()))
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            write!(f, "[")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Parity {
    Even,
    Odd,
}

/// A permutation of {0..n-1} with its parity, taken from the cycle
/// structure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Permutation {
    image: Vec<usize>,
    parity: Parity,
}

impl Permutation {
    pub fn new(image: Vec<usize>) -> Result<Self> {
        let n = image.len();
        let mut seen = vec![false; n];
        for &v in &image {
            if v >= n || seen[v] {
                return Err(Error::Construction("image is not a bijection".into()));
            }
            seen[v] = true;
        }
        let parity = parity_from_cycles(&image);
        Ok(Permutation { image, parity })
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            image: (0..n).collect(),
            parity: Parity::Even,
        }
    }

    pub fn image(&self) -> &[usize] {
        &self.image
    }

    pub fn apply(&self, i: usize) -> usize {
        self.image[i]
    }

    pub fn parity(&self) -> Parity {
        self.parity
    }
}

fn parity_from_cycles(image: &[usize]) -> Parity {
    let n = image.len();
    let mut visited = vec![false; n];
    let mut cycles = 0usize;
    for start in 0..n {
        if visited[start] {
            continue;
        }
        cycles += 1;
        let mut cur = start;
        while !visited[cur] {
            visited[cur] = true;
            cur = image[cur];
        }
    }
    if (n - cycles) % 2 == 0 {
        Parity::Even
    } else {
        Parity::Odd
    }
}

/// Determinant census of a square matrix: the optimum over all
/// permutations, split by parity, with every permutation attaining the
/// respective nonzero optimum listed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DetReport {
    pub det: SemifieldValue,
    pub det_plus: SemifieldValue,
    pub det_minus: SemifieldValue,
    pub optimal_even: Vec<Permutation>,
    pub optimal_odd: Vec<Permutation>,
}

impl DetReport {
    /// Permutations attaining the global determinant value. Empty when the
    /// determinant is zero.
    pub fn global_optima(&self) -> Vec<&Permutation> {
        let mut out = Vec::new();
        if !self.det.is_zero() {
            if self.det_plus == self.det {
                out.extend(self.optimal_even.iter());
            }
            if self.det_minus == self.det {
                out.extend(self.optimal_odd.iter());
            }
        }
        out
    }
}

struct CensusAcc {
    det_plus: SemifieldValue,
    det_minus: SemifieldValue,
    optimal_even: Vec<Permutation>,
    optimal_odd: Vec<Permutation>,
}

impl CensusAcc {
    fn new(semifield: &Semifield) -> Self {
        CensusAcc {
            det_plus: semifield.zero(),
            det_minus: semifield.zero(),
            optimal_even: Vec::new(),
            optimal_odd: Vec::new(),
        }
    }

    fn take(&mut self, perm: Permutation, weight: SemifieldValue) -> Result<()> {
        if weight.is_zero() {
            return Ok(());
        }
        let (best, list) = match perm.parity() {
            Parity::Even => (&mut self.det_plus, &mut self.optimal_even),
            Parity::Odd => (&mut self.det_minus, &mut self.optimal_odd),
        };
        match weight.natural_cmp(best)? {
            std::cmp::Ordering::Greater => {
                *best = weight;
                list.clear();
                list.push(perm);
            }
            std::cmp::Ordering::Equal => list.push(perm),
            std::cmp::Ordering::Less => {}
        }
        Ok(())
    }

    fn merge(mut self, other: CensusAcc) -> Result<CensusAcc> {
        use std::cmp::Ordering;
        match other.det_plus.natural_cmp(&self.det_plus)? {
            Ordering::Greater => {
                self.det_plus = other.det_plus;
                self.optimal_even = other.optimal_even;
            }
            Ordering::Equal if !other.det_plus.is_zero() => {
                self.optimal_even.extend(other.optimal_even);
            }
            _ => {}
        }
        match other.det_minus.natural_cmp(&self.det_minus)? {
            Ordering::Greater => {
                self.det_minus = other.det_minus;
                self.optimal_odd = other.optimal_odd;
            }
            Ordering::Equal if !other.det_minus.is_zero() => {
                self.optimal_odd.extend(other.optimal_odd);
            }
            _ => {}
        }
        Ok(self)
    }

    fn finish(self) -> Result<DetReport> {
        let det = self.det_plus.add(&self.det_minus)?;
        Ok(DetReport {
            det,
            det_plus: self.det_plus,
            det_minus: self.det_minus,
            optimal_even: self.optimal_even,
            optimal_odd: self.optimal_odd,
        })
    }
}

fn perm_weight(a: &Matrix, image: &[usize]) -> Result<SemifieldValue> {
    let mut w = a.semifield().one();
    for (i, &j) in image.iter().enumerate() {
        if a.get(i, j).is_zero() {
            return Ok(a.semifield().zero());
        }
        w = w.mul(a.get(i, j))?;
    }
    Ok(w)
}

fn census_for_prefix(a: &Matrix, first: Option<usize>) -> Result<CensusAcc> {
    let n = a.rows();
    let mut acc = CensusAcc::new(a.semifield());
    let mut image = Vec::with_capacity(n);
    let mut used = vec![false; n];
    if let Some(j) = first {
        image.push(j);
        used[j] = true;
    }
    fn rec(
        a: &Matrix,
        acc: &mut CensusAcc,
        image: &mut Vec<usize>,
        used: &mut Vec<bool>,
    ) -> Result<()> {
        let n = a.rows();
        if image.len() == n {
            let weight = perm_weight(a, image)?;
            if !weight.is_zero() {
                acc.take(Permutation::new(image.clone()).expect("bijection"), weight)?;
            }
            return Ok(());
        }
        for j in 0..n {
            if !used[j] {
                used[j] = true;
                image.push(j);
                rec(a, acc, image, used)?;
                image.pop();
                used[j] = false;
            }
        }
        Ok(())
    }
    rec(a, &mut acc, &mut image, &mut used)?;
    Ok(acc)
}

fn det_report_impl(a: &Matrix, parallel: bool) -> Result<DetReport> {
    if !a.is_square() {
        return Err(Error::NotSquare {
            rows: a.rows(),
            cols: a.cols(),
        });
    }
    let n = a.rows();
    if n > DET_ENUMERATION_LIMIT {
        return Err(Error::SizeLimit {
            op: "determinant census (use det_value_fast for the value alone)",
            size: n,
            limit: DET_ENUMERATION_LIMIT,
        });
    }
    if n == 0 {
        // The empty permutation is even with weight one.
        let mut acc = CensusAcc::new(a.semifield());
        acc.take(Permutation::identity(0), a.semifield().one())?;
        return acc.finish();
    }
    let partials: Vec<Result<CensusAcc>> = if parallel && n >= 4 {
        (0..n)
            .into_par_iter()
            .map(|j| census_for_prefix(a, Some(j)))
            .collect()
    } else {
        (0..n).map(|j| census_for_prefix(a, Some(j))).collect()
    };
    // Partitions are merged in first-column order, so the census lists come
    // out in lexicographic order regardless of scheduling.
    let mut acc = CensusAcc::new(a.semifield());
    for p in partials {
        acc = acc.merge(p?)?;
    }
    acc.finish()
}

/// Full permutation census of the determinant.
pub fn det_report(a: &Matrix) -> Result<DetReport> {
    det_report_impl(a, false)
}

/// Same census, with the enumeration partitioned across threads.
pub fn det_report_parallel(a: &Matrix) -> Result<DetReport> {
    det_report_impl(a, true)
}

/// Determinant value via optimal assignment, for the numeric instances.
/// Zero entries are forbidden edges; when every permutation hits one the
/// value is zero. Falls back to the census for non-numeric instances.
pub fn det_value_fast(a: &Matrix) -> Result<SemifieldValue> {
    if !a.is_square() {
        return Err(Error::NotSquare {
            rows: a.rows(),
            cols: a.cols(),
        });
    }
    let n = a.rows();
    if n > DET_FAST_LIMIT {
        return Err(Error::SizeLimit {
            op: "assignment determinant",
            size: n,
            limit: DET_FAST_LIMIT,
        });
    }
    let maximize = match a.semifield() {
        Semifield::MaxPlus => true,
        Semifield::MinPlus => false,
        // No numeric fast path; the census bound applies.
        Semifield::F1 | Semifield::OrderedGroup(_) => return Ok(det_report(a)?.det),
    };
    let cost: Vec<Vec<Option<BigRational>>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| match a.get(i, j) {
                    SemifieldValue::MaxPlus(Mag::Finite(r)) => {
                        Some(if maximize { -r } else { r.clone() })
                    }
                    SemifieldValue::MinPlus(Mag::Finite(r)) => Some(r.clone()),
                    _ => None,
                })
                .collect()
        })
        .collect();
    match min_cost_assignment(&cost) {
        None => Ok(a.semifield().zero()),
        Some(asg) => {
            let mut w = a.semifield().one();
            for (i, &j) in asg.iter().enumerate() {
                w = w.mul(a.get(i, j))?;
            }
            Ok(w)
        }
    }
}

/// Exactly one nonzero entry in every row and every column. Non-square
/// matrices are never monomial.
pub fn is_monomial(a: &Matrix) -> bool {
    if !a.is_square() {
        return false;
    }
    let n = a.rows();
    let mut col_counts = vec![0usize; n];
    for i in 0..n {
        let mut row_count = 0;
        for j in 0..n {
            if !a.get(i, j).is_zero() {
                row_count += 1;
                col_counts[j] += 1;
            }
        }
        if row_count != 1 {
            return false;
        }
    }
    col_counts.iter().all(|&c| c == 1)
}

/// Inverse of a monomial matrix: the transposed support pattern with
/// inverted entries, so that the product is the identity.
pub fn monomial_inverse(a: &Matrix) -> Result<Matrix> {
    if !a.is_square() {
        return Err(Error::NotSquare {
            rows: a.rows(),
            cols: a.cols(),
        });
    }
    if !is_monomial(a) {
        return Err(Error::NotMonomial);
    }
    let n = a.rows();
    let mut inv = Matrix::zero(a.semifield().clone(), n, n);
    for i in 0..n {
        for j in 0..n {
            if !a.get(i, j).is_zero() {
                inv.set(j, i, a.get(i, j).inv()?)?;
            }
        }
    }
    Ok(inv)
}

/// Looks for a monomial matrix dominated entrywise by `a`, via a perfect
/// matching on the nonzero-support bipartite graph. Some matching exists
/// iff the determinant is nonzero.
pub fn dominates_monomial(a: &Matrix) -> Result<Option<Matrix>> {
    if !a.is_square() {
        return Err(Error::NotSquare {
            rows: a.rows(),
            cols: a.cols(),
        });
    }
    let n = a.rows();
    match support_matching(a) {
        None => Ok(None),
        Some(row_to_col) => {
            let mut s = Matrix::zero(a.semifield().clone(), n, n);
            for (i, &j) in row_to_col.iter().enumerate() {
                s.set(i, j, a.get(i, j).clone())?;
            }
            Ok(Some(s))
        }
    }
}

/// Kuhn augmenting-path matching on the support graph; deterministic
/// because rows and columns are scanned in index order.
fn support_matching(a: &Matrix) -> Option<Vec<usize>> {
    let n = a.rows();
    let mut col_to_row = vec![usize::MAX; n];
    fn try_row(
        a: &Matrix,
        i: usize,
        visited: &mut [bool],
        col_to_row: &mut [usize],
    ) -> bool {
        for j in 0..a.cols() {
            if !visited[j] && !a.get(i, j).is_zero() {
                visited[j] = true;
                if col_to_row[j] == usize::MAX
                    || try_row(a, col_to_row[j], visited, col_to_row)
                {
                    col_to_row[j] = i;
                    return true;
                }
            }
        }
        false
    }
    for i in 0..n {
        let mut visited = vec![false; n];
        if !try_row(a, i, &mut visited, &mut col_to_row) {
            return None;
        }
    }
    let mut row_to_col = vec![usize::MAX; n];
    for (j, &i) in col_to_row.iter().enumerate() {
        row_to_col[i] = j;
    }
    Some(row_to_col)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semifield::int;

    fn mp(n: i64) -> SemifieldValue {
        SemifieldValue::max_plus_int(n)
    }

    fn zero() -> SemifieldValue {
        Semifield::MaxPlus.zero()
    }

    fn m(rows: Vec<Vector>) -> Matrix {
        Matrix::from_rows(rows).unwrap()
    }

    fn g3() -> Matrix {
        m(vec![
            vec![mp(0), mp(0), zero()],
            vec![zero(), mp(0), mp(0)],
            vec![mp(0), zero(), mp(0)],
        ])
    }

    #[test]
    fn identity_acts_trivially() {
        let i2 = Matrix::identity(Semifield::MaxPlus, 2);
        let x = vec![mp(3), mp(7)];
        assert_eq!(i2.mul_vec(&x).unwrap(), x);
    }

    #[test]
    fn ones_matrix_takes_row_maxima() {
        let a = m(vec![vec![mp(0), mp(0)], vec![mp(0), mp(0)]]);
        assert_eq!(a.mul_vec(&[mp(3), mp(7)]).unwrap(), vec![mp(7), mp(7)]);
    }

    #[test]
    fn transpose_is_an_involution() {
        let a = m(vec![vec![mp(1), mp(2), mp(3)], vec![mp(4), zero(), mp(6)]]);
        assert_eq!(a.transpose().transpose(), a);
        assert_eq!(a.transpose().get(2, 1), &mp(6));
    }

    #[test]
    fn det_census_identity() {
        let r = det_report(&Matrix::identity(Semifield::MaxPlus, 2)).unwrap();
        assert_eq!(r.det, mp(0));
        assert_eq!(r.det_plus, mp(0));
        assert_eq!(r.det_minus, zero());
        assert_eq!(r.optimal_even.len(), 1);
        assert_eq!(r.optimal_even[0].image(), &[0, 1]);
        assert!(r.optimal_odd.is_empty());
    }

    #[test]
    fn det_census_all_ones() {
        let a = m(vec![vec![mp(0), mp(0)], vec![mp(0), mp(0)]]);
        let r = det_report(&a).unwrap();
        assert_eq!(r.det_plus, mp(0));
        assert_eq!(r.det_minus, mp(0));
        assert_eq!(r.optimal_even.len(), 1);
        assert_eq!(r.optimal_odd.len(), 1);
        assert_eq!(r.global_optima().len(), 2);
    }

    #[test]
    fn det_census_dominant_diagonal() {
        let a = m(vec![vec![mp(2), mp(1)], vec![mp(1), mp(2)]]);
        let r = det_report(&a).unwrap();
        assert_eq!(r.det, mp(4));
        assert_eq!(r.det_plus, mp(4));
        assert_eq!(r.det_minus, mp(2));
        assert_eq!(r.optimal_even[0].image(), &[0, 1]);
        assert_eq!(r.global_optima().len(), 1);
    }

    #[test]
    fn det_census_tie_across_parities() {
        let r = det_report(&g3()).unwrap();
        assert_eq!(r.det, mp(0));
        assert_eq!(r.det_plus, mp(0));
        assert_eq!(r.det_minus, zero());
        // identity and the 3-cycle both attain the optimum
        assert_eq!(r.optimal_even.len(), 2);
        assert!(r.optimal_odd.is_empty());
    }

    #[test]
    fn det_transpose_invariance() {
        for a in [
            g3(),
            m(vec![vec![mp(2), mp(1)], vec![mp(1), mp(2)]]),
            m(vec![vec![mp(1), zero()], vec![mp(5), mp(-3)]]),
        ] {
            let r1 = det_report(&a).unwrap();
            let r2 = det_report(&a.transpose()).unwrap();
            assert_eq!(r1.det, r2.det);
            assert_eq!(r1.det_plus, r2.det_plus);
            assert_eq!(r1.det_minus, r2.det_minus);
        }
    }

    #[test]
    fn parallel_census_matches_sequential() {
        let a = m(vec![
            vec![mp(1), mp(4), mp(0), mp(2)],
            vec![mp(3), zero(), mp(1), mp(1)],
            vec![mp(0), mp(2), mp(2), zero()],
            vec![mp(5), mp(1), mp(0), mp(3)],
        ]);
        assert_eq!(det_report(&a).unwrap(), det_report_parallel(&a).unwrap());
    }

    #[test]
    fn fast_det_examples() {
        let a = m(vec![vec![mp(2), mp(1)], vec![mp(1), mp(2)]]);
        assert_eq!(det_value_fast(&a).unwrap(), mp(4));
        let with_zero_row = m(vec![vec![zero(), zero()], vec![mp(1), mp(2)]]);
        assert_eq!(det_value_fast(&with_zero_row).unwrap(), zero());
        assert_eq!(det_value_fast(&g3()).unwrap(), mp(0));
    }

    #[test]
    fn fast_det_min_plus_minimizes() {
        let a = m(vec![
            vec![SemifieldValue::min_plus_int(2), SemifieldValue::min_plus_int(1)],
            vec![SemifieldValue::min_plus_int(1), SemifieldValue::min_plus_int(2)],
        ]);
        assert_eq!(det_value_fast(&a).unwrap(), SemifieldValue::min_plus_int(2));
        assert_eq!(det_report(&a).unwrap().det, SemifieldValue::min_plus_int(2));
    }

    #[test]
    fn monomial_matrices() {
        let d = m(vec![vec![mp(3), zero()], vec![zero(), mp(5)]]);
        assert!(is_monomial(&d));
        let inv = monomial_inverse(&d).unwrap();
        assert_eq!(inv, m(vec![vec![mp(-3), zero()], vec![zero(), mp(-5)]]));
        assert_eq!(d.mul(&inv).unwrap(), Matrix::identity(Semifield::MaxPlus, 2));

        let not = m(vec![vec![mp(0), mp(0)], vec![zero(), mp(0)]]);
        assert!(!is_monomial(&not));
        assert_eq!(monomial_inverse(&not), Err(Error::NotMonomial));

        let perm = m(vec![
            vec![zero(), mp(2), zero()],
            vec![zero(), zero(), mp(-1)],
            vec![mp(7), zero(), zero()],
        ]);
        let pinv = monomial_inverse(&perm).unwrap();
        assert_eq!(
            perm.mul(&pinv).unwrap(),
            Matrix::identity(Semifield::MaxPlus, 3)
        );
    }

    #[test]
    fn monomial_domination() {
        let a = m(vec![vec![mp(2), mp(1)], vec![mp(1), mp(2)]]);
        let s = dominates_monomial(&a).unwrap().unwrap();
        assert!(is_monomial(&s));
        assert!(a.dominates(&s).unwrap());

        let zero_row = m(vec![vec![zero(), zero()], vec![mp(1), mp(2)]]);
        assert_eq!(dominates_monomial(&zero_row).unwrap(), None);

        let i3 = Matrix::identity(Semifield::MaxPlus, 3);
        let s3 = dominates_monomial(&i3).unwrap().unwrap();
        assert_eq!(s3, i3);
    }

    #[test]
    fn permutation_parity_from_cycles() {
        assert_eq!(Permutation::new(vec![0, 1, 2]).unwrap().parity(), Parity::Even);
        assert_eq!(Permutation::new(vec![1, 0, 2]).unwrap().parity(), Parity::Odd);
        assert_eq!(Permutation::new(vec![1, 2, 0]).unwrap().parity(), Parity::Even);
        assert_eq!(Permutation::new(vec![3, 2, 1, 0]).unwrap().parity(), Parity::Even);
        assert!(Permutation::new(vec![0, 0]).is_err());
    }

    #[test]
    fn rational_entries_stay_exact() {
        let a = m(vec![
            vec![
                SemifieldValue::max_plus(crate::semifield::rat(1, 3)),
                SemifieldValue::max_plus(crate::semifield::rat(1, 2)),
            ],
            vec![
                SemifieldValue::max_plus(crate::semifield::rat(1, 2)),
                SemifieldValue::max_plus(crate::semifield::rat(1, 3)),
            ],
        ]);
        let r = det_report(&a).unwrap();
        assert_eq!(r.det, SemifieldValue::max_plus(int(1)));
        assert_eq!(r.det_plus, SemifieldValue::max_plus(crate::semifield::rat(2, 3)));
        assert_eq!(det_value_fast(&a).unwrap(), r.det);
    }
}
