//! Brute-force definitional oracles.
//!
//! These enumerate the raw definitions — orthogonal decompositions and
//! candidate vectors from a finite value pool — and are used to validate
//! the determinant-criterion predicates on small instances. They do not
//! call the predicates they validate. Sweeps that complete without a find
//! return `None`; sweeps that cannot be run within the budget fail loudly.
//!
//! Numeric instances are scaled to integer arithmetic internally: every
//! quantity compared is a sum of a fixed number of entries, so clearing
//! denominators by a common factor preserves all comparisons.

use num::{BigInt, BigRational, Integer, One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::matrix::{Matrix, Vector};
use crate::poly::UnivariatePoly;
use crate::semifield::{Mag, Semifield, SemifieldValue};

/// Caps for the definitional sweeps. The value pool is the set of entry
/// quotients closed under one multiplication step, plus zero and one;
/// ties between row forms happen at such values on desk-scale instances.
#[derive(Debug, Clone)]
pub struct SearchBudget {
    /// Largest column count the sweeps accept.
    pub max_dimension: usize,
    /// Largest admissible value pool.
    pub max_pool: usize,
    /// Cap on enumerated candidate vectors / pairs.
    pub max_candidates: u64,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget {
            max_dimension: 4,
            max_pool: 128,
            max_candidates: 4_000_000,
        }
    }
}

impl SearchBudget {
    pub fn with_dimension(max_dimension: usize) -> Self {
        SearchBudget {
            max_dimension,
            ..SearchBudget::default()
        }
    }
}

/// A verified orthogonal-split witness: `a = left + right` with disjoint
/// supports and `left.x = right.x` for the nonzero vector `x`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitWitness {
    pub x: Vector,
    pub left: Matrix,
    pub right: Matrix,
}

/// Max-plus-over-integers image of a matrix; `None` is the zero.
struct IntMat {
    entries: Vec<Vec<Option<i64>>>,
}

/// Maps scaled integers back into the original instance.
struct ValueMapper {
    semifield: Semifield,
    scale: BigInt,
    negated: bool,
}

impl ValueMapper {
    fn to_value(&self, v: Option<i64>) -> SemifieldValue {
        match v {
            None => self.semifield.zero(),
            Some(n) => {
                let num = if self.negated { -n } else { n };
                let r = BigRational::new(BigInt::from(num), self.scale.clone());
                match self.semifield {
                    Semifield::MaxPlus => SemifieldValue::max_plus(r),
                    Semifield::MinPlus => SemifieldValue::min_plus(r),
                    Semifield::F1 => SemifieldValue::f1(true),
                    Semifield::OrderedGroup(_) => unreachable!("no integer path"),
                }
            }
        }
    }
}

const SCALE_MAGNITUDE_LIMIT: i64 = 1 << 40;

/// Scales a numeric matrix to integers. Max-plus keeps magnitudes,
/// min-plus negates them (its optimum is a minimum), the boolean
/// semifield maps one to the integer zero.
fn to_int_matrix(a: &Matrix) -> Result<(IntMat, ValueMapper)> {
    let negated = match a.semifield() {
        Semifield::MaxPlus | Semifield::F1 => false,
        Semifield::MinPlus => true,
        Semifield::OrderedGroup(_) => {
            return Err(Error::UnsupportedSemifield(
                "definitional oracles run on max-plus, min-plus and the boolean semifield".into(),
            ))
        }
    };
    let mut scale = BigInt::one();
    for i in 0..a.rows() {
        for j in 0..a.cols() {
            if let SemifieldValue::MaxPlus(Mag::Finite(r)) | SemifieldValue::MinPlus(Mag::Finite(r)) =
                a.get(i, j)
            {
                scale = scale.lcm(r.denom());
            }
        }
    }
    let mapper = ValueMapper {
        semifield: a.semifield().clone(),
        scale: scale.clone(),
        negated,
    };
    let mut entries = Vec::with_capacity(a.rows());
    for i in 0..a.rows() {
        let mut row = Vec::with_capacity(a.cols());
        for j in 0..a.cols() {
            let v = match a.get(i, j) {
                SemifieldValue::MaxPlus(Mag::Bottom) | SemifieldValue::MinPlus(Mag::Bottom) => None,
                SemifieldValue::F1(b) => b.then_some(0i64),
                SemifieldValue::MaxPlus(Mag::Finite(r)) | SemifieldValue::MinPlus(Mag::Finite(r)) => {
                    let scaled = (r * &scale).to_integer();
                    let scaled = if negated { -scaled } else { scaled };
                    if scaled.abs() > BigInt::from(SCALE_MAGNITUDE_LIMIT) {
                        return Err(Error::BudgetExhausted(
                            "entry magnitudes too large for the integer sweep".into(),
                        ));
                    }
                    Some(scaled.to_i64().expect("bounded above"))
                }
                SemifieldValue::OrderedGroup(_) => unreachable!("rejected above"),
            };
            row.push(v);
        }
        entries.push(row);
    }
    Ok((
        IntMat {
            cols: a.cols(),
            entries,
        },
        mapper,
    ))
}

/// Entry quotients closed under one multiplication step, plus zero and
/// one, in integer form: differences, sums of two differences, 0, None.
fn int_pool(m: &IntMat, budget: &SearchBudget) -> Result<Vec<Option<i64>>> {
    let finite: Vec<i64> = m.entries.iter().flatten().copied().flatten().collect();
    let mut diffs: Vec<i64> = vec![0];
    for &a in &finite {
        for &b in &finite {
            diffs.push(a - b);
        }
    }
    diffs.sort_unstable();
    diffs.dedup();
    let mut values: Vec<i64> = diffs.clone();
    for &a in &diffs {
        for &b in &diffs {
            values.push(a + b);
        }
    }
    values.sort_unstable();
    values.dedup();
    if values.len() + 1 > budget.max_pool {
        return Err(Error::BudgetExhausted(format!(
            "value pool of size {} exceeds the cap {}",
            values.len() + 1,
            budget.max_pool
        )));
    }
    let mut pool = vec![None];
    pool.extend(values.into_iter().map(Some));
    Ok(pool)
}

/// The candidate-value pool for a matrix, in semifield form. This is the
/// grid the witness searches quote in their bounds.
pub fn value_pool(a: &Matrix, budget: &SearchBudget) -> Result<Vec<SemifieldValue>> {
    let (im, mapper) = to_int_matrix(a)?;
    let pool = int_pool(&im, budget)?;
    Ok(pool.into_iter().map(|v| mapper.to_value(v)).collect())
}

fn int_term(a: Option<i64>, x: Option<i64>) -> Option<i64> {
    match (a, x) {
        (Some(a), Some(x)) => Some(a + x),
        _ => None,
    }
}

fn max_opt(a: Option<i64>, b: Option<i64>) -> Option<i64> {
    match (a, b) {
        (Some(a), Some(b)) => Some(a.max(b)),
        (Some(a), None) => Some(a),
        (None, b) => b,
    }
}

/// Looks for a disjoint bipartition of the row's nonzero entries whose two
/// sides have equal products against `x`. Returns the chosen left-side
/// column mask.
fn row_split(row: &[Option<i64>], x: &[Option<i64>]) -> Option<Vec<bool>> {
    let support: Vec<usize> = (0..row.len()).filter(|&j| row[j].is_some()).collect();
    let terms: Vec<Option<i64>> = (0..row.len()).map(|j| int_term(row[j], x[j])).collect();
    for mask in 0..(1u32 << support.len()) {
        let mut side1: Option<i64> = None;
        let mut side2: Option<i64> = None;
        for (bit, &j) in support.iter().enumerate() {
            if mask & (1 << bit) != 0 {
                side1 = max_opt(side1, terms[j]);
            } else {
                side2 = max_opt(side2, terms[j]);
            }
        }
        if side1 == side2 {
            let mut left = vec![false; row.len()];
            for (bit, &j) in support.iter().enumerate() {
                if mask & (1 << bit) != 0 {
                    left[j] = true;
                }
            }
            return Some(left);
        }
    }
    None
}

/// Odometer over `n` digits in base `pool_len`; calls `f` on each tuple
/// until it returns `Some`.
fn for_each_candidate<T>(
    pool_len: usize,
    n: usize,
    mut f: impl FnMut(&[usize]) -> Option<T>,
) -> Option<T> {
    let mut idx = vec![0usize; n];
    loop {
        if let Some(t) = f(&idx) {
            return Some(t);
        }
        let mut pos = n;
        loop {
            if pos == 0 {
                return None;
            }
            pos -= 1;
            idx[pos] += 1;
            if idx[pos] < pool_len {
                break;
            }
            idx[pos] = 0;
        }
    }
}

fn check_candidate_budget(pool_len: usize, n: usize, budget: &SearchBudget) -> Result<()> {
    let mut total: u64 = 1;
    for _ in 0..n {
        total = total.saturating_mul(pool_len as u64);
        if total > budget.max_candidates {
            return Err(Error::BudgetExhausted(format!(
                "candidate sweep of {pool_len}^{n} vectors exceeds the cap {}",
                budget.max_candidates
            )));
        }
    }
    Ok(())
}

/// Enumerates orthogonal splits `a = a1 + a2` and nonzero pool vectors X,
/// looking for `a1.X = a2.X`. Row splits combine independently, so the
/// split search runs per row. The returned witness is re-verified with
/// exact semifield arithmetic.
pub fn oracle_definitional_singular(
    a: &Matrix,
    budget: &SearchBudget,
) -> Result<Option<SplitWitness>> {
    let n = a.cols();
    if n == 0 {
        return Ok(None);
    }
    if n > budget.max_dimension {
        return Err(Error::BudgetExhausted(format!(
            "dimension {n} exceeds the budget {}",
            budget.max_dimension
        )));
    }
    let (im, mapper) = to_int_matrix(a)?;
    let pool = int_pool(&im, budget)?;
    check_candidate_budget(pool.len(), n, budget)?;

    let found = for_each_candidate(pool.len(), n, |idx| {
        if idx.iter().all(|&k| pool[k].is_none()) {
            return None;
        }
        let x: Vec<Option<i64>> = idx.iter().map(|&k| pool[k]).collect();
        let mut masks = Vec::with_capacity(im.entries.len());
        for row in &im.entries {
            match row_split(row, &x) {
                Some(mask) => masks.push(mask),
                None => return None,
            }
        }
        Some((x, masks))
    });

    let Some((x, masks)) = found else {
        return Ok(None);
    };
    let x_values: Vector = x.iter().map(|&v| mapper.to_value(v)).collect();
    let witness = split_from_masks(a, &x_values, &masks)?;
    Ok(Some(witness))
}

/// Builds the split matrices from per-row left-side masks and verifies the
/// defining equations before returning.
pub(crate) fn split_from_masks(
    a: &Matrix,
    x: &[SemifieldValue],
    masks: &[Vec<bool>],
) -> Result<SplitWitness> {
    let mut left = Matrix::zero(a.semifield().clone(), a.rows(), a.cols());
    let mut right = Matrix::zero(a.semifield().clone(), a.rows(), a.cols());
    for i in 0..a.rows() {
        for j in 0..a.cols() {
            let e = a.get(i, j).clone();
            if e.is_zero() {
                continue;
            }
            if masks[i][j] {
                left.set(i, j, e)?;
            } else {
                right.set(i, j, e)?;
            }
        }
    }
    let witness = SplitWitness {
        x: x.to_vec(),
        left,
        right,
    };
    if !verify_split_witness(a, &witness)? {
        return Err(Error::Construction(
            "internal: split masks do not verify".into(),
        ));
    }
    Ok(witness)
}

/// Checks all clauses of the witness definition with exact arithmetic.
pub fn verify_split_witness(a: &Matrix, w: &SplitWitness) -> Result<bool> {
    if w.x.len() != a.cols() || w.x.iter().all(SemifieldValue::is_zero) {
        return Ok(false);
    }
    if w.left.add(&w.right)? != *a {
        return Ok(false);
    }
    if !w.left.orthogonal_to(&w.right)? {
        return Ok(false);
    }
    Ok(w.left.mul_vec(&w.x)? == w.right.mul_vec(&w.x)?)
}

/// Enumerates disjoint-support pairs (X1, X2) with values from the pool
/// and X1 + X2 nonzero, looking for `a.X1 = a.X2`. The first nonzero
/// coordinate is kept on the X1 side to skip mirrored pairs.
pub fn oracle_gm_dependent(
    a: &Matrix,
    budget: &SearchBudget,
) -> Result<Option<(Vector, Vector)>> {
    let n = a.cols();
    if n == 0 {
        return Ok(None);
    }
    if n > budget.max_dimension {
        return Err(Error::BudgetExhausted(format!(
            "dimension {n} exceeds the budget {}",
            budget.max_dimension
        )));
    }
    let (im, mapper) = to_int_matrix(a)?;
    let pool = int_pool(&im, budget)?;
    let finite: Vec<i64> = pool.iter().copied().flatten().collect();
    // Each coordinate is absent, on the X1 side, or on the X2 side.
    let per_column = 1u64 + 2 * finite.len() as u64;
    let mut total = 1u64;
    for _ in 0..n {
        total = total.saturating_mul(per_column);
    }
    if total > budget.max_candidates {
        return Err(Error::BudgetExhausted(format!(
            "pair sweep of {per_column}^{n} exceeds the cap {}",
            budget.max_candidates
        )));
    }

    let states = per_column as usize;
    let found = for_each_candidate(states, n, |idx| {
        let mut x1: Vec<Option<i64>> = vec![None; n];
        let mut x2: Vec<Option<i64>> = vec![None; n];
        let mut first_side: Option<u8> = None;
        for (j, &s) in idx.iter().enumerate() {
            if s == 0 {
                continue;
            }
            let side = if (s - 1) % 2 == 0 { 1u8 } else { 2u8 };
            let value = finite[(s - 1) / 2];
            if first_side.is_none() {
                first_side = Some(side);
                // mirrored pairs are equivalent; keep the first support on X1
                if side == 2 {
                    return None;
                }
            }
            if side == 1 {
                x1[j] = Some(value);
            } else {
                x2[j] = Some(value);
            }
        }
        first_side?;
        let prod = |x: &[Option<i64>]| -> Vec<Option<i64>> {
            im.entries
                .iter()
                .map(|row| (0..n).map(|j| int_term(row[j], x[j])).fold(None, max_opt))
                .collect()
        };
        if prod(&x1) == prod(&x2) {
            Some((x1, x2))
        } else {
            None
        }
    });

    let Some((x1, x2)) = found else {
        return Ok(None);
    };
    let v1: Vector = x1.iter().map(|&v| mapper.to_value(v)).collect();
    let v2: Vector = x2.iter().map(|&v| mapper.to_value(v)).collect();
    if !verify_gm_pair(a, &v1, &v2)? {
        return Err(Error::Construction(
            "internal: enumerated pair does not verify".into(),
        ));
    }
    Ok(Some((v1, v2)))
}

/// Checks the pair against the definition with exact arithmetic.
pub fn verify_gm_pair(a: &Matrix, x1: &[SemifieldValue], x2: &[SemifieldValue]) -> Result<bool> {
    if x1.len() != a.cols() || x2.len() != a.cols() {
        return Ok(false);
    }
    if !crate::semifield::is_orthogonal(x1, x2)? {
        return Ok(false);
    }
    if x1.iter().all(SemifieldValue::is_zero) && x2.iter().all(SemifieldValue::is_zero) {
        return Ok(false);
    }
    Ok(a.mul_vec(x1)? == a.mul_vec(x2)?)
}

/// Sweeps a rational grid for points where at least two monomials of the
/// polynomial tie at the optimum. The tie test is evaluated directly on
/// the coefficients, independently of the hull-based root extraction.
pub fn oracle_roots(
    p: &UnivariatePoly,
    lo: &BigRational,
    hi: &BigRational,
    step: &BigRational,
) -> Result<Vec<BigRational>> {
    if *p.semifield() != Semifield::MaxPlus {
        return Err(Error::UnsupportedSemifield(
            "the grid oracle runs on max-plus polynomials".into(),
        ));
    }
    if step <= &BigRational::zero() {
        return Err(Error::Precondition("grid step must be positive".into()));
    }
    let steps = ((hi - lo) / step).to_integer();
    if steps > BigInt::from(1_000_000) {
        return Err(Error::BudgetExhausted("grid has too many points".into()));
    }
    let monomials: Vec<(usize, BigRational)> = p
        .coefficients()
        .map(|(d, c)| match c {
            SemifieldValue::MaxPlus(Mag::Finite(r)) => (d, r.clone()),
            _ => unreachable!("stored coefficients are nonzero max-plus"),
        })
        .collect();
    let mut out = Vec::new();
    let mut r = lo.clone();
    while r <= *hi {
        let values: Vec<BigRational> = monomials
            .iter()
            .map(|(d, c)| c + BigRational::from_integer(BigInt::from(*d as i64)) * &r)
            .collect();
        if let Some(max) = values.iter().max() {
            if values.iter().filter(|v| *v == max).count() >= 2 {
                out.push(r.clone());
            }
        }
        r += step;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::Matrix;
    use crate::semifield::int;

    fn mp(n: i64) -> SemifieldValue {
        SemifieldValue::max_plus_int(n)
    }

    fn zero() -> SemifieldValue {
        Semifield::MaxPlus.zero()
    }

    fn m(rows: Vec<Vec<SemifieldValue>>) -> Matrix {
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
    fn all_ones_matrix_has_a_split_witness() {
        let a = m(vec![vec![mp(0), mp(0)], vec![mp(0), mp(0)]]);
        let w = oracle_definitional_singular(&a, &SearchBudget::default())
            .unwrap()
            .unwrap();
        assert!(verify_split_witness(&a, &w).unwrap());
    }

    #[test]
    fn identity_has_no_split_witness() {
        let i2 = Matrix::identity(Semifield::MaxPlus, 2);
        assert_eq!(
            oracle_definitional_singular(&i2, &SearchBudget::default()).unwrap(),
            None
        );
        let i2b = Matrix::identity(Semifield::F1, 2);
        assert_eq!(
            oracle_definitional_singular(&i2b, &SearchBudget::default()).unwrap(),
            None
        );
    }

    #[test]
    fn tied_cycle_matrix_is_split_singular_but_not_gm() {
        let b = SearchBudget::default();
        let w = oracle_definitional_singular(&g3(), &b).unwrap().unwrap();
        assert!(verify_split_witness(&g3(), &w).unwrap());
        assert_eq!(oracle_gm_dependent(&g3(), &b).unwrap(), None);
    }

    #[test]
    fn all_ones_matrix_is_gm_dependent() {
        let a = m(vec![vec![mp(0), mp(0)], vec![mp(0), mp(0)]]);
        let (x1, x2) = oracle_gm_dependent(&a, &SearchBudget::default())
            .unwrap()
            .unwrap();
        assert!(verify_gm_pair(&a, &x1, &x2).unwrap());
    }

    #[test]
    fn identity_is_gm_independent() {
        let i2 = Matrix::identity(Semifield::MaxPlus, 2);
        assert_eq!(
            oracle_gm_dependent(&i2, &SearchBudget::default()).unwrap(),
            None
        );
    }

    #[test]
    fn pool_contains_zero_one_and_differences() {
        let a = m(vec![vec![mp(2), mp(1)], vec![mp(1), mp(2)]]);
        let pool = value_pool(&a, &SearchBudget::default()).unwrap();
        assert!(pool.contains(&zero()));
        assert!(pool.contains(&mp(0)));
        assert!(pool.contains(&mp(1)));
        assert!(pool.contains(&mp(-1)));
        assert!(pool.contains(&mp(2)));
    }

    #[test]
    fn pool_of_the_zero_matrix_still_has_the_unit() {
        let a = Matrix::zero(Semifield::MaxPlus, 2, 2);
        let pool = value_pool(&a, &SearchBudget::default()).unwrap();
        assert_eq!(pool, vec![zero(), mp(0)]);
    }

    #[test]
    fn rational_entries_are_scaled_exactly() {
        use crate::semifield::rat;
        let a = m(vec![
            vec![
                SemifieldValue::max_plus(rat(1, 2)),
                SemifieldValue::max_plus(rat(1, 2)),
            ],
            vec![
                SemifieldValue::max_plus(rat(1, 3)),
                SemifieldValue::max_plus(rat(1, 3)),
            ],
        ]);
        let w = oracle_definitional_singular(&a, &SearchBudget::default())
            .unwrap()
            .unwrap();
        assert!(verify_split_witness(&a, &w).unwrap());
    }

    #[test]
    fn budget_violations_are_loud() {
        let a = Matrix::zero(Semifield::MaxPlus, 5, 5);
        assert!(matches!(
            oracle_definitional_singular(&a, &SearchBudget::default()),
            Err(Error::BudgetExhausted(_))
        ));
    }

    #[test]
    fn min_plus_oracle_mirrors_max_plus() {
        let a = m(vec![
            vec![SemifieldValue::min_plus_int(0), SemifieldValue::min_plus_int(0)],
            vec![SemifieldValue::min_plus_int(0), SemifieldValue::min_plus_int(0)],
        ]);
        let w = oracle_definitional_singular(&a, &SearchBudget::default())
            .unwrap()
            .unwrap();
        assert!(verify_split_witness(&a, &w).unwrap());
    }

    #[test]
    fn grid_oracle_examples() {
        let p = UnivariatePoly::new(
            Semifield::MaxPlus,
            vec![(0, mp(4)), (1, mp(3)), (2, mp(0))],
        )
        .unwrap();
        let roots = oracle_roots(&p, &int(-10), &int(10), &crate::semifield::rat(1, 4)).unwrap();
        assert_eq!(roots, vec![int(1), int(3)]);

        let q = UnivariatePoly::new(Semifield::MaxPlus, vec![(0, mp(3)), (1, mp(0))]).unwrap();
        assert_eq!(
            oracle_roots(&q, &int(-10), &int(10), &int(1)).unwrap(),
            vec![int(3)]
        );

        let c = UnivariatePoly::new(Semifield::MaxPlus, vec![(0, mp(5))]).unwrap();
        assert_eq!(
            oracle_roots(&c, &int(-10), &int(10), &int(1)).unwrap(),
            Vec::<BigRational>::new()
        );
    }
}
