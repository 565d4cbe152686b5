//! Four regularity notions for matrices over a totally ordered semifield,
//! with witness extraction.
//!
//! * `singular` — some orthogonal split `A = A1 + A2` agrees on a nonzero
//!   vector; the defining notion, decided through the determinant census.
//! * `det_singular` — the matrix is a zero of the determinant polynomial:
//!   determinant zero, or the optimum attained by two permutations.
//! * `det_balanced` — the even and odd permutation optima coincide.
//! * `gm_dependent` — the columns admit a disjoint-support linear relation.
//!
//! On square matrices `singular` coincides with `det_singular` and
//! `gm_dependent` with `det_balanced`; the classifier computes the cheap
//! determinant side and certifies the definitional side with witnesses.

use itertools::Itertools;

use crate::cover::{cover_mat_vec, is_ghost_or_zero};
use crate::error::{Error, Result};
use crate::matrix::{det_report, det_value_fast, DetReport, Matrix, Vector};
use crate::oracle::{
    oracle_gm_dependent, split_from_masks, value_pool, SearchBudget, SplitWitness,
};
use crate::semifield::SemifieldValue;

pub use crate::oracle::{verify_gm_pair, verify_split_witness};

/// Zero of the determinant polynomial: zero determinant (trivial split) or
/// a tied optimum.
pub fn is_det_singular(a: &Matrix) -> Result<bool> {
    Ok(det_singular_from_report(&det_report(a)?))
}

pub(crate) fn det_singular_from_report(r: &DetReport) -> bool {
    r.det.is_zero() || r.global_optima().len() >= 2
}

/// The even and odd permutation optima agree as semifield values.
pub fn is_det_balanced(a: &Matrix) -> Result<bool> {
    let r = det_report(a)?;
    Ok(r.det_plus == r.det_minus)
}

/// Definitional singularity for an arbitrary shape. More columns than
/// rows is always singular; square reduces to the determinant criterion;
/// more rows than columns is regular iff some full-width row minor is.
pub fn is_singular(a: &Matrix) -> Result<bool> {
    let (p, n) = (a.rows(), a.cols());
    if n > p {
        return Ok(true);
    }
    if n == p {
        return is_det_singular(a);
    }
    let cols: Vec<usize> = (0..n).collect();
    for rows in (0..p).combinations(n) {
        if !is_det_singular(&a.submatrix(&rows, &cols))? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Kernel-style candidates from maximal minors: for a set of n-1 rows,
/// coordinate j is the determinant of those rows with column j deleted.
fn cramer_candidate(a: &Matrix, rows: &[usize]) -> Result<Vector> {
    let n = a.cols();
    let mut x = Vec::with_capacity(n);
    for j in 0..n {
        let cols: Vec<usize> = (0..n).filter(|&c| c != j).collect();
        x.push(det_value_fast(&a.submatrix(rows, &cols))?);
    }
    Ok(x)
}

/// Tries a candidate vector: on a ghost-or-zero product, splits each row
/// between its first optimum entry and the rest. Rows whose product is
/// zero go wholly to the left factor.
fn try_witness(a: &Matrix, x: &[SemifieldValue]) -> Result<Option<SplitWitness>> {
    if x.iter().all(SemifieldValue::is_zero) {
        return Ok(None);
    }
    let product = cover_mat_vec(a, x)?;
    if !is_ghost_or_zero(&product) {
        return Ok(None);
    }
    let mut masks = Vec::with_capacity(a.rows());
    for i in 0..a.rows() {
        let mut mask = vec![false; a.cols()];
        if product[i].is_zero() {
            for (j, m) in mask.iter_mut().enumerate() {
                *m = !a.get(i, j).is_zero();
            }
        } else {
            let value = product[i].magnitude();
            for j in 0..a.cols() {
                if a.get(i, j).mul(&x[j])? == *value {
                    mask[j] = true;
                    break;
                }
            }
        }
        masks.push(mask);
    }
    Ok(Some(split_from_masks(a, x, &masks)?))
}

/// Finds a verified split witness for a singular matrix. Candidates from
/// maximal minors are tried first, then the value-pool grid; both phases
/// scan in a fixed order, so the result is deterministic.
pub fn singular_witness(a: &Matrix) -> Result<SplitWitness> {
    singular_witness_with(a, &SearchBudget::default())
}

pub fn singular_witness_with(a: &Matrix, budget: &SearchBudget) -> Result<SplitWitness> {
    if !is_singular(a)? {
        return Err(Error::Precondition(
            "matrix is regular; no singularity witness exists".into(),
        ));
    }
    if a.is_square() {
        let n = a.rows();
        for rows in (0..n).combinations(n - 1) {
            let x = cramer_candidate(a, &rows)?;
            if let Some(w) = try_witness(a, &x)? {
                return Ok(w);
            }
        }
    }
    let pool = match value_pool(a, budget) {
        Ok(pool) => pool,
        Err(Error::UnsupportedSemifield(_)) => return Err(Error::WitnessSearchExhausted),
        Err(e) => return Err(e),
    };
    let n = a.cols();
    let mut count: u64 = 1;
    for _ in 0..n {
        count = count.saturating_mul(pool.len() as u64);
    }
    if count > budget.max_candidates {
        return Err(Error::BudgetExhausted(format!(
            "witness grid of {}^{n} exceeds the cap {}",
            pool.len(),
            budget.max_candidates
        )));
    }
    let mut idx = vec![0usize; n];
    loop {
        let x: Vector = idx.iter().map(|&k| pool[k].clone()).collect();
        if let Some(w) = try_witness(a, &x)? {
            return Ok(w);
        }
        let mut pos = n;
        loop {
            if pos == 0 {
                return Err(Error::WitnessSearchExhausted);
            }
            pos -= 1;
            idx[pos] += 1;
            if idx[pos] < pool.len() {
                break;
            }
            idx[pos] = 0;
        }
    }
}

/// Column dependence in the disjoint-support sense. Square matrices are
/// decided exactly by the balance criterion, wide matrices by the
/// cardinality bound; tall rectangular matrices fall back to the bounded
/// definitional search and report a semi-decision.
pub fn is_gm_dependent(a: &Matrix) -> Result<bool> {
    Ok(gm_decision(a, &SearchBudget::default())?.0)
}

/// (verdict, decided_exactly)
fn gm_decision(a: &Matrix, budget: &SearchBudget) -> Result<(bool, bool)> {
    let (p, n) = (a.rows(), a.cols());
    if n > p {
        return Ok((true, true));
    }
    if n == p {
        return Ok((is_det_balanced(a)?, true));
    }
    match oracle_gm_dependent(a, budget) {
        Ok(found) => Ok((found.is_some(), false)),
        Err(Error::UnsupportedSemifield(_)) => Ok((false, false)),
        Err(e) => Err(e),
    }
}

/// The full classification of one matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SingularityReport {
    pub rows: usize,
    pub cols: usize,
    /// Determinant data; present for square matrices only.
    pub det: Option<SemifieldValue>,
    pub det_plus: Option<SemifieldValue>,
    pub det_minus: Option<SemifieldValue>,
    pub det_singular: Option<bool>,
    pub det_balanced: Option<bool>,
    pub singular: bool,
    pub gm_dependent: bool,
    /// False when the verdict above came from a bounded search rather
    /// than a criterion.
    pub gm_exact: bool,
    pub witness: Option<SplitWitness>,
    pub gm_witness: Option<(Vector, Vector)>,
}

pub fn classify(a: &Matrix) -> Result<SingularityReport> {
    classify_with(a, &SearchBudget::default())
}

pub fn classify_with(a: &Matrix, budget: &SearchBudget) -> Result<SingularityReport> {
    let (rows, cols) = (a.rows(), a.cols());
    let (det, det_plus, det_minus, det_singular, det_balanced, singular) = if a.is_square() {
        let r = det_report(a)?;
        let ds = det_singular_from_report(&r);
        let db = r.det_plus == r.det_minus;
        (
            Some(r.det.clone()),
            Some(r.det_plus.clone()),
            Some(r.det_minus.clone()),
            Some(ds),
            Some(db),
            ds,
        )
    } else {
        (None, None, None, None, None, is_singular(a)?)
    };
    let (gm_dependent, gm_exact) = gm_decision(a, budget)?;

    let witness = if singular {
        match singular_witness_with(a, budget) {
            Ok(w) => Some(w),
            Err(Error::WitnessSearchExhausted) | Err(Error::BudgetExhausted(_)) => None,
            Err(e) => return Err(e),
        }
    } else {
        None
    };
    let gm_witness = if gm_dependent {
        match oracle_gm_dependent(a, budget) {
            Ok(found) => found,
            Err(Error::UnsupportedSemifield(_)) | Err(Error::BudgetExhausted(_)) => None,
            Err(e) => return Err(e),
        }
    } else {
        None
    };

    let report = SingularityReport {
        rows,
        cols,
        det,
        det_plus,
        det_minus,
        det_singular,
        det_balanced,
        singular,
        gm_dependent,
        gm_exact,
        witness,
        gm_witness,
    };

    // Implication chain and witness validity; a failure here is a bug.
    if report.det_balanced == Some(true) {
        assert_eq!(
            report.det_singular,
            Some(true),
            "balanced determinant must imply a tied or zero determinant"
        );
    }
    if report.gm_dependent {
        assert!(report.singular, "column dependence must imply singularity");
    }
    if let Some(w) = &report.witness {
        assert!(verify_split_witness(a, w)?, "stored witness must verify");
    }
    if let Some((x1, x2)) = &report.gm_witness {
        assert!(verify_gm_pair(a, x1, x2)?, "stored pair must verify");
    }
    Ok(report)
}
