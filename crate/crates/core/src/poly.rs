//! Univariate polynomials over a semifield: formal arithmetic, evaluation
//! (plain and in the cover), the tie notion of a root, and root extraction
//! from the upper concave hull of the coefficient points.

use std::collections::BTreeMap;

use num::BigRational;

use crate::cover::CoverElement;
use crate::error::{Error, Result};
use crate::semifield::{Mag, Semifield, SemifieldValue};

/// Finite-support coefficient map; zero coefficients are never stored, so
/// formal equality is structural equality.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnivariatePoly {
    semifield: Semifield,
    coeffs: BTreeMap<usize, SemifieldValue>,
}

impl UnivariatePoly {
    pub fn new(
        semifield: Semifield,
        coeffs: impl IntoIterator<Item = (usize, SemifieldValue)>,
    ) -> Result<Self> {
        let mut map: BTreeMap<usize, SemifieldValue> = BTreeMap::new();
        for (d, c) in coeffs {
            if c.semifield() != semifield {
                return Err(Error::DomainMismatch {
                    left: semifield.to_string(),
                    right: c.semifield().to_string(),
                });
            }
            if c.is_zero() {
                continue;
            }
            match map.remove(&d) {
                None => {
                    map.insert(d, c);
                }
                Some(prev) => {
                    map.insert(d, prev.add(&c)?);
                }
            }
        }
        Ok(UnivariatePoly {
            semifield,
            coeffs: map,
        })
    }

    pub fn zero(semifield: Semifield) -> Self {
        UnivariatePoly {
            semifield,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn one(semifield: Semifield) -> Self {
        let one = semifield.one();
        UnivariatePoly::new(semifield, [(0, one)]).expect("same instance")
    }

    pub fn semifield(&self) -> &Semifield {
        &self.semifield
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn lowest_degree(&self) -> Option<usize> {
        self.coeffs.keys().next().copied()
    }

    /// The coefficient at `d`, zero when absent.
    pub fn coefficient(&self, d: usize) -> SemifieldValue {
        self.coeffs
            .get(&d)
            .cloned()
            .unwrap_or_else(|| self.semifield.zero())
    }

    /// Stored (degree, coefficient) pairs in increasing degree order.
    pub fn coefficients(&self) -> impl Iterator<Item = (usize, &SemifieldValue)> {
        self.coeffs.iter().map(|(&d, c)| (d, c))
    }

    fn check_same_instance(&self, other: &Self) -> Result<()> {
        if self.semifield == other.semifield {
            Ok(())
        } else {
            Err(Error::DomainMismatch {
                left: self.semifield.to_string(),
                right: other.semifield.to_string(),
            })
        }
    }

    /// Coefficientwise sum.
    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_same_instance(other)?;
        let mut out = self.coeffs.clone();
        for (&d, c) in &other.coeffs {
            match out.remove(&d) {
                None => {
                    out.insert(d, c.clone());
                }
                Some(prev) => {
                    out.insert(d, prev.add(c)?);
                }
            }
        }
        Ok(UnivariatePoly {
            semifield: self.semifield.clone(),
            coeffs: out,
        })
    }

    /// Convolution product.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_same_instance(other)?;
        let mut out: BTreeMap<usize, SemifieldValue> = BTreeMap::new();
        for (&d1, c1) in &self.coeffs {
            for (&d2, c2) in &other.coeffs {
                let term = c1.mul(c2)?;
                let d = d1 + d2;
                match out.remove(&d) {
                    None => {
                        out.insert(d, term);
                    }
                    Some(prev) => {
                        out.insert(d, prev.add(&term)?);
                    }
                }
            }
        }
        Ok(UnivariatePoly {
            semifield: self.semifield.clone(),
            coeffs: out,
        })
    }

    pub fn pow(&self, n: u64) -> Result<Self> {
        let mut acc = UnivariatePoly::one(self.semifield.clone());
        for _ in 0..n {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    /// Direct evaluation: the sum over monomials of `c_i * x^i`.
    pub fn eval(&self, x: &SemifieldValue) -> Result<SemifieldValue> {
        if x.semifield() != self.semifield {
            return Err(Error::DomainMismatch {
                left: self.semifield.to_string(),
                right: x.semifield().to_string(),
            });
        }
        let mut acc = self.semifield.zero();
        for (&d, c) in &self.coeffs {
            acc = acc.add(&c.mul(&x.pow(d as u64))?)?;
        }
        Ok(acc)
    }

    /// Evaluation with tangible lifts in the cover: the layer of the
    /// result records whether the optimum was attained twice. Ghost-or-zero
    /// output characterizes the roots.
    pub fn eval_cover(&self, x: &SemifieldValue) -> Result<CoverElement> {
        if x.semifield() != self.semifield {
            return Err(Error::DomainMismatch {
                left: self.semifield.to_string(),
                right: x.semifield().to_string(),
            });
        }
        let mut acc = CoverElement::tangible(self.semifield.zero());
        for (&d, c) in &self.coeffs {
            let term = CoverElement::tangible(c.mul(&x.pow(d as u64))?);
            acc = acc.add(&term)?;
        }
        Ok(acc)
    }
}

/// A root is either the zero (admissible iff the constant term vanishes)
/// or a point where at least two monomials tie at the optimum. The zero
/// polynomial has every point as a root.
pub fn is_root(p: &UnivariatePoly, r: &SemifieldValue) -> Result<bool> {
    if r.semifield() != *p.semifield() {
        return Err(Error::DomainMismatch {
            left: p.semifield().to_string(),
            right: r.semifield().to_string(),
        });
    }
    if p.is_zero() {
        return Ok(true);
    }
    if r.is_zero() {
        return Ok(p.coefficient(0).is_zero());
    }
    let terms: Vec<SemifieldValue> = p
        .coefficients()
        .map(|(d, c)| c.mul(&r.pow(d as u64)))
        .collect::<Result<_>>()?;
    let mut max = terms[0].clone();
    for t in &terms[1..] {
        max = max.add(t)?;
    }
    let mut ties = 0usize;
    for t in &terms {
        if *t == max {
            ties += 1;
        }
    }
    Ok(ties >= 2)
}

/// Root multiset from the upper concave hull of the coefficient points.
/// Each hull edge of horizontal length m contributes its negated slope
/// with multiplicity m; a vanishing constant term contributes the zero
/// root with multiplicity equal to the lowest supported degree. Roots come
/// back in increasing natural order, zero first.
pub fn roots(p: &UnivariatePoly) -> Result<Vec<(SemifieldValue, usize)>> {
    if p.is_zero() {
        return Err(Error::NotApplicable(
            "roots of the zero polynomial are undefined".into(),
        ));
    }
    match p.semifield() {
        Semifield::MaxPlus => roots_max_plus(p),
        Semifield::MinPlus => {
            // Order dual: negate magnitudes, solve over max-plus, negate back.
            let dual = UnivariatePoly::new(
                Semifield::MaxPlus,
                p.coefficients().map(|(d, c)| {
                    let m = match c {
                        SemifieldValue::MinPlus(Mag::Finite(r)) => {
                            SemifieldValue::max_plus(-r.clone())
                        }
                        _ => unreachable!("stored coefficients are nonzero min-plus"),
                    };
                    (d, m)
                }),
            )?;
            let out = roots_max_plus(&dual)?;
            out.into_iter()
                .map(|(root, m)| {
                    let mapped = match root {
                        SemifieldValue::MaxPlus(Mag::Bottom) => Semifield::MinPlus.zero(),
                        SemifieldValue::MaxPlus(Mag::Finite(r)) => SemifieldValue::min_plus(-r),
                        _ => unreachable!(),
                    };
                    Ok((mapped, m))
                })
                .collect()
        }
        other => Err(Error::UnsupportedSemifield(format!(
            "root extraction needs a numeric instance, got {other}"
        ))),
    }
}

fn roots_max_plus(p: &UnivariatePoly) -> Result<Vec<(SemifieldValue, usize)>> {
    let points: Vec<(usize, BigRational)> = p
        .coefficients()
        .map(|(d, c)| match c {
            SemifieldValue::MaxPlus(Mag::Finite(r)) => (d, r.clone()),
            _ => unreachable!("stored coefficients are nonzero max-plus"),
        })
        .collect();
    let mut out: Vec<(SemifieldValue, usize)> = Vec::new();
    let lowest = points[0].0;
    if lowest > 0 {
        out.push((Semifield::MaxPlus.zero(), lowest));
    }
    // Upper hull by monotone chain; colinear middle points are dropped so
    // each maximal straight stretch is a single edge.
    let mut hull: Vec<&(usize, BigRational)> = Vec::new();
    for pt in &points {
        while hull.len() >= 2 {
            let a = hull[hull.len() - 2];
            let b = hull[hull.len() - 1];
            let x1 = BigRational::from_integer(a.0.into());
            let x2 = BigRational::from_integer(b.0.into());
            let x3 = BigRational::from_integer(pt.0.into());
            let cross = (&x2 - &x1) * (&pt.1 - &a.1) - (&b.1 - &a.1) * (&x3 - &x1);
            if cross >= BigRational::from_integer(0.into()) {
                hull.pop();
            } else {
                break;
            }
        }
        hull.push(pt);
    }
    for w in hull.windows(2) {
        let (d1, c1) = (w[0].0, &w[0].1);
        let (d2, c2) = (w[1].0, &w[1].1);
        let span = d2 - d1;
        let root = (c1 - c2) / BigRational::from_integer(span.into());
        out.push((SemifieldValue::max_plus(root), span));
    }
    Ok(out)
}
