//! Two-layer cover of a totally ordered semifield.
//!
//! Each element carries a magnitude and a layer: tangible values embed the
//! base semifield, ghost values record that an addition tied. A nonzero
//! vector X with A.X entirely ghost-or-zero is exactly a singularity
//! witness, which is what this module exists to decide.

use std::cmp::Ordering;
use std::fmt;

use crate::error::Result;
use crate::matrix::Matrix;
use crate::semifield::SemifieldValue;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Layer {
    Tangible,
    Ghost,
}

/// A magnitude plus its layer. The additive zero is always tangible; a
/// ghost zero is normalized away at construction so that the ghost layer
/// with zero adjoined stays isomorphic to the base semifield.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverElement {
    magnitude: SemifieldValue,
    layer: Layer,
}

impl CoverElement {
    pub fn tangible(magnitude: SemifieldValue) -> Self {
        CoverElement {
            magnitude,
            layer: Layer::Tangible,
        }
    }

    pub fn ghost(magnitude: SemifieldValue) -> Self {
        let layer = if magnitude.is_zero() {
            Layer::Tangible
        } else {
            Layer::Ghost
        };
        CoverElement { magnitude, layer }
    }

    pub fn magnitude(&self) -> &SemifieldValue {
        &self.magnitude
    }

    pub fn layer(&self) -> Layer {
        self.layer
    }

    pub fn is_ghost(&self) -> bool {
        self.layer == Layer::Ghost
    }

    pub fn is_zero(&self) -> bool {
        self.magnitude.is_zero()
    }

    /// Cover addition. Tangible ties of equal nonzero magnitude produce a
    /// ghost; a strictly larger tangible wins over a ghost; everything
    /// else keeps or spreads the ghost layer at the larger magnitude.
    pub fn add(&self, other: &Self) -> Result<Self> {
        let ord = self.magnitude.natural_cmp(&other.magnitude)?;
        Ok(match ord {
            Ordering::Less => other.clone(),
            Ordering::Greater => self.clone(),
            Ordering::Equal => {
                if self.magnitude.is_zero() {
                    CoverElement::tangible(self.magnitude.clone())
                } else if self.is_ghost() || other.is_ghost() {
                    CoverElement::ghost(self.magnitude.clone())
                } else {
                    // equal nonzero tangibles tie
                    CoverElement::ghost(self.magnitude.clone())
                }
            }
        })
    }

    /// Cover multiplication: magnitudes multiply, ghost infects nonzero
    /// products.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        let magnitude = self.magnitude.mul(&other.magnitude)?;
        Ok(if self.is_ghost() || other.is_ghost() {
            CoverElement::ghost(magnitude)
        } else {
            CoverElement::tangible(magnitude)
        })
    }
}

impl fmt::Display for CoverElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.layer {
            Layer::Tangible => write!(f, "{}", self.magnitude),
            Layer::Ghost => write!(f, "ghost({})", self.magnitude),
        }
    }
}

/// True iff every coordinate is ghost-layer or zero.
pub fn is_ghost_or_zero(v: &[CoverElement]) -> bool {
    v.iter().all(|c| c.is_ghost() || c.is_zero())
}

/// Lifts a plain vector into the tangible layer.
pub fn lift_vector(xs: &[SemifieldValue]) -> Vec<CoverElement> {
    xs.iter().map(|x| CoverElement::tangible(x.clone())).collect()
}

/// Matrix-vector product computed in the cover with both operands lifted
/// tangibly. The magnitude agrees with the plain product; the layer
/// records which coordinates were decided by a tie.
pub fn cover_mat_vec(a: &Matrix, x: &[SemifieldValue]) -> Result<Vec<CoverElement>> {
    a.check_vec_compatible(x)?;
    let zero = a.semifield().zero();
    let mut out = Vec::with_capacity(a.rows());
    for i in 0..a.rows() {
        let mut acc = CoverElement::tangible(zero.clone());
        for j in 0..a.cols() {
            let term = CoverElement::tangible(a.get(i, j).clone())
                .mul(&CoverElement::tangible(x[j].clone()))?;
            acc = acc.add(&term)?;
        }
        out.push(acc);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semifield::{Semifield, SemifieldValue};

    fn mp(n: i64) -> SemifieldValue {
        SemifieldValue::max_plus_int(n)
    }

    fn zero() -> SemifieldValue {
        Semifield::MaxPlus.zero()
    }

    fn t(n: i64) -> CoverElement {
        CoverElement::tangible(mp(n))
    }

    fn g(n: i64) -> CoverElement {
        CoverElement::ghost(mp(n))
    }

    #[test]
    fn addition_rules() {
        assert_eq!(t(3).add(&t(3)).unwrap(), g(3));
        assert_eq!(t(5).add(&g(3)).unwrap(), t(5));
        assert_eq!(t(3).add(&g(5)).unwrap(), g(5));
        assert_eq!(t(3).add(&g(3)).unwrap(), g(3));
        assert_eq!(g(2).add(&g(7)).unwrap(), g(7));
        let z = CoverElement::tangible(zero());
        assert_eq!(z.add(&z).unwrap(), z);
        assert_eq!(z.add(&t(1)).unwrap(), t(1));
    }

    #[test]
    fn multiplication_rules() {
        assert_eq!(t(2).mul(&g(3)).unwrap(), g(5));
        assert_eq!(t(2).mul(&t(3)).unwrap(), t(5));
        let z = CoverElement::tangible(zero());
        assert_eq!(g(2).mul(&z).unwrap(), z);
        assert!(!g(2).mul(&z).unwrap().is_ghost());
    }

    #[test]
    fn ghost_zero_normalizes_to_tangible() {
        let gz = CoverElement::ghost(zero());
        assert_eq!(gz.layer(), Layer::Tangible);
        assert_eq!(gz, CoverElement::tangible(zero()));
    }

    #[test]
    fn ghost_or_zero_vectors() {
        assert!(is_ghost_or_zero(&[g(3), g(0)]));
        assert!(!is_ghost_or_zero(&[g(3), t(2)]));
        assert!(is_ghost_or_zero(&[CoverElement::tangible(zero()), g(1)]));
        assert!(is_ghost_or_zero(&[]));
    }

    #[test]
    fn hat_map_preserves_operations_on_samples() {
        // The ghost layer with zero adjoined must mirror the base laws.
        for a in -3i64..=3 {
            for b in -3i64..=3 {
                let base_add = mp(a).add(&mp(b)).unwrap();
                let base_mul = mp(a).mul(&mp(b)).unwrap();
                assert_eq!(g(a).add(&g(b)).unwrap(), CoverElement::ghost(base_add));
                assert_eq!(g(a).mul(&g(b)).unwrap(), CoverElement::ghost(base_mul));
            }
        }
    }
}
