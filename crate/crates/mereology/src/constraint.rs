//! Constraints as extensional predicates on a behavior type.
//!
//! A constraint is a boolean vector indexed by the carrier's behaviors.
//! Truth values are classical: the two-element algebra, so negation and
//! de Morgan duality behave as usual.

use std::sync::Arc;

use crate::behavior::{Behavior, BehaviorType};
use crate::error::Error;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Constraint {
    carrier: Arc<BehaviorType>,
    bits: Vec<bool>,
}

impl Constraint {
    pub fn new(carrier: Arc<BehaviorType>, bits: Vec<bool>) -> Result<Constraint, Error> {
        if bits.len() != carrier.len() {
            return Err(Error::BitLengthMismatch {
                id: carrier.id().to_string(),
                expected: carrier.len(),
                got: bits.len(),
            });
        }
        Ok(Constraint { carrier, bits })
    }

    pub fn from_fn(
        carrier: &Arc<BehaviorType>,
        mut pred: impl FnMut(usize, &Behavior) -> bool,
    ) -> Constraint {
        let bits = carrier
            .labels()
            .iter()
            .enumerate()
            .map(|(i, label)| pred(i, label))
            .collect();
        Constraint { carrier: carrier.clone(), bits }
    }

    pub fn all_true(carrier: &Arc<BehaviorType>) -> Constraint {
        Constraint { carrier: carrier.clone(), bits: vec![true; carrier.len()] }
    }

    pub fn all_false(carrier: &Arc<BehaviorType>) -> Constraint {
        Constraint { carrier: carrier.clone(), bits: vec![false; carrier.len()] }
    }

    /// The singleton predicate `(= index)`.
    pub fn point(carrier: &Arc<BehaviorType>, index: usize) -> Result<Constraint, Error> {
        carrier.check_index(index)?;
        let mut bits = vec![false; carrier.len()];
        bits[index] = true;
        Ok(Constraint { carrier: carrier.clone(), bits })
    }

    /// Decode a bitmask into a constraint; bit `i` of `mask` is behavior
    /// `i`. Only meaningful for carriers of at most 64 behaviors.
    pub fn from_mask(carrier: &Arc<BehaviorType>, mask: u64) -> Constraint {
        let bits = (0..carrier.len()).map(|i| mask >> i & 1 == 1).collect();
        Constraint { carrier: carrier.clone(), bits }
    }

    pub fn carrier(&self) -> &Arc<BehaviorType> {
        &self.carrier
    }

    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    /// Truth value at a behavior index. Panics if out of range.
    pub fn holds(&self, index: usize) -> bool {
        self.bits[index]
    }

    pub fn satisfying(&self) -> impl Iterator<Item = usize> + '_ {
        self.bits
            .iter()
            .enumerate()
            .filter_map(|(i, &b)| b.then_some(i))
    }

    pub fn count(&self) -> usize {
        self.bits.iter().filter(|&&b| b).count()
    }

    pub fn is_all_true(&self) -> bool {
        self.bits.iter().all(|&b| b)
    }

    pub fn is_all_false(&self) -> bool {
        self.bits.iter().all(|&b| !b)
    }

    pub fn not(&self) -> Constraint {
        Constraint {
            carrier: self.carrier.clone(),
            bits: self.bits.iter().map(|&b| !b).collect(),
        }
    }

    pub fn and(&self, other: &Constraint) -> Result<Constraint, Error> {
        self.zip(other, |a, b| a && b)
    }

    pub fn or(&self, other: &Constraint) -> Result<Constraint, Error> {
        self.zip(other, |a, b| a || b)
    }

    pub fn implies(&self, other: &Constraint) -> Result<Constraint, Error> {
        self.zip(other, |a, b| !a || b)
    }

    fn zip(&self, other: &Constraint, op: impl Fn(bool, bool) -> bool) -> Result<Constraint, Error> {
        check_same_carrier(self, other)?;
        Ok(Constraint {
            carrier: self.carrier.clone(),
            bits: self
                .bits
                .iter()
                .zip(&other.bits)
                .map(|(&a, &b)| op(a, b))
                .collect(),
        })
    }

    /// Render as a bitstring, most significant behavior last.
    pub fn bitstring(&self) -> String {
        self.bits.iter().map(|&b| if b { '1' } else { '0' }).collect()
    }
}

pub(crate) fn check_same_carrier(phi: &Constraint, psi: &Constraint) -> Result<(), Error> {
    if Arc::ptr_eq(&phi.carrier, &psi.carrier) || phi.carrier == psi.carrier {
        Ok(())
    } else {
        Err(Error::CarrierMismatch {
            expected: phi.carrier.id().to_string(),
            found: psi.carrier.id().to_string(),
        })
    }
}

pub(crate) fn check_carrier(phi: &Constraint, carrier: &Arc<BehaviorType>) -> Result<(), Error> {
    if Arc::ptr_eq(phi.carrier(), carrier) || phi.carrier() == carrier {
        Ok(())
    } else {
        Err(Error::CarrierMismatch {
            expected: carrier.id().to_string(),
            found: phi.carrier().id().to_string(),
        })
    }
}

/// Entailment: pointwise inclusion of truth sets.
pub fn entails(phi: &Constraint, psi: &Constraint) -> Result<bool, Error> {
    check_same_carrier(phi, psi)?;
    Ok(phi.bits.iter().zip(&psi.bits).all(|(&a, &b)| !a || b))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn carrier(n: usize) -> Arc<BehaviorType> {
        BehaviorType::tokens("C", (0..n).map(|i| format!("c{i}"))).unwrap()
    }

    #[test]
    fn entailment_is_reflexive_and_ex_falso() {
        let c = carrier(4);
        let phi = Constraint::from_mask(&c, 0b1010);
        assert!(entails(&phi, &phi).unwrap());
        let falsum = Constraint::all_false(&c);
        assert!(entails(&falsum, &phi).unwrap());
        assert!(!entails(&phi, &falsum).unwrap());
    }

    #[test]
    fn carrier_mismatch_is_an_error() {
        let c1 = carrier(3);
        let c2 = BehaviorType::tokens("D", ["x", "y", "z"]).unwrap();
        let phi = Constraint::all_true(&c1);
        let psi = Constraint::all_true(&c2);
        assert!(matches!(
            entails(&phi, &psi),
            Err(Error::CarrierMismatch { .. })
        ));
    }

    #[test]
    fn point_constraints() {
        let c = carrier(3);
        let p = Constraint::point(&c, 1).unwrap();
        assert!(p.holds(1));
        assert_eq!(p.count(), 1);
        assert!(Constraint::point(&c, 3).is_err());
    }

    #[test]
    fn bit_length_is_checked() {
        let c = carrier(3);
        assert!(Constraint::new(c, vec![true; 2]).is_err());
    }

    #[test]
    fn boolean_algebra() {
        let c = carrier(4);
        let a = Constraint::from_mask(&c, 0b0011);
        let b = Constraint::from_mask(&c, 0b0101);
        assert_eq!(a.and(&b).unwrap(), Constraint::from_mask(&c, 0b0001));
        assert_eq!(a.or(&b).unwrap(), Constraint::from_mask(&c, 0b0111));
        assert_eq!(a.not().not(), a);
        assert!(entails(&a.and(&b).unwrap(), &a).unwrap());
        assert!(entails(&a, &a.or(&b).unwrap()).unwrap());
        assert_eq!(a.bitstring(), "1100");
    }
}
