//! Constraint transport: quantifiers along the part order, the
//! allows/ensures inter-modalities, their round-trip composites, and the
//! classical possibility/necessity and Kripke modalities they recover.

use std::sync::Arc;

use crate::behavior::BehaviorType;
use crate::constraint::{check_carrier, Constraint};
use crate::error::Error;
use crate::part::{Part, PartOrderWitness};

/// Pushforward along a factor map: bit `q` holds when some behavior in
/// the fiber over `q` satisfies `phi`.
pub fn exists_along(w: &PartOrderWitness, phi: &Constraint) -> Result<Constraint, Error> {
    check_carrier(phi, w.from_part().codomain())?;
    let mut bits = vec![false; w.to_part().codomain().len()];
    for (p, &q) in w.factor().iter().enumerate() {
        if phi.holds(p) {
            bits[q] = true;
        }
    }
    Constraint::new(w.to_part().codomain().clone(), bits)
}

/// Pullback along a factor map: precomposition.
pub fn pullback_along(w: &PartOrderWitness, psi: &Constraint) -> Result<Constraint, Error> {
    check_carrier(psi, w.to_part().codomain())?;
    let bits = w.factor().iter().map(|&q| psi.holds(q)).collect();
    Constraint::new(w.from_part().codomain().clone(), bits)
}

/// Universal pushforward: bit `q` holds when every behavior in the fiber
/// over `q` satisfies `phi`.
pub fn forall_along(w: &PartOrderWitness, phi: &Constraint) -> Result<Constraint, Error> {
    check_carrier(phi, w.from_part().codomain())?;
    let mut bits = vec![true; w.to_part().codomain().len()];
    for (p, &q) in w.factor().iter().enumerate() {
        if !phi.holds(p) {
            bits[q] = false;
        }
    }
    Constraint::new(w.to_part().codomain().clone(), bits)
}

/// The compatibility matrix of a pair of parts, built once from the
/// system's restriction maps. Both inter-modalities are matrix-predicate
/// products against it, so repeated queries over one pair amortize.
#[derive(Debug, Clone)]
pub struct InterModal {
    source: Part,
    target: Part,
    /// `compat[a][b]` iff some system behavior restricts to both.
    compat: Vec<Vec<bool>>,
}

impl InterModal {
    pub fn new(source: &Part, target: &Part) -> Result<InterModal, Error> {
        if !(Arc::ptr_eq(source.system(), target.system()) || source.system() == target.system()) {
            return Err(Error::SystemMismatch {
                left: source.system().id().to_string(),
                right: target.system().id().to_string(),
            });
        }
        let mut compat = vec![vec![false; target.codomain().len()]; source.codomain().len()];
        for (s, &a) in source.map().iter().enumerate() {
            compat[a][target.map()[s]] = true;
        }
        Ok(InterModal { source: source.clone(), target: target.clone(), compat })
    }

    pub fn source(&self) -> &Part {
        &self.source
    }

    pub fn target(&self) -> &Part {
        &self.target
    }

    pub fn compatible(&self, a: usize, b: usize) -> bool {
        self.compat[a][b]
    }

    /// "Allows": bit `b` holds when some source behavior compatible with
    /// `b` satisfies `phi`.
    pub fn allows(&self, phi: &Constraint) -> Result<Constraint, Error> {
        check_carrier(phi, self.source.codomain())?;
        let bits = (0..self.target.codomain().len())
            .map(|b| (0..self.compat.len()).any(|a| self.compat[a][b] && phi.holds(a)))
            .collect();
        Constraint::new(self.target.codomain().clone(), bits)
    }

    /// "Ensures": bit `b` holds when every source behavior compatible
    /// with `b` satisfies `phi`.
    pub fn ensures(&self, phi: &Constraint) -> Result<Constraint, Error> {
        check_carrier(phi, self.source.codomain())?;
        let bits = (0..self.target.codomain().len())
            .map(|b| (0..self.compat.len()).all(|a| !self.compat[a][b] || phi.holds(a)))
            .collect();
        Constraint::new(self.target.codomain().clone(), bits)
    }
}

/// Pass `phi` on `p` to the constraint on `q` it allows.
pub fn allows(p: &Part, q: &Part, phi: &Constraint) -> Result<Constraint, Error> {
    InterModal::new(p, q)?.allows(phi)
}

/// Pass `phi` on `p` to the constraint on `q` that ensures it.
pub fn ensures(p: &Part, q: &Part, phi: &Constraint) -> Result<Constraint, Error> {
    InterModal::new(p, q)?.ensures(phi)
}

/// The singleton predicate on a part's behaviors.
pub fn point_constraint(p: &Part, a: usize) -> Result<Constraint, Error> {
    Constraint::point(p.codomain(), a)
}

/// The composite modality on `p` that passes `phi` to `q` and back, both
/// legs existential. It is the identity exactly when `p <= q`.
pub fn roundtrip_allows(p: &Part, q: &Part, phi: &Constraint) -> Result<Constraint, Error> {
    let out = allows(p, q, phi)?;
    allows(q, p, &out)
}

/// The universal round trip; right adjoint to [`roundtrip_allows`].
pub fn roundtrip_ensures(p: &Part, q: &Part, phi: &Constraint) -> Result<Constraint, Error> {
    let out = ensures(p, q, phi)?;
    ensures(q, p, &out)
}

/// Possibility on a part: all-true when `phi` is satisfiable, all-false
/// otherwise. Computed as the round trip through the minimal part.
pub fn possibility(p: &Part, phi: &Constraint) -> Result<Constraint, Error> {
    roundtrip_allows(p, &Part::bottom(p.system()), phi)
}

/// Necessity on a part: all-true when `phi` holds everywhere, all-false
/// otherwise.
pub fn necessity(p: &Part, phi: &Constraint) -> Result<Constraint, Error> {
    roundtrip_ensures(p, &Part::bottom(p.system()), phi)
}

/// A finite Kripke frame: worlds with an accessibility relation.
#[derive(Debug, Clone)]
pub struct Frame {
    n: usize,
    rel: Vec<bool>,
}

impl Frame {
    pub fn new(n: usize, related: impl Fn(usize, usize) -> bool) -> Frame {
        let mut rel = vec![false; n * n];
        for i in 0..n {
            for j in 0..n {
                rel[i * n + j] = related(i, j);
            }
        }
        Frame { n, rel }
    }

    pub fn from_pairs(n: usize, pairs: &[(usize, usize)]) -> Frame {
        let mut rel = vec![false; n * n];
        for &(i, j) in pairs {
            rel[i * n + j] = true;
        }
        Frame { n, rel }
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn related(&self, i: usize, j: usize) -> bool {
        self.rel[i * self.n + j]
    }

    /// Validate reflexivity, symmetry, and transitivity.
    pub fn check_equivalence(&self) -> Result<(), Error> {
        for i in 0..self.n {
            if !self.related(i, i) {
                return Err(Error::NotAnEquivalence {
                    reason: format!("not reflexive at world {i}"),
                });
            }
        }
        for i in 0..self.n {
            for j in 0..self.n {
                if self.related(i, j) && !self.related(j, i) {
                    return Err(Error::NotAnEquivalence {
                        reason: format!("not symmetric at ({i}, {j})"),
                    });
                }
            }
        }
        for i in 0..self.n {
            for j in 0..self.n {
                if !self.related(i, j) {
                    continue;
                }
                for k in 0..self.n {
                    if self.related(j, k) && !self.related(i, k) {
                        return Err(Error::NotAnEquivalence {
                            reason: format!("not transitive at ({i}, {j}, {k})"),
                        });
                    }
                }
            }
        }
        Ok(())
    }
}

/// Classical diamond and box over an equivalence frame, computed by
/// quotienting the worlds by the relation and composing the two
/// inter-modalities through the quotient part.
pub fn kripke_modalities(
    worlds: &Arc<BehaviorType>,
    frame: &Frame,
    phi: &Constraint,
) -> Result<(Constraint, Constraint), Error> {
    if frame.len() != worlds.len() {
        return Err(Error::BitLengthMismatch {
            id: worlds.id().to_string(),
            expected: worlds.len(),
            got: frame.len(),
        });
    }
    check_carrier(phi, worlds)?;
    frame.check_equivalence()?;

    // Name each class by its least world.
    let mut class_rep = vec![usize::MAX; worlds.len()];
    for i in 0..worlds.len() {
        if class_rep[i] == usize::MAX {
            for j in i..worlds.len() {
                if frame.related(i, j) {
                    class_rep[j] = i;
                }
            }
        }
    }
    let quotient = Part::from_observation(worlds, format!("{}.classes", worlds.id()), |i, _| {
        worlds.label(class_rep[i]).clone()
    });
    let whole = Part::top(worlds);
    let diamond = roundtrip_allows(&whole, &quotient, phi)?;
    let boxed = roundtrip_ensures(&whole, &quotient, phi)?;
    Ok((diamond, boxed))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::behavior::BehaviorType;
    use crate::part::part_leq;

    fn sys(n: usize) -> Arc<BehaviorType> {
        BehaviorType::tokens("S", (0..n).map(|i| format!("b{i}"))).unwrap()
    }

    fn part_of(system: &Arc<BehaviorType>, id: &str, map: Vec<usize>) -> Part {
        let m = map.iter().max().unwrap() + 1;
        let codomain = BehaviorType::tokens(id, (0..m).map(|i| format!("{id}{i}"))).unwrap();
        Part::new(system.clone(), codomain, map).unwrap()
    }

    #[test]
    fn quantifiers_preserve_extremes() {
        let s = sys(6);
        let p = part_of(&s, "P", vec![0, 0, 1, 1, 2, 2]);
        let w = part_leq(&p, &Part::top(&s)).unwrap().unwrap();
        let top_true = Constraint::all_true(&s);
        let top_false = Constraint::all_false(&s);
        assert!(exists_along(&w, &top_true).unwrap().is_all_true());
        assert!(exists_along(&w, &top_false).unwrap().is_all_false());
        assert!(forall_along(&w, &top_true).unwrap().is_all_true());
        let psi = Constraint::all_true(p.codomain());
        assert!(pullback_along(&w, &psi).unwrap().is_all_true());
    }

    #[test]
    fn unit_and_counit() {
        let s = sys(5);
        let p = part_of(&s, "P", vec![0, 0, 1, 1, 1]);
        let w = part_leq(&p, &Part::top(&s)).unwrap().unwrap();
        for mask in 0..32u64 {
            let phi = Constraint::from_mask(&s, mask);
            let unit = pullback_along(&w, &exists_along(&w, &phi).unwrap()).unwrap();
            assert!(crate::constraint::entails(&phi, &unit).unwrap());
            let counit = pullback_along(&w, &forall_along(&w, &phi).unwrap()).unwrap();
            assert!(crate::constraint::entails(&counit, &phi).unwrap());
        }
    }

    #[test]
    fn allows_false_and_identity() {
        let s = sys(4);
        let p = part_of(&s, "P", vec![0, 1, 0, 1]);
        let q = part_of(&s, "Q", vec![0, 0, 1, 1]);
        let falsum = Constraint::all_false(p.codomain());
        assert!(allows(&p, &q, &falsum).unwrap().is_all_false());
        // With the top part on both sides, compatibility is equality, so
        // allowing is the identity.
        let top = Part::top(&s);
        for mask in 0..16u64 {
            let phi = Constraint::from_mask(&s, mask);
            assert_eq!(allows(&top, &top, &phi).unwrap(), phi);
        }
    }

    #[test]
    fn carrier_mismatch_rejected() {
        let s = sys(4);
        let p = part_of(&s, "P", vec![0, 1, 0, 1]);
        let q = part_of(&s, "Q", vec![0, 0, 1, 1]);
        let phi_on_q = Constraint::all_true(q.codomain());
        assert!(matches!(
            allows(&p, &q, &phi_on_q),
            Err(Error::CarrierMismatch { .. })
        ));
    }

    #[test]
    fn roundtrip_through_top_is_identity() {
        let s = sys(5);
        let p = part_of(&s, "P", vec![0, 1, 2, 0, 1]);
        let top = Part::top(&s);
        for mask in 0..8u64 {
            let phi = Constraint::from_mask(p.codomain(), mask);
            assert_eq!(roundtrip_allows(&p, &top, &phi).unwrap(), phi);
            assert_eq!(roundtrip_ensures(&p, &top, &phi).unwrap(), phi);
        }
    }

    #[test]
    fn possibility_and_necessity_collapse() {
        let s = sys(4);
        let p = part_of(&s, "P", vec![0, 1, 2, 0]);
        let all = Constraint::all_true(p.codomain());
        let none = Constraint::all_false(p.codomain());
        let some = Constraint::point(p.codomain(), 1).unwrap();
        assert!(possibility(&p, &all).unwrap().is_all_true());
        assert!(necessity(&p, &all).unwrap().is_all_true());
        assert!(possibility(&p, &none).unwrap().is_all_false());
        assert!(necessity(&p, &none).unwrap().is_all_false());
        assert!(possibility(&p, &some).unwrap().is_all_true());
        assert!(necessity(&p, &some).unwrap().is_all_false());
    }

    #[test]
    fn kripke_discrete_and_total_frames() {
        let s = sys(5);
        let phi = Constraint::from_mask(&s, 0b01101);
        let discrete = Frame::new(5, |i, j| i == j);
        let (dia, boxed) = kripke_modalities(&s, &discrete, &phi).unwrap();
        assert_eq!(dia, phi);
        assert_eq!(boxed, phi);
        let total = Frame::new(5, |_, _| true);
        let (dia, boxed) = kripke_modalities(&s, &total, &phi).unwrap();
        assert!(dia.is_all_true());
        assert!(boxed.is_all_false());
    }

    #[test]
    fn kripke_rejects_non_equivalences() {
        let s = sys(3);
        let phi = Constraint::all_true(&s);
        let not_reflexive = Frame::new(3, |i, j| i != j);
        assert!(matches!(
            kripke_modalities(&s, &not_reflexive, &phi),
            Err(Error::NotAnEquivalence { .. })
        ));
        let not_transitive = Frame::from_pairs(
            3,
            &[(0, 0), (1, 1), (2, 2), (0, 1), (1, 0), (1, 2), (2, 1)],
        );
        assert!(matches!(
            kripke_modalities(&s, &not_transitive, &phi),
            Err(Error::NotAnEquivalence { .. })
        ));
    }
}
