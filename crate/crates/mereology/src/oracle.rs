//! Definitional, unoptimized evaluators used as differential-test ground
//! truth.
//!
//! Every function here quantifies directly over the system's behaviors
//! (or builds an explicit relational closure) instead of using fibers,
//! cached matrices, or union-find, so a bug in the optimized paths cannot
//! be mirrored here. Test-only by convention: nothing in the CLI reaches
//! this module.

use std::sync::Arc;

use crate::behavior::{Behavior, BehaviorType};
use crate::constraint::{check_carrier, Constraint};
use crate::error::Error;
use crate::modal::Frame;
use crate::part::{Part, PartOrderWitness};

fn check_same_system(p: &Part, q: &Part) -> Result<(), Error> {
    if Arc::ptr_eq(p.system(), q.system()) || p.system() == q.system() {
        Ok(())
    } else {
        Err(Error::SystemMismatch {
            left: p.system().id().to_string(),
            right: q.system().id().to_string(),
        })
    }
}

pub fn oracle_compatible(p: &Part, a: usize, q: &Part, b: usize) -> Result<bool, Error> {
    check_same_system(p, q)?;
    p.codomain().check_index(a)?;
    q.codomain().check_index(b)?;
    let n = p.system().len();
    Ok((0..n).any(|s| p.map()[s] == a && q.map()[s] == b))
}

pub fn oracle_determines(p: &Part, a: usize, q: &Part, b: usize) -> Result<bool, Error> {
    check_same_system(p, q)?;
    p.codomain().check_index(a)?;
    q.codomain().check_index(b)?;
    let n = p.system().len();
    Ok((0..n).all(|s| p.map()[s] != a || q.map()[s] == b))
}

/// Order check by kernel-pair inclusion over all pairs of system
/// behaviors.
pub fn oracle_part_leq(q: &Part, p: &Part) -> Result<bool, Error> {
    check_same_system(q, p)?;
    let n = p.system().len();
    for s1 in 0..n {
        for s2 in 0..n {
            if p.map()[s1] == p.map()[s2] && q.map()[s1] != q.map()[s2] {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Meet by explicit reflexive-symmetric-transitive closure of the
/// compatibility-generated relation on the disjoint union of the
/// codomains.
pub fn oracle_meet(p: &Part, q: &Part) -> Result<Part, Error> {
    check_same_system(p, q)?;
    let np = p.codomain().len();
    let n = np + q.codomain().len();
    let mut rel = vec![false; n * n];
    for i in 0..n {
        rel[i * n + i] = true;
    }
    for a in 0..np {
        for b in 0..q.codomain().len() {
            if oracle_compatible(p, a, q, b)? {
                rel[a * n + (np + b)] = true;
                rel[(np + b) * n + a] = true;
            }
        }
    }
    // Transitive closure.
    for k in 0..n {
        for i in 0..n {
            if rel[i * n + k] {
                for j in 0..n {
                    if rel[k * n + j] {
                        rel[i * n + j] = true;
                    }
                }
            }
        }
    }
    // Class of each element = least related element.
    let class_of = |x: usize| (0..n).find(|&y| rel[x * n + y]).unwrap();
    let mut labels: Vec<Behavior> = Vec::new();
    let mut class_index: Vec<usize> = Vec::new();
    let mut map = Vec::with_capacity(p.system().len());
    for s in 0..p.system().len() {
        let c = class_of(p.map()[s]);
        let idx = match class_index.iter().position(|&existing| existing == c) {
            Some(i) => i,
            None => {
                class_index.push(c);
                labels.push(Behavior::token(format!("m{c}")));
                labels.len() - 1
            }
        };
        map.push(idx);
    }
    let codomain = BehaviorType::new(
        format!("oracle_meet({}, {})", p.codomain().id(), q.codomain().id()),
        labels,
    )?;
    Part::new(p.system().clone(), codomain, map)
}

/// Join as the set of compatible pairs, enumerated in lexicographic
/// order.
pub fn oracle_join(p: &Part, q: &Part) -> Result<Part, Error> {
    check_same_system(p, q)?;
    let mut pairs = Vec::new();
    for a in 0..p.codomain().len() {
        for b in 0..q.codomain().len() {
            if oracle_compatible(p, a, q, b)? {
                pairs.push((a, b));
            }
        }
    }
    let labels = pairs
        .iter()
        .map(|&(a, b)| {
            Behavior::Pair(
                Box::new(p.codomain().label(a).clone()),
                Box::new(q.codomain().label(b).clone()),
            )
        })
        .collect();
    let map = (0..p.system().len())
        .map(|s| {
            pairs
                .iter()
                .position(|&(a, b)| a == p.map()[s] && b == q.map()[s])
                .expect("every realized pair is compatible")
        })
        .collect();
    let codomain = BehaviorType::new(
        format!("oracle_join({}, {})", p.codomain().id(), q.codomain().id()),
        labels,
    )?;
    Part::new(p.system().clone(), codomain, map)
}

pub fn oracle_exists_along(w: &PartOrderWitness, phi: &Constraint) -> Result<Constraint, Error> {
    check_carrier(phi, w.from_part().codomain())?;
    let np = w.from_part().codomain().len();
    Constraint::new(
        w.to_part().codomain().clone(),
        (0..w.to_part().codomain().len())
            .map(|q| (0..np).any(|p| w.factor()[p] == q && phi.holds(p)))
            .collect(),
    )
}

pub fn oracle_pullback_along(w: &PartOrderWitness, psi: &Constraint) -> Result<Constraint, Error> {
    check_carrier(psi, w.to_part().codomain())?;
    let np = w.from_part().codomain().len();
    Constraint::new(
        w.from_part().codomain().clone(),
        (0..np).map(|p| psi.holds(w.factor()[p])).collect(),
    )
}

pub fn oracle_forall_along(w: &PartOrderWitness, phi: &Constraint) -> Result<Constraint, Error> {
    check_carrier(phi, w.from_part().codomain())?;
    let np = w.from_part().codomain().len();
    Constraint::new(
        w.to_part().codomain().clone(),
        (0..w.to_part().codomain().len())
            .map(|q| (0..np).all(|p| w.factor()[p] != q || phi.holds(p)))
            .collect(),
    )
}

/// Allowance by direct quantification over the system's behaviors.
pub fn oracle_allows(p: &Part, q: &Part, phi: &Constraint) -> Result<Constraint, Error> {
    check_same_system(p, q)?;
    check_carrier(phi, p.codomain())?;
    let n = p.system().len();
    Constraint::new(
        q.codomain().clone(),
        (0..q.codomain().len())
            .map(|b| (0..n).any(|s| q.map()[s] == b && phi.holds(p.map()[s])))
            .collect(),
    )
}

/// Ensurance by direct quantification over the system's behaviors.
pub fn oracle_ensures(p: &Part, q: &Part, phi: &Constraint) -> Result<Constraint, Error> {
    check_same_system(p, q)?;
    check_carrier(phi, p.codomain())?;
    let n = p.system().len();
    Constraint::new(
        q.codomain().clone(),
        (0..q.codomain().len())
            .map(|b| (0..n).all(|s| q.map()[s] != b || phi.holds(p.map()[s])))
            .collect(),
    )
}

/// Classical Kripke semantics by the direct double loop over worlds.
pub fn oracle_kripke(
    worlds: &Arc<BehaviorType>,
    frame: &Frame,
    phi: &Constraint,
) -> Result<(Constraint, Constraint), Error> {
    check_carrier(phi, worlds)?;
    let n = worlds.len();
    let diamond = Constraint::new(
        worlds.clone(),
        (0..n)
            .map(|w| (0..n).any(|v| frame.related(w, v) && phi.holds(v)))
            .collect(),
    )?;
    let boxed = Constraint::new(
        worlds.clone(),
        (0..n)
            .map(|w| (0..n).all(|v| !frame.related(w, v) || phi.holds(v)))
            .collect(),
    )?;
    Ok((diamond, boxed))
}
