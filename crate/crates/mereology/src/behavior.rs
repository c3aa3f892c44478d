//! Finite behavior types and their elements.
//!
//! A [`BehaviorType`] is a finite, inhabited set of pairwise-distinct
//! [`Behavior`] labels. Every numeric component of a label is an exact
//! rational, so label equality (and therefore partitioning) is exact.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;

use crate::error::Error;

/// Exact rational scalar used for every numeric behavior component.
pub type Rational = num_rational::BigRational;

/// Build a rational from an integer numerator and denominator.
///
/// Panics if `denom` is zero.
pub fn rat(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

/// Build a rational from an integer.
pub fn int(value: i64) -> Rational {
    Rational::from_integer(BigInt::from(value))
}

/// One element of a behavior type.
///
/// Labels are structural: an opaque token, a tuple of named rational
/// values, a time-indexed trajectory of such tuples, or a pair of labels
/// (the codomain shape produced by joins).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Behavior {
    Token(String),
    Point(Vec<(String, Rational)>),
    Trajectory(Vec<Vec<(String, Rational)>>),
    Pair(Box<Behavior>, Box<Behavior>),
}

impl Behavior {
    pub fn token(name: impl Into<String>) -> Behavior {
        Behavior::Token(name.into())
    }

    pub fn point(pairs: Vec<(String, Rational)>) -> Behavior {
        Behavior::Point(pairs)
    }

    /// Flat `(name, value)` bindings visible to expressions and
    /// projections.
    ///
    /// Trajectory components are exposed under `"{var}{t}"`. Pair labels
    /// expose the union of both sides; a name already seen is skipped
    /// (the two sides of a compatible pair always agree on shared names).
    pub fn bindings(&self) -> Vec<(String, Rational)> {
        let mut out = Vec::new();
        self.collect_bindings(&mut out);
        out
    }

    fn collect_bindings(&self, out: &mut Vec<(String, Rational)>) {
        match self {
            Behavior::Token(_) => {}
            Behavior::Point(pairs) => {
                for (name, value) in pairs {
                    if !out.iter().any(|(n, _)| n == name) {
                        out.push((name.clone(), value.clone()));
                    }
                }
            }
            Behavior::Trajectory(steps) => {
                for (t, step) in steps.iter().enumerate() {
                    for (name, value) in step {
                        let flat = format!("{name}{t}");
                        if !out.iter().any(|(n, _)| n == &flat) {
                            out.push((flat, value.clone()));
                        }
                    }
                }
            }
            Behavior::Pair(left, right) => {
                left.collect_bindings(out);
                right.collect_bindings(out);
            }
        }
    }

    /// The numeric components in binding order, used to match behavior
    /// literals written as bare values or tuples.
    pub fn values(&self) -> Vec<Rational> {
        self.bindings().into_iter().map(|(_, v)| v).collect()
    }
}

fn fmt_inner(b: &Behavior, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    match b {
        Behavior::Token(name) => write!(f, "{name}"),
        Behavior::Point(pairs) => {
            for (i, (name, value)) in pairs.iter().enumerate() {
                if i > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{name}={value}")?;
            }
            Ok(())
        }
        Behavior::Trajectory(steps) => {
            let mut first = true;
            for (t, step) in steps.iter().enumerate() {
                for (name, value) in step {
                    if !first {
                        write!(f, ", ")?;
                    }
                    first = false;
                    write!(f, "{name}{t}={value}")?;
                }
            }
            Ok(())
        }
        Behavior::Pair(left, right) => {
            fmt_inner(left, f)?;
            write!(f, ", ")?;
            fmt_inner(right, f)
        }
    }
}

impl fmt::Display for Behavior {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Behavior::Token(name) => write!(f, "{name}"),
            other => {
                write!(f, "(")?;
                fmt_inner(other, f)?;
                write!(f, ")")
            }
        }
    }
}

/// A finite, inhabited set of distinct behavior labels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BehaviorType {
    id: String,
    labels: Vec<Behavior>,
}

impl BehaviorType {
    /// Checks that `labels` is nonempty and pairwise distinct.
    pub fn new(id: impl Into<String>, labels: Vec<Behavior>) -> Result<Arc<BehaviorType>, Error> {
        let id = id.into();
        if labels.is_empty() {
            return Err(Error::EmptyBehaviorType { id });
        }
        let mut seen = std::collections::HashSet::new();
        for label in &labels {
            if !seen.insert(label) {
                return Err(Error::DuplicateLabel {
                    id,
                    label: label.to_string(),
                });
            }
        }
        Ok(Arc::new(BehaviorType { id, labels }))
    }

    /// A behavior type whose labels are opaque tokens.
    pub fn tokens<I, S>(id: impl Into<String>, names: I) -> Result<Arc<BehaviorType>, Error>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        BehaviorType::new(id, names.into_iter().map(|n| Behavior::token(n)).collect())
    }

    pub fn id(&self) -> &str {
        &self.id
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn labels(&self) -> &[Behavior] {
        &self.labels
    }

    pub fn label(&self, index: usize) -> &Behavior {
        &self.labels[index]
    }

    pub fn index_of(&self, label: &Behavior) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn check_index(&self, index: usize) -> Result<(), Error> {
        if index < self.labels.len() {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange {
                id: self.id.clone(),
                index,
                size: self.labels.len(),
            })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_empty() {
        let err = BehaviorType::new("S", vec![]).unwrap_err();
        assert_eq!(err, Error::EmptyBehaviorType { id: "S".into() });
    }

    #[test]
    fn rejects_duplicate_labels() {
        let err = BehaviorType::tokens("S", ["a", "b", "a"]).unwrap_err();
        assert!(matches!(err, Error::DuplicateLabel { .. }));
    }

    #[test]
    fn point_display_and_values() {
        let b = Behavior::point(vec![("p".into(), int(1)), ("w".into(), rat(9, 2))]);
        assert_eq!(b.to_string(), "(p=1, w=9/2)");
        assert_eq!(b.values(), vec![int(1), rat(9, 2)]);
    }

    #[test]
    fn trajectory_bindings_are_time_indexed() {
        let b = Behavior::Trajectory(vec![
            vec![("T".into(), int(10))],
            vec![("T".into(), int(15))],
        ]);
        assert_eq!(
            b.bindings(),
            vec![("T0".into(), int(10)), ("T1".into(), int(15))]
        );
        assert_eq!(b.to_string(), "(T0=10, T1=15)");
    }

    #[test]
    fn pair_bindings_merge_without_duplicates() {
        let left = Behavior::point(vec![("p".into(), int(1))]);
        let right = Behavior::point(vec![("p".into(), int(1)), ("w".into(), int(4))]);
        let pair = Behavior::Pair(Box::new(left), Box::new(right));
        assert_eq!(
            pair.bindings(),
            vec![("p".into(), int(1)), ("w".into(), int(4))]
        );
        assert_eq!(pair.to_string(), "(p=1, p=1, w=4)");
    }
}
