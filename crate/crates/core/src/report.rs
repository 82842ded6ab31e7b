//! Check results that carry their own counterexamples.

use std::fmt;

use num_traits::Zero;

use crate::tensor::{format_scalar, Scalar};

/// One nonzero residual: which sub-identity, at which basis tuple, and the
/// flattened residual value (vector, row-major matrix or tensor).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Failure {
    pub part: String,
    pub index: Vec<usize>,
    pub residual: Vec<Scalar>,
}

/// Outcome of an identity check. Every nonzero residual is kept, in
/// lexicographic order of `(part order, index)`, so the first entry is the
/// canonical witness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckReport {
    pub name: String,
    pub failures: Vec<Failure>,
}

impl CheckReport {
    pub fn new(name: impl Into<String>) -> Self {
        CheckReport {
            name: name.into(),
            failures: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    /// Same as [`passed`](Self::passed): all residuals are exactly zero.
    pub fn residual_norm_zero(&self) -> bool {
        self.passed()
    }

    pub fn witness(&self) -> Option<&Failure> {
        self.failures.first()
    }

    /// Records a residual; zero residuals are dropped.
    pub fn record<I>(&mut self, part: &str, index: &[usize], residual: I)
    where
        I: IntoIterator<Item = Scalar>,
    {
        let residual: Vec<Scalar> = residual.into_iter().collect();
        if residual.iter().any(|x| !x.is_zero()) {
            self.failures.push(Failure {
                part: part.to_string(),
                index: index.to_vec(),
                residual,
            });
        }
    }

    /// A structural failure with no numeric residual (e.g. a form that is
    /// not symmetric); stored with an empty index.
    pub fn record_flag(&mut self, part: &str, ok: bool) {
        if !ok {
            self.failures.push(Failure {
                part: part.to_string(),
                index: Vec::new(),
                residual: Vec::new(),
            });
        }
    }

    /// Appends all failures of `other`.
    pub fn absorb(&mut self, other: CheckReport) {
        self.failures.extend(other.failures);
    }

    /// Failure at a given part and index, if any.
    pub fn failure_at(&self, part: &str, index: &[usize]) -> Option<&Failure> {
        self.failures
            .iter()
            .find(|f| f.part == part && f.index == index)
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.witness() {
            None => write!(f, "{}: passed", self.name),
            Some(w) => {
                let res: Vec<String> = w.residual.iter().map(format_scalar).collect();
                write!(
                    f,
                    "{}: failed ({} nonzero residuals; first {} at {:?} = [{}])",
                    self.name,
                    self.failures.len(),
                    w.part,
                    w.index,
                    res.join(", ")
                )
            }
        }
    }
}
