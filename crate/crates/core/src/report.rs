//! Pass/fail bookkeeping for identity checks.

use std::fmt;

use serde::Serialize;

use crate::matrix::Matrix;
use crate::subspace::Subspace;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Inapplicable,
}

/// Counterexample data attached to a failed clause.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Witness {
    Subspaces {
        n: Option<usize>,
        relation: &'static str,
        left: Subspace,
        right: Subspace,
    },
    Matrices {
        n: Option<usize>,
        left: Matrix,
        right: Matrix,
    },
    Subspace {
        subspace: Subspace,
    },
    Text {
        n: Option<usize>,
        message: String,
    },
}

impl Witness {
    pub fn text(n: Option<usize>, message: impl Into<String>) -> Witness {
        Witness::Text {
            n,
            message: message.into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Clause {
    pub name: String,
    /// The identity being checked, written out.
    pub tag: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n_range: Option<(usize, usize)>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

/// Outcome of a single check: `Err` carries the counterexample.
pub type Check = std::result::Result<(), Witness>;

pub fn expect_eq(n: Option<usize>, left: &Subspace, right: &Subspace) -> Check {
    if left == right {
        Ok(())
    } else {
        Err(Witness::Subspaces {
            n,
            relation: "=",
            left: left.clone(),
            right: right.clone(),
        })
    }
}

pub fn expect_sub(n: Option<usize>, left: &Subspace, right: &Subspace) -> Check {
    if left.is_subspace_of(right) {
        Ok(())
    } else {
        Err(Witness::Subspaces {
            n,
            relation: "⊆",
            left: left.clone(),
            right: right.clone(),
        })
    }
}

pub fn expect_zero(n: Option<usize>, s: &Subspace) -> Check {
    expect_eq(n, s, &Subspace::zero(s.field(), s.ambient_dim()))
}

pub fn expect_matrix_eq(n: Option<usize>, left: &Matrix, right: &Matrix) -> Check {
    if left == right {
        Ok(())
    } else {
        Err(Witness::Matrices {
            n,
            left: left.clone(),
            right: right.clone(),
        })
    }
}

pub fn expect(cond: bool, n: Option<usize>, message: impl FnOnce() -> String) -> Check {
    if cond {
        Ok(())
    } else {
        Err(Witness::text(n, message()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TheoremReport {
    pub title: String,
    pub clauses: Vec<Clause>,
}

impl TheoremReport {
    pub fn new(title: impl Into<String>) -> Self {
        TheoremReport {
            title: title.into(),
            clauses: Vec::new(),
        }
    }

    /// Records a single check.
    pub fn check(&mut self, name: &str, tag: &str, result: Check) {
        let (status, witness) = match result {
            Ok(()) => (Status::Pass, None),
            Err(w) => (Status::Fail, Some(w)),
        };
        self.clauses.push(Clause {
            name: name.to_string(),
            tag: tag.to_string(),
            status,
            n_range: None,
            witness,
            note: None,
        });
    }

    /// Runs `f` for every `n` in `lo..=hi`, stopping at the first failure.
    pub fn check_range(
        &mut self,
        name: &str,
        tag: &str,
        lo: usize,
        hi: usize,
        mut f: impl FnMut(usize) -> Check,
    ) {
        let result = (lo..=hi).try_for_each(&mut f);
        self.check(name, tag, result);
        self.clauses.last_mut().unwrap().n_range = Some((lo, hi));
    }

    pub fn inapplicable(&mut self, name: &str, tag: &str, note: impl Into<String>) {
        self.clauses.push(Clause {
            name: name.to_string(),
            tag: tag.to_string(),
            status: Status::Inapplicable,
            n_range: None,
            witness: None,
            note: Some(note.into()),
        });
    }

    pub fn inapplicable_with(
        &mut self,
        name: &str,
        tag: &str,
        note: impl Into<String>,
        witness: Witness,
    ) {
        self.inapplicable(name, tag, note);
        self.clauses.last_mut().unwrap().witness = Some(witness);
    }

    /// Adds a note to the most recent clause.
    pub fn annotate(&mut self, note: impl Into<String>) {
        if let Some(c) = self.clauses.last_mut() {
            c.note = Some(note.into());
        }
    }

    pub fn extend(&mut self, other: TheoremReport) {
        self.clauses.extend(other.clauses);
    }

    pub fn failures(&self) -> impl Iterator<Item = &Clause> {
        self.clauses.iter().filter(|c| c.status == Status::Fail)
    }

    /// No clause failed. Inapplicable clauses do not count against this.
    pub fn all_passed(&self) -> bool {
        self.failures().next().is_none()
    }

    pub fn clause(&self, name: &str) -> Option<&Clause> {
        self.clauses.iter().find(|c| c.name == name)
    }

    pub fn status_of(&self, name: &str) -> Option<Status> {
        self.clause(name).map(|c| c.status)
    }
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let at = |n: &Option<usize>| n.map(|n| format!("at n = {n}: ")).unwrap_or_default();
        match self {
            Witness::Subspaces {
                n,
                relation,
                left,
                right,
            } => write!(f, "{}expected {left} {relation} {right}", at(n)),
            Witness::Matrices { n, left, right } => write!(f, "{}expected {left} = {right}", at(n)),
            Witness::Subspace { subspace } => write!(f, "{subspace}"),
            Witness::Text { n, message } => write!(f, "{}{message}", at(n)),
        }
    }
}

impl fmt::Display for TheoremReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.title)?;
        for c in &self.clauses {
            let s = match c.status {
                Status::Pass => "pass",
                Status::Fail => "FAIL",
                Status::Inapplicable => "n/a ",
            };
            write!(f, "  [{s}] {}: {}", c.name, c.tag)?;
            if let Some((lo, hi)) = c.n_range {
                write!(f, " (n = {lo}..={hi})")?;
            }
            if let Some(w) = &c.witness {
                write!(f, " -- witness: {w}")?;
            }
            if let Some(note) = &c.note {
                write!(f, " -- {note}")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}
