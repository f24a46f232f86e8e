use std::fmt;

use crate::algebra::{Comparison, Discrepancy, Interpretation, Pkat};
use crate::error::{Error, Result};
use crate::syntax::{parse, Term};

use super::evaluate_in;

/// `lhs = rhs` or `lhs ≤ rhs`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Relation {
    pub lhs: Term,
    pub rhs: Term,
    pub comparison: Comparison,
}

impl Relation {
    fn check<I: Interpretation>(
        &self,
        interp: &I,
    ) -> Result<Option<Discrepancy<<I::Carrier as Pkat>::Lattice>>> {
        let lhs = evaluate_in(&self.lhs, interp)?;
        let rhs = evaluate_in(&self.rhs, interp)?;
        Ok(lhs.discrepancy(&rhs, self.comparison))
    }

    fn parse(text: &str) -> Result<Self> {
        let (lhs, rhs, comparison) = if let Some((l, r)) = text.split_once("<=") {
            (l, r, Comparison::Below)
        } else if let Some((l, r)) = text.split_once('=') {
            (l, r, Comparison::Equal)
        } else {
            return Err(Error::Syntax {
                line: 1,
                column: 1,
                message: format!("expected `=` or `<=` in `{}`", text.trim()),
            });
        };
        Ok(Relation {
            lhs: parse(lhs)?,
            rhs: parse(rhs)?,
            comparison,
        })
    }
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let op = match self.comparison {
            Comparison::Equal => "=",
            Comparison::Below => "<=",
        };
        write!(f, "{} {op} {}", self.lhs, self.rhs)
    }
}

/// An equation, an inequation, or a conditional inequation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Claim {
    pub premise: Option<Relation>,
    pub conclusion: Relation,
}

impl Claim {
    pub fn equation(lhs: Term, rhs: Term) -> Self {
        Claim {
            premise: None,
            conclusion: Relation {
                lhs,
                rhs,
                comparison: Comparison::Equal,
            },
        }
    }

    pub fn inequation(lhs: Term, rhs: Term) -> Self {
        Claim {
            premise: None,
            conclusion: Relation {
                lhs,
                rhs,
                comparison: Comparison::Below,
            },
        }
    }

    /// Parses `t = u`, `t <= u`, or `t <= u -> v <= w`.
    pub fn parse(text: &str) -> Result<Self> {
        match text.split_once("->") {
            Some((premise, conclusion)) => Ok(Claim {
                premise: Some(Relation::parse(premise)?),
                conclusion: Relation::parse(conclusion)?,
            }),
            None => Ok(Claim {
                premise: None,
                conclusion: Relation::parse(text)?,
            }),
        }
    }

    /// Atom names in order of first occurrence.
    pub fn atoms(&self) -> Vec<String> {
        let mut out: Vec<String> = Vec::new();
        let relations = self.premise.iter().chain([&self.conclusion]);
        for term in relations.flat_map(|r| [&r.lhs, &r.rhs]) {
            for a in term.atoms() {
                if !out.contains(&a) {
                    out.push(a);
                }
            }
        }
        out
    }

    /// The first violation of the claim under `interp`, if any. A claim whose
    /// premise fails is satisfied.
    pub fn check<I: Interpretation>(
        &self,
        interp: &I,
    ) -> Result<Option<Discrepancy<<I::Carrier as Pkat>::Lattice>>> {
        if let Some(premise) = &self.premise {
            if premise.check(interp)?.is_some() {
                return Ok(None);
            }
        }
        self.conclusion.check(interp)
    }
}

impl fmt::Display for Claim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.premise {
            Some(p) => write!(f, "{p} -> {}", self.conclusion),
            None => write!(f, "{}", self.conclusion),
        }
    }
}
