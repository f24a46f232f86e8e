use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::syntax::Sort;

use super::Claim;

/// The axiom schemes of Kleene algebra with tests. The unit and
/// annihilation laws are split into their left and right halves so that each
/// scheme is a single (in)equation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AxiomId {
    PlusAssoc,
    PlusComm,
    PlusZero,
    PlusIdem,
    DotAssoc,
    DotOneLeft,
    DotOneRight,
    DistLeft,
    DistRight,
    ZeroLeft,
    ZeroRight,
    UnfoldLeft,
    UnfoldRight,
    InductLeft,
    InductRight,
    TestPlusOverDot,
    TestDotComm,
    TestDotOverPlus,
    TestDotIdem,
    DoubleNegation,
    TestPlusOne,
    NonContradiction,
    ExcludedMiddle,
}

const TABLE: [(AxiomId, &str, &str); 23] = [
    (AxiomId::PlusAssoc, "1", "p + (q + r) = p + q + r"),
    (AxiomId::PlusComm, "2", "p + q = q + p"),
    (AxiomId::PlusZero, "3", "p + 0 = p"),
    (AxiomId::PlusIdem, "4", "p + p = p"),
    (AxiomId::DotAssoc, "5", "p;(q;r) = p;q;r"),
    (AxiomId::DotOneLeft, "6l", "1;p = p"),
    (AxiomId::DotOneRight, "6r", "p;1 = p"),
    (AxiomId::DistLeft, "7", "p;(q + r) = p;q + p;r"),
    (AxiomId::DistRight, "8", "(p + q);r = p;r + q;r"),
    (AxiomId::ZeroLeft, "9l", "0;p = 0"),
    (AxiomId::ZeroRight, "9r", "p;0 = 0"),
    (AxiomId::UnfoldLeft, "10", "1 + p;p* = p*"),
    (AxiomId::UnfoldRight, "11", "1 + p*;p = p*"),
    (AxiomId::InductLeft, "14", "p;r <= r -> p*;r <= r"),
    (AxiomId::InductRight, "15", "r;p <= r -> r;p* <= r"),
    (AxiomId::TestPlusOverDot, "213", "a + b;c = (a + b);(a + c)"),
    (AxiomId::TestDotComm, "214", "a;b = b;a"),
    (AxiomId::TestDotOverPlus, "215", "a;b + c = (a + c);(b + c)"),
    (AxiomId::TestDotIdem, "216", "a;a = a"),
    (AxiomId::DoubleNegation, "217", "!!a = a"),
    (AxiomId::TestPlusOne, "218", "a + 1 = 1"),
    (AxiomId::NonContradiction, "219", "a;!a = 0"),
    (AxiomId::ExcludedMiddle, "220", "a + !a = 1"),
];

impl AxiomId {
    pub fn all() -> impl Iterator<Item = AxiomId> {
        TABLE.iter().map(|(id, ..)| *id)
    }

    fn row(self) -> &'static (AxiomId, &'static str, &'static str) {
        TABLE.iter().find(|(id, ..)| *id == self).expect("every axiom is tabulated")
    }

    /// Short label such as `10` or `6l`.
    pub fn label(self) -> &'static str {
        self.row().1
    }

    pub fn statement(self) -> &'static str {
        self.row().2
    }

    pub fn claim(self) -> Claim {
        Claim::parse(self.statement()).expect("axiom statements parse")
    }

    /// Sort of every variable in the scheme.
    pub fn sort(self) -> Sort {
        if self >= AxiomId::TestPlusOverDot {
            Sort::Test
        } else {
            Sort::Program
        }
    }

    /// The two Boolean axioms dropped by the paraconsistent variant.
    pub fn is_boolean(self) -> bool {
        matches!(self, AxiomId::NonContradiction | AxiomId::ExcludedMiddle)
    }
}

impl fmt::Display for AxiomId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.label())
    }
}

impl FromStr for AxiomId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key = s.trim().trim_start_matches('(').trim_end_matches(')');
        TABLE
            .iter()
            .find(|(_, label, _)| *label == key)
            .map(|(id, ..)| *id)
            .ok_or_else(|| Error::Syntax {
                line: 1,
                column: 1,
                message: format!("unknown axiom `{s}`"),
            })
    }
}
