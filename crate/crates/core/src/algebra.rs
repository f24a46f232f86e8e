//! The operations shared by every concrete PKAT carrier, and the notion of an
//! interpretation of atom names into such a carrier.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use serde_json::{Map, Value};

use crate::error::{Error, Result};
use crate::lattice::HeytingAlgebra;
use crate::space::StateSpace;
use crate::syntax::Declarations;
use crate::twist::Weight;

/// How two sides of a claim are compared.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Comparison {
    Equal,
    Below,
}

/// The first position where a comparison fails.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Discrepancy<A> {
    pub row: String,
    /// `None` for pointwise carriers indexed by a single state.
    pub col: Option<String>,
    pub lhs: Weight<A>,
    pub rhs: Weight<A>,
}

impl<A: HeytingAlgebra> Discrepancy<A> {
    pub fn location(&self) -> String {
        match &self.col {
            Some(col) => format!("({}, {})", self.row, col),
            None => format!("({})", self.row),
        }
    }
}

/// A carrier of a paraconsistent Kleene algebra with tests.
///
/// The same type is used for both sorts; [`Pkat::is_test`] tells whether an
/// element belongs to the test sort.
pub trait Pkat: Clone + PartialEq + fmt::Debug {
    type Lattice: HeytingAlgebra;

    fn space(&self) -> &Arc<StateSpace>;
    fn zero(space: &Arc<StateSpace>) -> Self;
    fn one(space: &Arc<StateSpace>) -> Self;
    fn plus(&self, other: &Self) -> Result<Self>;
    fn dot(&self, other: &Self) -> Result<Self>;
    fn star(&self) -> Result<Self>;
    /// Complement; defined on tests only.
    fn complement(&self) -> Result<Self>;
    /// The induced order `x ≤ y` iff `x + y = y`, computed entrywise.
    fn leq(&self, other: &Self) -> Result<bool>;
    fn is_test(&self) -> bool;
    /// First entry where `self` and `other` violate `comparison`.
    fn discrepancy(&self, other: &Self, comparison: Comparison) -> Option<Discrepancy<Self::Lattice>>;
    fn to_json(&self) -> Value;
}

/// Maps atom names to elements of a carrier.
pub trait Interpretation {
    type Carrier: Pkat;

    fn space(&self) -> &Arc<StateSpace>;
    fn program(&self, name: &str) -> Option<&Self::Carrier>;
    fn test(&self, name: &str) -> Option<&Self::Carrier>;
    fn declarations(&self) -> Declarations;
}

/// A plain assignment of carrier elements to program and test names.
#[derive(Debug, Clone, PartialEq)]
pub struct Valuation<T> {
    space: Arc<StateSpace>,
    programs: BTreeMap<String, T>,
    tests: BTreeMap<String, T>,
}

impl<T: Pkat> Valuation<T> {
    pub fn new(space: Arc<StateSpace>) -> Self {
        Valuation {
            space,
            programs: BTreeMap::new(),
            tests: BTreeMap::new(),
        }
    }

    pub fn with_program(mut self, name: impl Into<String>, value: T) -> Result<Self> {
        self.insert(name.into(), value, false)?;
        Ok(self)
    }

    pub fn with_test(mut self, name: impl Into<String>, value: T) -> Result<Self> {
        self.insert(name.into(), value, true)?;
        Ok(self)
    }

    fn insert(&mut self, name: String, value: T, test: bool) -> Result<()> {
        crate::space::same_space(&self.space, value.space())?;
        if test && !value.is_test() {
            return Err(Error::InvalidModel(format!("`{name}` is bound to a non-test value")));
        }
        let (mine, other) = if test {
            (&mut self.tests, &self.programs)
        } else {
            (&mut self.programs, &self.tests)
        };
        if other.contains_key(&name) {
            return Err(Error::AmbiguousName(name));
        }
        mine.insert(name, value);
        Ok(())
    }

    pub fn programs(&self) -> &BTreeMap<String, T> {
        &self.programs
    }

    pub fn tests(&self) -> &BTreeMap<String, T> {
        &self.tests
    }

    pub fn to_json(&self) -> Value {
        let mut out = Map::new();
        for (name, value) in self.programs.iter().chain(&self.tests) {
            out.insert(name.clone(), value.to_json());
        }
        Value::Object(out)
    }
}

impl<T: Pkat> Interpretation for Valuation<T> {
    type Carrier = T;

    fn space(&self) -> &Arc<StateSpace> {
        &self.space
    }

    fn program(&self, name: &str) -> Option<&T> {
        self.programs.get(name)
    }

    fn test(&self, name: &str) -> Option<&T> {
        self.tests.get(name)
    }

    fn declarations(&self) -> Declarations {
        Declarations::new(self.programs.keys().cloned(), self.tests.keys().cloned())
    }
}
