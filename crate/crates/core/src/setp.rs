//! Paraconsistent sets: total functions from states to weights, with every
//! operation applied pointwise.

use std::sync::Arc;

use serde_json::{Map, Value};

use crate::algebra::{Comparison, Discrepancy, Pkat};
use crate::error::{Error, Result};
use crate::lattice::HeytingAlgebra;
use crate::space::{same_space, StateSpace};
use crate::twist::Weight;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PSet<A> {
    space: Arc<StateSpace>,
    values: Vec<Weight<A>>,
}

impl<A: HeytingAlgebra> PSet<A> {
    pub fn new(space: Arc<StateSpace>, values: Vec<Weight<A>>) -> Result<Self> {
        if values.len() != space.len() {
            return Err(Error::SpaceMismatch);
        }
        Ok(PSet { space, values })
    }

    pub fn from_fn(space: Arc<StateSpace>, mut f: impl FnMut(usize) -> Weight<A>) -> Self {
        let values = (0..space.len()).map(&mut f).collect();
        PSet { space, values }
    }

    /// The constant-bottom set.
    pub fn empty(space: &Arc<StateSpace>) -> Self {
        PSet::from_fn(space.clone(), |_| Weight::bot())
    }

    /// The constant-top set.
    pub fn full(space: &Arc<StateSpace>) -> Self {
        PSet::from_fn(space.clone(), |_| Weight::top())
    }

    pub fn values(&self) -> &[Weight<A>] {
        &self.values
    }

    pub fn get(&self, state: &str) -> Result<Weight<A>> {
        Ok(self.values[self.space.index_of(state)?])
    }

    fn zip(&self, other: &Self, f: impl Fn(Weight<A>, Weight<A>) -> Weight<A>) -> Result<Self> {
        same_space(&self.space, &other.space)?;
        let values = self.values.iter().zip(&other.values).map(|(&x, &y)| f(x, y)).collect();
        Ok(PSet {
            space: self.space.clone(),
            values,
        })
    }

    pub fn union(&self, other: &Self) -> Result<Self> {
        self.zip(other, Weight::join)
    }

    pub fn intersection(&self, other: &Self) -> Result<Self> {
        self.zip(other, Weight::meet)
    }

    pub fn complement(&self) -> Self {
        PSet {
            space: self.space.clone(),
            values: self.values.iter().map(|w| w.negate()).collect(),
        }
    }

    /// Star in closed form: the zeroth power is the top set and dominates
    /// every other power, so the result is always the top set.
    pub fn star(&self) -> Self {
        PSet::full(&self.space)
    }

    pub fn subset(&self, other: &Self) -> Result<bool> {
        same_space(&self.space, &other.space)?;
        Ok(self.values.iter().zip(&other.values).all(|(x, y)| x.leq(*y)))
    }
}

impl<A: HeytingAlgebra> Pkat for PSet<A> {
    type Lattice = A;

    fn space(&self) -> &Arc<StateSpace> {
        &self.space
    }

    fn zero(space: &Arc<StateSpace>) -> Self {
        PSet::empty(space)
    }

    fn one(space: &Arc<StateSpace>) -> Self {
        PSet::full(space)
    }

    fn plus(&self, other: &Self) -> Result<Self> {
        self.union(other)
    }

    fn dot(&self, other: &Self) -> Result<Self> {
        self.intersection(other)
    }

    fn star(&self) -> Result<Self> {
        Ok(PSet::star(self))
    }

    fn complement(&self) -> Result<Self> {
        Ok(PSet::complement(self))
    }

    fn leq(&self, other: &Self) -> Result<bool> {
        self.subset(other)
    }

    fn is_test(&self) -> bool {
        true
    }

    fn discrepancy(&self, other: &Self, comparison: Comparison) -> Option<Discrepancy<A>> {
        let i = (0..self.values.len()).find(|&i| {
            let (x, y) = (self.values[i], other.values[i]);
            match comparison {
                Comparison::Equal => x != y,
                Comparison::Below => !x.leq(y),
            }
        })?;
        Some(Discrepancy {
            row: self.space.name(i).to_string(),
            col: None,
            lhs: self.values[i],
            rhs: other.values[i],
        })
    }

    fn to_json(&self) -> Value {
        let map: Map<String, Value> = self
            .space
            .names()
            .iter()
            .zip(&self.values)
            .map(|(name, w)| (name.clone(), w.to_json()))
            .collect();
        Value::Object(map)
    }
}
