//! Paraconsistent relations: weight matrices over a finite state space.
//!
//! Addition is the entrywise twisted join. Composition is the matrix product
//! that aggregates with join and combines with meet. Star is the least
//! fixpoint of `S ↦ 1 + R·S`. Tests are the subidentity matrices, whose
//! off-diagonal entries are all `(0, 1)`.

use std::fmt::Write as _;
use std::ops::Deref;
use std::sync::Arc;

use serde_json::{Map, Value};

use crate::algebra::{Comparison, Discrepancy, Pkat};
use crate::error::{Error, Result};
use crate::lattice::HeytingAlgebra;
use crate::space::{same_space, StateSpace};
use crate::twist::Weight;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PRel<A> {
    space: Arc<StateSpace>,
    // row-major, n * n
    entries: Vec<Weight<A>>,
}

/// Result of the star fixpoint together with the number of steps it took.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StarRun<A> {
    pub closure: PRel<A>,
    pub iterations: usize,
}

impl<A: HeytingAlgebra> PRel<A> {
    pub fn new(space: Arc<StateSpace>, entries: Vec<Weight<A>>) -> Result<Self> {
        if entries.len() != space.len() * space.len() {
            return Err(Error::SpaceMismatch);
        }
        Ok(PRel { space, entries })
    }

    pub fn from_fn(space: Arc<StateSpace>, mut f: impl FnMut(usize, usize) -> Weight<A>) -> Self {
        let n = space.len();
        let mut entries = Vec::with_capacity(n * n);
        for u in 0..n {
            for v in 0..n {
                entries.push(f(u, v));
            }
        }
        PRel { space, entries }
    }

    /// `(1, 0)` on the diagonal and `(0, 1)` elsewhere.
    pub fn identity(space: &Arc<StateSpace>) -> Self {
        PRel::from_fn(space.clone(), |u, v| {
            if u == v {
                Weight::top()
            } else {
                Weight::bot()
            }
        })
    }

    /// `(0, 1)` everywhere.
    pub fn zero(space: &Arc<StateSpace>) -> Self {
        PRel::from_fn(space.clone(), |_, _| Weight::bot())
    }

    pub fn space(&self) -> &Arc<StateSpace> {
        &self.space
    }

    pub fn size(&self) -> usize {
        self.space.len()
    }

    pub fn at(&self, u: usize, v: usize) -> Weight<A> {
        self.entries[u * self.size() + v]
    }

    pub fn get(&self, u: &str, v: &str) -> Result<Weight<A>> {
        Ok(self.at(self.space.index_of(u)?, self.space.index_of(v)?))
    }

    /// A copy with entry `(u, v)` replaced.
    pub fn with_entry(mut self, u: &str, v: &str, w: Weight<A>) -> Result<Self> {
        let (i, j) = (self.space.index_of(u)?, self.space.index_of(v)?);
        let n = self.size();
        self.entries[i * n + j] = w;
        Ok(self)
    }

    /// `(row, col, weight)` for every entry, row-major.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, Weight<A>)> + '_ {
        let n = self.size();
        self.entries.iter().enumerate().map(move |(k, &w)| (k / n, k % n, w))
    }

    pub fn is_subidentity(&self) -> bool {
        self.entries().all(|(u, v, w)| u == v || w == Weight::bot())
    }

    pub fn plus(&self, other: &Self) -> Result<Self> {
        same_space(&self.space, &other.space)?;
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(&x, &y)| x.join(y))
            .collect();
        Ok(PRel {
            space: self.space.clone(),
            entries,
        })
    }

    pub fn dot(&self, other: &Self) -> Result<Self> {
        same_space(&self.space, &other.space)?;
        let n = self.size();
        Ok(PRel::from_fn(self.space.clone(), |u, v| {
            (0..n).fold(Weight::bot(), |acc, w| acc.join(self.at(u, w).meet(other.at(w, v))))
        }))
    }

    /// Reflexive-transitive closure by fixpoint iteration from the identity.
    pub fn star_run(&self) -> Result<StarRun<A>> {
        let one = PRel::identity(&self.space);
        let limit = self.size() + 1;
        let mut current = one.clone();
        for step in 1..=limit {
            let next = one.plus(&self.dot(&current)?)?;
            if next == current {
                return Ok(StarRun {
                    closure: next,
                    iterations: step,
                });
            }
            current = next;
        }
        Err(Error::StarDiverged(limit))
    }

    pub fn star(&self) -> Result<Self> {
        self.star_run().map(|run| run.closure)
    }

    pub fn leq(&self, other: &Self) -> Result<bool> {
        same_space(&self.space, &other.space)?;
        Ok(self.entries.iter().zip(&other.entries).all(|(x, y)| x.leq(*y)))
    }

    /// The relation as a list of `[from, to, tt, ff]` entries.
    pub fn to_entry_list(&self) -> Value {
        Value::Array(
            self.entries()
                .map(|(u, v, w)| {
                    let mut row = vec![
                        Value::from(self.space.name(u)),
                        Value::from(self.space.name(v)),
                    ];
                    row.extend(w.to_json().as_array().cloned().unwrap_or_default());
                    Value::Array(row)
                })
                .collect(),
        )
    }

    /// Aligned matrix rendering, one row per source state.
    pub fn render(&self, unicode: bool) -> String {
        let n = self.size();
        let names = self.space.names();
        let cells: Vec<String> = self.entries.iter().map(|w| w.render(unicode)).collect();
        let label_width = names.iter().map(|s| s.chars().count()).max().unwrap_or(0);
        let widths: Vec<usize> = (0..n)
            .map(|v| {
                (0..n)
                    .map(|u| cells[u * n + v].chars().count())
                    .chain([names[v].chars().count()])
                    .max()
                    .unwrap_or(0)
            })
            .collect();
        let mut out = String::new();
        let mut line = " ".repeat(label_width);
        for v in 0..n {
            let _ = write!(line, "  {:<w$}", names[v], w = widths[v]);
        }
        out.push_str(line.trim_end());
        out.push('\n');
        for u in 0..n {
            let mut line = format!("{:<w$}", names[u], w = label_width);
            for v in 0..n {
                let _ = write!(line, "  {:<w$}", cells[u * n + v], w = widths[v]);
            }
            out.push_str(line.trim_end());
            out.push('\n');
        }
        out
    }
}

impl<A: HeytingAlgebra> Pkat for PRel<A> {
    type Lattice = A;

    fn space(&self) -> &Arc<StateSpace> {
        &self.space
    }

    fn zero(space: &Arc<StateSpace>) -> Self {
        PRel::zero(space)
    }

    fn one(space: &Arc<StateSpace>) -> Self {
        PRel::identity(space)
    }

    fn plus(&self, other: &Self) -> Result<Self> {
        PRel::plus(self, other)
    }

    fn dot(&self, other: &Self) -> Result<Self> {
        PRel::dot(self, other)
    }

    fn star(&self) -> Result<Self> {
        PRel::star(self)
    }

    fn complement(&self) -> Result<Self> {
        Ok(PTest::try_from(self.clone())?.complement().into_rel())
    }

    fn leq(&self, other: &Self) -> Result<bool> {
        PRel::leq(self, other)
    }

    fn is_test(&self) -> bool {
        self.is_subidentity()
    }

    fn discrepancy(&self, other: &Self, comparison: Comparison) -> Option<Discrepancy<A>> {
        let (u, v, lhs) = self.entries().find(|&(u, v, x)| {
            let y = other.at(u, v);
            match comparison {
                Comparison::Equal => x != y,
                Comparison::Below => !x.leq(y),
            }
        })?;
        Some(Discrepancy {
            row: self.space.name(u).to_string(),
            col: Some(self.space.name(v).to_string()),
            lhs,
            rhs: other.at(u, v),
        })
    }

    fn to_json(&self) -> Value {
        if self.is_subidentity() {
            let map: Map<String, Value> = (0..self.size())
                .map(|i| (self.space.name(i).to_string(), self.at(i, i).to_json()))
                .collect();
            Value::Object(map)
        } else {
            self.to_entry_list()
        }
    }
}

/// A subidentity relation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PTest<A>(PRel<A>);

impl<A: HeytingAlgebra> PTest<A> {
    pub fn from_diagonal(space: Arc<StateSpace>, diagonal: &[Weight<A>]) -> Result<Self> {
        if diagonal.len() != space.len() {
            return Err(Error::SpaceMismatch);
        }
        Ok(PTest(PRel::from_fn(space, |u, v| {
            if u == v {
                diagonal[u]
            } else {
                Weight::bot()
            }
        })))
    }

    pub fn identity(space: &Arc<StateSpace>) -> Self {
        PTest(PRel::identity(space))
    }

    pub fn zero(space: &Arc<StateSpace>) -> Self {
        PTest(PRel::zero(space))
    }

    pub fn diagonal(&self) -> Vec<Weight<A>> {
        (0..self.0.size()).map(|i| self.0.at(i, i)).collect()
    }

    /// Negates the diagonal; off-diagonal entries stay `(0, 1)`.
    pub fn complement(&self) -> Self {
        PTest(PRel::from_fn(self.0.space.clone(), |u, v| {
            if u == v {
                self.0.at(u, u).negate()
            } else {
                Weight::bot()
            }
        }))
    }

    pub fn plus(&self, other: &Self) -> Result<Self> {
        Ok(PTest(self.0.plus(&other.0)?))
    }

    pub fn dot(&self, other: &Self) -> Result<Self> {
        Ok(PTest(self.0.dot(&other.0)?))
    }

    pub fn as_rel(&self) -> &PRel<A> {
        &self.0
    }

    pub fn into_rel(self) -> PRel<A> {
        self.0
    }
}

impl<A: HeytingAlgebra> TryFrom<PRel<A>> for PTest<A> {
    type Error = Error;

    fn try_from(rel: PRel<A>) -> Result<Self> {
        let offending = rel.entries().find(|&(u, v, w)| u != v && w != Weight::bot());
        match offending {
            Some((u, v, _)) => Err(Error::NotSubidentity(
                rel.space.name(u).to_string(),
                rel.space.name(v).to_string(),
            )),
            None => Ok(PTest(rel)),
        }
    }
}

impl<A> Deref for PTest<A> {
    type Target = PRel<A>;

    fn deref(&self) -> &PRel<A> {
        &self.0
    }
}
