use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{Pkat, Valuation};
use crate::error::{Error, Result};
use crate::lattice::{Godel, HeytingAlgebra, LatticeElem, LatticeId};
use crate::relp::PRel;
use crate::setp::PSet;
use crate::space::StateSpace;
use crate::syntax::Sort;
use crate::twist::{ConsistencyClass, Weight};

use super::claim::Claim;
use super::verdict::{Status, Verdict, Witness};

/// How an axiom's instantiation space is explored.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    Exhaustive,
    Random { samples: u64, seed: u64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchConfig {
    /// Largest instantiation space explored exhaustively.
    pub bound: u128,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig { bound: 1_000_000 }
    }
}

/// The candidate entry weights, in enumeration order: consistent pairs
/// first, then vague, then inconsistent, each group in lexicographic order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightSpace<A> {
    weights: Vec<Weight<A>>,
}

fn rank(class: ConsistencyClass) -> u8 {
    match class {
        ConsistencyClass::Consistent => 0,
        ConsistencyClass::Vague => 1,
        ConsistencyClass::Inconsistent => 2,
        ConsistencyClass::Unclassified => 3,
    }
}

impl<A: HeytingAlgebra> WeightSpace<A> {
    /// Uses `weights` as given.
    pub fn new(weights: Vec<Weight<A>>) -> Self {
        WeightSpace { weights }
    }

    /// Every pair over `values`, which must be listed in ascending order.
    pub fn over(values: &[A]) -> Self {
        let mut weights = Weight::pairs(values);
        weights.sort_by_key(|w| rank(w.classify()));
        WeightSpace { weights }
    }

    /// Just the two classical weights.
    pub fn classical() -> Self {
        WeightSpace {
            weights: vec![Weight::bot(), Weight::top()],
        }
    }

    /// The default space for the lattice: the classical weights for bool2,
    /// all nine pairs for lukasiewicz3, and the quarter grid for godel.
    pub fn standard() -> Self {
        match A::ID {
            LatticeId::Bool2 => Self::classical(),
            LatticeId::Lukasiewicz3 => Self::over(&A::finite_carrier().expect("finite")),
            LatticeId::Godel => Self::godel_grid(4),
        }
    }

    /// Pairs over `{0, 1/steps, …, 1}`. Only meaningful for godel; other
    /// lattices fall back to [`WeightSpace::standard`].
    pub fn godel_grid(steps: i64) -> Self {
        if A::ID != LatticeId::Godel {
            return Self::standard();
        }
        let values: Vec<A> = Godel::grid(steps)
            .into_iter()
            .map(|g| A::from_elem(LatticeElem::Godel(g)).expect("godel lattice"))
            .collect();
        Self::over(&values)
    }

    pub fn weights(&self) -> &[Weight<A>] {
        &self.weights
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }
}

/// Carriers whose elements can be listed and sampled entry by entry.
pub trait Enumerable: Pkat + Sized {
    /// Number of free entries in an element of `sort`.
    fn slots(n_states: usize, sort: Sort) -> usize;

    /// Builds an element from one weight per free slot.
    fn assemble(space: &Arc<StateSpace>, sort: Sort, slots: &[Weight<Self::Lattice>]) -> Self;

    fn count(n_states: usize, sort: Sort, n_weights: usize) -> u128 {
        let slots = u32::try_from(Self::slots(n_states, sort)).unwrap_or(u32::MAX);
        (n_weights as u128).checked_pow(slots).unwrap_or(u128::MAX)
    }

    /// Every element, first slot varying slowest.
    fn all(space: &Arc<StateSpace>, sort: Sort, weights: &WeightSpace<Self::Lattice>) -> Vec<Self> {
        let slots = Self::slots(space.len(), sort);
        let w = weights.weights();
        let mut out = Vec::new();
        let mut digits = vec![0usize; slots];
        if w.is_empty() && slots > 0 {
            return out;
        }
        loop {
            let picked: Vec<_> = digits.iter().map(|&d| w[d]).collect();
            out.push(Self::assemble(space, sort, &picked));
            let mut i = slots;
            loop {
                if i == 0 {
                    return out;
                }
                i -= 1;
                digits[i] += 1;
                if digits[i] < w.len() {
                    break;
                }
                digits[i] = 0;
            }
        }
    }

    /// One element with every slot drawn uniformly from `weights`.
    fn random(
        space: &Arc<StateSpace>,
        sort: Sort,
        weights: &WeightSpace<Self::Lattice>,
        rng: &mut ChaCha8Rng,
    ) -> Self {
        let w = weights.weights();
        let picked: Vec<_> = (0..Self::slots(space.len(), sort))
            .map(|_| w[rng.gen_range(0..w.len())])
            .collect();
        Self::assemble(space, sort, &picked)
    }
}

impl<A: HeytingAlgebra> Enumerable for PRel<A> {
    fn slots(n: usize, sort: Sort) -> usize {
        match sort {
            Sort::Test => n,
            Sort::Program => n * n,
        }
    }

    fn assemble(space: &Arc<StateSpace>, sort: Sort, slots: &[Weight<A>]) -> Self {
        let n = space.len();
        match sort {
            Sort::Test => PRel::from_fn(space.clone(), |u, v| if u == v { slots[u] } else { Weight::bot() }),
            Sort::Program => PRel::from_fn(space.clone(), |u, v| slots[u * n + v]),
        }
    }
}

impl<A: HeytingAlgebra> Enumerable for PSet<A> {
    fn slots(n: usize, _sort: Sort) -> usize {
        n
    }

    fn assemble(space: &Arc<StateSpace>, _sort: Sort, slots: &[Weight<A>]) -> Self {
        PSet::from_fn(space.clone(), |u| slots[u])
    }
}

fn bind<T: Pkat>(space: &Arc<StateSpace>, vars: &[(String, Sort)], values: Vec<T>) -> Valuation<T> {
    let mut val = Valuation::new(space.clone());
    for ((name, sort), value) in vars.iter().zip(values) {
        val = match sort {
            Sort::Test => val.with_test(name.clone(), value),
            Sort::Program => val.with_program(name.clone(), value),
        }
        .expect("generated values fit their sort and space");
    }
    val
}

/// Searches the instantiations of `vars` for a violation of `claim`. The
/// reported witness is the first violation in enumeration (or seed) order.
pub(crate) fn check_claim<T: Enumerable>(
    claim: &Claim,
    vars: &[(String, Sort)],
    space: &Arc<StateSpace>,
    weights: &WeightSpace<T::Lattice>,
    mode: Mode,
    config: &SearchConfig,
) -> Result<Verdict<T>> {
    let mut searched = 0u64;
    let check = |values: Vec<T>, searched: u64| -> Result<Option<Witness<T>>> {
        let valuation = bind(space, vars, values);
        Ok(claim.check(&valuation)?.map(|discrepancy| Witness {
            claim: claim.clone(),
            valuation,
            discrepancy,
            candidate: searched,
        }))
    };
    match mode {
        Mode::Exhaustive => {
            let size = vars.iter().fold(1u128, |acc, (_, sort)| {
                acc.saturating_mul(T::count(space.len(), *sort, weights.len()))
            });
            if size > config.bound {
                return Err(Error::SpaceTooLarge {
                    size,
                    bound: config.bound,
                });
            }
            let pools: Vec<Vec<T>> = vars.iter().map(|(_, sort)| T::all(space, *sort, weights)).collect();
            if pools.iter().any(Vec::is_empty) {
                return Ok(Verdict::unknown(0));
            }
            let mut digits = vec![0usize; vars.len()];
            loop {
                searched += 1;
                let values = digits.iter().zip(&pools).map(|(&d, pool)| pool[d].clone()).collect();
                if let Some(w) = check(values, searched)? {
                    return Ok(Verdict::fails(w, searched));
                }
                let mut i = vars.len();
                loop {
                    if i == 0 {
                        return Ok(Verdict::holds(searched));
                    }
                    i -= 1;
                    digits[i] += 1;
                    if digits[i] < pools[i].len() {
                        break;
                    }
                    digits[i] = 0;
                }
            }
        }
        Mode::Random { samples, seed } => {
            if weights.is_empty() || samples == 0 {
                return Ok(Verdict::unknown(0));
            }
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            for _ in 0..samples {
                searched += 1;
                let values = vars.iter().map(|(_, sort)| T::random(space, *sort, weights, &mut rng)).collect();
                if let Some(w) = check(values, searched)? {
                    return Ok(Verdict::fails(w, searched));
                }
            }
            Ok(Verdict {
                status: Status::Holds,
                witness: None,
                searched,
            })
        }
    }
}
