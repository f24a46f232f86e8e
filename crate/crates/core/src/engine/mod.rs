//! Term evaluation, axiom checking and counterexample search.

mod axioms;
mod claim;
mod search;
mod verdict;

pub use axioms::AxiomId;
pub use claim::{Claim, Relation};
pub use search::{Enumerable, Mode, SearchConfig, WeightSpace};
pub use verdict::{Report, Status, Verdict, Witness, WitnessReport};

use crate::algebra::{Interpretation, Pkat, Valuation};
use crate::error::{Error, Result};
use crate::lattice::HeytingAlgebra;
use crate::plts::Model;
use crate::relp::PRel;
use crate::space::StateSpace;
use crate::syntax::{sort_check, Declarations, Sort, Term};

/// Interprets `term` compositionally in `interp`, after sort checking it
/// against the interpretation's declarations.
pub fn evaluate_in<I: Interpretation>(term: &Term, interp: &I) -> Result<I::Carrier> {
    sort_check(term, &interp.declarations())?;
    eval(term, interp)
}

fn eval<I: Interpretation>(term: &Term, interp: &I) -> Result<I::Carrier> {
    Ok(match term {
        Term::Zero => I::Carrier::zero(interp.space()),
        Term::One => I::Carrier::one(interp.space()),
        Term::Atom(name) => interp
            .program(name)
            .or_else(|| interp.test(name))
            .cloned()
            .ok_or_else(|| Error::UndeclaredAtom(name.clone()))?,
        Term::Plus(a, b) => eval(a, interp)?.plus(&eval(b, interp)?)?,
        Term::Dot(a, b) => eval(a, interp)?.dot(&eval(b, interp)?)?,
        Term::Star(a) => eval(a, interp)?.star()?,
        Term::Not(a) => eval(a, interp)?.complement()?,
    })
}

/// Interprets `term` as a paraconsistent relation over `model`.
pub fn evaluate<A: HeytingAlgebra>(term: &Term, model: &Model<A>) -> Result<PRel<A>> {
    evaluate_in(term, model)
}

/// The model's programs and tests as a plain valuation.
pub fn model_valuation<A: HeytingAlgebra>(model: &Model<A>) -> Valuation<PRel<A>> {
    let mut val = Valuation::new(model.states().clone());
    for (name, rel) in model.programs() {
        val = val
            .with_program(name.clone(), rel.clone())
            .expect("model names are unique and share the model's states");
    }
    for (name, test) in model.tests() {
        val = val
            .with_test(name.clone(), test.as_rel().clone())
            .expect("model tests are subidentities");
    }
    val
}

/// Checks one axiom scheme over paraconsistent relations.
pub fn check_axiom<A: HeytingAlgebra>(
    id: AxiomId,
    weights: &WeightSpace<A>,
    n_states: usize,
    mode: Mode,
    config: &SearchConfig,
) -> Result<Verdict<PRel<A>>> {
    check_axiom_in::<PRel<A>>(id, weights, n_states, mode, config)
}

/// Checks one axiom scheme over any enumerable carrier.
pub fn check_axiom_in<T: Enumerable>(
    id: AxiomId,
    weights: &WeightSpace<T::Lattice>,
    n_states: usize,
    mode: Mode,
    config: &SearchConfig,
) -> Result<Verdict<T>> {
    let claim = id.claim();
    let vars: Vec<(String, Sort)> = claim.atoms().into_iter().map(|v| (v, id.sort())).collect();
    let space = StateSpace::numbered(n_states)?;
    search::check_claim::<T>(&claim, &vars, &space, weights, mode, config)
}

/// Outcome of the search for tests violating non-contradiction and excluded
/// middle.
#[derive(Debug, Clone)]
pub struct BooleanWitness<T: Pkat> {
    pub non_contradiction: Verdict<T>,
    pub excluded_middle: Verdict<T>,
}

/// Enumerates every test over `n_states` states, in the order fixed by
/// `weights`, looking for violations of the two Boolean axioms.
pub fn find_boolean_witness<A: HeytingAlgebra>(
    weights: &WeightSpace<A>,
    n_states: usize,
) -> Result<BooleanWitness<PRel<A>>> {
    let config = SearchConfig { bound: u128::MAX };
    Ok(BooleanWitness {
        non_contradiction: check_axiom(AxiomId::NonContradiction, weights, n_states, Mode::Exhaustive, &config)?,
        excluded_middle: check_axiom(AxiomId::ExcludedMiddle, weights, n_states, Mode::Exhaustive, &config)?,
    })
}

/// Exact equality of the two terms' interpretations in `model`.
pub fn equiv<A: HeytingAlgebra>(lhs: &Term, rhs: &Term, model: &Model<A>) -> Result<Verdict<PRel<A>>> {
    let claim = Claim::equation(lhs.clone(), rhs.clone());
    verdict::single(claim, model_valuation(model))
}

/// Looks for a countermodel to `lhs = rhs` among `samples` random models.
/// A `Holds` verdict only means that no countermodel was found.
pub fn equiv_random<A: HeytingAlgebra>(
    lhs: &Term,
    rhs: &Term,
    decls: &Declarations,
    weights: &WeightSpace<A>,
    n_states: usize,
    samples: u64,
    seed: u64,
) -> Result<Verdict<PRel<A>>> {
    sort_check(lhs, decls)?;
    sort_check(rhs, decls)?;
    let claim = Claim::equation(lhs.clone(), rhs.clone());
    let vars: Vec<(String, Sort)> = claim
        .atoms()
        .into_iter()
        .map(|v| {
            let sort = decls.sort_of(&v).expect("sort checked above");
            (v, sort)
        })
        .collect();
    let space = StateSpace::numbered(n_states)?;
    search::check_claim::<PRel<A>>(
        &claim,
        &vars,
        &space,
        weights,
        Mode::Random { samples, seed },
        &SearchConfig::default(),
    )
}

/// Checks the triple `{pre} prog {post}` as `pre;prog ≤ pre;prog;post`.
pub fn hoare_check<A: HeytingAlgebra>(
    pre: &Term,
    prog: &Term,
    post: &Term,
    model: &Model<A>,
) -> Result<Verdict<PRel<A>>> {
    let decls = model.declarations();
    for cond in [pre, post] {
        if sort_check(cond, &decls)? != Sort::Test {
            return Err(Error::ConditionNotTest(cond.to_string()));
        }
    }
    sort_check(prog, &decls)?;
    let guarded = pre.clone().dot(prog.clone());
    let claim = Claim::inequation(guarded.clone(), guarded.dot(post.clone()));
    verdict::single(claim, model_valuation(model))
}

/// A single fixed valuation as a search space of size one.
pub fn check_claim_on<T: Pkat>(claim: &Claim, valuation: Valuation<T>) -> Result<Verdict<T>> {
    verdict::single(claim.clone(), valuation)
}
