// Independent oracles shared by the integration tests. Nothing here calls the
// crate's relation or set operations; only the lattice primitives are reused.
#![allow(dead_code)]

use std::collections::HashMap;

use pkat::prelude::*;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub type Pair<A> = (A, A);
pub type Matrix<A> = Vec<Vec<Pair<A>>>;

pub fn pjoin<A: HeytingAlgebra>(x: Pair<A>, y: Pair<A>) -> Pair<A> {
    (x.0.join(y.0), x.1.meet(y.1))
}

pub fn pmeet<A: HeytingAlgebra>(x: Pair<A>, y: Pair<A>) -> Pair<A> {
    (x.0.meet(y.0), x.1.join(y.1))
}

pub fn no<A: HeytingAlgebra>() -> Pair<A> {
    (A::bottom(), A::top())
}

pub fn yes<A: HeytingAlgebra>() -> Pair<A> {
    (A::top(), A::bottom())
}

pub fn to_matrix<A: HeytingAlgebra>(r: &PRel<A>) -> Matrix<A> {
    let n = r.size();
    (0..n)
        .map(|u| (0..n).map(|v| (r.at(u, v).tt, r.at(u, v).ff)).collect())
        .collect()
}

pub fn unit<A: HeytingAlgebra>(n: usize) -> Matrix<A> {
    (0..n)
        .map(|u| (0..n).map(|v| if u == v { yes() } else { no() }).collect())
        .collect()
}

pub fn mat_join<A: HeytingAlgebra>(a: &Matrix<A>, b: &Matrix<A>) -> Matrix<A> {
    a.iter()
        .zip(b)
        .map(|(ra, rb)| ra.iter().zip(rb).map(|(&x, &y)| pjoin(x, y)).collect())
        .collect()
}

pub fn mat_mul<A: HeytingAlgebra>(a: &Matrix<A>, b: &Matrix<A>) -> Matrix<A> {
    let n = a.len();
    let mut out = vec![vec![no(); n]; n];
    for u in 0..n {
        for v in 0..n {
            let mut acc = no();
            for w in 0..n {
                acc = pjoin(acc, pmeet(a[u][w], b[w][v]));
            }
            out[u][v] = acc;
        }
    }
    out
}

/// Join of the powers R^0 … R^(2n).
pub fn star_by_powers<A: HeytingAlgebra>(r: &Matrix<A>) -> Matrix<A> {
    let n = r.len();
    let mut power = unit(n);
    let mut acc = power.clone();
    for _ in 1..=2 * n {
        power = mat_mul(&power, r);
        acc = mat_join(&acc, &power);
    }
    acc
}

pub fn random_pick<T: Copy>(rng: &mut ChaCha8Rng, items: &[T]) -> T {
    items[rng.gen_range(0..items.len())]
}

/// A relation with entries drawn uniformly from `values × values`.
pub fn random_rel<A: HeytingAlgebra>(rng: &mut ChaCha8Rng, space: &std::sync::Arc<StateSpace>, values: &[A]) -> PRel<A> {
    PRel::from_fn(space.clone(), |_, _| Weight::new(random_pick(rng, values), random_pick(rng, values)))
}

// ---- classical binary relations ----

pub type BoolRel = Vec<Vec<bool>>;

pub fn classical_identity(n: usize) -> BoolRel {
    (0..n).map(|u| (0..n).map(|v| u == v).collect()).collect()
}

pub fn classical_closure(r: &BoolRel) -> BoolRel {
    let n = r.len();
    let mut c = r.clone();
    for (u, row) in c.iter_mut().enumerate() {
        row[u] = true;
    }
    for k in 0..n {
        for u in 0..n {
            for v in 0..n {
                c[u][v] = c[u][v] || (c[u][k] && c[k][v]);
            }
        }
    }
    c
}

/// Ordinary relational semantics: union, composition, reflexive-transitive
/// closure, and complement within the identity for tests.
pub fn classical_eval(term: &Term, env: &HashMap<String, BoolRel>, n: usize) -> BoolRel {
    match term {
        Term::Zero => vec![vec![false; n]; n],
        Term::One => classical_identity(n),
        Term::Atom(name) => env[name].clone(),
        Term::Plus(a, b) => {
            let (x, y) = (classical_eval(a, env, n), classical_eval(b, env, n));
            (0..n).map(|u| (0..n).map(|v| x[u][v] || y[u][v]).collect()).collect()
        }
        Term::Dot(a, b) => {
            let (x, y) = (classical_eval(a, env, n), classical_eval(b, env, n));
            (0..n)
                .map(|u| (0..n).map(|v| (0..n).any(|w| x[u][w] && y[w][v])).collect())
                .collect()
        }
        Term::Star(a) => classical_closure(&classical_eval(a, env, n)),
        Term::Not(a) => {
            let x = classical_eval(a, env, n);
            (0..n).map(|u| (0..n).map(|v| u == v && !x[u][v]).collect()).collect()
        }
    }
}

// ---- random terms ----

/// Any syntactically valid term of depth at most `depth`.
pub fn random_term(rng: &mut ChaCha8Rng, depth: usize, atoms: &[&str]) -> Term {
    if depth <= 1 || rng.gen_bool(0.2) {
        return match rng.gen_range(0..6) {
            0 => Term::Zero,
            1 => Term::One,
            _ => Term::atom(random_pick(rng, atoms)),
        };
    }
    match rng.gen_range(0..4) {
        0 => random_term(rng, depth - 1, atoms).plus(random_term(rng, depth - 1, atoms)),
        1 => random_term(rng, depth - 1, atoms).dot(random_term(rng, depth - 1, atoms)),
        2 => random_term(rng, depth - 1, atoms).star(),
        _ => random_term(rng, depth - 1, atoms).not(),
    }
}

/// A test-sorted term over the test atoms.
pub fn random_test_term(rng: &mut ChaCha8Rng, depth: usize, tests: &[&str]) -> Term {
    if depth <= 1 || rng.gen_bool(0.3) {
        return match rng.gen_range(0..5) {
            0 => Term::Zero,
            1 => Term::One,
            _ => Term::atom(random_pick(rng, tests)),
        };
    }
    match rng.gen_range(0..3) {
        0 => random_test_term(rng, depth - 1, tests).plus(random_test_term(rng, depth - 1, tests)),
        1 => random_test_term(rng, depth - 1, tests).dot(random_test_term(rng, depth - 1, tests)),
        _ => random_test_term(rng, depth - 1, tests).not(),
    }
}

/// A well-sorted program term: complements only ever apply to tests.
pub fn random_program_term(rng: &mut ChaCha8Rng, depth: usize, programs: &[&str], tests: &[&str]) -> Term {
    if depth <= 1 || rng.gen_bool(0.25) {
        return if rng.gen_bool(0.7) {
            Term::atom(random_pick(rng, programs))
        } else {
            random_test_term(rng, 2, tests)
        };
    }
    match rng.gen_range(0..4) {
        0 => random_program_term(rng, depth - 1, programs, tests).plus(random_program_term(rng, depth - 1, programs, tests)),
        1 => random_program_term(rng, depth - 1, programs, tests).dot(random_program_term(rng, depth - 1, programs, tests)),
        2 => random_program_term(rng, depth - 1, programs, tests).star(),
        _ => random_test_term(rng, depth - 1, tests),
    }
}

pub const TWO_WORLDS: &str = include_str!("../../examples/models/two_worlds.json");
