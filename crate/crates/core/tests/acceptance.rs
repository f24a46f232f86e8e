// One test per acceptance criterion. Each prints a single PASS/FAIL line and
// enforces its time limit where one is set.

mod common;

use std::collections::HashMap;
use std::time::{Duration, Instant};

use common::*;
use pkat::laws::{heyting_failures, twist_failures};
use pkat::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Check = Result<String, String>;

fn criterion(n: u32, title: &str, limit: Option<Duration>, body: impl FnOnce() -> Check) {
    let start = Instant::now();
    let outcome = body();
    let elapsed = start.elapsed();
    let slow = limit.is_some_and(|l| elapsed > l);
    let budget = limit.map(|l| format!(", limit {l:?}")).unwrap_or_default();
    let line = match (&outcome, slow) {
        (Ok(detail), false) => format!("PASS criterion {n:>2} {title}: {detail} [{elapsed:.2?}{budget}]"),
        (Ok(detail), true) => format!("FAIL criterion {n:>2} {title}: {detail} but too slow [{elapsed:.2?}{budget}]"),
        (Err(why), _) => format!("FAIL criterion {n:>2} {title}: {why} [{elapsed:.2?}{budget}]"),
    };
    println!("{line}");
    assert!(outcome.is_ok() && !slow, "{line}");
}

fn ensure(ok: bool, why: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(why())
    }
}

fn exhaustive_heyting<A: HeytingAlgebra>() -> Result<usize, String> {
    let carrier = A::finite_carrier().unwrap();
    let mut n = 0;
    for &a in &carrier {
        for &b in &carrier {
            for &c in &carrier {
                let failed = heyting_failures(a, b, c);
                ensure(failed.is_empty(), || format!("{:?} at {a:?} {b:?} {c:?}", failed))?;
                n += 1;
            }
        }
    }
    Ok(n)
}

#[test]
fn c01_lattice_laws() {
    criterion(1, "Heyting law suite", Some(Duration::from_secs(1)), || {
        let b = exhaustive_heyting::<bool>()?;
        let l = exhaustive_heyting::<Luk3>()?;
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let draw = |rng: &mut ChaCha8Rng| {
            let d = rng.gen_range(1..=12);
            Godel::frac(rng.gen_range(0..=d), d)
        };
        for _ in 0..10_000 {
            let (x, y, z) = (draw(&mut rng), draw(&mut rng), draw(&mut rng));
            let failed = heyting_failures(x, y, z);
            ensure(failed.is_empty(), || format!("godel {failed:?} at {x:?} {y:?} {z:?}"))?;
        }
        Ok(format!("bool2 {b} triples, lukasiewicz3 {l} triples, godel 10000 random triples"))
    });
}

#[test]
fn c02_twisted_structure() {
    criterion(2, "twisted-structure laws", Some(Duration::from_secs(1)), || {
        let weights = Weight::pairs(&Luk3::finite_carrier().unwrap());
        let mut n = 0;
        for &x in &weights {
            for &y in &weights {
                for &z in &weights {
                    let failed = twist_failures(x, y, z);
                    ensure(failed.is_empty(), || format!("{failed:?} at {x} {y} {z}"))?;
                    n += 1;
                }
            }
        }
        ensure(n == 729, || format!("{n} triples"))?;
        Ok(format!("{n} triples of pairs"))
    });
}

#[test]
fn c03_exhaustive_core() {
    criterion(3, "exhaustive axioms on one state", Some(Duration::from_secs(5)), || {
        let weights = WeightSpace::<Luk3>::standard();
        let mut cases = 0;
        for id in AxiomId::all().filter(|id| !id.is_boolean()) {
            let v = check_axiom(id, &weights, 1, Mode::Exhaustive, &SearchConfig::default()).map_err(|e| e.to_string())?;
            ensure(v.status == Status::Holds, || format!("{id} {}", v.status.name()))?;
            if id.claim().atoms().len() == 3 {
                ensure(v.searched == 729, || format!("{id} searched {}", v.searched))?;
            }
            cases += v.searched;
        }
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let code = pkat::cli::run(
            ["pkat", "axioms", "--lattice", "lukasiewicz3", "--states", "1", "--exhaustive"],
            &mut out,
            &mut err,
        );
        ensure(code == 0, || format!("cli exit {code}"))?;
        Ok(format!("21 schemes, {cases} instantiations, cli exit 0"))
    });
}

#[test]
fn c04_randomized_core() {
    criterion(4, "randomized axioms on 2 and 3 states", Some(Duration::from_secs(60)), || {
        fn run<A: HeytingAlgebra>(weights: &WeightSpace<A>) -> Result<u64, String> {
            let mut total = 0;
            for states in [2, 3] {
                for (i, id) in AxiomId::all().filter(|id| !id.is_boolean()).enumerate() {
                    let mode = Mode::Random { samples: 2000, seed: 1000 + i as u64 };
                    let v = check_axiom(id, weights, states, mode, &SearchConfig::default()).map_err(|e| e.to_string())?;
                    ensure(v.status == Status::Holds, || {
                        format!("{} {id} on {states} states: {}", A::ID, v.witness.as_ref().unwrap().describe(false))
                    })?;
                    total += v.searched;
                }
            }
            Ok(total)
        }
        let l = run(&WeightSpace::<Luk3>::standard())?;
        let g = run(&WeightSpace::<Godel>::standard())?;
        Ok(format!("{l} lukasiewicz3 and {g} godel instantiations"))
    });
}

#[test]
fn c05_boolean_refutation() {
    criterion(5, "Boolean-axiom refutation", None, || {
        let found = find_boolean_witness(&WeightSpace::<Luk3>::standard(), 1).map_err(|e| e.to_string())?;
        let uu = Weight::new(Luk3::Unknown, Luk3::Unknown);
        for v in [&found.non_contradiction, &found.excluded_middle] {
            let w = v.witness.as_ref().ok_or("lukasiewicz3 search found no witness")?;
            let a = &w.valuation.tests()["a"];
            ensure(a.at(0, 0) == uu, || format!("witness {}", a.at(0, 0)))?;
            ensure(w.candidate <= 9, || format!("candidate {}", w.candidate))?;
            ensure(w.recheck().unwrap(), || "witness does not recheck".into())?;
        }
        let again = find_boolean_witness(&WeightSpace::<Luk3>::standard(), 1).unwrap();
        ensure(again.non_contradiction == found.non_contradiction, || "nondeterministic".into())?;
        for states in 1..=3 {
            let b = find_boolean_witness(&WeightSpace::<bool>::standard(), states).unwrap();
            ensure(
                b.non_contradiction.status == Status::Holds && b.excluded_middle.status == Status::Holds,
                || format!("bool2 witness on {states} states"),
            )?;
        }
        Ok(format!(
            "lukasiewicz3 witness diag (u, u) at candidate {}; bool2 holds on 1-3 states",
            found.non_contradiction.witness.unwrap().candidate
        ))
    });
}

#[test]
fn c06_star_correctness() {
    criterion(6, "star fixpoint against join of powers", None, || {
        let mut rng = ChaCha8Rng::seed_from_u64(6);
        let luk = Luk3::finite_carrier().unwrap();
        let grid = Godel::grid(4);
        for i in 0..500 {
            let n = rng.gen_range(1..=4);
            let space = StateSpace::numbered(n).unwrap();
            if i % 2 == 0 {
                let r = random_rel(&mut rng, &space, &luk);
                let run = r.star_run().map_err(|e| e.to_string())?;
                ensure(run.iterations <= n + 1, || format!("{} iterations on {n} states", run.iterations))?;
                ensure(to_matrix(&run.closure) == star_by_powers(&to_matrix(&r)), || format!("sample {i}"))?;
            } else {
                let r = random_rel(&mut rng, &space, &grid);
                let run = r.star_run().map_err(|e| e.to_string())?;
                ensure(run.iterations <= n + 1, || format!("{} iterations on {n} states", run.iterations))?;
                ensure(to_matrix(&run.closure) == star_by_powers(&to_matrix(&r)), || format!("sample {i}"))?;
            }
        }
        Ok("500 relations on up to 4 states".into())
    });
}

#[test]
fn c07_set_star_closed_form() {
    criterion(7, "set star closed form", None, || {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let luk = Luk3::finite_carrier().unwrap();
        for i in 0..500 {
            let n = rng.gen_range(1..=5);
            let space = StateSpace::numbered(n).unwrap();
            let phi = PSet::from_fn(space.clone(), |_| Weight::new(random_pick(&mut rng, &luk), random_pick(&mut rng, &luk)));
            let star = Pkat::star(&phi).unwrap();
            // Pointwise join of phi^0 … phi^5, with phi^0 the full set.
            let expected: Vec<Pair<Luk3>> = phi
                .values()
                .iter()
                .map(|w| {
                    let x = (w.tt, w.ff);
                    let mut power = yes();
                    let mut acc = power;
                    for _ in 1..=5 {
                        power = pmeet(power, x);
                        acc = pjoin(acc, power);
                    }
                    acc
                })
                .collect();
            let got: Vec<Pair<Luk3>> = star.values().iter().map(|w| (w.tt, w.ff)).collect();
            ensure(got == expected, || format!("sample {i}"))?;
            ensure(star == PSet::full(&space), || format!("sample {i} not full"))?;
        }
        Ok("500 sets on up to 5 states".into())
    });
}

#[test]
fn c08_worked_examples() {
    criterion(8, "worked examples", None, || {
        use Luk3::{Bot, Top, Unknown as U};
        let AnyModel::Lukasiewicz3(m) = load_model(TWO_WORLDS).map_err(|e| e.to_string())? else {
            return Err("wrong lattice".into());
        };
        ensure(m.valuation("p", "w1").unwrap() == Weight::new(Top, Bot), || "p at w1".into())?;
        ensure(m.valuation("p", "w2").unwrap() == Weight::new(U, Bot), || "p at w2".into())?;

        let space = StateSpace::new(["w1", "w2"]).unwrap();
        let phi = PSet::new(space.clone(), vec![Weight::new(Top, U), Weight::new(U, U)]).unwrap();
        let psi = PSet::new(space.clone(), vec![Weight::new(Top, Bot), Weight::new(Top, U)]).unwrap();
        let want_phi = [Weight::new(U, Top), Weight::new(U, U)];
        let want_psi = [Weight::new(Bot, Top), Weight::new(U, Top)];
        ensure(phi.complement().values() == want_phi, || "complement of phi".into())?;
        ensure(psi.complement().values() == want_psi, || "complement of psi".into())?;
        ensure(phi.subset(&psi).unwrap(), || "phi not below psi".into())?;
        ensure(psi.complement().subset(&phi.complement()).unwrap(), || "complements not reversed".into())?;

        // Classes from the embedded sum tt + ff with u at one half.
        let half = |x: Luk3| match x {
            Bot => 0,
            U => 1,
            Top => 2,
        };
        let mut red = Vec::new();
        let mut blue = Vec::new();
        let mut magenta = Vec::new();
        for w in Weight::pairs(&[Bot, U, Top]) {
            let sum = half(w.tt) + half(w.ff);
            let bucket = match sum.cmp(&2) {
                std::cmp::Ordering::Less => &mut blue,
                std::cmp::Ordering::Equal => &mut red,
                std::cmp::Ordering::Greater => &mut magenta,
            };
            bucket.push(w);
        }
        for (bucket, class) in [
            (&red, ConsistencyClass::Consistent),
            (&blue, ConsistencyClass::Vague),
            (&magenta, ConsistencyClass::Inconsistent),
        ] {
            ensure(bucket.len() == 3, || format!("{class} has {}", bucket.len()))?;
            for w in bucket.iter() {
                ensure(w.classify() == class, || format!("{w} classified {}", w.classify()))?;
            }
        }
        Ok("valuations, set complements and subsets, 9-point classification".into())
    });
}

#[test]
fn c09_classical_embedding() {
    criterion(9, "classical embedding", None, || {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        let (programs, tests) = (["p", "q"], ["a", "b"]);
        for i in 0..1000 {
            let n = rng.gen_range(1..=4);
            let space = StateSpace::numbered(n).unwrap();
            let mut model = Model::<bool>::new(space.clone());
            let mut env: HashMap<String, BoolRel> = HashMap::new();
            for p in programs {
                let bits: BoolRel = (0..n).map(|_| (0..n).map(|_| rng.gen_bool(0.4)).collect()).collect();
                let rel = PRel::from_fn(space.clone(), |u, v| if bits[u][v] { Weight::top() } else { Weight::bot() });
                model = model.with_program(p, rel).unwrap();
                env.insert(p.to_string(), bits);
            }
            for t in tests {
                let diag: Vec<bool> = (0..n).map(|_| rng.gen_bool(0.5)).collect();
                let weights: Vec<_> = diag.iter().map(|&b| if b { Weight::top() } else { Weight::bot() }).collect();
                model = model.with_test(t, PTest::from_diagonal(space.clone(), &weights).unwrap()).unwrap();
                env.insert(t.to_string(), (0..n).map(|u| (0..n).map(|v| u == v && diag[u]).collect()).collect());
            }
            let depth = rng.gen_range(1..=6);
            let term = random_program_term(&mut rng, depth, &programs, &tests);
            let got = evaluate(&term, &model).map_err(|e| format!("{term}: {e}"))?;
            let want = classical_eval(&term, &env, n);
            for (u, v, w) in got.entries() {
                let expect = if want[u][v] { Weight::top() } else { Weight::bot() };
                ensure(w == expect, || format!("sample {i}, `{term}` at ({u}, {v}): {w} vs {expect}"))?;
            }
        }
        Ok("1000 random term/model pairs".into())
    });
}

#[test]
fn c10_parser_round_trip() {
    criterion(10, "parser round trip", None, || {
        let expected = Term::atom("p").plus(Term::atom("q").dot(Term::atom("r").star()));
        ensure(parse("p + q ; r*").unwrap() == expected, || "precedence".into())?;
        let mut rng = ChaCha8Rng::seed_from_u64(10);
        let mut deepest = 0;
        for _ in 0..1000 {
            let t = random_term(&mut rng, 8, &["p", "q", "r", "a", "b"]);
            deepest = deepest.max(t.depth());
            let back = parse(&pretty(&t)).map_err(|e| format!("`{t}`: {e}"))?;
            ensure(back == t, || format!("`{t}` came back as {back:?}"))?;
        }
        Ok(format!("1000 terms up to depth {deepest}"))
    });
}

#[test]
fn c11_cli_golden() {
    criterion(11, "CLI golden outputs", None, || {
        let model = concat!(env!("CARGO_MANIFEST_DIR"), "/examples/models/two_worlds.json");
        let cases: [(&[&str], &str, i32); 3] = [
            (
                &["axioms", "--lattice", "lukasiewicz3", "--states", "1", "--exhaustive"],
                include_str!("golden/axioms_lukasiewicz3_1.txt"),
                0,
            ),
            (&["eval", "--model", model, "--term", "r;r"], include_str!("golden/eval_rr.txt"), 0),
            (
                &["equiv", "--model", model, "--t1", "1 + r;r*", "--t2", "r*"],
                include_str!("golden/equiv_unfold.txt"),
                0,
            ),
        ];
        for (args, golden, want_code) in cases {
            for _ in 0..2 {
                let (mut out, mut err) = (Vec::new(), Vec::new());
                let code = pkat::cli::run(std::iter::once("pkat").chain(args.iter().copied()), &mut out, &mut err);
                ensure(code == want_code, || format!("{args:?} exit {code}"))?;
                ensure(out == golden.as_bytes(), || format!("{args:?} output differs:\n{}", String::from_utf8_lossy(&out)))?;
            }
        }
        Ok("3 commands byte-identical across two runs".into())
    });
}
