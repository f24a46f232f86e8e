// Finds the tests that break non-contradiction and excluded middle.

use pkat::prelude::*;

fn show<A: HeytingAlgebra>(name: &str, weights: &WeightSpace<A>) -> Result<()> {
    let found = find_boolean_witness(weights, 1)?;
    for (axiom, verdict) in [("a;!a = 0", &found.non_contradiction), ("a + !a = 1", &found.excluded_middle)] {
        match &verdict.witness {
            Some(w) => println!("{name:<16} {axiom:<11} fails, candidate {}: {}", w.candidate, w.describe(false).replace('\n', "; ")),
            None => println!("{name:<16} {axiom:<11} {} after {} tests", verdict.status.name(), verdict.searched),
        }
    }
    Ok(())
}

fn main() -> Result<()> {
    show("bool2", &WeightSpace::<bool>::standard())?;
    show("lukasiewicz3", &WeightSpace::<Luk3>::standard())?;
    show("godel {0,1/2,1}", &WeightSpace::<Godel>::godel_grid(2))?;
    Ok(())
}
