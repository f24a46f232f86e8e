// Looks for countermodels to term equations on random relations.

use pkat::prelude::*;

fn main() -> Result<()> {
    let weights = WeightSpace::<Luk3>::standard();
    let cases = [("p;q", "q;p", &[][..]), ("1 + r;r*", "r*", &[][..]), ("a;b", "b;a", &["a", "b"][..])];
    for (lhs, rhs, tests) in cases {
        let (lhs, rhs) = (parse(lhs)?, parse(rhs)?);
        let tests: Vec<String> = tests.iter().map(|t| t.to_string()).collect();
        let decls = Declarations::infer([&lhs, &rhs], &tests);
        let verdict = equiv_random(&lhs, &rhs, &decls, &weights, 2, 100, 7)?;
        match &verdict.witness {
            Some(w) => println!("{lhs} = {rhs}: countermodel at sample {}\n{}", w.candidate, w.describe(false)),
            None => println!("{lhs} = {rhs}: no countermodel found in {} samples", verdict.searched),
        }
    }
    Ok(())
}
