// Parsing, printing, sort checking and the structured-programming sugar.

use pkat::prelude::*;
use pkat::syntax::{desugar_if, desugar_while};

fn main() -> Result<()> {
    let t = parse("p + q ; r*")?;
    println!("{t:?}");
    println!("{t}");

    let decls = Declarations::new(["p".to_string(), "q".to_string()], ["a".to_string(), "b".to_string()]);
    for src in ["a;b", "!(a + b)", "a*", "p;!a", "!p"] {
        match sort_check(&parse(src)?, &decls) {
            Ok(sort) => println!("{src:<10} {sort:?}"),
            Err(e) => println!("{src:<10} error: {e}"),
        }
    }

    let (a, p, q) = (Term::atom("a"), Term::atom("p"), Term::atom("q"));
    println!("if a then p else q  = {}", desugar_if(a.clone(), p.clone(), q, &decls)?);
    println!("while a do p        = {}", desugar_while(a, p, &decls)?);

    match parse("p + (q") {
        Err(e) => println!("parse error: {e}"),
        Ok(_) => unreachable!(),
    }
    Ok(())
}
