// Composition and reflexive-transitive closure of a weighted relation.

use pkat::prelude::*;
use Luk3::{Bot, Top, Unknown as U};

fn main() -> Result<()> {
    let space = StateSpace::new(["w1", "w2", "w3"])?;
    let r = PRel::zero(&space)
        .with_entry("w1", "w2", Weight::new(Top, Bot))?
        .with_entry("w2", "w3", Weight::new(Top, U))?
        .with_entry("w3", "w1", Weight::new(U, Bot))?;

    println!("R:\n{}", r.render(false));
    println!("R;R:\n{}", r.dot(&r)?.render(false));
    let run = r.star_run()?;
    println!("R* ({} iterations):\n{}", run.iterations, run.closure.render(false));

    // The closure satisfies both unfolding laws.
    let one = PRel::identity(&space);
    assert_eq!(one.plus(&r.dot(&run.closure)?)?, run.closure);
    assert_eq!(one.plus(&run.closure.dot(&r)?)?, run.closure);
    Ok(())
}
