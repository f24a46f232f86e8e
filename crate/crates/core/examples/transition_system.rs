// Loads a two-state model from JSON and queries it.

use pkat::prelude::*;

const MODEL: &str = include_str!("models/two_worlds.json");

fn main() -> Result<()> {
    let AnyModel::Lukasiewicz3(model) = load_model(MODEL)? else {
        unreachable!("the file declares lukasiewicz3");
    };
    println!("states: {:?}", model.states().names());
    println!("r:\n{}", model.relation("r")?.render(true));
    for state in ["w1", "w2"] {
        println!("p at {state}: {}", model.valuation("p", state)?.render(true));
    }

    // Models can also be built in code.
    let space = StateSpace::new(["a", "b"])?;
    let step = PRel::zero(&space).with_entry("a", "b", Weight::new(Luk3::Unknown, Luk3::Bot))?;
    let built = Model::new(space).with_program("step", step)?;
    println!("{}", serde_json::to_string(&built.to_json()).unwrap());
    Ok(())
}
