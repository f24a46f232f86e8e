// Hoare triples {b} p {c}, read as b;p <= b;p;c.

use pkat::prelude::*;

const MODEL: &str = include_str!("models/two_worlds.json");

fn main() -> Result<()> {
    let AnyModel::Lukasiewicz3(model) = load_model(MODEL)? else {
        unreachable!();
    };
    for (pre, prog, post) in [("p", "r", "1"), ("1", "0", "p"), ("p", "r", "p"), ("p", "r;r", "p"), ("1", "r*", "1")] {
        let verdict = hoare_check(&parse(pre)?, &parse(prog)?, &parse(post)?, &model)?;
        let detail = verdict
            .witness
            .as_ref()
            .map(|w| format!(" at {}", w.discrepancy.location()))
            .unwrap_or_default();
        println!("{{{pre}}} {prog} {{{post}}}: {}{detail}", verdict.status.name());
    }
    Ok(())
}
