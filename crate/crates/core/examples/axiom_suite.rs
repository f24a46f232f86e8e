// Checks every axiom scheme on one-state relations over the three-valued
// chain, exhaustively, and on two-state Gödel relations by sampling.

use pkat::prelude::*;

fn main() -> Result<()> {
    let weights = WeightSpace::<Luk3>::standard();
    let config = SearchConfig::default();
    for id in AxiomId::all() {
        let verdict = check_axiom(id, &weights, 1, Mode::Exhaustive, &config)?;
        println!("{:<6} {:<28} {:<6} ({} cases)", id.to_string(), id.statement(), verdict.status.name(), verdict.searched);
    }

    println!();
    let grid = WeightSpace::<Godel>::standard();
    let mode = Mode::Random { samples: 200, seed: 42 };
    for id in [AxiomId::DotAssoc, AxiomId::UnfoldLeft, AxiomId::InductRight, AxiomId::ExcludedMiddle] {
        let verdict = check_axiom(id, &grid, 2, mode, &config)?;
        println!("godel {:<6} {}", id.to_string(), verdict.status.name());
    }
    Ok(())
}
