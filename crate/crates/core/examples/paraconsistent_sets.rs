// Pointwise operations on weighted sets.

use pkat::prelude::*;
use Luk3::{Bot, Top, Unknown as U};

fn main() -> Result<()> {
    let space = StateSpace::new(["w1", "w2"])?;
    let phi = PSet::new(space.clone(), vec![Weight::new(Top, U), Weight::new(U, U)])?;
    let psi = PSet::new(space.clone(), vec![Weight::new(Top, Bot), Weight::new(Top, U)])?;

    println!("phi  = {}", phi.to_json());
    println!("psi  = {}", psi.to_json());
    println!("~phi = {}", phi.complement().to_json());
    println!("~psi = {}", psi.complement().to_json());
    println!("phi | psi = {}", phi.union(&psi)?.to_json());
    println!("phi & psi = {}", phi.intersection(&psi)?.to_json());
    println!("phi <= psi: {}", phi.subset(&psi)?);
    println!("~psi <= ~phi: {}", psi.complement().subset(&phi.complement())?);
    // Star of a set is always the full set.
    println!("phi* = {}", phi.star().to_json());
    Ok(())
}
