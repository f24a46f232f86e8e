// Prints the operation tables of the three-valued chain and checks the
// Heyting laws on every triple.

use pkat::laws::heyting_failures;
use pkat::prelude::*;

fn table(name: &str, op: impl Fn(Luk3, Luk3) -> Luk3) {
    let carrier = Luk3::finite_carrier().unwrap();
    println!("{name:>4} | {}", carrier.iter().map(|b| format!("{:>3}", b.render(false))).collect::<Vec<_>>().join(" "));
    for &a in &carrier {
        let row: Vec<String> = carrier.iter().map(|&b| format!("{:>3}", op(a, b).render(false))).collect();
        println!("{:>4} | {}", a.render(false), row.join(" "));
    }
    println!();
}

fn main() {
    table("and", Luk3::meet);
    table("or", Luk3::join);
    table("->", Luk3::implies);

    let carrier = Luk3::finite_carrier().unwrap();
    let mut checked = 0;
    for &a in &carrier {
        for &b in &carrier {
            for &c in &carrier {
                let failures = heyting_failures(a, b, c);
                assert!(failures.is_empty(), "{a:?} {b:?} {c:?}: {failures:?}");
                checked += 1;
            }
        }
    }
    println!("Heyting laws hold on all {checked} triples");

    // The Gödel chain works on exact rationals.
    let (x, y) = (Godel::frac(2, 3), Godel::frac(1, 3));
    println!("godel: 2/3 -> 1/3 = {}, 1/3 -> 2/3 = {}", x.implies(y).render(false), y.implies(x).render(false));
}
