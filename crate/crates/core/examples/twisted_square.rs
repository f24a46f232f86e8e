// Colours the nine weights over the three-valued chain by consistency class
// and shows the twisted operations on a pair of them.

use pkat::prelude::*;

fn main() {
    let carrier = Luk3::finite_carrier().unwrap();
    for w in Weight::pairs(&carrier) {
        println!("{:<12} {}", w.to_string(), w.classify());
    }

    let x = Weight::new(Luk3::Top, Luk3::Unknown);
    let y = Weight::new(Luk3::Unknown, Luk3::Bot);
    println!();
    println!("x = {x}, y = {y}");
    println!("x join y = {}", x.join(y));
    println!("x meet y = {}", x.meet(y));
    println!("negate x = {}", x.negate());
    println!("x <= y: {}, y <= x: {}", x.leq(y), y.leq(x));
}
