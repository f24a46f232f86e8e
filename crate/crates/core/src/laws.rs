//! Pointwise law checks for Heyting algebras and their twisted structures.
//!
//! Each function evaluates every law on one instantiation and returns the
//! names of the laws that fail, so callers can drive them exhaustively over a
//! finite carrier or over random samples.

use crate::lattice::{big_join, HeytingAlgebra};
use crate::twist::Weight;

/// Heyting-algebra laws instantiated at `(a, b, c)`.
pub fn heyting_failures<A: HeytingAlgebra>(a: A, b: A, c: A) -> Vec<&'static str> {
    let (zero, one) = (A::bottom(), A::top());
    let mut failed = Vec::new();
    let mut law = |name, ok: bool| {
        if !ok {
            failed.push(name);
        }
    };

    law("meet associative", a.meet(b.meet(c)) == a.meet(b).meet(c));
    law("join associative", a.join(b.join(c)) == a.join(b).join(c));
    law("meet commutative", a.meet(b) == b.meet(a));
    law("join commutative", a.join(b) == b.join(a));
    law("meet idempotent", a.meet(a) == a);
    law("join idempotent", a.join(a) == a);
    law("absorption meet/join", a.meet(a.join(b)) == a);
    law("absorption join/meet", a.join(a.meet(b)) == a);
    law("order via join and meet", a.leq(b) == (a.meet(b) == a));
    law("bounds", a.meet(zero) == zero && a.join(one) == one && a.meet(one) == a && a.join(zero) == a);
    law("adjunction", a.meet(b).leq(c) == b.leq(a.implies(c)));
    law("implication reflexive", a.implies(a) == one);
    law("meet distributes over join", a.meet(b.join(c)) == a.meet(b).join(a.meet(c)));
    law("join distributes over meet", a.join(b.meet(c)) == a.join(b).meet(a.join(c)));
    law("meet monotone", !a.leq(c) || a.meet(b).leq(c.meet(b)));
    law("meet monotone in both arguments", a.meet(b).leq(a.join(c).meet(b.join(c))));

    let families: [&[A]; 4] = [&[], &[b], &[b, c], &[a, b, c]];
    for family in families {
        let sup = big_join(family.iter().copied());
        law(
            "meet distributes over finite joins (left)",
            a.meet(sup) == big_join(family.iter().map(|&s| a.meet(s))),
        );
        law(
            "meet distributes over finite joins (right)",
            sup.meet(c) == big_join(family.iter().map(|&s| s.meet(c))),
        );
    }
    failed
}

/// Twisted-structure laws instantiated at `(x, y, z)`.
pub fn twist_failures<A: HeytingAlgebra>(
    x: Weight<A>,
    y: Weight<A>,
    z: Weight<A>,
) -> Vec<&'static str> {
    let (top, bot) = (Weight::<A>::top(), Weight::<A>::bot());
    let mut failed = Vec::new();
    let mut law = |name, ok: bool| {
        if !ok {
            failed.push(name);
        }
    };

    law("negation involutive", x.negate().negate() == x);
    law("join with top is top", x.join(top) == top);
    law("join with bottom is identity", x.join(bot) == x);
    law("join idempotent", x.join(x) == x);
    law("meet idempotent", x.meet(x) == x);
    law("join commutative", x.join(y) == y.join(x));
    law("meet commutative", x.meet(y) == y.meet(x));
    law("negation turns join into meet", x.join(y).negate() == x.negate().meet(y.negate()));
    law("negation turns meet into join", x.meet(y).negate() == x.negate().join(y.negate()));
    law("meet with top is identity", x.meet(top) == x && top.meet(x) == x);
    law("meet with bottom is bottom", x.meet(bot) == bot && bot.meet(x) == bot);
    law("join associative", x.join(y.join(z)) == x.join(y).join(z));
    law("meet associative", x.meet(y.meet(z)) == x.meet(y).meet(z));
    law("meet distributes over join", x.meet(y.join(z)) == x.meet(y).join(x.meet(z)));
    law("join distributes over meet", x.join(y.meet(z)) == x.join(y).meet(x.join(z)));

    // Order-theoretic companions.
    law("order reflexive", x.leq(x));
    law("order antisymmetric", !(x.leq(y) && y.leq(x)) || x == y);
    law("order transitive", !(x.leq(y) && y.leq(z)) || x.leq(z));
    law("join is least upper bound", x.leq(x.join(y)) && y.leq(x.join(y)) && (!(x.leq(z) && y.leq(z)) || x.join(y).leq(z)));
    law("meet is greatest lower bound", x.meet(y).leq(x) && x.meet(y).leq(y) && (!(z.leq(x) && z.leq(y)) || z.leq(x.meet(y))));
    law("order agrees with join", x.leq(y) == (x.join(y) == y));
    law("negation antitone", x.leq(y) == y.negate().leq(x.negate()));
    law("bounds", bot.leq(x) && x.leq(top));
    law(
        "meet monotone",
        x.meet(z).leq(x.join(y).meet(z.join(y))),
    );
    failed
}
