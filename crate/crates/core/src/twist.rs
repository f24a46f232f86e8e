//! The twisted structure `A × A` over a Heyting algebra.
//!
//! A [`Weight`] carries evidence for (`tt`) and evidence against (`ff`).
//! Join takes the join of the positive parts and the meet of the negative
//! parts; meet does the converse, and negation swaps the components.

use std::fmt;
use std::cmp::Ordering;

use serde_json::Value;

use crate::error::{Error, Result};
use crate::lattice::{HeytingAlgebra, LatticeElem, LatticeId, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Weight<A> {
    pub tt: A,
    pub ff: A,
}

/// Position of a weight in the vagueness-inconsistency square.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ConsistencyClass {
    Consistent,
    Vague,
    Inconsistent,
    Unclassified,
}

impl ConsistencyClass {
    pub fn name(self) -> &'static str {
        match self {
            ConsistencyClass::Consistent => "consistent",
            ConsistencyClass::Vague => "vague",
            ConsistencyClass::Inconsistent => "inconsistent",
            ConsistencyClass::Unclassified => "unclassified",
        }
    }
}

impl fmt::Display for ConsistencyClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl<A: HeytingAlgebra> Weight<A> {
    /// `(1, 0)`, the greatest weight.
    pub fn top() -> Self {
        Weight::new(A::top(), A::bottom())
    }

    /// `(0, 1)`, the least weight.
    pub fn bot() -> Self {
        Weight::new(A::bottom(), A::top())
    }

    pub fn new(tt: A, ff: A) -> Self {
        Weight { tt, ff }
    }

    pub fn join(self, other: Self) -> Self {
        Weight::new(self.tt.join(other.tt), self.ff.meet(other.ff))
    }

    pub fn meet(self, other: Self) -> Self {
        Weight::new(self.tt.meet(other.tt), self.ff.join(other.ff))
    }

    pub fn negate(self) -> Self {
        Weight::new(self.ff, self.tt)
    }

    pub fn leq(self, other: Self) -> bool {
        self.tt.leq(other.tt) && other.ff.leq(self.ff)
    }

    pub fn is_classical(self) -> bool {
        self == Self::top() || self == Self::bot()
    }

    pub fn classify(self) -> ConsistencyClass {
        match (self.tt.embed(), self.ff.embed()) {
            (Some(tt), Some(ff)) => match (tt + ff).cmp(&Rational::from_integer(1)) {
                Ordering::Less => ConsistencyClass::Vague,
                Ordering::Equal => ConsistencyClass::Consistent,
                Ordering::Greater => ConsistencyClass::Inconsistent,
            },
            _ => ConsistencyClass::Unclassified,
        }
    }

    /// All pairs over a finite list of values, in row-major order.
    pub fn pairs(values: &[A]) -> Vec<Self> {
        values
            .iter()
            .flat_map(|&tt| values.iter().map(move |&ff| Weight::new(tt, ff)))
            .collect()
    }

    pub fn render(self, unicode: bool) -> String {
        format!("({}, {})", self.tt.render(unicode), self.ff.render(unicode))
    }

    pub fn to_json(self) -> Value {
        Value::Array(vec![self.tt.into_elem().to_json(), self.ff.into_elem().to_json()])
    }

    pub fn from_json(value: &Value) -> Result<Self> {
        let items = value
            .as_array()
            .filter(|a| a.len() == 2)
            .ok_or_else(|| Error::InvalidModel(format!("weight must be a pair [tt, ff], got {value}")))?;
        Ok(Weight::new(parse_json(&items[0])?, parse_json(&items[1])?))
    }
}

pub(crate) fn parse_json<A: HeytingAlgebra>(value: &Value) -> Result<A> {
    let elem = LatticeElem::from_json(A::ID, value)?;
    Ok(A::from_elem(elem).expect("parsed for the requested instance"))
}

impl<A: HeytingAlgebra> fmt::Display for Weight<A> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(false))
    }
}

/// A weight whose components carry their instance tag; operations check that
/// both operands come from the same lattice.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DynWeight {
    pub tt: LatticeElem,
    pub ff: LatticeElem,
}

impl DynWeight {
    pub fn new(tt: LatticeElem, ff: LatticeElem) -> Result<Self> {
        if tt.lattice() != ff.lattice() {
            return Err(Error::LatticeMismatch(tt.lattice(), ff.lattice()));
        }
        Ok(DynWeight { tt, ff })
    }

    pub fn lattice(self) -> LatticeId {
        self.tt.lattice()
    }

    pub fn join(self, other: Self) -> Result<Self> {
        DynWeight::new(self.tt.join(other.tt)?, self.ff.meet(other.ff)?)
    }

    pub fn meet(self, other: Self) -> Result<Self> {
        DynWeight::new(self.tt.meet(other.tt)?, self.ff.join(other.ff)?)
    }

    pub fn negate(self) -> Self {
        DynWeight { tt: self.ff, ff: self.tt }
    }

    pub fn leq(self, other: Self) -> Result<bool> {
        Ok(self.tt.leq(other.tt)? && other.ff.leq(self.ff)?)
    }
}

impl<A: HeytingAlgebra> From<Weight<A>> for DynWeight {
    fn from(w: Weight<A>) -> Self {
        DynWeight {
            tt: w.tt.into_elem(),
            ff: w.ff.into_elem(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::{Godel, Luk3};

    use Luk3::{Bot, Top, Unknown as U};

    fn w(tt: Luk3, ff: Luk3) -> Weight<Luk3> {
        Weight::new(tt, ff)
    }

    #[test]
    fn join_and_meet_examples() {
        assert_eq!(w(U, Bot).join(w(Top, U)), w(Top, Bot));
        assert_eq!(w(Top, Bot).meet(w(U, Bot)), w(U, Bot));
        for x in Weight::pairs(&Luk3::finite_carrier().unwrap()) {
            assert_eq!(x.join(Weight::bot()), x);
            assert_eq!(x.join(Weight::top()), Weight::top());
            assert_eq!(x.meet(Weight::top()), x);
            assert_eq!(x.meet(Weight::bot()), Weight::bot());
            assert_eq!(x.negate().negate(), x);
            assert!(x.leq(x));
        }
    }

    #[test]
    fn negation_swaps_components() {
        assert_eq!(w(U, Bot).negate(), w(Bot, U));
        assert_eq!(Weight::<Luk3>::top().negate(), Weight::bot());
    }

    #[test]
    fn order_examples_from_the_hasse_diagram() {
        assert!(w(U, U).leq(w(Top, Bot)));
        assert!(!w(Bot, Bot).leq(w(Top, Top)));
        assert!(!w(Top, Top).leq(w(Bot, Bot)));
        assert!(w(Bot, Top).leq(w(U, Top)));
    }

    #[test]
    fn nine_point_square_colouring() {
        use ConsistencyClass::*;
        let expected = [
            (w(Top, Bot), Consistent),
            (w(U, U), Consistent),
            (w(Bot, Top), Consistent),
            (w(U, Bot), Vague),
            (w(Bot, Bot), Vague),
            (w(Bot, U), Vague),
            (w(Top, U), Inconsistent),
            (w(Top, Top), Inconsistent),
            (w(U, Top), Inconsistent),
        ];
        for (x, class) in expected {
            assert_eq!(x.classify(), class, "{x}");
        }
    }

    #[test]
    fn godel_and_boolean_classification() {
        let g = |a, b| Weight::new(Godel::frac(a, 10), Godel::frac(b, 10));
        assert_eq!(g(3, 7).classify(), ConsistencyClass::Consistent);
        assert_eq!(g(3, 6).classify(), ConsistencyClass::Vague);
        assert_eq!(g(5, 6).classify(), ConsistencyClass::Inconsistent);
        assert_eq!(Weight::new(true, true).classify(), ConsistencyClass::Inconsistent);
        assert_eq!(Weight::new(false, false).classify(), ConsistencyClass::Vague);
    }

    #[test]
    fn dynamic_weights_reject_mixed_lattices() {
        let a: DynWeight = w(U, Bot).into();
        let b: DynWeight = Weight::new(true, false).into();
        assert!(a.join(b).is_err());
        assert!(a.meet(b).is_err());
        assert!(a.leq(b).is_err());
        assert!(DynWeight::new(LatticeElem::Bool(true), LatticeElem::Luk(U)).is_err());
        let c: DynWeight = w(Top, U).into();
        assert_eq!(a.join(c).unwrap(), w(Top, Bot).into());
        assert_eq!(a.negate(), w(Bot, U).into());
    }

    #[test]
    fn json_form_is_a_two_element_array() {
        let x = w(Top, U);
        assert_eq!(x.to_json(), serde_json::json!(["top", "u"]));
        assert_eq!(Weight::<Luk3>::from_json(&x.to_json()).unwrap(), x);
        assert!(Weight::<Luk3>::from_json(&serde_json::json!(["top"])).is_err());
        assert!(Weight::<Luk3>::from_json(&serde_json::json!(["top", "0.5"])).is_err());
    }
}
