//! Complete Heyting algebras used as truth-value carriers.
//!
//! Three instances are provided: the Boolean algebra `2` (as [`bool`]), the
//! three-valued chain `⊥ ≤ u ≤ ⊤` ([`Luk3`]) and the Gödel chain on the
//! rational points of `[0, 1]` ([`Godel`]). All three are chains, so meet and
//! join are `min`/`max` and the residuum is `a → b = 1` when `a ≤ b`, `b`
//! otherwise.
//!
//! Generic code works over [`HeytingAlgebra`]. [`LatticeElem`] is the
//! dynamically typed form used at the file-format boundary; its operations
//! reject operands drawn from different instances.

use std::fmt;
use std::hash::Hash;
use std::str::FromStr;

use num_rational::Ratio;
use serde_json::Value;

use crate::error::{Error, Result};

/// Exact rational used for the Gödel carrier and for numeric embeddings.
pub type Rational = Ratio<i64>;

/// Selects one of the supported Heyting algebras.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LatticeId {
    Bool2,
    Lukasiewicz3,
    Godel,
}

impl LatticeId {
    pub const ALL: [LatticeId; 3] = [LatticeId::Bool2, LatticeId::Lukasiewicz3, LatticeId::Godel];

    pub fn name(self) -> &'static str {
        match self {
            LatticeId::Bool2 => "bool2",
            LatticeId::Lukasiewicz3 => "lukasiewicz3",
            LatticeId::Godel => "godel",
        }
    }
}

impl fmt::Display for LatticeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for LatticeId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "bool2" => Ok(LatticeId::Bool2),
            "lukasiewicz3" => Ok(LatticeId::Lukasiewicz3),
            "godel" => Ok(LatticeId::Godel),
            other => Err(Error::UnknownLattice(other.to_string())),
        }
    }
}

/// A complete Heyting algebra whose monoidal product coincides with meet.
pub trait HeytingAlgebra: Copy + Eq + Hash + fmt::Debug + Send + Sync + 'static {
    const ID: LatticeId;

    fn bottom() -> Self;
    fn top() -> Self;
    fn meet(self, other: Self) -> Self;
    fn join(self, other: Self) -> Self;
    /// Relative pseudo-complement: the greatest `c` with `self ⊓ c ≤ other`.
    fn implies(self, other: Self) -> Self;

    fn leq(self, other: Self) -> bool {
        self.join(other) == other
    }

    /// Position of the value inside `[0, 1]`, when the instance has one.
    fn embed(self) -> Option<Rational>;

    /// The whole carrier in ascending order, for finite instances.
    fn finite_carrier() -> Option<Vec<Self>>;

    fn from_elem(elem: LatticeElem) -> Option<Self>;
    fn into_elem(self) -> LatticeElem;

    /// Parses a textual value of this instance.
    fn parse(text: &str) -> Result<Self> {
        LatticeElem::parse(Self::ID, text).map(|e| {
            Self::from_elem(e).expect("LatticeElem::parse returns the requested instance")
        })
    }

    fn render(self, unicode: bool) -> String {
        self.into_elem().render(unicode)
    }
}

/// Supremum of a finite family; the empty family yields the bottom element.
pub fn big_join<A: HeytingAlgebra>(items: impl IntoIterator<Item = A>) -> A {
    items.into_iter().fold(A::bottom(), A::join)
}

/// Infimum of a finite family; the empty family yields the top element.
pub fn big_meet<A: HeytingAlgebra>(items: impl IntoIterator<Item = A>) -> A {
    items.into_iter().fold(A::top(), A::meet)
}

impl HeytingAlgebra for bool {
    const ID: LatticeId = LatticeId::Bool2;

    fn bottom() -> Self {
        false
    }
    fn top() -> Self {
        true
    }
    fn meet(self, other: Self) -> Self {
        self && other
    }
    fn join(self, other: Self) -> Self {
        self || other
    }
    fn implies(self, other: Self) -> Self {
        !self || other
    }
    fn embed(self) -> Option<Rational> {
        Some(Rational::from_integer(self as i64))
    }
    fn finite_carrier() -> Option<Vec<Self>> {
        Some(vec![false, true])
    }
    fn from_elem(elem: LatticeElem) -> Option<Self> {
        match elem {
            LatticeElem::Bool(b) => Some(b),
            _ => None,
        }
    }
    fn into_elem(self) -> LatticeElem {
        LatticeElem::Bool(self)
    }
}

/// The three-valued chain `⊥ ≤ u ≤ ⊤`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Luk3 {
    Bot,
    Unknown,
    Top,
}

impl HeytingAlgebra for Luk3 {
    const ID: LatticeId = LatticeId::Lukasiewicz3;

    fn bottom() -> Self {
        Luk3::Bot
    }
    fn top() -> Self {
        Luk3::Top
    }
    fn meet(self, other: Self) -> Self {
        self.min(other)
    }
    fn join(self, other: Self) -> Self {
        self.max(other)
    }
    fn implies(self, other: Self) -> Self {
        if self <= other {
            Luk3::Top
        } else {
            other
        }
    }
    fn embed(self) -> Option<Rational> {
        Some(match self {
            Luk3::Bot => Rational::from_integer(0),
            Luk3::Unknown => Rational::new(1, 2),
            Luk3::Top => Rational::from_integer(1),
        })
    }
    fn finite_carrier() -> Option<Vec<Self>> {
        Some(vec![Luk3::Bot, Luk3::Unknown, Luk3::Top])
    }
    fn from_elem(elem: LatticeElem) -> Option<Self> {
        match elem {
            LatticeElem::Luk(v) => Some(v),
            _ => None,
        }
    }
    fn into_elem(self) -> LatticeElem {
        LatticeElem::Luk(self)
    }
}

/// A point of the Gödel chain, held as an exact rational in `[0, 1]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Godel(Rational);

impl Godel {
    pub const ZERO: Godel = Godel(Rational::new_raw(0, 1));
    pub const ONE: Godel = Godel(Rational::new_raw(1, 1));

    pub fn new(value: Rational) -> Result<Self> {
        if value < Rational::from_integer(0) || value > Rational::from_integer(1) {
            return Err(Error::OutsideCarrier {
                lattice: LatticeId::Godel,
                value: value.to_string(),
            });
        }
        Ok(Godel(value))
    }

    /// `numer / denom`; panics when the fraction is not in `[0, 1]`.
    pub fn frac(numer: i64, denom: i64) -> Self {
        Godel::new(Rational::new(numer, denom)).expect("fraction inside [0, 1]")
    }

    pub fn value(self) -> Rational {
        self.0
    }

    /// Evenly spaced grid `{0, 1/n, ..., 1}`.
    pub fn grid(steps: i64) -> Vec<Godel> {
        assert!(steps > 0, "grid needs at least one step");
        (0..=steps).map(|k| Godel::frac(k, steps)).collect()
    }
}

impl HeytingAlgebra for Godel {
    const ID: LatticeId = LatticeId::Godel;

    fn bottom() -> Self {
        Godel::ZERO
    }
    fn top() -> Self {
        Godel::ONE
    }
    fn meet(self, other: Self) -> Self {
        self.min(other)
    }
    fn join(self, other: Self) -> Self {
        self.max(other)
    }
    fn implies(self, other: Self) -> Self {
        if self <= other {
            Godel::ONE
        } else {
            other
        }
    }
    fn embed(self) -> Option<Rational> {
        Some(self.0)
    }
    fn finite_carrier() -> Option<Vec<Self>> {
        None
    }
    fn from_elem(elem: LatticeElem) -> Option<Self> {
        match elem {
            LatticeElem::Godel(v) => Some(v),
            _ => None,
        }
    }
    fn into_elem(self) -> LatticeElem {
        LatticeElem::Godel(self)
    }
}

/// A truth value tagged with the instance it belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LatticeElem {
    Bool(bool),
    Luk(Luk3),
    Godel(Godel),
}

macro_rules! same_instance {
    ($a:expr, $b:expr, $op:ident) => {
        match ($a, $b) {
            (LatticeElem::Bool(x), LatticeElem::Bool(y)) => Ok(LatticeElem::Bool(x.$op(y))),
            (LatticeElem::Luk(x), LatticeElem::Luk(y)) => Ok(LatticeElem::Luk(x.$op(y))),
            (LatticeElem::Godel(x), LatticeElem::Godel(y)) => Ok(LatticeElem::Godel(x.$op(y))),
            (x, y) => Err(Error::LatticeMismatch(x.lattice(), y.lattice())),
        }
    };
}

impl LatticeElem {
    pub fn lattice(self) -> LatticeId {
        match self {
            LatticeElem::Bool(_) => LatticeId::Bool2,
            LatticeElem::Luk(_) => LatticeId::Lukasiewicz3,
            LatticeElem::Godel(_) => LatticeId::Godel,
        }
    }

    pub fn bottom(id: LatticeId) -> Self {
        match id {
            LatticeId::Bool2 => LatticeElem::Bool(false),
            LatticeId::Lukasiewicz3 => LatticeElem::Luk(Luk3::Bot),
            LatticeId::Godel => LatticeElem::Godel(Godel::ZERO),
        }
    }

    pub fn top(id: LatticeId) -> Self {
        match id {
            LatticeId::Bool2 => LatticeElem::Bool(true),
            LatticeId::Lukasiewicz3 => LatticeElem::Luk(Luk3::Top),
            LatticeId::Godel => LatticeElem::Godel(Godel::ONE),
        }
    }

    pub fn meet(self, other: Self) -> Result<Self> {
        same_instance!(self, other, meet)
    }

    pub fn join(self, other: Self) -> Result<Self> {
        same_instance!(self, other, join)
    }

    pub fn implies(self, other: Self) -> Result<Self> {
        same_instance!(self, other, implies)
    }

    pub fn leq(self, other: Self) -> Result<bool> {
        Ok(self.join(other)? == other)
    }

    pub fn big_join(id: LatticeId, items: impl IntoIterator<Item = Self>) -> Result<Self> {
        items
            .into_iter()
            .try_fold(LatticeElem::bottom(id), |acc, x| acc.join(x))
    }

    pub fn big_meet(id: LatticeId, items: impl IntoIterator<Item = Self>) -> Result<Self> {
        items
            .into_iter()
            .try_fold(LatticeElem::top(id), |acc, x| acc.meet(x))
    }

    pub fn embed(self) -> Option<Rational> {
        match self {
            LatticeElem::Bool(v) => v.embed(),
            LatticeElem::Luk(v) => v.embed(),
            LatticeElem::Godel(v) => v.embed(),
        }
    }

    /// Parses `text` as a value of instance `id`.
    ///
    /// Booleans are `0`/`1`; three-valued constants are `bot`, `u`, `top` (or
    /// `⊥`, `⊤`); Gödel values are decimals such as `0.25` or fractions `1/3`.
    pub fn parse(id: LatticeId, text: &str) -> Result<Self> {
        let outside = || Error::OutsideCarrier {
            lattice: id,
            value: text.to_string(),
        };
        let t = text.trim();
        match id {
            LatticeId::Bool2 => match t {
                "0" | "bot" | "⊥" => Ok(LatticeElem::Bool(false)),
                "1" | "top" | "⊤" => Ok(LatticeElem::Bool(true)),
                _ => Err(outside()),
            },
            LatticeId::Lukasiewicz3 => match t {
                "bot" | "⊥" => Ok(LatticeElem::Luk(Luk3::Bot)),
                "u" => Ok(LatticeElem::Luk(Luk3::Unknown)),
                "top" | "⊤" => Ok(LatticeElem::Luk(Luk3::Top)),
                _ => Err(outside()),
            },
            LatticeId::Godel => {
                let value = parse_rational(t).ok_or_else(outside)?;
                Godel::new(value)
                    .map(LatticeElem::Godel)
                    .map_err(|_| outside())
            }
        }
    }

    /// Parses a JSON scalar (string, or integer for `0`/`1`).
    pub fn from_json(id: LatticeId, value: &Value) -> Result<Self> {
        match value {
            Value::String(s) => LatticeElem::parse(id, s),
            Value::Number(n) => LatticeElem::parse(id, &n.to_string()),
            other => Err(Error::OutsideCarrier {
                lattice: id,
                value: other.to_string(),
            }),
        }
    }

    pub fn to_json(self) -> Value {
        match self {
            LatticeElem::Bool(b) => Value::from(b as u8),
            other => Value::String(other.render(false)),
        }
    }

    pub fn render(self, unicode: bool) -> String {
        match self {
            LatticeElem::Bool(b) => (b as u8).to_string(),
            LatticeElem::Luk(v) => match (v, unicode) {
                (Luk3::Bot, false) => "bot".into(),
                (Luk3::Bot, true) => "⊥".into(),
                (Luk3::Unknown, _) => "u".into(),
                (Luk3::Top, false) => "top".into(),
                (Luk3::Top, true) => "⊤".into(),
            },
            LatticeElem::Godel(g) => render_rational(g.value()),
        }
    }
}

impl fmt::Display for LatticeElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(false))
    }
}

fn parse_rational(text: &str) -> Option<Rational> {
    if let Some((n, d)) = text.split_once('/') {
        let n: i64 = n.trim().parse().ok()?;
        let d: i64 = d.trim().parse().ok()?;
        return (d != 0).then(|| Rational::new(n, d));
    }
    let (int_part, frac_part) = text.split_once('.').unwrap_or((text, ""));
    let digits_ok = |s: &str| s.chars().all(|c| c.is_ascii_digit());
    if int_part.is_empty() && frac_part.is_empty() || !digits_ok(int_part) || !digits_ok(frac_part)
    {
        return None;
    }
    let scale = 10i64.checked_pow(u32::try_from(frac_part.len()).ok()?)?;
    let int: i64 = if int_part.is_empty() { 0 } else { int_part.parse().ok()? };
    let frac: i64 = if frac_part.is_empty() { 0 } else { frac_part.parse().ok()? };
    let numer = int.checked_mul(scale)?.checked_add(frac)?;
    Some(Rational::new(numer, scale))
}

fn render_rational(value: Rational) -> String {
    if value.is_integer() {
        return value.numer().to_string();
    }
    // Terminating decimals print as decimals, everything else as a fraction.
    let mut scale: i64 = 1;
    for digits in 1..=18 {
        scale *= 10;
        if scale % value.denom() == 0 {
            let scaled = value.numer() * (scale / value.denom());
            let int = scaled / scale;
            let frac = scaled % scale;
            return format!("{int}.{frac:0width$}", width = digits);
        }
    }
    format!("{}/{}", value.numer(), value.denom())
}

#[cfg(test)]
mod tests {
    use super::*;

    use Luk3::{Bot, Top, Unknown as U};

    fn all_luk() -> Vec<Luk3> {
        Luk3::finite_carrier().unwrap()
    }

    #[test]
    fn three_valued_tables_match_the_published_meet_and_join() {
        // rows x columns in the order bot, u, top
        let meet = [[Bot, Bot, Bot], [Bot, U, U], [Bot, U, Top]];
        let join = [[Bot, U, Top], [U, U, Top], [Top, Top, Top]];
        for (i, a) in all_luk().into_iter().enumerate() {
            for (j, b) in all_luk().into_iter().enumerate() {
                assert_eq!(a.meet(b), meet[i][j], "{a:?} meet {b:?}");
                assert_eq!(a.join(b), join[i][j], "{a:?} join {b:?}");
            }
        }
    }

    #[test]
    fn three_valued_residuum_is_the_heyting_one() {
        let expected = [[Top, Top, Top], [Bot, Top, Top], [Bot, U, Top]];
        for (i, a) in all_luk().into_iter().enumerate() {
            for (j, b) in all_luk().into_iter().enumerate() {
                assert_eq!(a.implies(b), expected[i][j], "{a:?} -> {b:?}");
            }
        }
    }

    #[test]
    fn operation_examples() {
        assert_eq!(U.meet(Top), U);
        assert_eq!(U.join(Bot), U);
        assert!(Bot.leq(U));
        for a in all_luk() {
            assert_eq!(a.meet(Top), a);
            assert_eq!(a.join(Bot), a);
            assert_eq!(a.implies(a), Top);
            assert!(a.leq(a));
        }
        let (lo, hi) = (Godel::frac(3, 10), Godel::frac(7, 10));
        assert_eq!(lo.meet(hi), lo);
        assert_eq!(lo.join(hi), hi);
        assert_eq!(hi.implies(lo), lo);
        assert_eq!(lo.implies(hi), Godel::ONE);
        assert!(!hi.leq(lo));
    }

    #[test]
    fn big_operations_on_finite_and_empty_families() {
        assert_eq!(big_join(all_luk()), Top);
        assert_eq!(big_join(Vec::<Luk3>::new()), Bot);
        assert_eq!(big_meet(Vec::<Luk3>::new()), Top);
        let g = [Godel::frac(1, 5), Godel::frac(1, 2), Godel::frac(2, 5)];
        assert_eq!(big_join(g), Godel::frac(1, 2));
        assert_eq!(big_meet(g), Godel::frac(1, 5));
        assert_eq!(
            LatticeElem::big_join(LatticeId::Godel, []).unwrap(),
            LatticeElem::Godel(Godel::ZERO)
        );
    }

    #[test]
    fn mixed_instances_are_rejected() {
        let a = LatticeElem::Luk(U);
        let b = LatticeElem::Bool(true);
        let err = a.meet(b).unwrap_err();
        assert_eq!(
            err,
            Error::LatticeMismatch(LatticeId::Lukasiewicz3, LatticeId::Bool2)
        );
        assert!(a.join(b).is_err());
        assert!(a.implies(b).is_err());
        assert!(a.leq(b).is_err());
        assert!(LatticeElem::big_join(LatticeId::Lukasiewicz3, [a, b]).is_err());
    }

    #[test]
    fn parsing_and_rendering() {
        let g = |s| LatticeElem::parse(LatticeId::Godel, s).unwrap();
        assert_eq!(g("0.25"), LatticeElem::Godel(Godel::frac(1, 4)));
        assert_eq!(g(".5"), LatticeElem::Godel(Godel::frac(1, 2)));
        assert_eq!(g("1/3"), LatticeElem::Godel(Godel::frac(1, 3)));
        assert_eq!(g("1"), LatticeElem::Godel(Godel::ONE));
        assert!(LatticeElem::parse(LatticeId::Godel, "1.5").is_err());
        assert!(LatticeElem::parse(LatticeId::Godel, "-0.1").is_err());
        assert!(LatticeElem::parse(LatticeId::Godel, "abc").is_err());
        assert!(LatticeElem::parse(LatticeId::Godel, ".").is_err());
        assert!(LatticeElem::parse(LatticeId::Lukasiewicz3, "0.5").is_err());
        assert_eq!(
            LatticeElem::parse(LatticeId::Lukasiewicz3, "⊤").unwrap(),
            LatticeElem::Luk(Top)
        );
        assert_eq!(g("0.25").render(false), "0.25");
        assert_eq!(g("1/3").render(false), "1/3");
        assert_eq!(g("0.050").render(false), "0.05");
        assert_eq!(LatticeElem::Luk(Bot).render(true), "⊥");
        assert_eq!(LatticeElem::Bool(true).to_json(), Value::from(1));
        assert_eq!(
            LatticeElem::from_json(LatticeId::Bool2, &Value::from(0)).unwrap(),
            LatticeElem::Bool(false)
        );
    }

    #[test]
    fn lattice_ids_round_trip_through_names() {
        for id in LatticeId::ALL {
            assert_eq!(id.name().parse::<LatticeId>().unwrap(), id);
        }
        assert!("heyting".parse::<LatticeId>().is_err());
    }
}
