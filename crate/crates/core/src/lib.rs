//! Paraconsistent Kleene algebra with tests.
//!
//! Weights are pairs `(tt, ff)` of independent evidence for and against a
//! fact, drawn from a Heyting algebra and ordered by the twisted order.
//! Relations and sets weighted this way form paraconsistent Kleene algebras
//! with tests; this crate evaluates KAT terms over them, checks the axiom
//! schemes by exhaustive or seeded random search, and finds the tests that
//! refute non-contradiction and excluded middle.
//!
//! ```
//! use pkat::prelude::*;
//!
//! let model = load_model(r#"{
//!     "lattice": "lukasiewicz3",
//!     "states": ["w1", "w2"],
//!     "programs": {"r": [["w1", "w2", "top", "bot"], ["w2", "w1", "top", "u"]]}
//! }"#).unwrap();
//! let AnyModel::Lukasiewicz3(m) = model else { unreachable!() };
//! let rr = evaluate(&parse("r;r").unwrap(), &m).unwrap();
//! assert_eq!(rr.get("w1", "w1").unwrap(), Weight::new(Luk3::Top, Luk3::Unknown));
//! ```

pub mod algebra;
pub mod cli;
pub mod engine;
pub mod error;
pub mod lattice;
pub mod laws;
pub mod plts;
pub mod relp;
pub mod setp;
pub mod space;
pub mod syntax;
pub mod twist;

pub use error::{Error, Result};

/// The names most programs need.
pub mod prelude {
    pub use crate::algebra::{Comparison, Interpretation, Pkat, Valuation};
    pub use crate::engine::{
        check_axiom, equiv, equiv_random, evaluate, find_boolean_witness, hoare_check, AxiomId, Claim, Mode,
        SearchConfig, Status, Verdict, WeightSpace,
    };
    pub use crate::error::{Error, Result};
    pub use crate::lattice::{Godel, HeytingAlgebra, LatticeElem, LatticeId, Luk3, Rational};
    pub use crate::plts::{load_model, AnyModel, Model};
    pub use crate::relp::{PRel, PTest};
    pub use crate::setp::PSet;
    pub use crate::space::StateSpace;
    pub use crate::syntax::{parse, pretty, sort_check, Declarations, Sort, Term};
    pub use crate::twist::{ConsistencyClass, Weight};
}
