//! Paraconsistent labelled transition systems and their JSON file format.
//!
//! ```json
//! {
//!   "lattice": "lukasiewicz3",
//!   "states": ["w1", "w2"],
//!   "programs": { "r": [["w1", "w2", "top", "bot"], ["w2", "w1", "top", "u"]] },
//!   "tests": { "p": { "w1": ["top", "bot"], "w2": ["u", "bot"] } }
//! }
//! ```
//!
//! Program entries that are not listed default to `(0, 1)`, and so do test
//! values at unlisted states. A test may also be given in the program entry
//! list form, as long as every entry lies on the diagonal. The optional
//! `test_lattice` field restricts test values to a smaller instance embedded in
//! the model lattice (`bool2` inside `lukasiewicz3`, either inside `godel`).

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::Deserialize;
use serde_json::{json, Map, Value};

use crate::algebra::Interpretation;
use crate::error::{Error, Result};
use crate::lattice::{Godel, HeytingAlgebra, LatticeId, Luk3};
use crate::relp::{PRel, PTest};
use crate::space::StateSpace;
use crate::syntax::Declarations;
use crate::twist::Weight;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Model<A> {
    space: Arc<StateSpace>,
    programs: BTreeMap<String, PRel<A>>,
    tests: BTreeMap<String, PTest<A>>,
    test_lattice: Option<LatticeId>,
}

impl<A: HeytingAlgebra> Model<A> {
    pub fn new(space: Arc<StateSpace>) -> Self {
        Model {
            space,
            programs: BTreeMap::new(),
            tests: BTreeMap::new(),
            test_lattice: None,
        }
    }

    pub fn with_program(mut self, name: impl Into<String>, rel: PRel<A>) -> Result<Self> {
        let name = name.into();
        crate::space::same_space(&self.space, rel.space())?;
        if self.tests.contains_key(&name) {
            return Err(Error::AmbiguousName(name));
        }
        self.programs.insert(name, rel);
        Ok(self)
    }

    pub fn with_test(mut self, name: impl Into<String>, test: PTest<A>) -> Result<Self> {
        let name = name.into();
        crate::space::same_space(&self.space, test.space())?;
        if self.programs.contains_key(&name) {
            return Err(Error::AmbiguousName(name));
        }
        if let Some(sub) = self.test_lattice {
            for w in test.diagonal() {
                check_sublattice(sub, w)?;
            }
        }
        self.tests.insert(name, test);
        Ok(self)
    }

    pub fn lattice(&self) -> LatticeId {
        A::ID
    }

    pub fn states(&self) -> &Arc<StateSpace> {
        &self.space
    }

    pub fn programs(&self) -> &BTreeMap<String, PRel<A>> {
        &self.programs
    }

    pub fn tests(&self) -> &BTreeMap<String, PTest<A>> {
        &self.tests
    }

    pub fn relation(&self, name: &str) -> Result<&PRel<A>> {
        self.programs
            .get(name)
            .or_else(|| self.tests.get(name).map(PTest::as_rel))
            .ok_or_else(|| Error::UnknownProgram(name.to_string()))
    }

    /// The pair assigned to proposition `prop` at state `state`.
    pub fn valuation(&self, prop: &str, state: &str) -> Result<Weight<A>> {
        let test = self
            .tests
            .get(prop)
            .ok_or_else(|| Error::UnknownProposition(prop.to_string()))?;
        let i = self.space.index_of(state)?;
        Ok(test.at(i, i))
    }

    /// Serializes with every default written out.
    pub fn to_json(&self) -> Value {
        let programs: Map<String, Value> = self
            .programs
            .iter()
            .map(|(name, rel)| (name.clone(), rel.to_entry_list()))
            .collect();
        let tests: Map<String, Value> = self
            .tests
            .iter()
            .map(|(name, test)| {
                let diag: Map<String, Value> = self
                    .space
                    .names()
                    .iter()
                    .zip(test.diagonal())
                    .map(|(s, w)| (s.clone(), w.to_json()))
                    .collect();
                (name.clone(), Value::Object(diag))
            })
            .collect();
        let mut doc = json!({
            "lattice": A::ID.name(),
            "states": self.space.names(),
            "programs": programs,
            "tests": tests,
        });
        if let Some(sub) = self.test_lattice {
            doc["test_lattice"] = Value::from(sub.name());
        }
        doc
    }

    fn from_doc(doc: ModelDoc) -> Result<Self> {
        let space = StateSpace::new(doc.states)?;
        let mut model = Model::new(space.clone());
        if let Some(sub) = doc.test_lattice {
            let sub: LatticeId = sub.parse()?;
            if !embeds_into(sub, A::ID) {
                return Err(Error::InvalidModel(format!(
                    "test lattice {sub} is not a sublattice of {}",
                    A::ID
                )));
            }
            model.test_lattice = Some(sub);
        }
        for (name, entries) in doc.programs {
            let mut rel = PRel::zero(&space);
            let mut seen = Vec::new();
            for entry in entries {
                let (u, v, w) = parse_entry::<A>(&entry)?;
                if seen.contains(&(u.clone(), v.clone())) {
                    return Err(Error::InvalidModel(format!(
                        "program `{name}` lists ({u}, {v}) twice"
                    )));
                }
                rel = rel.with_entry(&u, &v, w)?;
                seen.push((u, v));
            }
            model = model.with_program(name, rel)?;
        }
        for (name, test) in doc.tests {
            let mut diagonal = vec![Weight::bot(); space.len()];
            let mut seen = vec![false; space.len()];
            let mut set = |state: &str, w: Weight<A>| -> Result<()> {
                let i = space.index_of(state)?;
                if std::mem::replace(&mut seen[i], true) {
                    return Err(Error::InvalidModel(format!(
                        "test `{name}` lists state {state} twice"
                    )));
                }
                diagonal[i] = w;
                Ok(())
            };
            match test {
                TestDoc::Diagonal(values) => {
                    for (state, value) in values {
                        set(&state, Weight::from_json(&value)?)?;
                    }
                }
                TestDoc::Entries(entries) => {
                    for entry in entries {
                        let (u, v, w) = parse_entry::<A>(&entry)?;
                        space.index_of(&u)?;
                        space.index_of(&v)?;
                        if u != v {
                            return Err(Error::NotSubidentity(u, v));
                        }
                        set(&u, w)?;
                    }
                }
            }
            model = model.with_test(name.clone(), PTest::from_diagonal(space.clone(), &diagonal)?)?;
        }
        Ok(model)
    }
}

impl<A: HeytingAlgebra> Interpretation for Model<A> {
    type Carrier = PRel<A>;

    fn space(&self) -> &Arc<StateSpace> {
        &self.space
    }

    fn program(&self, name: &str) -> Option<&PRel<A>> {
        self.programs.get(name)
    }

    fn test(&self, name: &str) -> Option<&PRel<A>> {
        self.tests.get(name).map(PTest::as_rel)
    }

    fn declarations(&self) -> Declarations {
        Declarations::new(self.programs.keys().cloned(), self.tests.keys().cloned())
    }
}

/// A model over whichever lattice its file declares.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AnyModel {
    Bool2(Model<bool>),
    Lukasiewicz3(Model<Luk3>),
    Godel(Model<Godel>),
}

/// Runs `$body` with `$m` bound to the typed model inside an [`AnyModel`].
#[macro_export]
macro_rules! with_model {
    ($any:expr, $m:ident => $body:expr) => {
        match $any {
            $crate::plts::AnyModel::Bool2($m) => $body,
            $crate::plts::AnyModel::Lukasiewicz3($m) => $body,
            $crate::plts::AnyModel::Godel($m) => $body,
        }
    };
}

impl AnyModel {
    pub fn lattice(&self) -> LatticeId {
        with_model!(self, m => m.lattice())
    }

    pub fn to_json(&self) -> Value {
        with_model!(self, m => m.to_json())
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct ModelDoc {
    lattice: String,
    #[serde(default)]
    test_lattice: Option<String>,
    states: Vec<String>,
    #[serde(default)]
    programs: BTreeMap<String, Vec<Vec<Value>>>,
    #[serde(default)]
    tests: BTreeMap<String, TestDoc>,
}

#[derive(Deserialize)]
#[serde(untagged)]
enum TestDoc {
    Diagonal(BTreeMap<String, Value>),
    Entries(Vec<Vec<Value>>),
}

fn parse_entry<A: HeytingAlgebra>(entry: &[Value]) -> Result<(String, String, Weight<A>)> {
    let bad = || Error::InvalidModel(format!("entry must be [from, to, tt, ff], got {}", Value::from(entry.to_vec())));
    if entry.len() != 4 {
        return Err(bad());
    }
    let u = entry[0].as_str().ok_or_else(bad)?.to_string();
    let v = entry[1].as_str().ok_or_else(bad)?.to_string();
    let w = Weight::from_json(&Value::from(entry[2..].to_vec()))?;
    Ok((u, v, w))
}

fn embeds_into(sub: LatticeId, sup: LatticeId) -> bool {
    use LatticeId::*;
    matches!(
        (sub, sup),
        (Bool2, _) | (Lukasiewicz3, Lukasiewicz3) | (Lukasiewicz3, Godel) | (Godel, Godel)
    )
}

fn check_sublattice<A: HeytingAlgebra>(sub: LatticeId, w: Weight<A>) -> Result<()> {
    let allowed: &[(i64, i64)] = match sub {
        LatticeId::Bool2 => &[(0, 1), (1, 1)],
        LatticeId::Lukasiewicz3 => &[(0, 1), (1, 2), (1, 1)],
        LatticeId::Godel => return Ok(()),
    };
    for x in [w.tt, w.ff] {
        let e = x.embed().expect("built-in instances embed into [0, 1]");
        if !allowed.iter().any(|&(n, d)| e == crate::lattice::Rational::new(n, d)) {
            return Err(Error::OutsideCarrier {
                lattice: sub,
                value: x.render(false),
            });
        }
    }
    Ok(())
}

/// Parses and validates a model document.
pub fn load_model(text: &str) -> Result<AnyModel> {
    let doc: ModelDoc =
        serde_json::from_str(text).map_err(|e| Error::InvalidModel(e.to_string()))?;
    let lattice: LatticeId = doc.lattice.parse()?;
    Ok(match lattice {
        LatticeId::Bool2 => AnyModel::Bool2(Model::from_doc(doc)?),
        LatticeId::Lukasiewicz3 => AnyModel::Lukasiewicz3(Model::from_doc(doc)?),
        LatticeId::Godel => AnyModel::Godel(Model::from_doc(doc)?),
    })
}
