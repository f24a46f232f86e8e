use serde::Serialize;
use serde_json::Value;

use crate::algebra::{Discrepancy, Pkat, Valuation};
use crate::error::Result;
use crate::lattice::HeytingAlgebra;

use super::claim::Claim;
use super::search::Mode;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Holds,
    Fails,
    /// Nothing was searched.
    Unknown,
}

impl Status {
    pub fn name(self) -> &'static str {
        match self {
            Status::Holds => "holds",
            Status::Fails => "fails",
            Status::Unknown => "unknown",
        }
    }
}

/// A concrete instantiation violating a claim.
#[derive(Debug, Clone, PartialEq)]
pub struct Witness<T: Pkat> {
    pub claim: Claim,
    pub valuation: Valuation<T>,
    pub discrepancy: Discrepancy<T::Lattice>,
    /// 1-based position of the instantiation in the search order.
    pub candidate: u64,
}

impl<T: Pkat> Witness<T> {
    /// Re-evaluates the claim on the stored valuation and confirms that it
    /// breaks at the same entry with the same values.
    pub fn recheck(&self) -> Result<bool> {
        Ok(self.claim.check(&self.valuation)?.as_ref() == Some(&self.discrepancy))
    }

    /// One line per variable followed by the offending entry.
    pub fn describe(&self, unicode: bool) -> String {
        let mut lines: Vec<String> = self
            .valuation
            .programs()
            .iter()
            .chain(self.valuation.tests())
            .map(|(name, value)| format!("{name} = {}", render_json(&value.to_json(), unicode)))
            .collect();
        lines.push(format!(
            "at {}: lhs {} vs rhs {}",
            self.discrepancy.location(),
            self.discrepancy.lhs.render(unicode),
            self.discrepancy.rhs.render(unicode)
        ));
        lines.join("\n")
    }

    pub fn report(&self, unicode: bool) -> WitnessReport {
        WitnessReport {
            assignment: self.valuation.to_json(),
            claim: self.claim.to_string(),
            entry: self.discrepancy.location(),
            lhs: self.discrepancy.lhs.to_json(),
            rhs: self.discrepancy.rhs.to_json(),
            candidate: self.candidate,
            summary: self.describe(unicode),
        }
    }
}

fn symbol(text: &str, unicode: bool) -> String {
    match (text, unicode) {
        ("top", true) => "⊤".into(),
        ("bot", true) => "⊥".into(),
        _ => text.into(),
    }
}

fn render_scalar(value: &Value, unicode: bool) -> String {
    match value {
        Value::String(s) => symbol(s, unicode),
        other => other.to_string(),
    }
}

fn render_pair(items: &[Value], unicode: bool) -> String {
    format!("({}, {})", render_scalar(&items[0], unicode), render_scalar(&items[1], unicode))
}

/// Compact rendering of a carrier's JSON form: diagonal or pointwise maps as
/// `{s0: (tt, ff)}`, entry lists as `{(s0, s1): (tt, ff)}`.
fn render_json(value: &Value, unicode: bool) -> String {
    let parts: Vec<String> = match value {
        Value::Object(map) => map
            .iter()
            .map(|(k, v)| match v.as_array() {
                Some(pair) if pair.len() == 2 => format!("{k}: {}", render_pair(pair, unicode)),
                _ => format!("{k}: {v}"),
            })
            .collect(),
        Value::Array(entries) => entries
            .iter()
            .map(|e| match e.as_array() {
                Some(row) if row.len() == 4 => format!(
                    "({}, {}): {}",
                    render_scalar(&row[0], unicode),
                    render_scalar(&row[1], unicode),
                    render_pair(&row[2..], unicode)
                ),
                _ => e.to_string(),
            })
            .collect(),
        other => return other.to_string(),
    };
    format!("{{{}}}", parts.join(", "))
}

#[derive(Debug, Clone, PartialEq)]
pub struct Verdict<T: Pkat> {
    pub status: Status,
    pub witness: Option<Witness<T>>,
    /// Number of instantiations examined.
    pub searched: u64,
}

impl<T: Pkat> Verdict<T> {
    pub(crate) fn holds(searched: u64) -> Self {
        Verdict {
            status: Status::Holds,
            witness: None,
            searched,
        }
    }

    pub(crate) fn fails(witness: Witness<T>, searched: u64) -> Self {
        Verdict {
            status: Status::Fails,
            witness: Some(witness),
            searched,
        }
    }

    pub(crate) fn unknown(searched: u64) -> Self {
        Verdict {
            status: Status::Unknown,
            witness: None,
            searched,
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Holds
    }

    /// Serializable summary under the given heading.
    pub fn report(&self, axiom: &str, states: usize, mode: Mode, unicode: bool) -> Report {
        let (mode_name, seed) = match mode {
            Mode::Exhaustive => ("exhaustive", None),
            Mode::Random { seed, .. } => ("random", Some(seed)),
        };
        Report {
            axiom: axiom.to_string(),
            lattice: <T::Lattice as HeytingAlgebra>::ID.name().to_string(),
            states,
            mode: mode_name.to_string(),
            status: self.status,
            witness: self.witness.as_ref().map(|w| w.report(unicode)),
            samples: self.searched,
            seed,
        }
    }
}

pub(crate) fn single<T: Pkat>(claim: Claim, valuation: Valuation<T>) -> Result<Verdict<T>> {
    Ok(match claim.check(&valuation)? {
        Some(discrepancy) => Verdict::fails(
            Witness {
                claim,
                valuation,
                discrepancy,
                candidate: 1,
            },
            1,
        ),
        None => Verdict::holds(1),
    })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct WitnessReport {
    pub assignment: Value,
    pub claim: String,
    pub entry: String,
    pub lhs: Value,
    pub rhs: Value,
    pub candidate: u64,
    #[serde(skip)]
    pub summary: String,
}

/// The JSON form of a verdict.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Report {
    pub axiom: String,
    pub lattice: String,
    pub states: usize,
    pub mode: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<WitnessReport>,
    pub samples: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
}
