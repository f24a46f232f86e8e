use std::collections::HashMap;
use std::sync::Arc;

use crate::error::{Error, Result};

/// A nonempty, ordered set of named states.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StateSpace {
    names: Vec<String>,
    index: HashMap<String, usize>,
}

impl StateSpace {
    pub fn new<I, S>(names: I) -> Result<Arc<Self>>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        if names.is_empty() {
            return Err(Error::EmptySpace);
        }
        let mut index = HashMap::with_capacity(names.len());
        for (i, name) in names.iter().enumerate() {
            if name.is_empty() {
                return Err(Error::InvalidModel("state names must be nonempty".into()));
            }
            if index.insert(name.clone(), i).is_some() {
                return Err(Error::DuplicateState(name.clone()));
            }
        }
        Ok(Arc::new(StateSpace { names, index }))
    }

    /// States `s0 .. s{n-1}`.
    pub fn numbered(n: usize) -> Result<Arc<Self>> {
        StateSpace::new((0..n).map(|i| format!("s{i}")))
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn index_of(&self, name: &str) -> Result<usize> {
        self.index
            .get(name)
            .copied()
            .ok_or_else(|| Error::UnknownState(name.to_string()))
    }
}

pub(crate) fn same_space(a: &Arc<StateSpace>, b: &Arc<StateSpace>) -> Result<()> {
    if Arc::ptr_eq(a, b) || a == b {
        Ok(())
    } else {
        Err(Error::SpaceMismatch)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_empty_and_duplicate_states() {
        assert_eq!(StateSpace::new(Vec::<String>::new()).unwrap_err(), Error::EmptySpace);
        assert_eq!(
            StateSpace::new(["w1", "w1"]).unwrap_err(),
            Error::DuplicateState("w1".into())
        );
        let space = StateSpace::new(["w1", "w2"]).unwrap();
        assert_eq!(space.index_of("w2").unwrap(), 1);
        assert!(space.index_of("w3").is_err());
        assert_eq!(StateSpace::numbered(3).unwrap().names(), ["s0", "s1", "s2"]);
    }
}
