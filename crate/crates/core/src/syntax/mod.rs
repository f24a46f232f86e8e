//! KAT terms: abstract syntax, concrete grammar, printing and sort checking.
//!
//! ```text
//! term  := sum
//! sum   := seq { "+" seq }
//! seq   := unary { (";" | ".") unary }
//! unary := "!" unary | atom { "*" }
//! atom  := ident | "0" | "1" | "(" term ")"
//! ```

mod parser;
mod pretty;

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

pub use parser::parse;
pub use pretty::pretty;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Term {
    Zero,
    One,
    /// A program or test name; its sort comes from the declarations.
    Atom(String),
    Plus(Box<Term>, Box<Term>),
    Dot(Box<Term>, Box<Term>),
    Star(Box<Term>),
    Not(Box<Term>),
}

impl Term {
    pub fn atom(name: impl Into<String>) -> Term {
        Term::Atom(name.into())
    }

    pub fn plus(self, other: Term) -> Term {
        Term::Plus(Box::new(self), Box::new(other))
    }

    pub fn dot(self, other: Term) -> Term {
        Term::Dot(Box::new(self), Box::new(other))
    }

    pub fn star(self) -> Term {
        Term::Star(Box::new(self))
    }

    #[allow(clippy::should_implement_trait)]
    pub fn not(self) -> Term {
        Term::Not(Box::new(self))
    }

    /// Atom names in order of first occurrence.
    pub fn atoms(&self) -> Vec<String> {
        fn walk(t: &Term, out: &mut Vec<String>) {
            match t {
                Term::Zero | Term::One => {}
                Term::Atom(name) => {
                    if !out.contains(name) {
                        out.push(name.clone());
                    }
                }
                Term::Plus(a, b) | Term::Dot(a, b) => {
                    walk(a, out);
                    walk(b, out);
                }
                Term::Star(a) | Term::Not(a) => walk(a, out),
            }
        }
        let mut out = Vec::new();
        walk(self, &mut out);
        out
    }

    pub fn depth(&self) -> usize {
        match self {
            Term::Zero | Term::One | Term::Atom(_) => 1,
            Term::Plus(a, b) | Term::Dot(a, b) => 1 + a.depth().max(b.depth()),
            Term::Star(a) | Term::Not(a) => 1 + a.depth(),
        }
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&pretty(self))
    }
}

impl FromStr for Term {
    type Err = Error;

    fn from_str(s: &str) -> Result<Term> {
        parse(s)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sort {
    Test,
    Program,
}

/// Which atom names denote programs and which denote tests.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Declarations {
    programs: BTreeSet<String>,
    tests: BTreeSet<String>,
}

impl Declarations {
    pub fn new<P, T>(programs: P, tests: T) -> Self
    where
        P: IntoIterator<Item = String>,
        T: IntoIterator<Item = String>,
    {
        Declarations {
            programs: programs.into_iter().collect(),
            tests: tests.into_iter().collect(),
        }
    }

    /// Declares `tests` as tests and every other atom of `terms` as a program.
    pub fn infer<'a>(terms: impl IntoIterator<Item = &'a Term>, tests: &[String]) -> Self {
        let tests: BTreeSet<String> = tests.iter().cloned().collect();
        let programs = terms
            .into_iter()
            .flat_map(Term::atoms)
            .filter(|a| !tests.contains(a))
            .collect();
        Declarations { programs, tests }
    }

    pub fn programs(&self) -> &BTreeSet<String> {
        &self.programs
    }

    pub fn tests(&self) -> &BTreeSet<String> {
        &self.tests
    }

    pub fn sort_of(&self, name: &str) -> Option<Sort> {
        if self.tests.contains(name) {
            Some(Sort::Test)
        } else if self.programs.contains(name) {
            Some(Sort::Program)
        } else {
            None
        }
    }
}

/// Computes the sort of `term`, rejecting undeclared atoms and complements of
/// program-sorted subterms.
pub fn sort_check(term: &Term, decls: &Declarations) -> Result<Sort> {
    match term {
        Term::Zero | Term::One => Ok(Sort::Test),
        Term::Atom(name) => decls
            .sort_of(name)
            .ok_or_else(|| Error::UndeclaredAtom(name.clone())),
        Term::Plus(a, b) | Term::Dot(a, b) => {
            let (sa, sb) = (sort_check(a, decls)?, sort_check(b, decls)?);
            Ok(if sa == Sort::Test && sb == Sort::Test {
                Sort::Test
            } else {
                Sort::Program
            })
        }
        Term::Star(a) => {
            sort_check(a, decls)?;
            Ok(Sort::Program)
        }
        Term::Not(a) => match sort_check(a, decls)? {
            Sort::Test => Ok(Sort::Test),
            Sort::Program => Err(Error::ComplementOfProgram(pretty(a))),
        },
    }
}

fn require_test(cond: &Term, decls: &Declarations) -> Result<()> {
    match sort_check(cond, decls)? {
        Sort::Test => Ok(()),
        Sort::Program => Err(Error::ConditionNotTest(pretty(cond))),
    }
}

/// `if b then p else q` as `b;p + !b;q`.
pub fn desugar_if(cond: Term, then: Term, otherwise: Term, decls: &Declarations) -> Result<Term> {
    require_test(&cond, decls)?;
    Ok(cond.clone().dot(then).plus(cond.not().dot(otherwise)))
}

/// `while b do p` as `(b;p)*;!b`.
pub fn desugar_while(cond: Term, body: Term, decls: &Declarations) -> Result<Term> {
    require_test(&cond, decls)?;
    Ok(cond.clone().dot(body).star().dot(cond.not()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn decls() -> Declarations {
        Declarations::new(
            ["p", "q", "r"].map(String::from),
            ["a", "b"].map(String::from),
        )
    }

    fn t(s: &str) -> Term {
        parse(s).unwrap()
    }

    #[test]
    fn sorts() {
        assert_eq!(sort_check(&t("a ; b"), &decls()).unwrap(), Sort::Test);
        assert_eq!(sort_check(&t("a + 1"), &decls()).unwrap(), Sort::Test);
        assert_eq!(sort_check(&t("a*"), &decls()).unwrap(), Sort::Program);
        assert_eq!(sort_check(&t("a;p"), &decls()).unwrap(), Sort::Program);
        assert_eq!(sort_check(&t("!(a + b)"), &decls()).unwrap(), Sort::Test);
        assert_eq!(
            sort_check(&t("!p"), &decls()).unwrap_err(),
            Error::ComplementOfProgram("p".into())
        );
        assert_eq!(
            sort_check(&t("!a*"), &decls()).unwrap_err(),
            Error::ComplementOfProgram("a*".into())
        );
        assert_eq!(
            sort_check(&t("x + p"), &decls()).unwrap_err(),
            Error::UndeclaredAtom("x".into())
        );
    }

    #[test]
    fn conditionals_and_loops() {
        let (a, p, q) = (Term::atom("a"), Term::atom("p"), Term::atom("q"));
        assert_eq!(
            desugar_if(a.clone(), p.clone(), q.clone(), &decls()).unwrap(),
            a.clone().dot(p.clone()).plus(a.clone().not().dot(q.clone()))
        );
        assert_eq!(
            desugar_while(a.clone(), p.clone(), &decls()).unwrap(),
            a.clone().dot(p.clone()).star().dot(a.clone().not())
        );
        assert_eq!(
            desugar_if(Term::One, p.clone(), q.clone(), &decls()).unwrap(),
            Term::One.dot(p.clone()).plus(Term::One.not().dot(q.clone()))
        );
        assert_eq!(
            desugar_while(p.clone(), q, &decls()).unwrap_err(),
            Error::ConditionNotTest("p".into())
        );
        assert_eq!(pretty(&desugar_while(a, p, &decls()).unwrap()), "(a;p)*;!a");
    }

    #[test]
    fn inferred_declarations_default_to_programs() {
        let terms = [t("p;q"), t("a;p*")];
        let d = Declarations::infer(&terms, &["a".to_string()]);
        assert_eq!(d.sort_of("p"), Some(Sort::Program));
        assert_eq!(d.sort_of("a"), Some(Sort::Test));
        assert_eq!(d.sort_of("z"), None);
    }
}
