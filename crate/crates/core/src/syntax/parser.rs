use std::iter::Peekable;
use std::str::Chars;

use super::Term;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Zero,
    One,
    Plus,
    Seq,
    Star,
    Bang,
    LParen,
    RParen,
    End,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Ident(name) => format!("`{name}`"),
            Tok::Zero => "`0`".into(),
            Tok::One => "`1`".into(),
            Tok::Plus => "`+`".into(),
            Tok::Seq => "`;`".into(),
            Tok::Star => "`*`".into(),
            Tok::Bang => "`!`".into(),
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
            Tok::End => "end of input".into(),
        }
    }
}

#[derive(Debug, Clone, Copy)]
struct Pos {
    line: usize,
    column: usize,
}

fn syntax_error(pos: Pos, message: impl Into<String>) -> Error {
    Error::Syntax {
        line: pos.line,
        column: pos.column,
        message: message.into(),
    }
}

struct Lexer<'a> {
    chars: Peekable<Chars<'a>>,
    pos: Pos,
}

impl<'a> Lexer<'a> {
    fn new(src: &'a str) -> Self {
        Lexer {
            chars: src.chars().peekable(),
            pos: Pos { line: 1, column: 1 },
        }
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.chars.next()?;
        if c == '\n' {
            self.pos.line += 1;
            self.pos.column = 1;
        } else {
            self.pos.column += 1;
        }
        Some(c)
    }

    fn tokens(mut self) -> Result<Vec<(Tok, Pos)>> {
        let mut out = Vec::new();
        loop {
            while self.chars.peek().is_some_and(|c| c.is_whitespace()) {
                self.bump();
            }
            let start = self.pos;
            let Some(c) = self.bump() else {
                out.push((Tok::End, start));
                return Ok(out);
            };
            let tok = match c {
                '+' => Tok::Plus,
                ';' | '.' => Tok::Seq,
                '*' => Tok::Star,
                '!' => Tok::Bang,
                '(' => Tok::LParen,
                ')' => Tok::RParen,
                '0' | '1' => {
                    if self.chars.peek().is_some_and(|c| c.is_ascii_alphanumeric() || *c == '_') {
                        return Err(syntax_error(start, "constants are the single digits `0` and `1`"));
                    }
                    if c == '0' {
                        Tok::Zero
                    } else {
                        Tok::One
                    }
                }
                c if c.is_ascii_alphabetic() => {
                    let mut name = String::from(c);
                    while let Some(&c) = self.chars.peek() {
                        if c.is_ascii_alphanumeric() || c == '_' {
                            name.push(c);
                            self.bump();
                        } else {
                            break;
                        }
                    }
                    Tok::Ident(name)
                }
                other => return Err(syntax_error(start, format!("unexpected character `{other}`"))),
            };
            out.push((tok, start));
        }
    }
}

struct Parser {
    tokens: Vec<(Tok, Pos)>,
    cursor: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.tokens[self.cursor].0
    }

    fn pos(&self) -> Pos {
        self.tokens[self.cursor].1
    }

    fn advance(&mut self) -> Tok {
        let tok = self.tokens[self.cursor].0.clone();
        if tok != Tok::End {
            self.cursor += 1;
        }
        tok
    }

    fn sum(&mut self) -> Result<Term> {
        let mut lhs = self.seq()?;
        while *self.peek() == Tok::Plus {
            self.advance();
            lhs = lhs.plus(self.seq()?);
        }
        Ok(lhs)
    }

    fn seq(&mut self) -> Result<Term> {
        let mut lhs = self.unary()?;
        while *self.peek() == Tok::Seq {
            self.advance();
            lhs = lhs.dot(self.unary()?);
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Term> {
        if *self.peek() == Tok::Bang {
            self.advance();
            return Ok(self.unary()?.not());
        }
        let mut term = self.atom()?;
        while *self.peek() == Tok::Star {
            self.advance();
            term = term.star();
        }
        Ok(term)
    }

    fn atom(&mut self) -> Result<Term> {
        let pos = self.pos();
        match self.advance() {
            Tok::Ident(name) => Ok(Term::Atom(name)),
            Tok::Zero => Ok(Term::Zero),
            Tok::One => Ok(Term::One),
            Tok::LParen => {
                let inner = self.sum()?;
                let close = self.pos();
                match self.advance() {
                    Tok::RParen => Ok(inner),
                    other => Err(syntax_error(close, format!("expected `)`, found {}", other.describe()))),
                }
            }
            other => Err(syntax_error(pos, format!("expected a term, found {}", other.describe()))),
        }
    }
}

/// Parses a term. Star binds tightest, then complement, then composition,
/// then choice; composition and choice associate to the left.
pub fn parse(src: &str) -> Result<Term> {
    let tokens = Lexer::new(src).tokens()?;
    let mut parser = Parser { tokens, cursor: 0 };
    let term = parser.sum()?;
    let pos = parser.pos();
    match parser.advance() {
        Tok::End => Ok(term),
        other => Err(syntax_error(pos, format!("unexpected {} after term", other.describe()))),
    }
}
