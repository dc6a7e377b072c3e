//! S-expressions with source positions.
//!
//! Atoms are maximal runs of characters other than whitespace, parentheses
//! and `;`. A `;` starts a comment that runs to the end of the line.

use std::fmt;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum SExpr {
    Atom(String),
    List(Vec<SExpr>),
}

impl SExpr {
    pub fn atom(s: impl Into<String>) -> SExpr {
        SExpr::Atom(s.into())
    }

    pub fn list(items: impl IntoIterator<Item = SExpr>) -> SExpr {
        SExpr::List(items.into_iter().collect())
    }

    pub fn as_atom(&self) -> Option<&str> {
        match self {
            SExpr::Atom(a) => Some(a),
            SExpr::List(_) => None,
        }
    }
}

/// Prints on one line with single spaces.
impl fmt::Display for SExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SExpr::Atom(a) => f.write_str(a),
            SExpr::List(items) => {
                f.write_str("(")?;
                for (k, item) in items.iter().enumerate() {
                    if k > 0 {
                        f.write_str(" ")?;
                    }
                    write!(f, "{item}")?;
                }
                f.write_str(")")
            }
        }
    }
}

/// 1-based line and column of a character.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Pos {
    pub line: usize,
    pub col: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{line}:{col}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub message: String,
}

impl ParseError {
    pub fn at(pos: Pos, message: impl Into<String>) -> Self {
        ParseError { line: pos.line, col: pos.col, message: message.into() }
    }
}

/// An s-expression node that remembers where it starts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Located {
    pub pos: Pos,
    pub node: Node,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Node {
    Atom(String),
    List(Vec<Located>),
}

impl Located {
    pub fn to_sexpr(&self) -> SExpr {
        match &self.node {
            Node::Atom(a) => SExpr::Atom(a.clone()),
            Node::List(items) => SExpr::List(items.iter().map(Located::to_sexpr).collect()),
        }
    }

    pub fn atom(&self) -> Option<&str> {
        match &self.node {
            Node::Atom(a) => Some(a),
            Node::List(_) => None,
        }
    }

    pub fn expect_atom(&self, what: &str) -> Result<&str, ParseError> {
        self.atom().ok_or_else(|| ParseError::at(self.pos, format!("expected {what}, found a list")))
    }

    pub fn expect_list(&self, what: &str) -> Result<&[Located], ParseError> {
        match &self.node {
            Node::List(items) => Ok(items),
            Node::Atom(a) => Err(ParseError::at(self.pos, format!("expected {what}, found atom `{a}`"))),
        }
    }

    /// A list whose first element is the atom `head`; returns the rest.
    pub fn expect_form(&self, head: &str) -> Result<&[Located], ParseError> {
        let items = self.expect_list(&format!("`({head} ...)`"))?;
        match items.first().and_then(Located::atom) {
            Some(h) if h == head => Ok(&items[1..]),
            _ => Err(ParseError::at(self.pos, format!("expected `({head} ...)`"))),
        }
    }

    pub fn head(&self) -> Option<&str> {
        match &self.node {
            Node::List(items) => items.first().and_then(Located::atom),
            Node::Atom(_) => None,
        }
    }
}

struct Reader<'a> {
    chars: std::iter::Peekable<std::str::Chars<'a>>,
    pos: Pos,
}

impl Reader<'_> {
    fn peek(&mut self) -> Option<char> {
        self.chars.peek().copied()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.chars.next()?;
        if c == '\n' {
            self.pos.line += 1;
            self.pos.col = 1;
        } else {
            self.pos.col += 1;
        }
        Some(c)
    }

    fn skip_trivia(&mut self) {
        while let Some(c) = self.peek() {
            if c == ';' {
                while self.peek().is_some_and(|c| c != '\n') {
                    self.bump();
                }
            } else if c.is_whitespace() {
                self.bump();
            } else {
                break;
            }
        }
    }

    fn expr(&mut self) -> Result<Located, ParseError> {
        self.skip_trivia();
        let start = self.pos;
        match self.peek() {
            None => Err(ParseError::at(start, "unexpected end of input")),
            Some(')') => Err(ParseError::at(start, "unexpected `)`")),
            Some('(') => {
                self.bump();
                let mut items = Vec::new();
                loop {
                    self.skip_trivia();
                    match self.peek() {
                        None => return Err(ParseError::at(start, "unbalanced `(`: missing `)`")),
                        Some(')') => {
                            self.bump();
                            return Ok(Located { pos: start, node: Node::List(items) });
                        }
                        Some(_) => items.push(self.expr()?),
                    }
                }
            }
            Some(_) => {
                let mut atom = String::new();
                while let Some(c) = self.peek() {
                    if c.is_whitespace() || c == '(' || c == ')' || c == ';' {
                        break;
                    }
                    atom.push(c);
                    self.bump();
                }
                Ok(Located { pos: start, node: Node::Atom(atom) })
            }
        }
    }
}

/// Parses every top-level expression of `text`.
pub fn parse_all(text: &str) -> Result<Vec<Located>, ParseError> {
    let mut r = Reader { chars: text.chars().peekable(), pos: Pos { line: 1, col: 1 } };
    let mut out = Vec::new();
    loop {
        r.skip_trivia();
        if r.peek().is_none() {
            return Ok(out);
        }
        out.push(r.expr()?);
    }
}

/// Parses exactly one top-level expression.
pub fn parse_one(text: &str) -> Result<Located, ParseError> {
    let mut all = parse_all(text)?;
    match all.len() {
        1 => Ok(all.pop().expect("one element")),
        0 => Err(ParseError::at(Pos { line: 1, col: 1 }, "empty input")),
        _ => Err(ParseError::at(all[1].pos, "trailing input after the first expression")),
    }
}

pub fn parse_sexpr(text: &str) -> Result<SExpr, ParseError> {
    parse_one(text).map(|l| l.to_sexpr())
}
