//! Text syntax for words and presentations.
//!
//! ```text
//! presentation := "<" names "|" relations ">" | relations
//! relations    := relation ("," relation)*
//! relation     := word ("=" word)?          (u = v contributes u v⁻¹)
//! word         := factor+                   (juxtaposition or "*")
//! factor       := atom ("^" (integer | name))*
//! atom         := name | "1" | "[" word "," word "]" | "(" word ")"
//! ```
//!
//! `a^b` with a generator name `b` is the conjugate `b⁻¹ab`. Without an
//! explicit generator list, generators are numbered by first appearance.

use thiserror::Error;

use super::{Mode, Presentation, Word};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("unexpected {found} at offset {at}, expected {expected}")]
    Unexpected { at: usize, found: String, expected: &'static str },
    #[error("generator {0:?} is not declared")]
    Undeclared(String),
    #[error("generator {0:?} declared twice")]
    Duplicate(String),
    #[error("exponent out of range at offset {0}")]
    Exponent(usize),
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Name(String),
    Int(i64),
    Sym(char),
}

fn lex(text: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let chars: Vec<(usize, char)> = text.char_indices().collect();
    let mut out = Vec::new();
    let mut k = 0;
    while k < chars.len() {
        let (at, c) = chars[k];
        if c.is_whitespace() {
            k += 1;
        } else if c.is_alphabetic() || c == '_' {
            let mut s = String::new();
            while k < chars.len() && (chars[k].1.is_alphanumeric() || chars[k].1 == '_') {
                s.push(chars[k].1);
                k += 1;
            }
            out.push((at, Tok::Name(s)));
        } else if c.is_ascii_digit() {
            let mut s = String::new();
            while k < chars.len() && chars[k].1.is_ascii_digit() {
                s.push(chars[k].1);
                k += 1;
            }
            out.push((at, Tok::Int(s.parse().map_err(|_| ParseError::Exponent(at))?)));
        } else if "<>|,=[]()^*-⁻".contains(c) {
            out.push((at, Tok::Sym(if c == '⁻' { '-' } else { c })));
            k += 1;
        } else {
            return Err(ParseError::Unexpected { at, found: format!("{c:?}"), expected: "a word" });
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    names: Vec<String>,
    fixed: bool,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn at(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |(a, _)| *a)
    }

    fn unexpected(&self, expected: &'static str) -> ParseError {
        let found = match self.peek() {
            Some(Tok::Name(s)) => format!("name {s:?}"),
            Some(Tok::Int(i)) => format!("number {i}"),
            Some(Tok::Sym(c)) => format!("{c:?}"),
            None => "end of input".into(),
        };
        ParseError::Unexpected { at: self.at(), found, expected }
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Sym(c)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char, what: &'static str) -> Result<(), ParseError> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.unexpected(what))
        }
    }

    fn generator(&mut self, name: &str) -> Result<usize, ParseError> {
        if let Some(i) = self.names.iter().position(|n| n == name) {
            return Ok(i);
        }
        if self.fixed {
            return Err(ParseError::Undeclared(name.to_string()));
        }
        self.names.push(name.to_string());
        Ok(self.names.len() - 1)
    }

    fn starts_atom(&self) -> bool {
        matches!(self.peek(), Some(Tok::Name(_)) | Some(Tok::Int(1)) | Some(Tok::Sym('[')) | Some(Tok::Sym('(')))
    }

    fn word(&mut self) -> Result<Word, ParseError> {
        let mut parts = vec![self.factor()?];
        loop {
            if self.eat('*') {
                parts.push(self.factor()?);
            } else if self.starts_atom() {
                parts.push(self.factor()?);
            } else {
                break;
            }
        }
        Ok(if parts.len() == 1 { parts.pop().expect("one part") } else { Word::Product(parts) })
    }

    fn factor(&mut self) -> Result<Word, ParseError> {
        let mut w = self.atom()?;
        while self.eat('^') {
            let neg = self.eat('-');
            match self.peek().cloned() {
                Some(Tok::Int(k)) => {
                    self.pos += 1;
                    let k = if neg { -k } else { k };
                    w = match w {
                        Word::Gen { index, exp } => {
                            Word::Gen { index, exp: exp.checked_mul(k).ok_or(ParseError::Exponent(self.at()))? }
                        }
                        other => other.pow(k),
                    };
                }
                Some(Tok::Name(n)) if !neg => {
                    self.pos += 1;
                    let b = Word::gen(self.generator(&n)?);
                    w = Word::conjugate(w, b);
                }
                Some(Tok::Sym('(')) if !neg => {
                    self.pos += 1;
                    let b = self.word()?;
                    self.expect(')', "')'")?;
                    w = Word::conjugate(w, b);
                }
                _ => return Err(self.unexpected("an exponent")),
            }
        }
        Ok(w)
    }

    fn atom(&mut self) -> Result<Word, ParseError> {
        match self.peek().cloned() {
            Some(Tok::Name(n)) => {
                self.pos += 1;
                Ok(Word::gen(self.generator(&n)?))
            }
            Some(Tok::Int(1)) => {
                self.pos += 1;
                Ok(Word::identity())
            }
            Some(Tok::Sym('[')) => {
                self.pos += 1;
                let u = self.word()?;
                self.expect(',', "',' inside a commutator")?;
                let v = self.word()?;
                self.expect(']', "']'")?;
                Ok(Word::commutator(u, v))
            }
            Some(Tok::Sym('(')) => {
                self.pos += 1;
                let w = self.word()?;
                self.expect(')', "')'")?;
                Ok(w)
            }
            _ => Err(self.unexpected("a generator, '1', '[' or '('")),
        }
    }

    fn relation(&mut self) -> Result<Word, ParseError> {
        let lhs = self.word()?;
        if self.eat('=') {
            let rhs = self.word()?;
            Ok(Word::product([lhs, rhs.inverse()]))
        } else {
            Ok(lhs)
        }
    }

    fn relations(&mut self) -> Result<Vec<Word>, ParseError> {
        let mut rels = Vec::new();
        if matches!(self.peek(), None | Some(Tok::Sym('>'))) {
            return Ok(rels);
        }
        rels.push(self.relation()?);
        while self.eat(',') {
            rels.push(self.relation()?);
        }
        Ok(rels)
    }
}

pub(super) fn parse_presentation(text: &str, mode: Mode) -> Result<Presentation, ParseError> {
    let toks = lex(text)?;
    let mut p = Parser { toks, pos: 0, names: Vec::new(), fixed: false, end: text.len() };
    let relators = if p.eat('<') {
        loop {
            match p.peek().cloned() {
                Some(Tok::Name(n)) => {
                    p.pos += 1;
                    if p.names.contains(&n) {
                        return Err(ParseError::Duplicate(n));
                    }
                    p.names.push(n);
                }
                _ => return Err(p.unexpected("a generator name")),
            }
            if !p.eat(',') {
                break;
            }
        }
        p.fixed = true;
        let rels = if p.eat('|') { p.relations()? } else { Vec::new() };
        p.expect('>', "'>'")?;
        rels
    } else {
        p.relations()?
    };
    if p.pos != p.toks.len() {
        return Err(p.unexpected("end of input"));
    }
    Ok(Presentation::new(p.names, relators, mode))
}

/// Parses a single word over the given generator names.
pub fn parse_word(text: &str, names: &[String]) -> Result<Word, ParseError> {
    let toks = lex(text)?;
    let mut p = Parser { toks, pos: 0, names: names.to_vec(), fixed: true, end: text.len() };
    let w = p.word()?;
    if p.pos != p.toks.len() {
        return Err(p.unexpected("end of input"));
    }
    Ok(w)
}
