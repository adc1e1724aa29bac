//! Element literals.
//!
//! ```text
//! Z     -3
//! Q     3/4   -3/4   2/4 (normalized to 1/2)   5
//! ZxZ   (1,-2)
//! H3    (1,0,-2)
//! pair  [<element>|<element>]
//! ```
//!
//! Rendering with `Display` produces the canonical literal, and parsing it
//! back yields the same value. Whitespace between tokens is ignored.

use crate::bext::BElement;
use crate::error::{Error, Result};
use crate::group::{Element, GroupKind, Heis, Lex2, Rat};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Literal {
    Element(Element),
    Pair(BElement<Element>),
}

pub fn parse_element(text: &str, kind: GroupKind) -> Result<Element> {
    let mut p = Parser::new(text);
    let e = p.element(kind)?;
    p.finish()?;
    Ok(e)
}

pub fn parse_pair(text: &str, kind: GroupKind) -> Result<BElement<Element>> {
    let mut p = Parser::new(text);
    let s = p.pair(kind)?;
    p.finish()?;
    Ok(s)
}

/// A pair if the text starts with `[`, a group element otherwise.
pub fn parse_literal(text: &str, kind: GroupKind) -> Result<Literal> {
    if text.trim_start().starts_with('[') {
        parse_pair(text, kind).map(Literal::Pair)
    } else {
        parse_element(text, kind).map(Literal::Element)
    }
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(src: &'a str) -> Self {
        Parser { src, pos: 0 }
    }

    fn skip_ws(&mut self) {
        while let Some(c) = self.peek() {
            if !c.is_whitespace() {
                break;
            }
            self.pos += c.len_utf8();
        }
    }

    fn peek(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn expect(&mut self, want: char) -> Result<()> {
        self.skip_ws();
        match self.peek() {
            Some(c) if c == want => {
                self.pos += c.len_utf8();
                Ok(())
            }
            Some(c) => Err(Error::parse(
                self.pos,
                format!("expected `{want}`, found `{c}`"),
            )),
            None => Err(Error::parse(
                self.pos,
                format!("expected `{want}`, found end of input"),
            )),
        }
    }

    fn eat(&mut self, want: char) -> bool {
        self.skip_ws();
        if self.peek() == Some(want) {
            self.pos += want.len_utf8();
            true
        } else {
            false
        }
    }

    fn finish(&mut self) -> Result<()> {
        self.skip_ws();
        match self.peek() {
            None => Ok(()),
            Some(c) => Err(Error::parse(self.pos, format!("unexpected trailing `{c}`"))),
        }
    }

    fn integer(&mut self) -> Result<i64> {
        self.skip_ws();
        let start = self.pos;
        if self.peek() == Some('-') {
            self.pos += 1;
        }
        let digits_start = self.pos;
        while matches!(self.peek(), Some('0'..='9')) {
            self.pos += 1;
        }
        if self.pos == digits_start {
            return Err(Error::parse(start, "expected an integer"));
        }
        self.src[start..self.pos]
            .parse()
            .map_err(|_| Error::parse(start, "integer out of range"))
    }

    fn tuple(&mut self, arity: usize) -> Result<Vec<i64>> {
        let open = {
            self.skip_ws();
            self.pos
        };
        self.expect('(')?;
        let mut v = vec![self.integer()?];
        while self.eat(',') {
            v.push(self.integer()?);
        }
        self.expect(')')?;
        if v.len() != arity {
            return Err(Error::parse(
                open,
                format!("expected {arity} coordinates, found {}", v.len()),
            ));
        }
        Ok(v)
    }

    fn element(&mut self, kind: GroupKind) -> Result<Element> {
        self.skip_ws();
        if self.peek().is_none() {
            return Err(Error::parse(
                self.pos,
                "expected an element, found end of input",
            ));
        }
        match kind {
            GroupKind::Z => Ok(Element::Int(self.integer()?)),
            GroupKind::Q => {
                let numer = self.integer()?;
                let denom = if self.eat('/') {
                    self.skip_ws();
                    let at = self.pos;
                    let d = self.integer()?;
                    if d <= 0 {
                        return Err(Error::parse(at, "denominator must be positive"));
                    }
                    d
                } else {
                    1
                };
                Ok(Element::Rat(Rat::new(numer, denom)?))
            }
            GroupKind::ZxZ => {
                let v = self.tuple(2)?;
                Ok(Element::Pair(Lex2(v[0], v[1])))
            }
            GroupKind::H3 => {
                let v = self.tuple(3)?;
                Ok(Element::Triple(Heis(v[0], v[1], v[2])))
            }
        }
    }

    fn pair(&mut self, kind: GroupKind) -> Result<BElement<Element>> {
        self.expect('[')?;
        let left = self.element(kind)?;
        self.expect('|')?;
        let right = self.element(kind)?;
        self.expect(']')?;
        Ok(BElement::new(left, right))
    }
}
