//! Relator grammar and the presentation text format.
//!
//! Relators are written over generators `r0, r1, ...` with `*` for products,
//! `^k` for integer powers, `^rX` for conjugation by a generator, `[x,y]`
//! for commutators (more than two entries nest left-normed) and parentheses
//! for grouping. Example: `[(r0*r1)^2,r2]*(r1*r2)^4`.
//!
//! A presentation file carries two header lines followed by one relator per
//! line:
//!
//! ```text
//! gens: 3
//! involutions: all
//! r0^2
//! (r0*r1)^4
//! ```
//!
//! `involutions:` takes `all`, `none`, or a space-separated generator list.

use thiserror::Error;

use super::{FpError, Presentation, Word};

#[derive(Error, Debug, Clone, PartialEq, Eq)]
#[error("parse error at byte {pos}: {message}")]
pub struct ParseError {
    pub pos: usize,
    pub message: String,
}

fn err<T>(pos: usize, message: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError {
        pos,
        message: message.into(),
    })
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    ngens: usize,
    flags: &'a [bool],
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<u8> {
        let c = self.peek()?;
        self.pos += 1;
        Some(c)
    }

    fn expect(&mut self, c: u8) -> Result<(), ParseError> {
        match self.bump() {
            Some(got) if got == c => Ok(()),
            Some(got) => err(
                self.pos - 1,
                format!("expected '{}', found '{}'", c as char, got as char),
            ),
            None => err(self.pos, format!("expected '{}', found end of input", c as char)),
        }
    }

    fn integer(&mut self) -> Result<i64, ParseError> {
        let start = self.pos;
        let negative = if self.peek() == Some(b'-') {
            self.pos += 1;
            true
        } else {
            false
        };
        let digits_start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos == digits_start {
            return err(start, "expected an integer");
        }
        let text = std::str::from_utf8(&self.src[digits_start..self.pos]).unwrap();
        let value: i64 = text
            .parse()
            .map_err(|_| ParseError {
                pos: start,
                message: format!("integer '{text}' out of range"),
            })?;
        Ok(if negative { -value } else { value })
    }

    fn generator(&mut self) -> Result<usize, ParseError> {
        let start = self.pos;
        self.expect(b'r')?;
        let digits_start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos == digits_start {
            return err(start, "expected a generator index after 'r'");
        }
        let text = std::str::from_utf8(&self.src[digits_start..self.pos]).unwrap();
        let gen: usize = text.parse().map_err(|_| ParseError {
            pos: start,
            message: format!("generator index '{text}' out of range"),
        })?;
        if gen >= self.ngens {
            return err(
                start,
                format!("unknown generator r{gen} (presentation has {} generators)", self.ngens),
            );
        }
        Ok(gen)
    }

    fn product(&mut self) -> Result<Word, ParseError> {
        let mut acc = self.factor()?;
        while self.peek() == Some(b'*') {
            self.pos += 1;
            let rhs = self.factor()?;
            acc = acc.concat(&rhs, self.flags);
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Word, ParseError> {
        let mut base = self.atom()?;
        while self.peek() == Some(b'^') {
            self.pos += 1;
            match self.peek() {
                Some(b'r') => {
                    let g = self.generator()?;
                    base = base.conjugate(&Word::generator(g), self.flags);
                }
                Some(c) if c == b'-' || c.is_ascii_digit() => {
                    let k = self.integer()?;
                    base = base.pow(k, self.flags);
                }
                Some(c) => {
                    return err(
                        self.pos,
                        format!("expected an exponent or generator after '^', found '{}'", c as char),
                    )
                }
                None => return err(self.pos, "expected an exponent or generator after '^'"),
            }
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Word, ParseError> {
        match self.peek() {
            Some(b'r') => Ok(Word::generator(self.generator()?)),
            Some(b'(') => {
                self.pos += 1;
                let inner = self.product()?;
                self.expect(b')')?;
                Ok(inner)
            }
            Some(b'[') => {
                self.pos += 1;
                let mut entries = vec![self.product()?];
                while self.peek() == Some(b',') {
                    self.pos += 1;
                    entries.push(self.product()?);
                }
                self.expect(b']')?;
                if entries.len() < 2 {
                    return err(self.pos, "a commutator needs at least two entries");
                }
                // left-normed: [a,b,c] = [[a,b],c]
                let mut acc = entries[0].clone();
                for next in &entries[1..] {
                    acc = acc.commutator(next, self.flags);
                }
                Ok(acc)
            }
            Some(c) => err(self.pos, format!("unexpected character '{}'", c as char)),
            None => err(self.pos, "unexpected end of input"),
        }
    }
}

/// Parses a single relator over `ngens` generators with the given
/// involution flags, returning the fully expanded, freely reduced word.
pub fn parse_relator(text: &str, ngens: usize, flags: &[bool]) -> Result<Word, ParseError> {
    let mut p = Parser {
        src: text.as_bytes(),
        pos: 0,
        ngens,
        flags,
    };
    let word = p.product()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return err(p.pos, "trailing input after relator");
    }
    Ok(word)
}

/// Parses the presentation text format: `gens:` and `involutions:` headers
/// followed by one relator per line. Blank lines are skipped.
pub fn parse_presentation(text: &str) -> Result<Presentation, ParseError> {
    let mut lines = text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty());

    let (_, gens_line) = lines
        .next()
        .ok_or_else(|| ParseError { pos: 0, message: "missing 'gens:' header".into() })?;
    let ngens: usize = gens_line
        .trim()
        .strip_prefix("gens:")
        .ok_or_else(|| ParseError { pos: 0, message: "first line must be 'gens: <count>'".into() })?
        .trim()
        .parse()
        .map_err(|_| ParseError { pos: 0, message: "invalid generator count".into() })?;

    let (_, inv_line) = lines
        .next()
        .ok_or_else(|| ParseError { pos: 0, message: "missing 'involutions:' header".into() })?;
    let inv_spec = inv_line
        .trim()
        .strip_prefix("involutions:")
        .ok_or_else(|| ParseError {
            pos: 0,
            message: "second line must be 'involutions: all|none|<generators>'".into(),
        })?
        .trim();
    let flags = match inv_spec {
        "all" => vec![true; ngens],
        "none" => vec![false; ngens],
        list => {
            let mut flags = vec![false; ngens];
            for name in list.split_whitespace() {
                let idx: usize = name
                    .strip_prefix('r')
                    .and_then(|d| d.parse().ok())
                    .filter(|&i| i < ngens)
                    .ok_or_else(|| ParseError {
                        pos: 0,
                        message: format!("bad involution entry '{name}'"),
                    })?;
                flags[idx] = true;
            }
            flags
        }
    };

    let mut relators = Vec::new();
    for (lineno, line) in lines {
        let word = parse_relator(line.trim(), ngens, &flags).map_err(|e| ParseError {
            pos: e.pos,
            message: format!("line {}: {}", lineno + 1, e.message),
        })?;
        relators.push(word);
    }
    Presentation::new(ngens, flags, relators).map_err(|e| ParseError {
        pos: 0,
        message: match e {
            FpError::GeneratorOutOfRange { gen, ngens } => {
                format!("relator references r{gen} but only {ngens} generators are declared")
            }
            other => other.to_string(),
        },
    })
}
