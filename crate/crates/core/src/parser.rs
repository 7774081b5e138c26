//! Text forms of identities and identity systems.
//!
//! ```text
//! identity := word ('=' | '≈') word
//! word     := term+
//! term     := atom ('^' nat)?
//! atom     := [a-z] | '(' word ')'
//! ```
//!
//! Whitespace is ignored. A system file holds one identity per line; `#`
//! starts a comment.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::words::{Letter, Word};

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Identity {
    pub lhs: Word,
    pub rhs: Word,
}

impl Identity {
    pub fn new(lhs: Word, rhs: Word) -> Identity {
        Identity { lhs, rhs }
    }

    pub fn is_trivial(&self) -> bool {
        self.lhs == self.rhs
    }

    pub fn reverse(&self) -> Identity {
        Identity::new(self.lhs.reverse(), self.rhs.reverse())
    }

    pub fn flip(&self) -> Identity {
        Identity::new(self.rhs.clone(), self.lhs.clone())
    }

    /// Letters occurring on either side, in increasing order.
    pub fn variables(&self) -> Vec<Letter> {
        let mut vars: BTreeSet<Letter> = self.lhs.content();
        vars.extend(self.rhs.letters().iter().copied());
        vars.into_iter().collect()
    }

    pub fn map_letters(&self, mut f: impl FnMut(Letter) -> Letter) -> Identity {
        Identity::new(self.lhs.map_letters(&mut f), self.rhs.map_letters(&mut f))
    }
}

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}={}", self.lhs, self.rhs)
    }
}

impl FromStr for Identity {
    type Err = Error;

    fn from_str(s: &str) -> Result<Identity> {
        parse_identity(s)
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Word> {
        let mut p = Parser::new(s);
        let w = p.word()?;
        p.skip_ws();
        match p.peek() {
            None => Ok(w),
            Some(c) => Err(p.error(format!("unexpected `{c}`"))),
        }
    }
}

impl Serialize for Identity {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Identity {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentitySystem {
    pub identities: Vec<Identity>,
    pub source: Option<String>,
}

impl IdentitySystem {
    /// Keeps the first occurrence of each identity; fails on an empty list.
    pub fn new(identities: impl IntoIterator<Item = Identity>) -> Result<IdentitySystem> {
        let mut seen = BTreeSet::new();
        let identities: Vec<Identity> = identities
            .into_iter()
            .filter(|id| seen.insert(id.clone()))
            .collect();
        if identities.is_empty() {
            return Err(Error::EmptySystem);
        }
        Ok(IdentitySystem { identities, source: None })
    }

    pub fn with_source(mut self, source: impl Into<String>) -> IdentitySystem {
        self.source = Some(source.into());
        self
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Identity> {
        self.identities.iter()
    }

    pub fn len(&self) -> usize {
        self.identities.len()
    }

    pub fn is_empty(&self) -> bool {
        self.identities.is_empty()
    }
}

impl fmt::Display for IdentitySystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for id in &self.identities {
            writeln!(f, "{id}")?;
        }
        Ok(())
    }
}

pub fn parse_identity(text: &str) -> Result<Identity> {
    let mut p = Parser::new(text);
    p.skip_ws();
    if matches!(p.peek(), Some('=' | '≈')) {
        return Err(p.error("empty left side"));
    }
    let lhs = p.word()?;
    p.skip_ws();
    match p.peek() {
        Some('=' | '≈') => p.bump(),
        Some(c) => return Err(p.error(format!("expected `=`, found `{c}`"))),
        None => return Err(p.error("expected `=`")),
    }
    p.skip_ws();
    if p.peek().is_none() {
        return Err(p.error("empty right side"));
    }
    let rhs = p.word()?;
    p.skip_ws();
    if let Some(c) = p.peek() {
        return Err(p.error(format!("unexpected `{c}`")));
    }
    Ok(Identity::new(lhs, rhs))
}

pub fn parse_system(text: &str) -> Result<IdentitySystem> {
    let mut identities = Vec::new();
    let mut errors = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.split('#').next().unwrap_or("");
        if line.trim().is_empty() {
            continue;
        }
        match parse_identity(line) {
            Ok(id) => identities.push(id),
            Err(e) => errors.push((i + 1, e)),
        }
    }
    if !errors.is_empty() {
        return Err(Error::System(errors));
    }
    IdentitySystem::new(identities)
}

/// Canonical text: `=` separator and runs compressed to powers.
pub fn render(id: &Identity) -> String {
    id.to_string()
}

const MAX_EXPONENT: usize = 1_000_000;

struct Parser {
    chars: Vec<(usize, char)>,
    pos: usize,
}

impl Parser {
    fn new(src: &str) -> Parser {
        Parser { chars: src.chars().enumerate().collect(), pos: 0 }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).map(|&(_, c)| c)
    }

    fn bump(&mut self) {
        self.pos += 1;
    }

    fn offset(&self) -> usize {
        self.chars.get(self.pos).map(|&(i, _)| i).unwrap_or(self.chars.len())
    }

    fn error(&self, message: impl Into<String>) -> Error {
        Error::Syntax { position: self.offset(), message: message.into() }
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(c) if c.is_whitespace()) {
            self.bump();
        }
    }

    fn word(&mut self) -> Result<Word> {
        let mut letters = Vec::new();
        loop {
            self.skip_ws();
            match self.peek() {
                Some(c) if c.is_ascii_lowercase() || c == '(' => {
                    letters.extend(self.term()?.into_letters());
                }
                _ => break,
            }
        }
        if letters.is_empty() {
            return Err(match self.peek() {
                Some(c) => self.error(format!("expected a word, found `{c}`")),
                None => self.error("expected a word"),
            });
        }
        Word::new(letters)
    }

    fn term(&mut self) -> Result<Word> {
        let atom = match self.peek() {
            Some('(') => {
                self.bump();
                let inner = self.word()?;
                self.skip_ws();
                if self.peek() != Some(')') {
                    return Err(self.error("expected `)`"));
                }
                self.bump();
                inner
            }
            Some(c) => {
                self.bump();
                Word::letter(Letter::from_char(c).expect("caller checked for a letter"))
            }
            None => return Err(self.error("expected a letter or `(`")),
        };
        self.skip_ws();
        if self.peek() == Some('^') {
            self.bump();
            self.skip_ws();
            let k = self.nat()?;
            atom.pow(k)
        } else {
            Ok(atom)
        }
    }

    fn nat(&mut self) -> Result<usize> {
        let start = self.pos;
        let mut digits = String::new();
        while let Some(c) = self.peek().filter(char::is_ascii_digit) {
            digits.push(c);
            self.bump();
        }
        if digits.is_empty() {
            return Err(self.error("expected an exponent"));
        }
        let k: usize = digits.parse().map_err(|_| Error::Syntax {
            position: self.chars[start].0,
            message: format!("exponent `{digits}` out of range"),
        })?;
        if k == 0 {
            return Err(Error::Syntax {
                position: self.chars[start].0,
                message: "exponent 0 is not allowed".into(),
            });
        }
        if k > MAX_EXPONENT {
            return Err(Error::Syntax {
                position: self.chars[start].0,
                message: format!("exponent {k} exceeds {MAX_EXPONENT}"),
            });
        }
        Ok(k)
    }
}
