//! Freely reduced words over an indexed alphabet.
//!
//! Letters are stored run-length encoded, `(generator, exponent)` with nonzero
//! exponents and no two adjacent runs on the same generator. Every
//! constructor reduces eagerly, so equality of [`Word`] values is equality in
//! the free group.

use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub gen: usize,
    pub exp: i64,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    letters: Vec<Letter>,
}

impl Word {
    pub fn empty() -> Self {
        Self::default()
    }

    pub fn generator(gen: usize) -> Self {
        Self::power(gen, 1)
    }

    pub fn power(gen: usize, exp: i64) -> Self {
        let mut w = Self::empty();
        w.push(gen, exp);
        w
    }

    pub fn from_letters<I: IntoIterator<Item = (usize, i64)>>(letters: I) -> Self {
        let mut w = Self::empty();
        for (gen, exp) in letters {
            w.push(gen, exp);
        }
        w
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Number of runs.
    pub fn runs(&self) -> usize {
        self.letters.len()
    }

    /// Length as a word in the generators and their inverses.
    pub fn syllable_length(&self) -> u64 {
        self.letters.iter().map(|l| l.exp.unsigned_abs()).sum()
    }

    /// Appends `gen^exp`, cancelling against the tail.
    pub fn push(&mut self, gen: usize, exp: i64) {
        if exp == 0 {
            return;
        }
        match self.letters.last_mut() {
            Some(last) if last.gen == gen => {
                last.exp += exp;
                if last.exp == 0 {
                    self.letters.pop();
                }
            }
            _ => self.letters.push(Letter { gen, exp }),
        }
    }

    pub fn append(&mut self, other: &Word) {
        for l in &other.letters {
            self.push(l.gen, l.exp);
        }
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut w = self.clone();
        w.append(other);
        w
    }

    pub fn inverse(&self) -> Word {
        Word {
            letters: self
                .letters
                .iter()
                .rev()
                .map(|l| Letter {
                    gen: l.gen,
                    exp: -l.exp,
                })
                .collect(),
        }
    }

    pub fn pow(&self, k: i64) -> Word {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut w = Word::empty();
        for _ in 0..k.unsigned_abs() {
            w.append(&base);
        }
        w
    }

    /// `c · self · c⁻¹`
    pub fn conjugate_by(&self, c: &Word) -> Word {
        c.concat(self).concat(&c.inverse())
    }

    /// Replaces every letter `g^e` by `image(g)^e`.
    pub fn substitute<F: FnMut(usize) -> Word>(&self, mut image: F) -> Word {
        let mut w = Word::empty();
        for l in &self.letters {
            w.append(&image(l.gen).pow(l.exp));
        }
        w
    }

    /// Renames generators; `rename` must not merge adjacent runs incorrectly,
    /// reduction is redone anyway.
    pub fn map_generators<F: FnMut(usize) -> usize>(&self, mut rename: F) -> Word {
        Word::from_letters(self.letters.iter().map(|l| (rename(l.gen), l.exp)))
    }

    pub fn contains(&self, gen: usize) -> bool {
        self.letters.iter().any(|l| l.gen == gen)
    }

    pub fn max_generator(&self) -> Option<usize> {
        self.letters.iter().map(|l| l.gen).max()
    }

    /// Exponent sum of each generator `0..size`.
    pub fn exponent_vector(&self, size: usize) -> Result<Vec<i64>> {
        let mut v = vec![0i64; size];
        for l in &self.letters {
            let slot = v.get_mut(l.gen).ok_or(Error::LetterOutOfRange { index: l.gen, size })?;
            *slot += l.exp;
        }
        Ok(v)
    }

    /// Displays the word with the given generator names, in the syntax
    /// accepted by [`parse_word`]. The empty word prints as `1`.
    pub fn display<'a>(&'a self, names: &'a [String]) -> DisplayWord<'a> {
        DisplayWord { word: self, names }
    }
}

pub struct DisplayWord<'a> {
    word: &'a Word,
    names: &'a [String],
}

impl fmt::Display for DisplayWord<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.word.is_empty() {
            return f.write_str("1");
        }
        for (i, l) in self.word.letters.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            match self.names.get(l.gen) {
                Some(name) => f.write_str(name)?,
                None => write!(f, "#{}", l.gen)?,
            }
            if l.exp != 1 {
                write!(f, "^{}", l.exp)?;
            }
        }
        Ok(())
    }
}

/// Parses whitespace-separated tokens `name` or `name^int`.
///
/// The token `1` stands for the identity unless `1` is itself a generator.
pub fn parse_word<S: AsRef<str>>(text: &str, alphabet: &[S]) -> Result<Word> {
    let mut w = Word::empty();
    for (offset, token) in tokens(text) {
        let (name, exp) = match token.split_once('^') {
            None => (token, 1),
            Some((name, exp_text)) => {
                let exp: i64 = exp_text.parse().map_err(|_| Error::MalformedExponent {
                    token: token.to_string(),
                    offset,
                })?;
                if exp == 0 {
                    return Err(Error::ZeroExponent {
                        token: token.to_string(),
                        offset,
                    });
                }
                (name, exp)
            }
        };
        match alphabet.iter().position(|g| g.as_ref() == name) {
            Some(gen) => w.push(gen, exp),
            None if name == "1" => {}
            None => {
                return Err(Error::UnknownGenerator {
                    name: name.to_string(),
                    offset,
                })
            }
        }
    }
    Ok(w)
}

/// Parses a relator, either a word or an equation `lhs = rhs` which becomes
/// `lhs · rhs⁻¹`.
pub fn parse_relator<S: AsRef<str>>(text: &str, alphabet: &[S]) -> Result<Word> {
    match text.split_once('=') {
        None => parse_word(text, alphabet),
        Some((lhs, rhs)) => {
            let left = parse_word(lhs, alphabet)?;
            let right = parse_word(rhs, alphabet).map_err(|e| shift_offset(e, lhs.len() + 1))?;
            Ok(left.concat(&right.inverse()))
        }
    }
}

fn shift_offset(e: Error, by: usize) -> Error {
    match e {
        Error::UnknownGenerator { name, offset } => Error::UnknownGenerator {
            name,
            offset: offset + by,
        },
        Error::MalformedExponent { token, offset } => Error::MalformedExponent {
            token,
            offset: offset + by,
        },
        Error::ZeroExponent { token, offset } => Error::ZeroExponent {
            token,
            offset: offset + by,
        },
        other => other,
    }
}

fn tokens(text: &str) -> impl Iterator<Item = (usize, &str)> {
    let base = text.as_ptr() as usize;
    text.split_whitespace()
        .map(move |tok| (tok.as_ptr() as usize - base, tok))
}
