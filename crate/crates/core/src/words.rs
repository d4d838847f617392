//! Free-group words over a finite ranked alphabet.
//!
//! A word is a finite sequence of signed generators; it may be unreduced.
//! [`ReducedWord`] is the canonical representative of a free-group element:
//! no adjacent cancelling pair survives. Reduction is a single
//! left-to-right stack pass.
//!
//! Textual syntax: `a`..`z` denote generators `0..25`, the corresponding
//! uppercase letter denotes the inverse. For ranks above 26 the numeric
//! forms `g<k>` and `G<k>` are accepted (and produced on output).

use serde::{Deserialize, Serialize};
use std::fmt;
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

/// A generator `a_i` (sign `Plus`) or its inverse `a_i^-1` (sign `Minus`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct SignedGenerator {
    pub index: usize,
    pub sign: Sign,
}

impl SignedGenerator {
    pub fn positive(index: usize) -> Self {
        SignedGenerator {
            index,
            sign: Sign::Plus,
        }
    }

    pub fn negative(index: usize) -> Self {
        SignedGenerator {
            index,
            sign: Sign::Minus,
        }
    }

    pub fn inverse(self) -> Self {
        SignedGenerator {
            index: self.index,
            sign: self.sign.flip(),
        }
    }

    pub fn cancels(self, other: SignedGenerator) -> bool {
        self.index == other.index && self.sign != other.sign
    }

    pub fn is_positive(self) -> bool {
        self.sign == Sign::Plus
    }
}

impl fmt::Display for SignedGenerator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.index < 26 {
            let base = match self.sign {
                Sign::Plus => b'a',
                Sign::Minus => b'A',
            };
            write!(f, "{}", (base + self.index as u8) as char)
        } else {
            match self.sign {
                Sign::Plus => write!(f, "g{}", self.index),
                Sign::Minus => write!(f, "G{}", self.index),
            }
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum WordParseError {
    #[error("unexpected character {0:?} in word")]
    UnexpectedChar(char),
    #[error("numeric generator form `{0}` is missing digits")]
    MissingIndex(String),
    #[error("generator index {index} out of range for rank {rank}")]
    IndexOutOfRange { index: usize, rank: usize },
}

/// A possibly unreduced word; immutable value, letter-sequence equality.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize)]
pub struct Word {
    letters: Vec<SignedGenerator>,
}

impl Word {
    pub fn new(letters: Vec<SignedGenerator>) -> Self {
        Word { letters }
    }

    pub fn empty() -> Self {
        Word {
            letters: Vec::new(),
        }
    }

    /// The single-letter word `a_index`.
    pub fn generator(index: usize) -> Self {
        Word {
            letters: vec![SignedGenerator::positive(index)],
        }
    }

    pub fn letters(&self) -> &[SignedGenerator] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// True iff the word is nonempty and every letter is a positive generator.
    pub fn is_positive(&self) -> bool {
        !self.letters.is_empty() && self.letters.iter().all(|l| l.is_positive())
    }

    /// Largest generator index occurring in the word, if any.
    pub fn max_index(&self) -> Option<usize> {
        self.letters.iter().map(|l| l.index).max()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Word { letters }
    }

    /// Reverse with all signs flipped, so that `reduce(w · w⁻¹) = ε`.
    pub fn invert(&self) -> Word {
        Word {
            letters: self.letters.iter().rev().map(|l| l.inverse()).collect(),
        }
    }

    /// `u·v·u⁻¹·v⁻¹`.
    pub fn commutator(&self, other: &Word) -> Word {
        self.concat(other)
            .concat(&self.invert())
            .concat(&other.invert())
    }

    pub fn pow(&self, exponent: usize) -> Word {
        let mut letters = Vec::with_capacity(self.letters.len() * exponent);
        for _ in 0..exponent {
            letters.extend_from_slice(&self.letters);
        }
        Word { letters }
    }

    /// Free reduction: one left-to-right pass with a stack.
    pub fn reduce(&self) -> ReducedWord {
        let mut stack: Vec<SignedGenerator> = Vec::with_capacity(self.letters.len());
        for &letter in &self.letters {
            match stack.last() {
                Some(&top) if top.cancels(letter) => {
                    stack.pop();
                }
                _ => stack.push(letter),
            }
        }
        ReducedWord { letters: stack }
    }

    pub fn parse(text: &str) -> Result<Word, WordParseError> {
        let mut letters = Vec::new();
        let mut chars = text.chars().peekable();
        while let Some(c) = chars.next() {
            match c {
                'g' | 'G' if chars.peek().is_some_and(|d| d.is_ascii_digit()) => {
                    let mut digits = String::new();
                    while let Some(&d) = chars.peek() {
                        if d.is_ascii_digit() {
                            digits.push(d);
                            chars.next();
                        } else {
                            break;
                        }
                    }
                    let index: usize = digits
                        .parse()
                        .map_err(|_| WordParseError::MissingIndex(digits.clone()))?;
                    let sign = if c == 'g' { Sign::Plus } else { Sign::Minus };
                    letters.push(SignedGenerator { index, sign });
                }
                'a'..='z' => letters.push(SignedGenerator::positive(c as usize - 'a' as usize)),
                'A'..='Z' => letters.push(SignedGenerator::negative(c as usize - 'A' as usize)),
                // `1` denotes the identity, matching the display form of ε.
                '1' => {}
                c if c.is_whitespace() || c == '·' => {}
                other => return Err(WordParseError::UnexpectedChar(other)),
            }
        }
        Ok(Word { letters })
    }

    /// Parse and check every generator index against `rank`.
    pub fn parse_in_rank(text: &str, rank: usize) -> Result<Word, WordParseError> {
        let word = Word::parse(text)?;
        if let Some(bad) = word.letters.iter().find(|l| l.index >= rank) {
            return Err(WordParseError::IndexOutOfRange {
                index: bad.index,
                rank,
            });
        }
        Ok(word)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "1");
        }
        for letter in &self.letters {
            write!(f, "{letter}")?;
        }
        Ok(())
    }
}

impl From<ReducedWord> for Word {
    fn from(r: ReducedWord) -> Word {
        Word { letters: r.letters }
    }
}

impl FromIterator<SignedGenerator> for Word {
    fn from_iter<I: IntoIterator<Item = SignedGenerator>>(iter: I) -> Word {
        Word {
            letters: iter.into_iter().collect(),
        }
    }
}

/// A freely reduced word; the canonical form of a free-group element.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize)]
pub struct ReducedWord {
    letters: Vec<SignedGenerator>,
}

impl ReducedWord {
    pub fn empty() -> Self {
        ReducedWord {
            letters: Vec::new(),
        }
    }

    pub fn letters(&self) -> &[SignedGenerator] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn as_word(&self) -> Word {
        Word {
            letters: self.letters.clone(),
        }
    }

    pub fn parse(text: &str) -> Result<ReducedWord, WordParseError> {
        Ok(Word::parse(text)?.reduce())
    }
}

impl fmt::Display for ReducedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.as_word().fmt(f)
    }
}
