use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A word in the standard generators of the braid group on `strands` strands.
///
/// Letter `+i` is the half-twist σ_i, `-i` its inverse. Words are read and
/// composed left to right.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<i32>,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<i32>) -> Result<Self> {
        if strands == 0 {
            return Err(Error::InvalidArgument("a braid needs at least one strand".into()));
        }
        for &letter in &letters {
            if letter == 0 || letter.unsigned_abs() as usize >= strands {
                return Err(Error::LetterOutOfRange { letter, strands });
            }
        }
        Ok(Self { strands, letters })
    }

    /// Letters are assumed valid; used by constructions that build words index by index.
    pub(crate) fn from_raw(strands: usize, letters: Vec<i32>) -> Self {
        debug_assert!(letters
            .iter()
            .all(|&l| l != 0 && (l.unsigned_abs() as usize) < strands));
        Self { strands, letters }
    }

    pub fn identity(strands: usize) -> Self {
        Self {
            strands: strands.max(1),
            letters: Vec::new(),
        }
    }

    pub fn generator(strands: usize, letter: i32) -> Result<Self> {
        Self::new(strands, vec![letter])
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Cancels adjacent inverse pairs until none remain.
    pub fn free_reduce(&self) -> Self {
        let mut out: Vec<i32> = Vec::with_capacity(self.letters.len());
        for &l in &self.letters {
            if out.last() == Some(&-l) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        Self {
            strands: self.strands,
            letters: out,
        }
    }

    /// Juxtaposition without any cancellation.
    pub fn concat(&self, other: &Self) -> Result<Self> {
        self.check_strands(other)?;
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(Self {
            strands: self.strands,
            letters,
        })
    }

    /// `self` followed by `other`, free-reduced.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        Ok(self.concat(other)?.free_reduce())
    }

    pub fn invert(&self) -> Self {
        Self {
            strands: self.strands,
            letters: self.letters.iter().rev().map(|l| -l).collect(),
        }
    }

    pub fn pow(&self, k: i64) -> Self {
        let base = if k < 0 { self.invert() } else { self.clone() };
        let mut letters = Vec::with_capacity(base.letters.len() * k.unsigned_abs() as usize);
        for _ in 0..k.unsigned_abs() {
            letters.extend_from_slice(&base.letters);
        }
        Self {
            strands: self.strands,
            letters,
        }
        .free_reduce()
    }

    /// g⁻¹ · self · g
    pub fn conjugate_by(&self, g: &Self) -> Result<Self> {
        g.invert().compose(self)?.compose(g)
    }

    /// [a, b] = a · b · a⁻¹ · b⁻¹
    pub fn commutator(a: &Self, b: &Self) -> Result<Self> {
        a.compose(b)?.compose(&a.invert())?.compose(&b.invert())
    }

    /// Product of a list of words on the same strand count.
    pub fn product<'a, I>(strands: usize, words: I) -> Result<Self>
    where
        I: IntoIterator<Item = &'a BraidWord>,
    {
        words
            .into_iter()
            .try_fold(Self::identity(strands), |acc, w| acc.compose(w))
    }

    /// The same word viewed in a braid group with more strands.
    pub fn embed(&self, strands: usize) -> Result<Self> {
        if strands < self.strands {
            return Err(Error::InvalidArgument(format!(
                "cannot embed a {}-strand braid into {} strands",
                self.strands, strands
            )));
        }
        Ok(Self {
            strands,
            letters: self.letters.clone(),
        })
    }

    /// Letters only, space separated.
    pub fn letters_string(&self) -> String {
        self.letters
            .iter()
            .map(|l| l.to_string())
            .collect::<Vec<_>>()
            .join(" ")
    }

    /// Parses the text format, using `strands` when the text carries no header.
    pub fn parse_with_strands(text: &str, strands: usize) -> Result<Self> {
        let (header, body) = split_header(text)?;
        let n = header.unwrap_or(strands);
        Self::new(n, parse_letters(body)?)
    }

    fn check_strands(&self, other: &Self) -> Result<()> {
        if self.strands != other.strands {
            return Err(Error::StrandMismatch {
                left: self.strands,
                right: other.strands,
            });
        }
        Ok(())
    }
}

fn split_header(text: &str) -> Result<(Option<usize>, &str)> {
    let trimmed = text.trim();
    let Some(rest) = trimmed.strip_prefix("n=") else {
        return Ok((None, trimmed));
    };
    let (count, body) = rest
        .split_once(';')
        .ok_or_else(|| Error::Parse("header must end with ';'".into()))?;
    let n = count
        .trim()
        .parse::<usize>()
        .map_err(|e| Error::Parse(format!("bad strand count {count:?}: {e}")))?;
    Ok((Some(n), body))
}

fn parse_letters(body: &str) -> Result<Vec<i32>> {
    body.split_whitespace()
        .map(|tok| {
            tok.parse::<i32>()
                .map_err(|e| Error::Parse(format!("bad letter {tok:?}: {e}")))
        })
        .collect()
}

impl FromStr for BraidWord {
    type Err = Error;

    /// Without a header the strand count is one more than the largest generator index.
    fn from_str(s: &str) -> Result<Self> {
        let (header, body) = split_header(s)?;
        let letters = parse_letters(body)?;
        let n = match header {
            Some(n) => n,
            None => letters.iter().map(|l| l.unsigned_abs() as usize).max().unwrap_or(0) + 1,
        };
        Self::new(n, letters)
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={};", self.strands)?;
        for l in &self.letters {
            write!(f, " {l}")?;
        }
        Ok(())
    }
}
