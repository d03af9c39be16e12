//! The braid action on data.
//!
//! `σᵢ` sends `(…, tᵢ, tᵢ₊₁, …)` to `(…, tᵢ tᵢ₊₁ tᵢ⁻¹, tᵢ, …)` and `σᵢ⁻¹` sends it to
//! `(…, tᵢ₊₁, tᵢ₊₁⁻¹ tᵢ tᵢ₊₁, …)`. Words are applied left to right: the word
//! `σ₁ σ₂` applies `σ₁` first.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::datum::Datum;
use crate::error::{Error, Result};
use crate::group::{Elem, PermGroup};

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Sign {
    Pos,
    Neg,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Pos => Sign::Neg,
            Sign::Neg => Sign::Pos,
        }
    }
}

/// `σᵢ^{±1}` with a 1-based index.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Letter {
    pub index: usize,
    pub sign: Sign,
}

impl Letter {
    pub fn new(index: usize, sign: Sign) -> Self {
        Letter { index, sign }
    }

    pub fn inverse(self) -> Letter {
        Letter::new(self.index, self.sign.flip())
    }
}

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<Letter>,
}

impl BraidWord {
    pub fn empty(strands: usize) -> Self {
        BraidWord {
            strands,
            letters: Vec::new(),
        }
    }

    pub fn from_letters(strands: usize, letters: Vec<Letter>) -> Result<Self> {
        if let Some(l) = letters.iter().find(|l| l.index == 0 || l.index >= strands) {
            return Err(Error::IndexOutOfRange {
                index: l.index,
                strands,
            });
        }
        Ok(BraidWord { strands, letters })
    }

    pub fn sigma(strands: usize, index: usize, sign: Sign) -> Result<Self> {
        Self::from_letters(strands, alloc::vec![Letter::new(index, sign)])
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// `self` followed by `other`.
    pub fn then(&self, other: &BraidWord) -> BraidWord {
        debug_assert_eq!(self.strands, other.strands);
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        BraidWord {
            strands: self.strands,
            letters,
        }
    }

    pub fn inverse(&self) -> BraidWord {
        BraidWord {
            strands: self.strands,
            letters: self.letters.iter().rev().map(|l| l.inverse()).collect(),
        }
    }

    /// Cancels adjacent `σᵢ σᵢ⁻¹` pairs until none remain.
    pub fn reduced(&self) -> BraidWord {
        let mut out: Vec<Letter> = Vec::with_capacity(self.letters.len());
        for &l in &self.letters {
            if out.last() == Some(&l.inverse()) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        BraidWord {
            strands: self.strands,
            letters: out,
        }
    }

    /// Parses tokens like `s1`, `s2^-1`, `A12`, `A1_12^-1` (case-insensitive).
    pub fn parse(text: &str, strands: usize) -> Result<Self> {
        let mut word = BraidWord::empty(strands);
        for token in text.split_whitespace() {
            let lower = token.to_ascii_lowercase();
            let (body, inverse) = match lower.strip_suffix("^-1") {
                Some(b) => (b, true),
                None => (lower.as_str(), false),
            };
            let piece = if let Some(index) = body.strip_prefix('s') {
                let index = parse_index(index, token)?;
                BraidWord::sigma(strands, index, Sign::Pos)?
            } else if let Some(pair) = body.strip_prefix('a') {
                let (i, j) = parse_pair(pair, token)?;
                PureGen::new(strands, i, j)?.word
            } else {
                return Err(Error::BraidSyntax(format!("unknown token {token:?}")));
            };
            let piece = if inverse { piece.inverse() } else { piece };
            word = word.then(&piece);
        }
        Ok(word)
    }
}

fn parse_index(s: &str, token: &str) -> Result<usize> {
    s.parse()
        .map_err(|_| Error::BraidSyntax(format!("bad index in {token:?}")))
}

fn parse_pair(s: &str, token: &str) -> Result<(usize, usize)> {
    if let Some((i, j)) = s.split_once(['_', ',']) {
        return Ok((parse_index(i, token)?, parse_index(j, token)?));
    }
    if s.len() == 2 && s.bytes().all(|b| b.is_ascii_digit()) {
        return Ok((parse_index(&s[..1], token)?, parse_index(&s[1..], token)?));
    }
    Err(Error::BraidSyntax(format!(
        "pure generator {token:?} needs two digits or an explicit separator"
    )))
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return f.write_str("1");
        }
        for (k, l) in self.letters.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "s{}", l.index)?;
            if l.sign == Sign::Neg {
                f.write_str("^-1")?;
            }
        }
        Ok(())
    }
}

/// The pure braid `A_ij = (σ_{j−1} ⋯ σ_{i+1}) σᵢ² (σ_{i+1}⁻¹ ⋯ σ_{j−1}⁻¹)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PureGen {
    pub i: usize,
    pub j: usize,
    pub word: BraidWord,
}

impl PureGen {
    pub fn new(strands: usize, i: usize, j: usize) -> Result<Self> {
        if i == 0 || i >= j || j >= strands {
            return Err(Error::IndexOutOfRange {
                index: j.max(i),
                strands,
            });
        }
        let prefix: Vec<Letter> = (i + 1..j)
            .rev()
            .map(|k| Letter::new(k, Sign::Pos))
            .collect();
        let mut letters = prefix.clone();
        letters.push(Letter::new(i, Sign::Pos));
        letters.push(Letter::new(i, Sign::Pos));
        letters.extend(prefix.iter().rev().map(|l| l.inverse()));
        Ok(PureGen {
            i,
            j,
            word: BraidWord::from_letters(strands, letters)?,
        })
    }

    pub fn name(&self) -> String {
        pure_name(self.i, self.j)
    }
}

pub(crate) fn pure_name(i: usize, j: usize) -> String {
    if i < 10 && j < 10 {
        format!("A{i}{j}")
    } else {
        format!("A{i}_{j}")
    }
}

/// `{A_ij : 1 ≤ i < j ≤ n−1}` in lexicographic order.
pub fn pure_generators(n: usize) -> Result<Vec<PureGen>> {
    if n < 3 {
        return Err(Error::TooFewEntries(n));
    }
    let mut out = Vec::new();
    for i in 1..n - 1 {
        for j in i + 1..n {
            out.push(PureGen::new(n, i, j)?);
        }
    }
    Ok(out)
}

#[inline]
pub(crate) fn apply_letter(group: &PermGroup, tuple: &mut [Elem], letter: Letter) {
    let k = letter.index - 1;
    let (a, b) = (tuple[k], tuple[k + 1]);
    match letter.sign {
        Sign::Pos => {
            tuple[k] = group.conj(a, b);
            tuple[k + 1] = a;
        }
        Sign::Neg => {
            tuple[k] = b;
            tuple[k + 1] = group.conj(group.inv(b), a);
        }
    }
}

/// Applies a word to a raw tuple in place; the caller checks strand counts.
pub fn apply_word_in_place(group: &PermGroup, tuple: &mut [Elem], word: &BraidWord) {
    debug_assert_eq!(tuple.len(), word.strands);
    for &l in &word.letters {
        apply_letter(group, tuple, l);
    }
}

pub fn apply_sigma(d: &Datum, index: usize, sign: Sign) -> Result<Datum> {
    let word = BraidWord::sigma(d.len(), index, sign)?;
    apply_word(d, &word)
}

pub fn apply_word(d: &Datum, word: &BraidWord) -> Result<Datum> {
    if word.strands != d.len() {
        return Err(Error::StrandMismatch {
            word: word.strands,
            datum: d.len(),
        });
    }
    let mut tuple = d.entries().to_vec();
    apply_word_in_place(d.group(), &mut tuple, word);
    Ok(d.with_entries(tuple))
}

/// `σ₁ ⋯ σ_{n−2} σ_{n−1}² σ_{n−2} ⋯ σ₁`.
pub fn sphere_word(n: usize) -> Result<BraidWord> {
    let mut letters: Vec<Letter> = (1..n).map(|k| Letter::new(k, Sign::Pos)).collect();
    letters.extend((1..n).rev().map(|k| Letter::new(k, Sign::Pos)));
    BraidWord::from_letters(n, letters)
}

/// Product of all `A_ij` in lexicographic order of `(i, j)`.
pub fn full_twist_word(n: usize) -> Result<BraidWord> {
    let gens = pure_generators(n)?;
    Ok(gens
        .iter()
        .fold(BraidWord::empty(n), |w, a| w.then(&a.word)))
}
