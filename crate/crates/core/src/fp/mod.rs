//! Finitely presented groups on involution generators: word algebra, a
//! relator grammar, Todd-Coxeter coset enumeration and extraction of
//! permutation representations from completed coset tables.

mod coset;
mod parse;

use std::fmt;

use thiserror::Error;

use crate::perm::{PermError, Permutation};

pub use coset::{todd_coxeter, CosetTable, TableStatus};
pub use parse::{parse_presentation, parse_relator, ParseError};

/// Default coset cap: roughly 64x headroom over the largest order any
/// acceptance run enumerates.
pub const DEFAULT_MAX_COSETS: usize = 1 << 20;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum FpError {
    #[error("generator index {gen} out of range for {ngens} generators")]
    GeneratorOutOfRange { gen: usize, ngens: usize },
    #[error("coset enumeration aborted after defining {defined} cosets ({live} live) at cap {max_cosets}")]
    MaxCosetsExceeded {
        live: usize,
        defined: usize,
        max_cosets: usize,
    },
    #[error("coset table is not complete")]
    IncompleteTable,
    #[error("expected {expected} generator images, got {got}")]
    ImageArityMismatch { expected: usize, got: usize },
    #[error(transparent)]
    Perm(#[from] PermError),
}

/// One letter of a word: a generator index with exponent +1 or -1.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Letter {
    pub gen: usize,
    pub inverse: bool,
}

/// A freely reduced word over the generators of some presentation.
///
/// Reduction happens on construction: inverse letters of involution
/// generators are normalized to exponent +1, then adjacent cancelling
/// pairs are removed.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Word {
    letters: Vec<Letter>,
}

impl Word {
    pub fn new(letters: Vec<Letter>, involution_flags: &[bool]) -> Word {
        let mut out: Vec<Letter> = Vec::with_capacity(letters.len());
        for mut l in letters {
            if l.inverse && involution_flags.get(l.gen).copied().unwrap_or(false) {
                l.inverse = false;
            }
            if let Some(last) = out.last() {
                if last.gen == l.gen && last.inverse != l.inverse {
                    out.pop();
                    continue;
                }
            }
            out.push(l);
        }
        Word { letters: out }
    }

    pub fn empty() -> Word {
        Word::default()
    }

    pub fn generator(gen: usize) -> Word {
        Word {
            letters: vec![Letter {
                gen,
                inverse: false,
            }],
        }
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

    pub fn inverse(&self) -> Word {
        Word {
            letters: self
                .letters
                .iter()
                .rev()
                .map(|l| Letter {
                    gen: l.gen,
                    inverse: !l.inverse,
                })
                .collect(),
        }
    }

    pub fn concat(&self, other: &Word, involution_flags: &[bool]) -> Word {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Word::new(letters, involution_flags)
    }

    pub fn pow(&self, k: i64, involution_flags: &[bool]) -> Word {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut letters = Vec::with_capacity(base.len() * k.unsigned_abs() as usize);
        for _ in 0..k.unsigned_abs() {
            letters.extend_from_slice(&base.letters);
        }
        Word::new(letters, involution_flags)
    }

    /// `self^g = g^-1 * self * g`.
    pub fn conjugate(&self, g: &Word, involution_flags: &[bool]) -> Word {
        g.inverse()
            .concat(self, involution_flags)
            .concat(g, involution_flags)
    }

    /// `[self, other] = self^-1 * other^-1 * self * other`.
    pub fn commutator(&self, other: &Word, involution_flags: &[bool]) -> Word {
        self.inverse()
            .concat(&other.inverse(), involution_flags)
            .concat(self, involution_flags)
            .concat(other, involution_flags)
    }

    pub fn max_generator(&self) -> Option<usize> {
        self.letters.iter().map(|l| l.gen).max()
    }

    /// Evaluates the word in a permutation group by substituting `images[i]`
    /// for generator `i`, composing left to right.
    pub fn evaluate(&self, images: &[Permutation], degree: usize) -> Result<Permutation, FpError> {
        let mut acc = Permutation::identity(degree);
        for l in &self.letters {
            let img = images
                .get(l.gen)
                .ok_or(FpError::GeneratorOutOfRange {
                    gen: l.gen,
                    ngens: images.len(),
                })?;
            let factor = if l.inverse { img.inverse() } else { img.clone() };
            acc = acc.compose(&factor)?;
        }
        Ok(acc)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "1");
        }
        for (i, l) in self.letters.iter().enumerate() {
            if i > 0 {
                write!(f, "*")?;
            }
            write!(f, "r{}", l.gen)?;
            if l.inverse {
                write!(f, "^-1")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// A finite presentation: generator count, per-generator involution flags
/// and a relator list.
#[derive(Clone, PartialEq, Eq)]
pub struct Presentation {
    ngens: usize,
    involution_flags: Vec<bool>,
    relators: Vec<Word>,
}

impl Presentation {
    pub fn new(
        ngens: usize,
        involution_flags: Vec<bool>,
        relators: Vec<Word>,
    ) -> Result<Presentation, FpError> {
        assert_eq!(involution_flags.len(), ngens, "one flag per generator");
        for r in &relators {
            if let Some(g) = r.max_generator() {
                if g >= ngens {
                    return Err(FpError::GeneratorOutOfRange { gen: g, ngens });
                }
            }
        }
        Ok(Presentation {
            ngens,
            involution_flags,
            relators,
        })
    }

    /// Presentation on `ngens` involution generators: the squares are
    /// prepended to the relator list automatically.
    pub fn on_involutions(ngens: usize, relators: Vec<Word>) -> Result<Presentation, FpError> {
        let flags = vec![true; ngens];
        let mut all = Vec::with_capacity(relators.len() + ngens);
        for g in 0..ngens {
            all.push(Word::generator(g).pow(2, &flags));
        }
        all.extend(relators);
        Presentation::new(ngens, flags, all)
    }

    pub fn ngens(&self) -> usize {
        self.ngens
    }

    pub fn involution_flags(&self) -> &[bool] {
        &self.involution_flags
    }

    pub fn relators(&self) -> &[Word] {
        &self.relators
    }

    /// Parses one relator in this presentation's generator context.
    pub fn relator(&self, text: &str) -> Result<Word, ParseError> {
        parse_relator(text, self.ngens, &self.involution_flags)
    }

    /// Serializes to the presentation text format understood by
    /// [`parse_presentation`].
    pub fn to_text(&self) -> String {
        let mut out = format!("gens: {}\n", self.ngens);
        let inv = if self.involution_flags.iter().all(|&b| b) {
            "all".to_string()
        } else if self.involution_flags.iter().all(|&b| !b) {
            "none".to_string()
        } else {
            self.involution_flags
                .iter()
                .enumerate()
                .filter(|(_, &b)| b)
                .map(|(i, _)| format!("r{i}"))
                .collect::<Vec<_>>()
                .join(" ")
        };
        out.push_str(&format!("involutions: {inv}\n"));
        for r in &self.relators {
            out.push_str(&r.to_string());
            out.push('\n');
        }
        out
    }

    /// Exact order via coset enumeration over the trivial subgroup.
    pub fn group_order(&self, max_cosets: usize) -> Result<u64, FpError> {
        Ok(todd_coxeter(self, &[], max_cosets)?.num_cosets() as u64)
    }

    /// Order of the element `w` in the presented group, given the group
    /// order: enumerate cosets of the cyclic subgroup `<w>` and divide.
    pub fn element_order(
        &self,
        w: &Word,
        known_group_order: u64,
        max_cosets: usize,
    ) -> Result<u64, FpError> {
        let index = todd_coxeter(self, std::slice::from_ref(w), max_cosets)?.num_cosets() as u64;
        Ok(known_group_order / index)
    }
}

impl fmt::Debug for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<{} gens | ", self.ngens)?;
        for (i, r) in self.relators.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{r}")?;
        }
        write!(f, ">")
    }
}

/// True iff every relator of `p` evaluates to the identity under the
/// substitution `generator i -> images[i]`.
pub fn verify_images(p: &Presentation, images: &[Permutation]) -> Result<bool, FpError> {
    if images.len() != p.ngens {
        return Err(FpError::ImageArityMismatch {
            expected: p.ngens,
            got: images.len(),
        });
    }
    let degree = images
        .first()
        .map(|p| p.degree())
        .ok_or(FpError::ImageArityMismatch {
            expected: p.ngens,
            got: 0,
        })?;
    for img in images {
        if img.degree() != degree {
            return Err(FpError::Perm(PermError::DegreeMismatch {
                left: degree,
                right: img.degree(),
            }));
        }
    }
    for r in &p.relators {
        if !r.evaluate(images, degree)?.is_identity() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// One permutation per generator, acting on the rows of a complete coset
/// table. The relators are re-checked against the extracted images.
pub fn coset_perm_rep(t: &CosetTable) -> Result<Vec<Permutation>, FpError> {
    t.permutation_representation()
}
