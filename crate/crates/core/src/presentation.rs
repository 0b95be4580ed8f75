//! Finite presentations `⟨ generators | relators ⟩`.

use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::perm::Permutation;
use crate::word::{Word, WordError};

/// Errors from assembling a presentation.
#[derive(thiserror::Error, Debug, Clone, PartialEq, Eq)]
pub enum PresentationError {
    /// Two generators share a name.
    #[error("duplicate generator name `{0}`")]
    DuplicateName(String),
    /// A generator name is not a valid identifier.
    #[error("invalid generator name `{0}`")]
    InvalidName(String),
    /// A relator failed to parse.
    #[error("relator `{relator}`: {source}")]
    Relator {
        /// The offending relator text.
        relator: String,
        /// Underlying parse error.
        source: WordError,
    },
    /// A relator references a generator index outside the table.
    #[error("relator references generator index {0} outside the table")]
    IndexOutOfRange(u16),
}

/// A finite presentation: named generators and freely reduced relators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    names: Vec<String>,
    relators: Vec<Word>,
}

impl Presentation {
    /// Builds a presentation, validating names and relator indices.
    pub fn new(
        names: impl IntoIterator<Item = impl Into<String>>,
        relators: Vec<Word>,
    ) -> Result<Self, PresentationError> {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        for (i, n) in names.iter().enumerate() {
            if !valid_name(n) {
                return Err(PresentationError::InvalidName(n.clone()));
            }
            if names[..i].contains(n) {
                return Err(PresentationError::DuplicateName(n.clone()));
            }
        }
        let pres = Presentation { names, relators };
        for r in &pres.relators {
            for l in r.letters() {
                if l.gen as usize >= pres.names.len() {
                    return Err(PresentationError::IndexOutOfRange(l.gen));
                }
            }
        }
        Ok(pres)
    }

    /// Parses relator texts against the generator names.
    pub fn parse(
        names: &[&str],
        relator_texts: &[&str],
    ) -> Result<Self, PresentationError> {
        let name_refs: Vec<&str> = names.to_vec();
        let mut relators = Vec::new();
        for text in relator_texts {
            let word = Word::parse(text, &name_refs).map_err(|source| {
                PresentationError::Relator {
                    relator: text.to_string(),
                    source,
                }
            })?;
            relators.push(word);
        }
        Presentation::new(names.iter().copied(), relators)
    }

    /// Generator count.
    pub fn ngens(&self) -> usize {
        self.names.len()
    }

    /// Generator names.
    pub fn names(&self) -> Vec<&str> {
        self.names.iter().map(String::as_str).collect()
    }

    /// The relators.
    pub fn relators(&self) -> &[Word] {
        &self.relators
    }

    /// Parses a word in this presentation's alphabet.
    pub fn parse_word(&self, text: &str) -> Result<Word, WordError> {
        Word::parse(text, &self.names())
    }

    /// Checks that every relator evaluates to the identity on the given
    /// permutation images; returns the index of the first violated relator.
    pub fn check_images(&self, images: &[Permutation], degree: u32) -> Result<(), usize> {
        for (i, r) in self.relators.iter().enumerate() {
            if !r.evaluate_perm(images, degree).is_identity() {
                return Err(i);
            }
        }
        Ok(())
    }
}

fn valid_name(name: &str) -> bool {
    let mut chars = name.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}
