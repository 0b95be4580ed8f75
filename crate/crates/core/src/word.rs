//! Words over a generating alphabet, with parsing and evaluation.
//!
//! A [`Word`] is a freely reduced string of generator letters and their
//! inverses; generators are identified by index into an external name table.
//! The surface syntax accepted by [`Word::parse`] is
//!
//! ```text
//! word   := factor { '*' factor }
//! factor := atom [ '^' integer ]
//! atom   := name | '(' word ')' | '[' word ',' word {',' word} ']'
//! ```
//!
//! with `[x, y] = x⁻¹·y⁻¹·x·y` and longer commutators left-normed:
//! `[x, y, z] = [[x, y], z]`.  Negative powers invert; `^0` yields the empty
//! word.  Names match `[A-Za-z_][A-Za-z0-9_]*` and products require an
//! explicit `*`.

use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::perm::Permutation;

/// Errors from parsing word syntax.
#[derive(thiserror::Error, Debug, Clone, PartialEq, Eq)]
pub enum WordError {
    /// A name in the input is not in the generator table.
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    /// Malformed syntax.
    #[error("word syntax error at byte {at}: {message}")]
    Syntax {
        /// Byte offset into the input.
        at: usize,
        /// Human-readable description.
        message: &'static str,
    },
}

/// One letter: a generator index and an inversion flag.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    /// Index into the generator table.
    pub gen: u16,
    /// Whether this occurrence is inverted.
    pub inv: bool,
}

impl Letter {
    /// The inverse letter.
    pub fn inverse(self) -> Letter {
        Letter {
            gen: self.gen,
            inv: !self.inv,
        }
    }
}

/// A freely reduced word over indexed generators.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    letters: Vec<Letter>,
}

impl Word {
    /// The empty word.
    pub fn identity() -> Self {
        Word::default()
    }

    /// A single-generator word.
    pub fn generator(gen: u16) -> Self {
        Word {
            letters: alloc::vec![Letter { gen, inv: false }],
        }
    }

    /// Builds a word from letters, applying free reduction.
    pub fn from_letters(letters: impl IntoIterator<Item = Letter>) -> Self {
        let mut out: Vec<Letter> = Vec::new();
        for l in letters {
            if out.last() == Some(&l.inverse()) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        Word { letters: out }
    }

    /// The reduced letter sequence.
    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    /// Whether this is the empty word.
    pub fn is_identity(&self) -> bool {
        self.letters.is_empty()
    }

    /// Reduced length.
    pub fn len(&self) -> usize {
        self.letters.len()
    }

    /// Whether the word has no letters.
    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Concatenation `self · other` (with reduction at the seam).
    pub fn concat(&self, other: &Word) -> Word {
        Word::from_letters(self.letters.iter().chain(other.letters.iter()).copied())
    }

    /// The inverse word (reverse and invert each letter).
    pub fn inverse(&self) -> Word {
        Word {
            letters: self.letters.iter().rev().map(|l| l.inverse()).collect(),
        }
    }

    /// The power `self^k`; negative `k` inverts first.
    pub fn pow(&self, k: i32) -> Word {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut out = Word::identity();
        for _ in 0..k.unsigned_abs() {
            out = out.concat(&base);
        }
        out
    }

    /// The commutator `[self, other] = self⁻¹·other⁻¹·self·other`.
    pub fn commutator(&self, other: &Word) -> Word {
        self.inverse()
            .concat(&other.inverse())
            .concat(self)
            .concat(other)
    }

    /// Applies `f` to every generator index (e.g. to shift a word into a
    /// second copy of the alphabet).
    pub fn map_generators(&self, f: impl Fn(u16) -> u16) -> Word {
        Word {
            letters: self
                .letters
                .iter()
                .map(|l| Letter {
                    gen: f(l.gen),
                    inv: l.inv,
                })
                .collect(),
        }
    }

    /// Evaluates the word on permutation images of the generators.
    pub fn evaluate_perm(&self, images: &[Permutation], degree: u32) -> Permutation {
        let mut acc = Permutation::identity(degree);
        for l in &self.letters {
            let img = &images[l.gen as usize];
            if l.inv {
                acc = acc.compose(&img.inverse());
            } else {
                acc = acc.compose(img);
            }
        }
        acc
    }

    /// Parses `text` against a table of generator names.
    pub fn parse(text: &str, names: &[&str]) -> Result<Word, WordError> {
        let mut parser = Parser {
            bytes: text.as_bytes(),
            text,
            pos: 0,
            names,
        };
        parser.skip_ws();
        if parser.at_end() {
            return Ok(Word::identity());
        }
        let word = parser.parse_word()?;
        parser.skip_ws();
        if !parser.at_end() {
            return Err(WordError::Syntax {
                at: parser.pos,
                message: "trailing input after word",
            });
        }
        Ok(word)
    }

    /// Formats the word using `names`; the empty word prints as `1`.
    pub fn display(&self, names: &[&str]) -> String {
        if self.letters.is_empty() {
            return "1".to_string();
        }
        let mut out = String::new();
        let mut i = 0;
        while i < self.letters.len() {
            // Collapse runs of the same letter into a power.
            let l = self.letters[i];
            let mut run = 1;
            while i + run < self.letters.len() && self.letters[i + run] == l {
                run += 1;
            }
            if !out.is_empty() {
                out.push('*');
            }
            out.push_str(names[l.gen as usize]);
            let exp: i64 = if l.inv { -(run as i64) } else { run as i64 };
            if exp != 1 {
                out.push('^');
                out.push_str(&exp.to_string());
            }
            i += run;
        }
        out
    }
}

struct Parser<'a> {
    bytes: &'a [u8],
    text: &'a str,
    pos: usize,
    names: &'a [&'a str],
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn at_end(&self) -> bool {
        self.pos >= self.bytes.len()
    }

    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn parse_word(&mut self) -> Result<Word, WordError> {
        let mut word = self.parse_factor()?;
        loop {
            self.skip_ws();
            if self.peek() == Some(b'*') {
                self.pos += 1;
                self.skip_ws();
                let rhs = self.parse_factor()?;
                word = word.concat(&rhs);
            } else {
                return Ok(word);
            }
        }
    }

    fn parse_factor(&mut self) -> Result<Word, WordError> {
        let atom = self.parse_atom()?;
        self.skip_ws();
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.skip_ws();
            let exp = self.parse_integer()?;
            Ok(atom.pow(exp))
        } else {
            Ok(atom)
        }
    }

    fn parse_atom(&mut self) -> Result<Word, WordError> {
        self.skip_ws();
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.parse_word()?;
                self.skip_ws();
                if self.peek() != Some(b')') {
                    return Err(WordError::Syntax {
                        at: self.pos,
                        message: "expected ')'",
                    });
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(b'[') => {
                self.pos += 1;
                let mut parts = alloc::vec![self.parse_word()?];
                loop {
                    self.skip_ws();
                    match self.peek() {
                        Some(b',') => {
                            self.pos += 1;
                            parts.push(self.parse_word()?);
                        }
                        Some(b']') => {
                            self.pos += 1;
                            break;
                        }
                        _ => {
                            return Err(WordError::Syntax {
                                at: self.pos,
                                message: "expected ',' or ']' in commutator",
                            })
                        }
                    }
                }
                if parts.len() < 2 {
                    return Err(WordError::Syntax {
                        at: self.pos,
                        message: "commutator needs at least two arguments",
                    });
                }
                let mut acc = parts[0].clone();
                for rhs in &parts[1..] {
                    acc = acc.commutator(rhs);
                }
                Ok(acc)
            }
            Some(b) if b.is_ascii_alphabetic() || b == b'_' => {
                let start = self.pos;
                while self
                    .peek()
                    .map(|c| c.is_ascii_alphanumeric() || c == b'_')
                    .unwrap_or(false)
                {
                    self.pos += 1;
                }
                let name = &self.text[start..self.pos];
                match self.names.iter().position(|n| *n == name) {
                    Some(idx) => Ok(Word::generator(idx as u16)),
                    None => Err(WordError::UnknownGenerator(name.to_string())),
                }
            }
            _ => Err(WordError::Syntax {
                at: self.pos,
                message: "expected a generator, '(', or '['",
            }),
        }
    }

    fn parse_integer(&mut self) -> Result<i32, WordError> {
        let start = self.pos;
        if self.peek() == Some(b'-') {
            self.pos += 1;
        }
        let digits_start = self.pos;
        while self.peek().map(|c| c.is_ascii_digit()).unwrap_or(false) {
            self.pos += 1;
        }
        if self.pos == digits_start {
            return Err(WordError::Syntax {
                at: self.pos,
                message: "expected an exponent",
            });
        }
        self.text[start..self.pos].parse().map_err(|_| WordError::Syntax {
            at: start,
            message: "exponent out of range",
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const NAMES: &[&str] = &["a", "b", "c_1"];

    fn parse(s: &str) -> Word {
        Word::parse(s, NAMES).unwrap()
    }

    #[test]
    fn ordinary_products_and_powers() {
        assert_eq!(parse("a*b").letters().len(), 2);
        assert_eq!(parse("a^3"), parse("a*a*a"));
        assert_eq!(parse("a^-2"), parse("a").inverse().pow(2));
        assert_eq!(parse("a^0"), Word::identity());
        assert_eq!(parse("(a*b)^2"), parse("a*b*a*b"));
        assert_eq!(parse("c_1^2"), parse("c_1*c_1"));
        assert_eq!(parse(""), Word::identity());
    }

    #[test]
    fn free_reduction() {
        assert!(parse("a*a^-1").is_identity());
        assert!(parse("(a*b)*(b^-1*a^-1)").is_identity());
        assert_eq!(parse("a*b*b^-1*a"), parse("a^2"));
        let w = parse("a*b^2*a^-1");
        assert!(w.concat(&w.inverse()).is_identity());
    }

    #[test]
    fn commutator_expansion() {
        // [a, b] = a⁻¹ b⁻¹ a b.
        assert_eq!(parse("[a, b]"), parse("a^-1*b^-1*a*b"));
        // Left-normed: [a, b, a] = [[a, b], a].
        assert_eq!(parse("[a, b, a]"), parse("[a, b]").commutator(&parse("a")));
        // Nested arguments are full words.
        assert_eq!(parse("[a*b, c_1]"), parse("a*b").commutator(&parse("c_1")));
        // [a, b]⁻¹ = [b, a].
        assert_eq!(parse("[a, b]^-1"), parse("[b, a]"));
        // map_generators relabels into a shifted alphabet.
        let shifted = parse("[a, b]").map_generators(|g| g + 1);
        assert_eq!(shifted, parse("[b, c_1]"));
    }

    #[test]
    fn syntax_errors() {
        assert!(matches!(
            Word::parse("a*d", NAMES),
            Err(WordError::UnknownGenerator(name)) if name == "d"
        ));
        assert!(matches!(Word::parse("a*", NAMES), Err(WordError::Syntax { .. })));
        assert!(matches!(Word::parse("[a]", NAMES), Err(WordError::Syntax { .. })));
        assert!(matches!(Word::parse("(a*b", NAMES), Err(WordError::Syntax { .. })));
        assert!(matches!(Word::parse("a^", NAMES), Err(WordError::Syntax { .. })));
        assert!(matches!(Word::parse("a b", NAMES), Err(WordError::Syntax { .. })));
    }

    #[test]
    fn evaluate_on_permutations() {
        let a = Permutation::parse_cycles("(1 2 3)", 3).unwrap();
        let b = Permutation::parse_cycles("(1 2)", 3).unwrap();
        let images = [a.clone(), b.clone(), Permutation::identity(3)];
        assert_eq!(parse("a*b").evaluate_perm(&images, 3), a.compose(&b));
        assert_eq!(parse("a^-1").evaluate_perm(&images, 3), a.inverse());
        assert_eq!(parse("[a, b]").evaluate_perm(&images, 3), a.commutator(&b));
        assert!(parse("a^3").evaluate_perm(&images, 3).is_identity());
    }

    #[test]
    fn display_round_trips() {
        for text in ["a*b^-1", "a^3", "[a, b]", "a*b*c_1^-2", "1"] {
            let w = if text == "1" { Word::identity() } else { parse(text) };
            let shown = w.display(NAMES);
            let reparsed = if shown == "1" {
                Word::identity()
            } else {
                parse(&shown)
            };
            assert_eq!(reparsed, w, "display `{shown}` did not round-trip");
        }
    }
}
