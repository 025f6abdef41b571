use std::collections::HashMap;

use super::{ModelError, CHECK};

/// Index of a letter inside its [`Alphabet`].
pub type Letter = usize;

/// Ordered, duplicate-free, non-empty set of letter names.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Alphabet {
    letters: Vec<String>,
    index: HashMap<String, Letter>,
}

impl Alphabet {
    pub fn new<I, T>(letters: I) -> Result<Self, ModelError>
    where
        I: IntoIterator<Item = T>,
        T: Into<String>,
    {
        let letters: Vec<String> = letters.into_iter().map(Into::into).collect();
        if letters.is_empty() {
            return Err(ModelError::EmptyAlphabet);
        }
        let mut index = HashMap::new();
        for (i, l) in letters.iter().enumerate() {
            if l.is_empty() {
                return Err(ModelError::EmptyName("letter"));
            }
            if index.insert(l.clone(), i).is_some() {
                return Err(ModelError::DuplicateLetter(l.clone()));
            }
        }
        Ok(Alphabet { letters, index })
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn name(&self, letter: Letter) -> &str {
        &self.letters[letter]
    }

    pub fn letter(&self, name: &str) -> Option<Letter> {
        self.index.get(name).copied()
    }

    pub fn names(&self) -> &[String] {
        &self.letters
    }

    /// Same letters, possibly listed in a different order.
    pub fn same_letters(&self, other: &Alphabet) -> bool {
        self.len() == other.len() && self.letters.iter().all(|l| other.index.contains_key(l))
    }

    /// For each of our letters, the index of the same name in `other`.
    pub fn translation_to(&self, other: &Alphabet) -> Result<Vec<Letter>, ModelError> {
        if !self.same_letters(other) {
            return Err(ModelError::AlphabetMismatch { left: self.letters.clone(), right: other.letters.clone() });
        }
        Ok(self.letters.iter().map(|l| other.index[l]).collect())
    }

    /// Renders a word as concatenated letters when all letters are single
    /// characters, dot-separated otherwise.
    pub fn render(&self, word: &[Letter]) -> String {
        let sep = if self.letters.iter().all(|l| l.chars().count() == 1) { "" } else { "." };
        word.iter().map(|&l| self.name(l)).collect::<Vec<_>>().join(sep)
    }

    /// Inverse of [`Alphabet::render`].
    pub fn parse_word(&self, text: &str) -> Option<Vec<Letter>> {
        if self.letters.iter().all(|l| l.chars().count() == 1) {
            text.chars().map(|c| self.letter(&c.to_string())).collect()
        } else {
            text.split('.').map(|p| self.letter(p)).collect()
        }
    }
}

/// Ordered state names with a reverse index. `CHECK` is reserved.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StateNames {
    names: Vec<String>,
    index: HashMap<String, usize>,
}

impl StateNames {
    pub fn new<I, T>(names: I) -> Result<Self, ModelError>
    where
        I: IntoIterator<Item = T>,
        T: Into<String>,
    {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        let mut index = HashMap::new();
        for (i, n) in names.iter().enumerate() {
            if n.is_empty() {
                return Err(ModelError::EmptyName("state"));
            }
            if n == CHECK {
                return Err(ModelError::ReservedName(n.clone()));
            }
            if index.insert(n.clone(), i).is_some() {
                return Err(ModelError::DuplicateState(n.clone()));
            }
        }
        Ok(StateNames { names, index })
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn get(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub(crate) fn require(&self, name: &str, context: &str) -> Result<usize, ModelError> {
        self.get(name).ok_or_else(|| ModelError::UnknownState { name: name.to_string(), context: context.to_string() })
    }
}
