use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::Permutation;
use crate::error::{Error, Result};

/// A word in the simple reflections `s_1, …, s_{n-1}`; not necessarily reduced.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Word {
    letters: Vec<usize>,
}

impl Word {
    pub fn new(letters: Vec<usize>) -> Self {
        Word { letters }
    }

    pub fn empty() -> Self {
        Word::default()
    }

    pub fn letters(&self) -> &[usize] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// The word with the letter at 0-based `index` erased.
    pub fn without(&self, index: usize) -> Word {
        let mut letters = self.letters.clone();
        letters.remove(index);
        Word { letters }
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Word { letters }
    }

    /// Evaluates the word in `S_n`.
    pub fn evaluate(&self, n: usize) -> Result<Permutation> {
        word_to_permutation(self, n)
    }
}

/// Product of the letters, composed as functions in written order.
pub fn word_to_permutation(word: &Word, n: usize) -> Result<Permutation> {
    let mut w = Permutation::identity(n);
    for &a in &word.letters {
        if a == 0 || a >= n {
            return Err(Error::LetterOutOfRange { letter: a, rank: n });
        }
        w.mul_simple_right(a);
    }
    Ok(w)
}

impl FromStr for Word {
    type Err = Error;

    /// Accepts `"3 4 3 2"`, `"s3 s4 s3 s2"`, `"s_3s_4s_3s_2"` and `"e"` (or
    /// an empty string) for the identity.
    fn from_str(text: &str) -> Result<Self> {
        let text = text.trim();
        if text.is_empty() || text == "e" {
            return Ok(Word::empty());
        }
        let mut letters = Vec::new();
        let mut digits = String::new();
        let flush = |digits: &mut String, letters: &mut Vec<usize>| -> Result<()> {
            if !digits.is_empty() {
                let value = digits
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad reflection index {digits:?}")))?;
                if value == 0 {
                    return Err(Error::Parse("reflection indices start at 1".into()));
                }
                letters.push(value);
                digits.clear();
            }
            Ok(())
        };
        let mut expect_index = false;
        for c in text.chars() {
            match c {
                '0'..='9' => {
                    digits.push(c);
                    expect_index = false;
                }
                's' | 'S' => {
                    flush(&mut digits, &mut letters)?;
                    expect_index = true;
                }
                '_' if expect_index => {}
                c if c.is_whitespace() || c == ',' || c == '·' || c == '*' => {
                    if expect_index {
                        return Err(Error::Parse(format!("dangling reflection symbol in {text:?}")));
                    }
                    flush(&mut digits, &mut letters)?;
                }
                _ => return Err(Error::Parse(format!("unexpected {c:?} in word {text:?}"))),
            }
        }
        if expect_index {
            return Err(Error::Parse(format!("dangling reflection symbol in {text:?}")));
        }
        flush(&mut digits, &mut letters)?;
        Ok(Word { letters })
    }
}

impl fmt::Display for Word {
    /// `s3 s4 s3 s2`, or `e` for the empty word.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return f.write_str("e");
        }
        for (i, a) in self.letters.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "s{a}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn eval(word: &str, n: usize) -> Permutation {
        word.parse::<Word>().unwrap().evaluate(n).unwrap()
    }

    #[test]
    fn grammar() {
        let expected = Word::new(vec![3, 4, 3, 2]);
        assert_eq!("3 4 3 2".parse::<Word>().unwrap(), expected);
        assert_eq!("s3 s4 s3 s2".parse::<Word>().unwrap(), expected);
        assert_eq!("s_3s_4s_3s_2".parse::<Word>().unwrap(), expected);
        assert_eq!("s3s4s3s2".parse::<Word>().unwrap(), expected);
        assert_eq!("e".parse::<Word>().unwrap(), Word::empty());
        assert!("s".parse::<Word>().is_err());
        assert!("s0".parse::<Word>().is_err());
        assert!("x3".parse::<Word>().is_err());
        assert_eq!(expected.to_string(), "s3 s4 s3 s2");
    }

    #[test]
    fn evaluation() {
        assert_eq!(eval("1", 2).one_line(), vec![2, 1]);
        assert!(eval("", 4).is_identity());
        assert_eq!(eval("3 5 2 3 1", 6), eval("5 2 3 2 1", 6));
        assert!(Word::new(vec![4]).evaluate(4).is_err());
    }

    #[test]
    fn longest_element() {
        let w0 = eval("1 2 3 1 2 1", 4);
        assert_eq!(w0.one_line(), vec![4, 3, 2, 1]);
        assert_eq!(w0.length(), 6);
    }
}
