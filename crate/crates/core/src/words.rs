//! Words of the free semigroup and the statistics the identity criteria read
//! off them: content, occurrence counts, heads and tails, simple letters and
//! the left and right cores.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A variable of the countable alphabet. Letters `0..26` print as `a..z`;
/// larger indices print as `_{i}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Letter(pub u32);

impl Letter {
    pub fn from_char(c: char) -> Option<Letter> {
        c.is_ascii_lowercase().then(|| Letter(c as u32 - 'a' as u32))
    }

    pub fn index(self) -> u32 {
        self.0
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0 < 26 {
            write!(f, "{}", (b'a' + self.0 as u8) as char)
        } else {
            write!(f, "_{{{}}}", self.0)
        }
    }
}

/// A nonempty word. Equality is equality in the free semigroup.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn new(letters: Vec<Letter>) -> Result<Word> {
        if letters.is_empty() {
            return Err(Error::Parameter("a word must be nonempty".into()));
        }
        Ok(Word(letters))
    }

    pub fn letter(x: Letter) -> Word {
        Word(vec![x])
    }

    /// Builds a word from a plain string of lowercase letters, e.g. `"abba"`.
    pub fn from_letters(s: &str) -> Result<Word> {
        let letters = s
            .chars()
            .map(|c| {
                Letter::from_char(c)
                    .ok_or_else(|| Error::Parameter(format!("`{c}` is not a letter")))
            })
            .collect::<Result<Vec<_>>>()?;
        Word::new(letters)
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn into_letters(self) -> Vec<Letter> {
        self.0
    }

    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn head(&self) -> Letter {
        self.0[0]
    }

    pub fn tail(&self) -> Letter {
        self.0[self.0.len() - 1]
    }

    /// `h_s(u)`, the `s`-th letter from the left (1-based); `None` past the end.
    pub fn head_at(&self, s: usize) -> Option<Letter> {
        s.checked_sub(1).and_then(|i| self.0.get(i).copied())
    }

    /// `t_s(u)`, the `s`-th letter from the right (1-based).
    pub fn tail_at(&self, s: usize) -> Option<Letter> {
        if s == 0 || s > self.0.len() {
            None
        } else {
            Some(self.0[self.0.len() - s])
        }
    }

    pub fn reverse(&self) -> Word {
        Word(self.0.iter().rev().copied().collect())
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn pow(&self, k: usize) -> Result<Word> {
        if k == 0 {
            return Err(Error::Parameter("exponent must be at least 1".into()));
        }
        Ok(Word(self.0.repeat(k)))
    }

    pub fn content(&self) -> BTreeSet<Letter> {
        self.0.iter().copied().collect()
    }

    pub fn occurrences(&self, x: Letter) -> usize {
        self.0.iter().filter(|&&y| y == x).count()
    }

    pub fn map_letters(&self, mut f: impl FnMut(Letter) -> Letter) -> Word {
        Word(self.0.iter().map(|&x| f(x)).collect())
    }

    pub fn plain(&self) -> String {
        self.0.iter().map(|x| x.to_string()).collect()
    }
}

/// Renders with maximal runs compressed: `aab` prints as `a^2b`.
impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut i = 0;
        while i < self.0.len() {
            let x = self.0[i];
            let mut j = i + 1;
            while j < self.0.len() && self.0[j] == x {
                j += 1;
            }
            write!(f, "{x}")?;
            if j - i > 1 {
                write!(f, "^{}", j - i)?;
            }
            i = j;
        }
        Ok(())
    }
}

impl AsRef<[Letter]> for Word {
    fn as_ref(&self) -> &[Letter] {
        &self.0
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WordProfile {
    pub word: Word,
    pub content: BTreeSet<Letter>,
    pub occurrences: BTreeMap<Letter, usize>,
    pub length: usize,
    pub head: Letter,
    pub tail: Letter,
    pub simple_letters: BTreeSet<Letter>,
    pub left_core: Word,
    pub right_core: Word,
}

impl WordProfile {
    pub fn occ(&self, x: Letter) -> usize {
        self.occurrences.get(&x).copied().unwrap_or(0)
    }

    pub fn head_at(&self, s: usize) -> Option<Letter> {
        self.word.head_at(s)
    }

    pub fn tail_at(&self, s: usize) -> Option<Letter> {
        self.word.tail_at(s)
    }

    /// Occurrence count of `h_s(u)`, if defined.
    pub fn head_occ(&self, s: usize) -> Option<usize> {
        self.head_at(s).map(|x| self.occ(x))
    }

    pub fn tail_occ(&self, s: usize) -> Option<usize> {
        self.tail_at(s).map(|x| self.occ(x))
    }
}

pub fn analyze(u: &Word) -> WordProfile {
    let mut occurrences = BTreeMap::new();
    let mut left = Vec::new();
    for &x in u.letters() {
        let c = occurrences.entry(x).or_insert(0usize);
        if *c == 0 {
            left.push(x);
        }
        *c += 1;
    }
    let mut seen = BTreeSet::new();
    let mut right = Vec::new();
    for &x in u.letters().iter().rev() {
        if seen.insert(x) {
            right.push(x);
        }
    }
    right.reverse();
    let simple_letters = occurrences
        .iter()
        .filter(|(_, &c)| c == 1)
        .map(|(&x, _)| x)
        .collect();
    WordProfile {
        content: occurrences.keys().copied().collect(),
        length: u.len(),
        head: u.head(),
        tail: u.tail(),
        simple_letters,
        left_core: Word(left),
        right_core: Word(right),
        occurrences,
        word: u.clone(),
    }
}

/// True iff some letter occurs in `q` consecutive positions of `u`.
pub fn has_power_factor(u: &Word, q: usize) -> Result<bool> {
    if q < 2 {
        return Err(Error::Parameter(format!("power q must be at least 2, got {q}")));
    }
    let mut run = 1;
    for pair in u.letters().windows(2) {
        run = if pair[0] == pair[1] { run + 1 } else { 1 };
        if run >= q {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Whether `u` is an isoterm for `x_1...x_p = x_{p+1}^q`: shorter than `p`
/// and free of `q`-th powers of a letter.
pub fn is_pq_trivial(u: &Word, p: usize, q: usize) -> Result<bool> {
    if p < 2 {
        return Err(Error::Parameter(format!("length bound p must be at least 2, got {p}")));
    }
    Ok(u.len() < p && !has_power_factor(u, q)?)
}

pub fn adjacent_pairs(u: &Word) -> Vec<(Letter, Letter)> {
    u.letters().windows(2).map(|w| (w[0], w[1])).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        Word::from_letters(s).unwrap()
    }

    fn l(c: char) -> Letter {
        Letter::from_char(c).unwrap()
    }

    #[test]
    fn cores_of_the_long_example() {
        // x^6 y^2 z x t^2 x t^7 s
        let u = w("xxxxxxyyzxttxttttttts");
        let p = analyze(&u);
        assert_eq!(p.left_core, w("xyzts"));
        assert_eq!(p.right_core, w("yzxts"));
    }

    #[test]
    fn single_letter_profile() {
        let p = analyze(&w("a"));
        assert_eq!(p.content, [l('a')].into());
        assert_eq!(p.head, l('a'));
        assert_eq!(p.tail, l('a'));
        assert_eq!(p.simple_letters, [l('a')].into());
        assert_eq!(p.length, 1);
        assert_eq!(p.head_at(2), None);
    }

    #[test]
    fn abab_profile() {
        let p = analyze(&w("abab"));
        assert_eq!(p.occ(l('a')), 2);
        assert_eq!(p.occ(l('b')), 2);
        assert_eq!(p.head_at(1), Some(l('a')));
        assert_eq!(p.head_at(2), Some(l('b')));
        assert_eq!(p.tail_at(1), Some(l('b')));
        assert_eq!(p.tail_at(2), Some(l('a')));
        assert!(p.simple_letters.is_empty());
    }

    #[test]
    fn power_factors() {
        assert!(has_power_factor(&w("aabc"), 2).unwrap());
        assert!(!has_power_factor(&w("abab"), 2).unwrap());
        assert!(has_power_factor(&w("abbba"), 3).unwrap());
        assert!(!has_power_factor(&w("abba"), 3).unwrap());
        assert!(has_power_factor(&w("a"), 1).is_err());
    }

    #[test]
    fn pq_triviality() {
        assert!(is_pq_trivial(&w("aba"), 4, 2).unwrap());
        assert!(!is_pq_trivial(&w("abab"), 4, 2).unwrap());
        assert!(!is_pq_trivial(&w("aab"), 4, 2).unwrap());
        assert!(is_pq_trivial(&w("ab"), 1, 2).is_err());
        assert!(is_pq_trivial(&w("ab"), 4, 1).is_err());
    }

    #[test]
    fn pairs() {
        assert_eq!(adjacent_pairs(&w("aba")), vec![(l('a'), l('b')), (l('b'), l('a'))]);
        assert!(adjacent_pairs(&w("a")).is_empty());
        assert_eq!(
            adjacent_pairs(&w("abbcc")),
            vec![(l('a'), l('b')), (l('b'), l('b')), (l('b'), l('c')), (l('c'), l('c'))]
        );
    }

    #[test]
    fn rendering_compresses_runs() {
        assert_eq!(w("aabccc").to_string(), "a^2bc^3");
        assert_eq!(w("xyxyx").to_string(), "xyxyx");
        assert_eq!(Letter(30).to_string(), "_{30}");
    }

    #[test]
    fn empty_word_rejected() {
        assert!(Word::new(vec![]).is_err());
    }
}
