//! Exhaustive enumeration of small identities and comparison of a criterion
//! against evaluation in its table.

use rayon::prelude::*;
use serde::Serialize;

use crate::criteria::Criterion;
use crate::parser::Identity;
use crate::semigroups::{FiniteSemigroup, ValueTable};
use crate::words::{Letter, Word};

/// All words over the first `letters` letters with length in `1..=max_len`,
/// shortest first, then lexicographic.
pub fn all_words(letters: usize, max_len: usize) -> Vec<Word> {
    let mut out: Vec<Vec<Letter>> = Vec::new();
    let mut layer: Vec<Vec<Letter>> = vec![Vec::new()];
    for _ in 0..max_len {
        layer = layer
            .iter()
            .flat_map(|p| (0..letters as u32).map(move |x| [p.as_slice(), &[Letter(x)]].concat()))
            .collect();
        out.extend(layer.iter().cloned());
    }
    out.into_iter().map(|w| Word::new(w).expect("nonempty")).collect()
}

/// Whether the letters of `u` then `v` first appear in the order `a, b, c, ...`.
pub fn is_canonical(u: &Word, v: &Word) -> bool {
    let mut next = 0u32;
    for &x in u.letters().iter().chain(v.letters()) {
        if x.0 > next {
            return false;
        }
        if x.0 == next {
            next += 1;
        }
    }
    true
}

/// Renames letters by first occurrence across both sides.
pub fn canonical_renaming(id: &Identity) -> Identity {
    let mut map = std::collections::BTreeMap::new();
    for &x in id.lhs.letters().iter().chain(id.rhs.letters()) {
        let k = map.len() as u32;
        map.entry(x).or_insert(Letter(k));
    }
    id.map_letters(|x| map[&x])
}

/// Ordered pairs of words over at most `letters` letters with both sides of
/// length at most `max_len`, one representative per renaming class.
pub fn desk_identities(letters: usize, max_len: usize) -> Vec<Identity> {
    let words = all_words(letters, max_len);
    let mut out = Vec::new();
    for u in &words {
        for v in &words {
            if is_canonical(u, v) {
                out.push(Identity::new(u.clone(), v.clone()));
            }
        }
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FuzzReport {
    pub semigroup: String,
    pub letters: usize,
    pub max_len: usize,
    pub checked: usize,
    pub mismatches: usize,
    /// Up to ten disagreeing identities, as text.
    pub examples: Vec<String>,
}

impl std::fmt::Display for FuzzReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{} mismatches / {} identities checked", self.mismatches, self.checked)
    }
}

/// Compares `criterion` with exhaustive evaluation in `table` on every
/// identity of [`desk_identities`].
pub fn fuzz_against(criterion: &Criterion, table: &FiniteSemigroup, letters: usize, max_len: usize) -> FuzzReport {
    let words = all_words(letters, max_len);
    let values = ValueTable::new(table, letters);
    let vectors: Vec<Vec<u16>> = words.par_iter().map(|w| values.values(w)).collect();
    let bad: Vec<Identity> = (0..words.len())
        .into_par_iter()
        .flat_map_iter(|i| {
            let (words, vectors) = (&words, &vectors);
            (0..words.len()).filter_map(move |j| {
                if !is_canonical(&words[i], &words[j]) {
                    return None;
                }
                let id = Identity::new(words[i].clone(), words[j].clone());
                (criterion.holds(&id) != (vectors[i] == vectors[j])).then_some(id)
            })
        })
        .collect();
    let checked = (0..words.len())
        .into_par_iter()
        .map(|i| (0..words.len()).filter(|&j| is_canonical(&words[i], &words[j])).count())
        .sum();
    FuzzReport {
        semigroup: criterion.to_string(),
        letters,
        max_len,
        checked,
        mismatches: bad.len(),
        examples: bad.iter().take(10).map(Identity::to_string).collect(),
    }
}

pub fn fuzz(criterion: &Criterion, letters: usize, max_len: usize) -> FuzzReport {
    fuzz_against(criterion, &criterion.semigroup(), letters, max_len)
}
