//! Finite semigroups given by Cayley tables, and the exhaustive satisfaction
//! oracle every polynomial criterion is measured against.

mod catalog;
mod presentation;

pub use catalog::{catalog, catalog_with, CatalogParams, CATALOG_NAMES};
pub use presentation::{from_presentation, Presentation, Relation};

use std::collections::{BTreeMap, HashMap, VecDeque};
use std::hash::Hash;
use std::sync::atomic::{AtomicU64, Ordering};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::parser::Identity;
use crate::words::{Letter, Word};

/// Assignment counts above this emit a warning from the brute-force oracle.
pub const DEFAULT_ORACLE_BUDGET: u128 = 50_000_000;

static ORACLE_CALLS: AtomicU64 = AtomicU64::new(0);

/// Number of brute-force satisfaction checks run in this process.
pub fn oracle_invocations() -> u64 {
    ORACLE_CALLS.load(Ordering::Relaxed)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteSemigroup {
    name: String,
    param: Option<u32>,
    elements: Vec<String>,
    size: usize,
    table: Vec<usize>,
    generators: BTreeMap<Letter, usize>,
    zero: Option<usize>,
}

impl FiniteSemigroup {
    /// Validates closure, associativity and the zero before accepting the table.
    pub fn new(
        name: impl Into<String>,
        elements: Vec<String>,
        table: Vec<Vec<usize>>,
        generators: BTreeMap<Letter, usize>,
        zero: Option<usize>,
    ) -> Result<FiniteSemigroup> {
        let size = elements.len();
        if size == 0 {
            return Err(Error::MalformedTable("no elements".into()));
        }
        if table.len() != size || table.iter().any(|row| row.len() != size) {
            return Err(Error::MalformedTable(format!("table is not {size}x{size}")));
        }
        if let Some(&bad) = table.iter().flatten().find(|&&e| e >= size) {
            return Err(Error::MalformedTable(format!("entry {bad} out of range")));
        }
        if let Some((x, &e)) = generators.iter().find(|(_, &e)| e >= size) {
            return Err(Error::MalformedTable(format!("generator {x} maps to {e}")));
        }
        let s = FiniteSemigroup {
            name: name.into(),
            param: None,
            elements,
            size,
            table: table.into_iter().flatten().collect(),
            generators,
            zero,
        };
        s.check_associative()?;
        if let Some(z) = zero {
            if z >= size || (0..size).any(|i| s.mul(i, z) != z || s.mul(z, i) != z) {
                return Err(Error::MalformedTable(format!("element {z} is not a zero")));
            }
        }
        Ok(s)
    }

    /// Closes `gens` under `mul`. Elements are named by their shortest-lex
    /// word over the generator letters; `zero`, when reached, goes last as `0`.
    pub fn generated<T, F>(
        name: impl Into<String>,
        gens: &[(Letter, T)],
        mul: F,
        zero: Option<T>,
    ) -> Result<FiniteSemigroup>
    where
        T: Clone + Eq + Hash,
        F: Fn(&T, &T) -> T,
    {
        let mut gens: Vec<(Letter, T)> = gens.to_vec();
        gens.sort_by_key(|(x, _)| *x);
        let mut index: HashMap<T, usize> = HashMap::new();
        let mut values: Vec<T> = Vec::new();
        let mut words: Vec<Vec<Letter>> = Vec::new();
        let mut queue = VecDeque::new();
        for (x, g) in &gens {
            if !index.contains_key(g) {
                index.insert(g.clone(), values.len());
                values.push(g.clone());
                words.push(vec![*x]);
                queue.push_back(values.len() - 1);
            }
        }
        while let Some(i) = queue.pop_front() {
            for (x, g) in &gens {
                let p = mul(&values[i], g);
                if !index.contains_key(&p) {
                    index.insert(p.clone(), values.len());
                    values.push(p);
                    let mut w = words[i].clone();
                    w.push(*x);
                    words.push(w);
                    queue.push_back(values.len() - 1);
                }
            }
        }
        // Reorder: everything but the zero keeps discovery (shortest-lex) order.
        let zero_old = zero.as_ref().and_then(|z| index.get(z).copied());
        let order: Vec<usize> = (0..values.len())
            .filter(|&i| Some(i) != zero_old)
            .chain(zero_old)
            .collect();
        let mut new_of = vec![0; values.len()];
        for (new, &old) in order.iter().enumerate() {
            new_of[old] = new;
        }
        let elements = order
            .iter()
            .map(|&old| {
                if Some(old) == zero_old {
                    "0".to_string()
                } else {
                    Word::new(words[old].clone()).expect("nonempty").to_string()
                }
            })
            .collect();
        let table = order
            .iter()
            .map(|&i| {
                order
                    .iter()
                    .map(|&j| new_of[index[&mul(&values[i], &values[j])]])
                    .collect()
            })
            .collect();
        let generators = gens.iter().map(|(x, g)| (*x, new_of[index[g]])).collect();
        FiniteSemigroup::new(name, elements, table, generators, zero_old.map(|z| new_of[z]))
    }

    /// Table over an explicit element list, in the given order.
    pub fn from_elements<T, F>(
        name: impl Into<String>,
        elements: &[(String, T)],
        mul: F,
        zero: Option<usize>,
    ) -> Result<FiniteSemigroup>
    where
        T: Eq + Hash,
        F: Fn(&T, &T) -> T,
    {
        let index: HashMap<&T, usize> = elements.iter().enumerate().map(|(i, (_, t))| (t, i)).collect();
        let mut table = Vec::with_capacity(elements.len());
        for (_, a) in elements {
            let mut row = Vec::with_capacity(elements.len());
            for (_, b) in elements {
                let p = mul(a, b);
                let &k = index
                    .get(&p)
                    .ok_or_else(|| Error::MalformedTable("product outside the element list".into()))?;
                row.push(k);
            }
            table.push(row);
        }
        let names = elements.iter().map(|(n, _)| n.clone()).collect();
        FiniteSemigroup::new(name, names, table, BTreeMap::new(), zero)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn param(&self) -> Option<u32> {
        self.param
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn elements(&self) -> &[String] {
        &self.elements
    }

    pub fn element_name(&self, i: usize) -> &str {
        &self.elements[i]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.elements.iter().position(|e| e == name)
    }

    pub fn zero(&self) -> Option<usize> {
        self.zero
    }

    pub fn generators(&self) -> &BTreeMap<Letter, usize> {
        &self.generators
    }

    #[inline]
    pub fn mul(&self, i: usize, j: usize) -> usize {
        self.table[i * self.size + j]
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.table.chunks(self.size).map(<[usize]>::to_vec).collect()
    }

    pub fn renamed(mut self, name: impl Into<String>) -> FiniteSemigroup {
        self.name = name.into();
        self
    }

    pub fn with_param(mut self, n: Option<u32>) -> FiniteSemigroup {
        self.param = n;
        self
    }

    pub fn with_generators(mut self, generators: BTreeMap<Letter, usize>) -> Result<FiniteSemigroup> {
        if generators.values().any(|&e| e >= self.size) {
            return Err(Error::MalformedTable("generator out of range".into()));
        }
        self.generators = generators;
        Ok(self)
    }

    /// The full triple loop over all `(i, j, k)`.
    pub fn check_associative(&self) -> Result<()> {
        let n = self.size;
        for i in 0..n {
            for j in 0..n {
                let ij = self.mul(i, j);
                for k in 0..n {
                    if self.mul(ij, k) != self.mul(i, self.mul(j, k)) {
                        return Err(Error::NotAssociative(i, j, k));
                    }
                }
            }
        }
        Ok(())
    }

    /// Folds a word over the generator map.
    pub fn eval_generators(&self, u: &Word) -> Result<usize> {
        evaluate(self, u, &Assignment(self.generators.clone()))
    }

    pub fn to_dump(&self) -> TableDump {
        TableDump {
            name: self.name.clone(),
            n: self.param,
            elements: self.elements.clone(),
            generators: self.generators.iter().map(|(x, &e)| (x.to_string(), e)).collect(),
            zero: self.zero,
            table: self.rows(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_dump()).expect("table dump serializes")
    }

    pub fn from_dump(dump: TableDump) -> Result<FiniteSemigroup> {
        let generators = dump
            .generators
            .iter()
            .map(|(k, &e)| {
                let mut cs = k.chars();
                match (cs.next().and_then(Letter::from_char), cs.next()) {
                    (Some(x), None) => Ok((x, e)),
                    _ => Err(Error::MalformedTable(format!("bad generator name `{k}`"))),
                }
            })
            .collect::<Result<_>>()?;
        Ok(FiniteSemigroup::new(dump.name, dump.elements, dump.table, generators, dump.zero)?
            .with_param(dump.n))
    }
}

/// The stable JSON table format.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableDump {
    pub name: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<u32>,
    pub elements: Vec<String>,
    pub generators: BTreeMap<String, usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub zero: Option<usize>,
    pub table: Vec<Vec<usize>>,
}

/// A map from letters to element indices of some target semigroup.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Assignment(pub BTreeMap<Letter, usize>);

impl Assignment {
    pub fn new() -> Assignment {
        Assignment::default()
    }

    pub fn set(mut self, x: Letter, e: usize) -> Assignment {
        self.0.insert(x, e);
        self
    }

    pub fn get(&self, x: Letter) -> Option<usize> {
        self.0.get(&x).copied()
    }
}

impl FromIterator<(Letter, usize)> for Assignment {
    fn from_iter<I: IntoIterator<Item = (Letter, usize)>>(iter: I) -> Assignment {
        Assignment(iter.into_iter().collect())
    }
}

pub fn evaluate(s: &FiniteSemigroup, u: &Word, phi: &Assignment) -> Result<usize> {
    let mut letters = u.letters().iter();
    let first = *letters.next().expect("words are nonempty");
    let mut acc = phi.get(first).ok_or(Error::UnmappedLetter(first))?;
    for &x in letters {
        acc = s.mul(acc, phi.get(x).ok_or(Error::UnmappedLetter(x))?);
    }
    Ok(acc)
}

fn fold_indexed(s: &FiniteSemigroup, u: &Word, slot: &HashMap<Letter, usize>, values: &[usize]) -> usize {
    let mut letters = u.letters().iter();
    let mut acc = values[slot[letters.next().expect("nonempty")]];
    for x in letters {
        acc = s.mul(acc, values[slot[x]]);
    }
    acc
}

/// Number of assignments the oracle walks for `id` in `s`.
pub fn bruteforce_cost(s: &FiniteSemigroup, id: &Identity) -> u128 {
    (s.size() as u128).saturating_pow(id.variables().len() as u32)
}

/// First assignment (in odometer order) separating the two sides, if any.
pub fn find_counterexample(s: &FiniteSemigroup, id: &Identity) -> Option<Assignment> {
    ORACLE_CALLS.fetch_add(1, Ordering::Relaxed);
    let vars = id.variables();
    let cost = bruteforce_cost(s, id);
    if cost > DEFAULT_ORACLE_BUDGET {
        log::warn!(
            "brute-force check of {id} in {} walks {cost} assignments",
            s.name()
        );
    }
    let slot: HashMap<Letter, usize> = vars.iter().enumerate().map(|(i, &x)| (x, i)).collect();
    let mut values = vec![0usize; vars.len()];
    loop {
        if fold_indexed(s, &id.lhs, &slot, &values) != fold_indexed(s, &id.rhs, &slot, &values) {
            return Some(vars.iter().copied().zip(values.iter().copied()).collect());
        }
        // odometer increment
        let mut k = 0;
        loop {
            if k == values.len() {
                return None;
            }
            values[k] += 1;
            if values[k] < s.size() {
                break;
            }
            values[k] = 0;
            k += 1;
        }
    }
}

/// Exhaustive check over all `|S|^k` assignments of the identity's variables.
pub fn satisfies_bruteforce(s: &FiniteSemigroup, id: &Identity) -> bool {
    find_counterexample(s, id).is_none()
}

/// Values of words under every assignment of a fixed alphabet `a, b, ...`
/// into `S`. Two words over that alphabet form an identity of `S` exactly
/// when their value vectors coincide, so one table answers the oracle for
/// all pairs of a word list at once.
#[derive(Debug, Clone)]
pub struct ValueTable<'s> {
    semigroup: &'s FiniteSemigroup,
    letters: usize,
    columns: Vec<Vec<u16>>,
}

impl<'s> ValueTable<'s> {
    pub fn new(semigroup: &'s FiniteSemigroup, letters: usize) -> ValueTable<'s> {
        let size = semigroup.size();
        let count = size.pow(letters as u32);
        let columns = (0..letters)
            .map(|k| {
                let stride = size.pow(k as u32);
                (0..count).map(|a| ((a / stride) % size) as u16).collect()
            })
            .collect();
        ValueTable { semigroup, letters, columns }
    }

    pub fn assignments(&self) -> usize {
        self.columns.first().map_or(1, Vec::len)
    }

    /// Panics if `u` uses a letter outside the table's alphabet.
    pub fn values(&self, u: &Word) -> Vec<u16> {
        let col = |x: Letter| {
            let k = x.index() as usize;
            assert!(k < self.letters, "letter {x} outside the value table alphabet");
            &self.columns[k]
        };
        let mut acc = col(u.head()).clone();
        for &x in &u.letters()[1..] {
            let c = col(x);
            for (a, &v) in acc.iter_mut().zip(c) {
                *a = self.semigroup.mul(*a as usize, v as usize) as u16;
            }
        }
        acc
    }
}

/// Reverses every product: `dual(S)[i][j] = S[j][i]`.
pub fn dual(s: &FiniteSemigroup) -> FiniteSemigroup {
    let n = s.size();
    let mut table = vec![0; n * n];
    for i in 0..n {
        for j in 0..n {
            table[i * n + j] = s.mul(j, i);
        }
    }
    FiniteSemigroup {
        name: match s.name.strip_prefix("dual(").and_then(|r| r.strip_suffix(')')) {
            Some(inner) => inner.to_string(),
            None => format!("dual({})", s.name),
        },
        param: s.param,
        elements: s.elements.clone(),
        size: n,
        table,
        generators: s.generators.clone(),
        zero: s.zero,
    }
}

/// True iff `f` preserves products and is onto `t`.
pub fn check_homomorphism(s: &FiniteSemigroup, t: &FiniteSemigroup, f: &[usize]) -> bool {
    if f.len() != s.size() || f.iter().any(|&e| e >= t.size()) {
        return false;
    }
    for i in 0..s.size() {
        for j in 0..s.size() {
            if f[s.mul(i, j)] != t.mul(f[i], f[j]) {
                return false;
            }
        }
    }
    let mut hit = vec![false; t.size()];
    f.iter().for_each(|&e| hit[e] = true);
    hit.into_iter().all(|h| h)
}

/// Like [`check_homomorphism`] with the map given by element names.
pub fn check_homomorphism_by_name(
    s: &FiniteSemigroup,
    t: &FiniteSemigroup,
    f: &[(&str, &str)],
) -> bool {
    let mut map = vec![usize::MAX; s.size()];
    for (a, b) in f {
        match (s.index_of(a), t.index_of(b)) {
            (Some(i), Some(j)) => map[i] = j,
            _ => return false,
        }
    }
    !map.contains(&usize::MAX) && check_homomorphism(s, t, &map)
}

/// The isomorphism `S -> T` sending each generator of `S` to the element `T`
/// assigns the same letter, if that map is a bijective homomorphism.
pub fn generator_isomorphism(s: &FiniteSemigroup, t: &FiniteSemigroup) -> Option<Vec<usize>> {
    if s.size() != t.size() || s.generators().keys().ne(t.generators().keys()) {
        return None;
    }
    let mut map = vec![usize::MAX; s.size()];
    let mut queue = VecDeque::new();
    for (x, &e) in s.generators() {
        let image = t.generators()[x];
        if map[e] == usize::MAX {
            map[e] = image;
            queue.push_back(e);
        } else if map[e] != image {
            return None;
        }
    }
    while let Some(e) = queue.pop_front() {
        for (x, &g) in s.generators() {
            let p = s.mul(e, g);
            let image = t.mul(map[e], t.generators()[x]);
            if map[p] == usize::MAX {
                map[p] = image;
                queue.push_back(p);
            } else if map[p] != image {
                return None;
            }
        }
    }
    if map.contains(&usize::MAX) {
        return None;
    }
    let mut seen = vec![false; t.size()];
    for &e in &map {
        if std::mem::replace(&mut seen[e], true) {
            return None;
        }
    }
    check_homomorphism(s, t, &map).then_some(map)
}

/// Backtracking search for any isomorphism `S -> T`.
pub fn find_isomorphism(s: &FiniteSemigroup, t: &FiniteSemigroup) -> Option<Vec<usize>> {
    fn extend(s: &FiniteSemigroup, t: &FiniteSemigroup, map: &mut Vec<usize>, used: &mut Vec<bool>) -> bool {
        let i = map.len();
        if i == s.size() {
            return true;
        }
        for cand in 0..t.size() {
            if used[cand] {
                continue;
            }
            map.push(cand);
            used[cand] = true;
            let consistent = (0..=i).all(|a| {
                (0..=i).all(|b| {
                    let p = s.mul(a, b);
                    p > i || t.mul(map[a], map[b]) == map[p]
                })
            });
            if consistent && extend(s, t, map, used) {
                return true;
            }
            map.pop();
            used[cand] = false;
        }
        false
    }
    if s.size() != t.size() {
        return None;
    }
    let mut map = Vec::with_capacity(s.size());
    let mut used = vec![false; t.size()];
    (extend(s, t, &mut map, &mut used) && check_homomorphism(s, t, &map)).then_some(map)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    fn id(s: &str) -> Identity {
        s.parse().unwrap()
    }

    fn l(c: char) -> Letter {
        Letter::from_char(c).unwrap()
    }

    #[test]
    fn evaluate_in_b2() {
        let b2 = catalog("B2", None).unwrap();
        let e = |n: &str| b2.index_of(n).unwrap();
        let phi = Assignment::new().set(l('a'), e("(0,1)")).set(l('b'), e("(1,0)"));
        assert_eq!(evaluate(&b2, &w("ab"), &phi).unwrap(), e("(0,0)"));
        assert_eq!(evaluate(&b2, &w("aa"), &phi).unwrap(), e("0"));
        assert_eq!(evaluate(&b2, &w("ac"), &phi), Err(Error::UnmappedLetter(l('c'))));
    }

    #[test]
    fn evaluate_in_gamma() {
        let g = catalog("Gamma", None).unwrap();
        let e = |n: &str| g.index_of(n).unwrap();
        let phi = Assignment::new().set(l('x'), e("(1,0,0,0)")).set(l('a'), e("(0,1,2,0)"));
        assert_eq!(evaluate(&g, &w("xa"), &phi).unwrap(), e("(1,1,0,1)"));
    }

    #[test]
    fn bruteforce_examples() {
        assert!(satisfies_bruteforce(&catalog("B2", None).unwrap(), &id("aba=ababa")));
        assert!(satisfies_bruteforce(&catalog("A", None).unwrap(), &id("x^2=x^3")));
        let b = catalog("B", None).unwrap();
        assert!(!satisfies_bruteforce(&b, &id("ab=ba")));
        let cx = find_counterexample(&b, &id("ab=ba")).unwrap();
        assert_ne!(evaluate(&b, &w("ab"), &cx), evaluate(&b, &w("ba"), &cx));
    }

    #[test]
    fn value_table_agrees_with_bruteforce() {
        let s = catalog("C_lambda", None).unwrap();
        let vt = ValueTable::new(&s, 2);
        assert_eq!(vt.assignments(), 25);
        for (u, v) in [("aab", "bba"), ("ab", "ba"), ("abb", "ab"), ("a^2", "a^3")] {
            let same = vt.values(&w(u)) == vt.values(&w(v));
            assert_eq!(same, satisfies_bruteforce(&s, &Identity::new(w(u), w(v))), "{u}={v}");
        }
    }

    #[test]
    fn rejects_non_associative_table() {
        // (p*p)*q = p but p*(p*q) = q
        let t = vec![vec![1, 0], vec![0, 0]];
        let r = FiniteSemigroup::new("bad", vec!["p".into(), "q".into()], t, BTreeMap::new(), None);
        assert!(matches!(r, Err(Error::NotAssociative(..))));
    }

    #[test]
    fn rejects_false_zero() {
        let t = vec![vec![0, 0], vec![1, 1]];
        let r = FiniteSemigroup::new("L2", vec!["x".into(), "y".into()], t, BTreeMap::new(), Some(0));
        assert!(matches!(r, Err(Error::MalformedTable(_))));
    }

    #[test]
    fn dual_is_an_involution() {
        let b = catalog("B", None).unwrap();
        assert_eq!(dual(&dual(&b)), b);
    }

    #[test]
    fn homomorphisms() {
        let gamma = catalog("Gamma", None).unwrap();
        let b2 = catalog("B2", None).unwrap();
        let tau: Vec<usize> = gamma
            .elements()
            .iter()
            .map(|e| {
                if e == "0" {
                    b2.index_of("0").unwrap()
                } else {
                    let parts: Vec<&str> = e.trim_matches(|c| c == '(' || c == ')').split(',').collect();
                    b2.index_of(&format!("({},{})", parts[0], parts[1])).unwrap()
                }
            })
            .collect();
        assert!(check_homomorphism(&gamma, &b2, &tau));

        let a = catalog("A", None).unwrap();
        let n21 = catalog("N2_1", None).unwrap();
        assert!(check_homomorphism_by_name(
            &a,
            &n21,
            &[("x", "1"), ("y", "a"), ("xy", "a"), ("0", "0")]
        ));
        let b = catalog("B", None).unwrap();
        let id_map: Vec<usize> = (0..b.size()).collect();
        assert!(check_homomorphism(&b, &b, &id_map));
        // not onto
        assert!(!check_homomorphism(&b, &b, &vec![b.zero().unwrap(); b.size()]));
    }

    #[test]
    fn json_round_trip() {
        let s = catalog("K", Some(2)).unwrap();
        let back = FiniteSemigroup::from_dump(serde_json::from_str(&s.to_json()).unwrap()).unwrap();
        assert_eq!(back, s);
    }
}
