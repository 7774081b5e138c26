use std::collections::{BTreeMap, HashMap};

use super::FiniteSemigroup;
use crate::error::{Error, Result};
use crate::words::{Letter, Word};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Relation {
    Equal(Word, Word),
    /// `w = 0`
    Zero(Word),
}

/// Generators, defining relations and the longest word the closure explores.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Presentation {
    pub generators: Vec<Letter>,
    pub relations: Vec<Relation>,
    pub closure_cap: usize,
}

impl Presentation {
    /// Relations in the text form `"x^2=0; y=y^2; yxy=0"`, split on `;`.
    pub fn parse(generators: &str, relations: &str, closure_cap: usize) -> Result<Presentation> {
        let generators = generators
            .chars()
            .filter(|c| !c.is_whitespace())
            .map(|c| Letter::from_char(c).ok_or_else(|| Error::Parameter(format!("bad generator `{c}`"))))
            .collect::<Result<Vec<_>>>()?;
        let mut rels = Vec::new();
        for part in relations.split(';').map(str::trim).filter(|p| !p.is_empty()) {
            let (l, r) = part
                .split_once('=')
                .ok_or_else(|| Error::Parameter(format!("relation `{part}` has no `=`")))?;
            let lhs: Word = l.trim().parse()?;
            rels.push(if r.trim() == "0" {
                Relation::Zero(lhs)
            } else {
                Relation::Equal(lhs, r.trim().parse()?)
            });
        }
        Ok(Presentation { generators, relations: rels, closure_cap })
    }

    fn max_relation_len(&self) -> usize {
        self.relations
            .iter()
            .map(|r| match r {
                Relation::Equal(a, b) => a.len().max(b.len()),
                Relation::Zero(a) => a.len(),
            })
            .max()
            .unwrap_or(1)
    }

    fn has_zero(&self) -> bool {
        self.relations.iter().any(|r| matches!(r, Relation::Zero(_)))
    }
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn find(&mut self, mut a: usize) -> usize {
        while self.0[a] != a {
            self.0[a] = self.0[self.0[a]];
            a = self.0[a];
        }
        a
    }

    fn union(&mut self, a: usize, b: usize) {
        let (a, b) = (self.find(a), self.find(b));
        if a != b {
            self.0[a] = b;
        }
    }
}

fn occurrences<'a>(hay: &'a [Letter], needle: &[Letter]) -> impl Iterator<Item = usize> + 'a {
    let needle = needle.to_vec();
    hay.windows(needle.len())
        .enumerate()
        .filter(move |(_, w)| *w == needle.as_slice())
        .map(|(i, _)| i)
}

/// Quotient of the free semigroup on the generators by the relations, built
/// from all words up to the closure cap. Fails with `NotClosed` unless the
/// resulting classes carry a table that is associative, satisfies every
/// relation and has all products of representatives within the cap.
pub fn from_presentation(p: &Presentation) -> Result<FiniteSemigroup> {
    let cap = p.closure_cap;
    if cap < p.max_relation_len() {
        return Err(Error::Parameter(format!(
            "closure cap {cap} is below the longest relation ({})",
            p.max_relation_len()
        )));
    }
    let mut gens = p.generators.clone();
    gens.sort();
    gens.dedup();
    if gens.is_empty() {
        return Err(Error::Parameter("presentation has no generators".into()));
    }

    let mut words: Vec<Vec<Letter>> = gens.iter().map(|&g| vec![g]).collect();
    let mut start = 0;
    for _ in 1..cap {
        let end = words.len();
        for i in start..end {
            for &g in &gens {
                let mut w = words[i].clone();
                w.push(g);
                words.push(w);
            }
        }
        start = end;
    }
    let index: HashMap<&[Letter], usize> = words.iter().enumerate().map(|(i, w)| (w.as_slice(), i)).collect();
    let zero_node = words.len();
    let mut uf = UnionFind((0..=words.len()).collect());

    for (i, w) in words.iter().enumerate() {
        for rel in &p.relations {
            match rel {
                Relation::Zero(z) => {
                    if occurrences(w, z.letters()).next().is_some() {
                        uf.union(i, zero_node);
                    }
                }
                Relation::Equal(a, b) => {
                    for (from, to) in [(a, b), (b, a)] {
                        for pos in occurrences(w, from.letters()) {
                            let new_len = w.len() - from.len() + to.len();
                            if new_len > cap {
                                continue;
                            }
                            let mut v = w[..pos].to_vec();
                            v.extend_from_slice(to.letters());
                            v.extend_from_slice(&w[pos + from.len()..]);
                            uf.union(i, index[v.as_slice()]);
                        }
                    }
                }
            }
        }
    }

    // Representatives: the first word of each class in shortest-lex order,
    // which is the order `words` was generated in.
    let zero_root = uf.find(zero_node);
    let mut class_of_root: HashMap<usize, usize> = HashMap::new();
    let mut reps: Vec<usize> = Vec::new();
    for i in 0..words.len() {
        let r = uf.find(i);
        if r != zero_root && !class_of_root.contains_key(&r) {
            class_of_root.insert(r, reps.len());
            reps.push(i);
        }
    }
    let has_zero = p.has_zero() || (0..words.len()).any(|i| uf.find(i) == zero_root);
    let size = reps.len() + usize::from(has_zero);
    let zero = has_zero.then_some(size - 1);

    let class_of_word = |w: &[Letter], uf: &mut UnionFind| -> Result<usize> {
        let &i = index.get(w).ok_or_else(|| Error::NotClosed {
            cap,
            detail: format!("product {} leaves the explored ball", Word::new(w.to_vec()).expect("nonempty")),
        })?;
        let r = uf.find(i);
        Ok(if r == zero_root { size - 1 } else { class_of_root[&r] })
    };

    let mut table = vec![vec![0; size]; size];
    for (a, &ra) in reps.iter().enumerate() {
        for (b, &rb) in reps.iter().enumerate() {
            let mut w = words[ra].clone();
            w.extend_from_slice(&words[rb]);
            table[a][b] = class_of_word(&w, &mut uf)?;
        }
    }
    if let Some(z) = zero {
        for row in table.iter_mut() {
            row[z] = z;
        }
        table[z] = vec![z; size];
    }
    let mut elements: Vec<String> = reps
        .iter()
        .map(|&i| Word::new(words[i].clone()).expect("nonempty").to_string())
        .collect();
    if has_zero {
        elements.push("0".into());
    }
    let generators: BTreeMap<Letter, usize> = gens
        .iter()
        .map(|&g| Ok((g, class_of_word(&[g], &mut uf)?)))
        .collect::<Result<_>>()?;

    let not_closed = |detail: String| Error::NotClosed { cap, detail };
    let s = FiniteSemigroup::new("presented", elements, table, generators, zero)
        .map_err(|e| not_closed(e.to_string()))?;
    for rel in &p.relations {
        let ok = match rel {
            Relation::Zero(w) => Some(s.eval_generators(w)?) == s.zero(),
            Relation::Equal(a, b) => s.eval_generators(a)? == s.eval_generators(b)?,
        };
        if !ok {
            return Err(not_closed(format!("relation {rel:?} fails in the quotient")));
        }
    }
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn a_has_four_elements() {
        let p = Presentation::parse("xy", "x=x^2; y^2=0; xy=yx", 6).unwrap();
        let s = from_presentation(&p).unwrap();
        assert_eq!(s.elements(), ["x", "y", "xy", "0"]);
    }

    #[test]
    fn d_has_six_elements() {
        let p = Presentation::parse("xy", "x^2=0; y=y^2; yxy=0", 7).unwrap();
        let s = from_presentation(&p).unwrap();
        assert_eq!(s.elements(), ["x", "y", "xy", "yx", "xyx", "0"]);
    }

    #[test]
    fn nilpotent_n3() {
        let p = Presentation::parse("x", "x^3=0", 4).unwrap();
        let s = from_presentation(&p).unwrap();
        assert_eq!(s.elements(), ["x", "x^2", "0"]);
    }

    #[test]
    fn infinite_quotient_is_not_closed() {
        let p = Presentation::parse("xy", "xy=yx", 5).unwrap();
        assert!(matches!(from_presentation(&p), Err(Error::NotClosed { .. })));
    }

    #[test]
    fn cap_below_relation_length() {
        let p = Presentation::parse("x", "x^3=0", 2).unwrap();
        assert!(matches!(from_presentation(&p), Err(Error::Parameter(_))));
    }
}
