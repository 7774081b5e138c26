//! Finite identity bases of the indicator varieties and a bounded two-way
//! derivation search over them.

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet, VecDeque};
use std::fmt;

use crate::error::{Error, Result};
use crate::parser::Identity;
use crate::words::{Letter, Word};

pub const BASIS_NAMES: &[&str] = &[
    "A", "N2_1", "B", "C_lambda", "C_rho", "K", "D", "F_lambda", "F_rho", "W_lambda", "W_rho", "L2_1", "R2_1",
    "N3", "L2vB2", "L2", "R2", "Y2", "C", "N2",
];

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Basis {
    pub name: String,
    pub param: Option<u32>,
    pub identities: Vec<Identity>,
    /// Catalog semigroups (name, n) whose varieties the basis defines.
    pub models: Vec<(String, Option<u32>)>,
    pub note: Option<String>,
}

impl Basis {
    fn new(name: &str, param: Option<u32>, ids: &[&str], models: &[&str]) -> Basis {
        Basis {
            name: name.to_string(),
            param,
            identities: ids.iter().map(|s| s.parse().expect("basis identities parse")).collect(),
            models: models.iter().map(|m| (m.to_string(), param)).collect(),
            note: None,
        }
    }

    fn reversed(&self, name: &str, models: &[&str]) -> Basis {
        Basis {
            name: name.to_string(),
            param: self.param,
            identities: self.identities.iter().map(Identity::reverse).collect(),
            models: models.iter().map(|m| (m.to_string(), self.param)).collect(),
            note: self.note.clone(),
        }
    }
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ids: Vec<String> = self.identities.iter().map(Identity::to_string).collect();
        write!(f, "{}: {{{}}}", self.name, ids.join(", "))
    }
}

const W_NOTE: &str = "the printed form of abc^2d^2=abd^2c^2 is trivial; the basis uses the swapped form";

pub fn basis_catalog(name: &str, n: Option<u32>) -> Result<Basis> {
    let need_n = || match n {
        Some(n) if n >= 1 => Ok(n),
        Some(_) => Err(Error::Parameter(format!("{name} needs n >= 1"))),
        None => Err(Error::MissingParameter(name.to_string())),
    };
    Ok(match name {
        "A" | "N2_1" => Basis::new(name, None, &["x^2=x^3", "xy=yx"], &["A", "N2_1"]),
        "B" => Basis::new("B", None, &["a^2=bcde", "abc=cba", "aba=bab"], &["B"]),
        "C_lambda" => Basis::new("C_lambda", None, &["a^2=a^3", "a^2b=b^2a", "abc=abc^2"], &["C_lambda"]),
        "C_rho" => basis_catalog("C_lambda", None)?.reversed("C_rho", &["C_rho"]),
        "K" => k_basis(need_n()?),
        "D" => {
            let mut b = k_basis(1);
            b.name = "D".into();
            b.param = None;
            b.models = vec![("D".into(), None), ("K".into(), Some(1))];
            b
        }
        "F_lambda" => Basis::new("F_lambda", None, &["ab=abc"], &["F_lambda"]),
        "F_rho" => basis_catalog("F_lambda", None)?.reversed("F_rho", &["F_rho"]),
        "W_lambda" => {
            let mut b = Basis::new(
                "W_lambda",
                None,
                &["a^2=a^3", "aba=ababa", "abc^2d^2=abd^2c^2", "a^2b^2=ab^2a"],
                &["W_lambda"],
            );
            b.note = Some(W_NOTE.into());
            b
        }
        "W_rho" => basis_catalog("W_lambda", None)?.reversed("W_rho", &["W_rho"]),
        "L2_1" => Basis::new("L2_1", None, &["x=x^2", "xy=xyx"], &["L2_1"]),
        "R2_1" => basis_catalog("L2_1", None)?.reversed("R2_1", &["R2_1"]),
        "N3" => Basis::new("N3", None, &["xyz=w^3", "xy=yx"], &["N3"]),
        "L2vB2" => Basis::new("L2vB2", None, &["a^2=a^3", "aba=ababa", "ab^2c^2=ac^2b^2"], &["L2", "B2"]),
        "L2" => Basis::new("L2", None, &["x=xy"], &["L2"]),
        "R2" => Basis::new("R2", None, &["x=yx"], &["R2"]),
        "Y2" => Basis::new("Y2", None, &["x=x^2", "xy=yx"], &["Y2"]),
        "C" => {
            let n = need_n()?;
            let ids = [format!("x=xy^{n}"), "xy=yx".to_string()];
            let ids: Vec<&str> = ids.iter().map(String::as_str).collect();
            Basis::new("C", Some(n), &ids, &["C"])
        }
        "N2" => Basis::new("N2", None, &["xy=z^2"], &["N2"]),
        _ => return Err(Error::UnknownName(name.to_string())),
    })
}

fn k_basis(n: u32) -> Basis {
    let mut ids = vec![
        "a^2b^2=b^2a^2".to_string(),
        format!("a^2=a^{}", n + 2),
        "abcd=acbd".to_string(),
        format!("abc=ab^{}c", n + 1),
    ];
    for m in 1..=n {
        if crate::criteria::gcd(m as u64, n as u64) > 1 {
            ids.push(format!("ab^{m}a=a^{}b^{m}a", n + 1));
        }
    }
    let ids: Vec<&str> = ids.iter().map(String::as_str).collect();
    Basis::new("K", Some(n), &ids, &["K"])
}

type Subst = BTreeMap<Letter, Vec<Letter>>;

/// All ways to read `pattern` as `sigma(pattern)` starting at `w[start]`,
/// extending `sigma`. Each result is the end offset and the substitution.
fn match_at(pattern: &[Letter], w: &[Letter], start: usize, sigma: &mut Subst, out: &mut Vec<(usize, Subst)>) {
    let Some((&x, rest)) = pattern.split_first() else {
        out.push((start, sigma.clone()));
        return;
    };
    if let Some(img) = sigma.get(&x) {
        if w[start..].starts_with(img) {
            let end = start + img.len();
            match_at(rest, w, end, sigma, out);
        }
        return;
    }
    // every later variable needs at least one letter
    let reserve = rest.len();
    let available = w.len().saturating_sub(start + reserve);
    for len in 1..=available {
        sigma.insert(x, w[start..start + len].to_vec());
        match_at(rest, w, start + len, sigma, out);
    }
    sigma.remove(&x);
}

/// Words `sigma'(target)` of length at most `budget`, where `sigma'` extends
/// `sigma` by nonempty words over `alphabet` for the unbound variables. When
/// `want` is given, only images equal to it are produced.
fn images(
    target: &[Letter],
    sigma: &Subst,
    alphabet: &[Letter],
    budget: usize,
    want: Option<&[Letter]>,
    out: &mut Vec<(Vec<Letter>, Subst)>,
) {
    // fresh variables still to be read at or after position i
    let mut later: Vec<BTreeSet<Letter>> = vec![BTreeSet::new(); target.len() + 1];
    for i in (0..target.len()).rev() {
        later[i] = later[i + 1].clone();
        if !sigma.contains_key(&target[i]) {
            later[i].insert(target[i]);
        }
    }
    let min_rest: Vec<usize> = (0..=target.len())
        .map(|i| target[i..].iter().map(|x| sigma.get(x).map_or(1, Vec::len)).sum())
        .collect();
    type Seen = (usize, Vec<Letter>, Vec<(Letter, Vec<Letter>)>);
    let mut seen: HashSet<Seen> = HashSet::new();
    let mut stack: Vec<(usize, Vec<Letter>, Subst)> = vec![(0, Vec::new(), sigma.clone())];
    while let Some((i, word, s)) = stack.pop() {
        if let Some(want) = want {
            if !want.starts_with(&word) {
                continue;
            }
        }
        if i == target.len() {
            if want.is_none_or(|w| w.len() == word.len()) {
                out.push((word, s));
            }
            continue;
        }
        let key_s: Vec<(Letter, Vec<Letter>)> = s
            .iter()
            .filter(|(x, _)| later[i].contains(x))
            .map(|(x, v)| (*x, v.clone()))
            .collect();
        if !seen.insert((i, word.clone(), key_s)) {
            continue;
        }
        let x = target[i];
        if let Some(img) = s.get(&x) {
            let mut next = word.clone();
            next.extend_from_slice(img);
            if next.len() + min_rest[i + 1] <= budget {
                stack.push((i + 1, next, s));
            }
            continue;
        }
        // fresh variable: any nonempty word over the alphabet that fits
        let room = budget.saturating_sub(word.len() + min_rest[i + 1]);
        let mut frontier: Vec<Vec<Letter>> = alphabet.iter().map(|&a| vec![a]).collect();
        for len in 1..=room {
            for img in &frontier {
                let mut next = word.clone();
                next.extend_from_slice(img);
                let mut s2 = s.clone();
                s2.insert(x, img.clone());
                stack.push((i + 1, next, s2));
            }
            if len < room {
                frontier = frontier
                    .iter()
                    .flat_map(|p| alphabet.iter().map(move |&a| [p.as_slice(), &[a]].concat()))
                    .collect();
            }
        }
    }
}

/// One rewrite `w = p sigma(s) q -> p sigma(t) q`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Step {
    pub from: Word,
    /// The rule in the orientation it was applied, `s=t`.
    pub rule: Identity,
    /// 1-based offset of the rewritten factor.
    pub position: usize,
    pub substitution: BTreeMap<Letter, Word>,
    pub to: Word,
}

impl fmt::Display for Step {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sigma: Vec<String> = self.substitution.iter().map(|(x, w)| format!("{x}->{w}")).collect();
        write!(
            f,
            "{}  --[{}, {}, {{{}}}]-->  {}",
            self.from,
            self.rule,
            self.position,
            sigma.join(", "),
            self.to
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DerivationTrace {
    pub steps: Vec<Step>,
}

impl DerivationTrace {
    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// The words visited, start to end.
    pub fn words(&self) -> Vec<Word> {
        let mut out: Vec<Word> = self.steps.first().map(|s| s.from.clone()).into_iter().collect();
        out.extend(self.steps.iter().map(|s| s.to.clone()));
        out
    }

    /// Re-checks every step as a literal rule application.
    pub fn verify(&self) -> bool {
        self.steps.iter().all(|st| {
            let s: Vec<Letter> = st.rule.lhs.letters().iter().flat_map(|x| st.substitution[x].letters().to_vec()).collect();
            let t: Vec<Letter> = st.rule.rhs.letters().iter().flat_map(|x| st.substitution[x].letters().to_vec()).collect();
            let from = st.from.letters();
            let p = st.position - 1;
            from.len() >= p + s.len() && from[p..p + s.len()] == s[..] && {
                let mut to = from[..p].to_vec();
                to.extend_from_slice(&t);
                to.extend_from_slice(&from[p + s.len()..]);
                to == st.to.letters()
            }
        }) && self.steps.windows(2).all(|p| p[0].to == p[1].from)
    }
}

impl fmt::Display for DerivationTrace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.steps {
            writeln!(f, "{s}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Derivation {
    Found(DerivationTrace),
    /// Every word within the length cap reachable from the left side was
    /// explored without meeting the right side.
    Exhausted { states: usize },
    /// The state budget ran out first.
    BudgetExceeded { states: usize },
}

impl Derivation {
    pub fn trace(&self) -> Option<&DerivationTrace> {
        match self {
            Derivation::Found(t) => Some(t),
            _ => None,
        }
    }
}

fn orientations(rule: &Identity) -> [(Vec<Letter>, Vec<Letter>); 2] {
    let (l, r) = (rule.lhs.letters().to_vec(), rule.rhs.letters().to_vec());
    [(l.clone(), r.clone()), (r, l)]
}

/// Calls `emit(result, start, end, s, t, sigma)` for each rewrite of `w`.
fn for_each_rewrite(
    rule: &Identity,
    w: &[Letter],
    max_len: usize,
    alphabet: &[Letter],
    want: Option<&[Letter]>,
    mut emit: impl FnMut(Vec<Letter>, usize, &[Letter], &[Letter], &Subst) -> bool,
) {
    for (s, t) in orientations(rule) {
        for start in 0..w.len() {
            let mut found = Vec::new();
            match_at(&s, w, start, &mut Subst::new(), &mut found);
            for (end, sigma) in found {
                let Some(budget) = max_len.checked_sub(w.len() - (end - start)) else {
                    continue;
                };
                let want_mid = match want {
                    Some(want) => {
                        let tail = w.len() - end;
                        if want.len() < start + tail || want[..start] != w[..start] || want[want.len() - tail..] != w[end..] {
                            continue;
                        }
                        Some(&want[start..want.len() - tail])
                    }
                    None => None,
                };
                let mut imgs = Vec::new();
                images(&t, &sigma, alphabet, budget, want_mid, &mut imgs);
                for (img, full) in imgs {
                    let mut next = w[..start].to_vec();
                    next.extend_from_slice(&img);
                    next.extend_from_slice(&w[end..]);
                    if !emit(next, start, &s, &t, &full) {
                        return;
                    }
                }
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
enum Token {
    Lit(Vec<Letter>),
    Fresh(Letter),
}

fn push_lit(tokens: &mut Vec<Token>, lit: &[Letter]) {
    if lit.is_empty() {
        return;
    }
    match tokens.last_mut() {
        Some(Token::Lit(v)) => v.extend_from_slice(lit),
        _ => tokens.push(Token::Lit(lit.to_vec())),
    }
}

/// Distinct result shapes `p sigma(t) q` of rewriting `w` by each `(s, t)`,
/// literal except for variables occurring only in `t`.
fn templates(oriented: &[(Vec<Letter>, Vec<Letter>)], w: &[Letter], max_len: usize) -> HashSet<Vec<Token>> {
    let mut out = HashSet::new();
    for (s, t) in oriented {
        {
            for start in 0..w.len() {
                let mut found = Vec::new();
                match_at(s, w, start, &mut Subst::new(), &mut found);
                for (end, sigma) in found {
                    let mut tokens = Vec::new();
                    let mut min_len = start + (w.len() - end);
                    push_lit(&mut tokens, &w[..start]);
                    for x in t {
                        match sigma.get(x) {
                            Some(img) => {
                                min_len += img.len();
                                push_lit(&mut tokens, img);
                            }
                            None => {
                                min_len += 1;
                                tokens.push(Token::Fresh(*x));
                            }
                        }
                    }
                    push_lit(&mut tokens, &w[end..]);
                    if min_len <= max_len {
                        out.insert(tokens);
                    }
                }
            }
        }
    }
    out
}

/// Calls `emit` on every word of length at most `max_len` matching the
/// template, fresh variables ranging over nonempty words over `alphabet`.
/// Stops early once `emit` returns false; the return value says whether it did not.
fn expand(tokens: &[Token], alphabet: &[Letter], max_len: usize, emit: &mut impl FnMut(Vec<Letter>) -> bool) -> bool {
    if tokens.iter().all(|t| matches!(t, Token::Lit(_))) {
        let word: Vec<Letter> = tokens
            .iter()
            .flat_map(|t| match t {
                Token::Lit(v) => v.clone(),
                Token::Fresh(_) => unreachable!(),
            })
            .collect();
        return emit(word);
    }
    let fresh: BTreeSet<Letter> = tokens
        .iter()
        .filter_map(|t| match t {
            Token::Fresh(x) => Some(*x),
            Token::Lit(_) => None,
        })
        .collect();
    if fresh.len() == 1 {
        return expand_one(tokens, alphabet, max_len, emit);
    }
    let n = tokens.len();
    let mut min_rest = vec![0usize; n + 1];
    let mut later: Vec<BTreeSet<Letter>> = vec![BTreeSet::new(); n + 1];
    for i in (0..n).rev() {
        later[i] = later[i + 1].clone();
        min_rest[i] = min_rest[i + 1]
            + match &tokens[i] {
                Token::Lit(v) => v.len(),
                Token::Fresh(x) => {
                    later[i].insert(*x);
                    1
                }
            };
    }
    type State = (usize, Vec<Letter>, BTreeMap<Letter, Vec<Letter>>);
    let mut seen: HashSet<State> = HashSet::new();
    let mut stack: Vec<State> = vec![(0, Vec::new(), BTreeMap::new())];
    while let Some((i, word, sigma)) = stack.pop() {
        if i == n {
            if !emit(word) {
                return false;
            }
            continue;
        }
        let key: BTreeMap<Letter, Vec<Letter>> =
            sigma.iter().filter(|(x, _)| later[i].contains(x)).map(|(x, v)| (*x, v.clone())).collect();
        if !seen.insert((i, word.clone(), key)) {
            continue;
        }
        match &tokens[i] {
            Token::Lit(v) => {
                let mut next = word;
                next.extend_from_slice(v);
                stack.push((i + 1, next, sigma));
            }
            Token::Fresh(x) => {
                if let Some(img) = sigma.get(x) {
                    let mut next = word.clone();
                    next.extend_from_slice(img);
                    if next.len() + min_rest[i + 1] <= max_len {
                        stack.push((i + 1, next, sigma));
                    }
                    continue;
                }
                let room = max_len.saturating_sub(word.len() + min_rest[i + 1]);
                let mut layer: Vec<Vec<Letter>> = vec![Vec::new()];
                for _ in 0..room {
                    layer = layer
                        .iter()
                        .flat_map(|p| alphabet.iter().map(move |&a| [p.as_slice(), &[a]].concat()))
                        .collect();
                    for img in &layer {
                        let mut next = word.clone();
                        next.extend_from_slice(img);
                        let mut s2 = sigma.clone();
                        s2.insert(*x, img.clone());
                        stack.push((i + 1, next, s2));
                    }
                }
            }
        }
    }
    true
}

fn expand_one(tokens: &[Token], alphabet: &[Letter], max_len: usize, emit: &mut impl FnMut(Vec<Letter>) -> bool) -> bool {
    let (mut fixed, mut copies) = (0, 0);
    for t in tokens {
        match t {
            Token::Lit(v) => fixed += v.len(),
            Token::Fresh(_) => copies += 1,
        }
    }
    let longest = max_len.saturating_sub(fixed) / copies;
    let mut layer: Vec<Vec<Letter>> = vec![Vec::new()];
    for _ in 0..longest {
        layer = layer
            .iter()
            .flat_map(|p| alphabet.iter().map(move |&a| [p.as_slice(), &[a]].concat()))
            .collect();
        for img in &layer {
            let mut word = Vec::with_capacity(fixed + copies * img.len());
            for t in tokens {
                match t {
                    Token::Lit(v) => word.extend_from_slice(v),
                    Token::Fresh(_) => word.extend_from_slice(img),
                }
            }
            if !emit(word) {
                return false;
            }
        }
    }
    true
}

/// Every word one application of some rule away from `w`.
fn neighbours(rules: &[Identity], w: &[Letter], max_len: usize, alphabet: &[Letter], emit: impl FnMut(Vec<Letter>) -> bool) {
    let oriented: Vec<_> = rules.iter().flat_map(orientations).collect();
    neighbours_oriented(&oriented, w, max_len, alphabet, emit)
}

fn neighbours_oriented(
    oriented: &[(Vec<Letter>, Vec<Letter>)],
    w: &[Letter],
    max_len: usize,
    alphabet: &[Letter],
    mut emit: impl FnMut(Vec<Letter>) -> bool,
) {
    for tokens in templates(oriented, w, max_len) {
        if !expand(&tokens, alphabet, max_len, &mut emit) {
            return;
        }
    }
}

/// All words one rule application away from `w`, in both orientations, of
/// length at most `max_len`. Letters introduced by variables that occur on
/// one side only are drawn from the content of `w`.
pub fn apply_rule(rule: &Identity, w: &Word, max_len: usize) -> BTreeSet<Word> {
    let alphabet: Vec<Letter> = w.content().into_iter().collect();
    apply_rule_over(rule, w, max_len, &alphabet)
}

pub fn apply_rule_over(rule: &Identity, w: &Word, max_len: usize, alphabet: &[Letter]) -> BTreeSet<Word> {
    let mut out = BTreeSet::new();
    neighbours(std::slice::from_ref(rule), w.letters(), max_len, alphabet, |next| {
        out.insert(Word::new(next).expect("rewrites are nonempty"));
        true
    });
    out
}

fn explain(rules: &[Identity], from: &[Letter], to: &[Letter], max_len: usize, alphabet: &[Letter]) -> Step {
    for rule in rules {
        let mut step = None;
        for_each_rewrite(rule, from, max_len, alphabet, Some(to), |next, start, s, t, sigma| {
            if next != to {
                return true;
            }
            let word = |v: &[Letter]| Word::new(v.to_vec()).expect("nonempty");
            step = Some(Step {
                from: word(from),
                rule: Identity::new(word(s), word(t)),
                position: start + 1,
                substitution: sigma.iter().map(|(x, v)| (*x, word(v))).collect(),
                to: word(to),
            });
            false
        });
        if let Some(step) = step {
            return step;
        }
    }
    unreachable!("a recorded edge is explained by some rule")
}

/// Breadth-first search from `id.lhs` for `id.rhs` through words of length at
/// most `max_len`, visiting at most `max_states` words. Fresh letters range
/// over the content of the identity.
pub fn derive_bounded(basis: &Basis, id: &Identity, max_len: usize, max_states: usize) -> Result<Derivation> {
    derive_with_rules(&basis.identities, id, max_len, max_states)
}

pub fn derive_with_rules(rules: &[Identity], id: &Identity, max_len: usize, max_states: usize) -> Result<Derivation> {
    if max_states == 0 {
        return Err(Error::Parameter("max_states must be positive".into()));
    }
    if max_len < id.lhs.len().max(id.rhs.len()) {
        return Err(Error::Parameter(format!("max_len {max_len} is shorter than the identity")));
    }
    if id.is_trivial() {
        return Ok(Derivation::Found(DerivationTrace { steps: Vec::new() }));
    }
    let alphabet: Vec<Letter> = id.variables();
    let start = id.lhs.letters().to_vec();
    let goal = id.rhs.letters().to_vec();
    let mut words: Vec<Vec<Letter>> = vec![start.clone()];
    let mut parent: Vec<usize> = vec![usize::MAX];
    let mut index: HashMap<Vec<Letter>, usize> = HashMap::from([(start, 0)]);
    let mut queue = VecDeque::from([0usize]);
    let mut exceeded = false;
    let mut hit = None;
    'search: while let Some(i) = queue.pop_front() {
        let w = words[i].clone();
        neighbours(rules, &w, max_len, &alphabet, |next| {
            if index.contains_key(&next) {
                return true;
            }
            if words.len() >= max_states {
                exceeded = true;
                return false;
            }
            let found = next == goal;
            index.insert(next.clone(), words.len());
            words.push(next);
            parent.push(i);
            queue.push_back(words.len() - 1);
            if found {
                hit = Some(words.len() - 1);
            }
            !found
        });
        if hit.is_some() || exceeded {
            break 'search;
        }
    }
    let Some(mut at) = hit else {
        return Ok(if exceeded {
            Derivation::BudgetExceeded { states: words.len() }
        } else {
            Derivation::Exhausted { states: words.len() }
        });
    };
    let mut path = vec![at];
    while parent[at] != usize::MAX {
        at = parent[at];
        path.push(at);
    }
    path.reverse();
    let steps = path
        .windows(2)
        .map(|p| explain(rules, &words[p[0]], &words[p[1]], max_len, &alphabet))
        .collect();
    Ok(Derivation::Found(DerivationTrace { steps }))
}

/// The orientation of `rule` introducing the fewest variables absent from
/// the matched side.
fn cheap_orientation(rule: &Identity) -> (Vec<Letter>, Vec<Letter>) {
    let fresh = |s: &[Letter], t: &[Letter]| t.iter().filter(|x| !s.contains(x)).collect::<BTreeSet<_>>().len();
    let [forward, backward] = orientations(rule);
    if fresh(&backward.0, &backward.1) < fresh(&forward.0, &forward.1) {
        backward
    } else {
        forward
    }
}

/// Classes of the bounded derivability relation on every word over the first
/// `letters` letters of length at most `max_len`.
///
/// Two words share a class iff [`derive_bounded`] with the same `max_len`
/// connects them. Each rule is applied in one orientation only.
#[derive(Debug, Clone)]
pub struct BoundedClosure {
    pub letters: usize,
    pub max_len: usize,
    index: HashMap<Vec<Letter>, usize>,
    class: Vec<usize>,
}

impl BoundedClosure {
    pub fn new(rules: &[Identity], letters: usize, max_len: usize) -> BoundedClosure {
        let words: Vec<Vec<Letter>> =
            crate::fuzz::all_words(letters, max_len).into_iter().map(|w| w.letters().to_vec()).collect();
        let index: HashMap<Vec<Letter>, usize> = words.iter().enumerate().map(|(i, w)| (w.clone(), i)).collect();
        let alphabet: Vec<Letter> = (0..letters as u32).map(Letter).collect();
        let oriented: Vec<_> = rules.iter().map(cheap_orientation).collect();
        let mut parent: Vec<usize> = (0..words.len()).collect();
        fn find(parent: &mut [usize], mut i: usize) -> usize {
            while parent[i] != i {
                parent[i] = parent[parent[i]];
                i = parent[i];
            }
            i
        }
        for (i, w) in words.iter().enumerate() {
            neighbours_oriented(&oriented, w, max_len, &alphabet, |next| {
                let j = index[&next];
                let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                if a != b {
                    parent[a.max(b)] = a.min(b);
                }
                true
            });
        }
        let class = (0..words.len()).map(|i| find(&mut parent, i)).collect();
        BoundedClosure { letters, max_len, index, class }
    }

    pub fn for_basis(basis: &Basis, letters: usize, max_len: usize) -> BoundedClosure {
        BoundedClosure::new(&basis.identities, letters, max_len)
    }

    /// `None` when a side is too long or uses a letter outside the closure.
    pub fn derivable(&self, id: &Identity) -> Option<bool> {
        let u = self.index.get(id.lhs.letters())?;
        let v = self.index.get(id.rhs.letters())?;
        Some(self.class[*u] == self.class[*v])
    }

    pub fn class_count(&self) -> usize {
        self.class.iter().enumerate().filter(|(i, c)| *i == **c).count()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semigroups::{catalog, satisfies_bruteforce};

    fn id(s: &str) -> Identity {
        s.parse().unwrap()
    }

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn catalog_entries() {
        let k2 = basis_catalog("K", Some(2)).unwrap();
        assert!(k2.identities.contains(&id("ab^2a=a^3b^2a")));
        assert_eq!(basis_catalog("F_lambda", None).unwrap().identities, vec![id("ab=abc")]);
        assert_eq!(basis_catalog("B", None).unwrap().identities.len(), 3);
        assert_eq!(basis_catalog("F_rho", None).unwrap().identities, vec![id("ba=cba")]);
        assert!(basis_catalog("W_lambda", None).unwrap().note.is_some());
        assert!(matches!(basis_catalog("K", None), Err(Error::MissingParameter(_))));
        assert!(matches!(basis_catalog("Q", None), Err(Error::UnknownName(_))));
    }

    #[test]
    fn k_basis_coprime_exponents_are_skipped() {
        let k3 = basis_catalog("K", Some(3)).unwrap();
        assert!(k3.identities.contains(&id("ab^3a=a^4b^3a")));
        assert!(!k3.identities.iter().any(|i| i.lhs == w("ab^2a")));
        assert_eq!(basis_catalog("K", Some(1)).unwrap().identities.len(), 4);
    }

    #[test]
    fn every_basis_is_sound() {
        for &name in BASIS_NAMES {
            let b = basis_catalog(name, Some(2)).unwrap();
            for (m, n) in &b.models {
                let s = catalog(m, *n).unwrap();
                for rule in &b.identities {
                    assert!(satisfies_bruteforce(&s, rule), "{name}: {rule} fails in {m}");
                }
            }
        }
    }

    #[test]
    fn apply_rule_examples() {
        assert!(apply_rule(&id("a^2=a^3"), &w("x^2y"), 6).contains(&w("x^3y")));
        let out = apply_rule(&id("abc=abc^2"), &w("abcd"), 8);
        assert!(out.contains(&w("abcdcd")));
        assert!(out.contains(&w("abc^2d")));
        assert_eq!(apply_rule(&id("aba=bab"), &w("aba"), 3), [w("bab")].into());
    }

    #[test]
    fn fresh_variables_draw_from_the_content() {
        let out = apply_rule(&id("a^2=bcde"), &w("xxy"), 5);
        assert_eq!(out.len(), 16);
        assert!(out.contains(&w("xyyxy")));
    }

    #[test]
    fn replays() {
        let c = basis_catalog("C_lambda", None).unwrap();
        let d = derive_bounded(&c, &id("abcd=abdc"), 8, 100_000).unwrap();
        let t = d.trace().expect("found");
        assert!(t.verify());
        assert_eq!(t.len(), 3);

        let rules = [id("aba=ababa"), id("a^2b^2=ab^2a")];
        let d = derive_with_rules(&rules, &id("a^2ba=aba^2"), 8, 100_000).unwrap();
        assert!(d.trace().unwrap().verify());
    }

    #[test]
    fn heads_are_invariant_under_ab_abc() {
        let f = basis_catalog("F_lambda", None).unwrap();
        assert!(matches!(derive_bounded(&f, &id("ab=ba"), 8, 1_000_000).unwrap(), Derivation::Exhausted { .. }));
        assert!(matches!(derive_bounded(&f, &id("ab=ba"), 12, 50).unwrap(), Derivation::BudgetExceeded { .. }));
    }

    #[test]
    fn closure_agrees_with_search() {
        let basis = basis_catalog("C_lambda", None).unwrap();
        let closure = BoundedClosure::for_basis(&basis, 2, 7);
        for s in ["a^2b=ab^2", "ab=ba", "a^2=a^3", "a^2ba=abab", "ab^2=ab^3"] {
            let identity = id(s);
            let found = matches!(derive_bounded(&basis, &identity, 7, 1_000_000).unwrap(), Derivation::Found(_));
            assert_eq!(closure.derivable(&identity), Some(found), "{s}");
        }
        assert_eq!(closure.derivable(&id("abc=a")), None);
    }

    #[test]
    fn trace_rendering() {
        let t = derive_with_rules(&[id("a^2=a^3")], &id("x^2y=x^3y"), 4, 100).unwrap();
        let text = t.trace().unwrap().to_string();
        assert_eq!(text, "x^2y  --[a^2=a^3, 1, {a->x}]-->  x^3y\n");
    }
}
