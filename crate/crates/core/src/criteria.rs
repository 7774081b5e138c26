//! Polynomial-time identity checkers, one per indicator or helper semigroup.
//!
//! Every checker reads only word statistics (content, occurrence counts,
//! heads and tails, cores, occurrence-graph components), so it runs in time
//! near-linear in the length of the identity. Each one is validated against
//! exhaustive evaluation in the corresponding catalog table.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::occgraph::{build_graph, Vertex};
use crate::parser::Identity;
use crate::semigroups::{catalog, catalog_with, CatalogParams, FiniteSemigroup};
use crate::words::{analyze, is_pq_trivial, Letter, Word, WordProfile};

/// `xi(u)` for `u = aWb`: `0` when `l(u) = 2` or when `a` or `b` occurs in
/// `W`, otherwise the gcd of the occurrence counts of the letters of `W`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct XiValue {
    pub defined: bool,
    pub value: u64,
}

pub fn xi(u: &Word) -> XiValue {
    let n = u.len();
    if n < 2 {
        return XiValue { defined: false, value: 0 };
    }
    let interior = &u.letters()[1..n - 1];
    let (a, b) = (u.head(), u.tail());
    if interior.is_empty() || interior.iter().any(|&x| x == a || x == b) {
        return XiValue { defined: true, value: 0 };
    }
    let mut counts: BTreeMap<Letter, u64> = BTreeMap::new();
    for &x in interior {
        *counts.entry(x).or_default() += 1;
    }
    let value = counts.values().fold(0, |g, &c| gcd(g, c));
    XiValue { defined: true, value }
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Semigroups of the small varieties the indicator criteria are assembled from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Helper {
    L2,
    R2,
    L21,
    R21,
    Y2,
    /// The cyclic group of order `n`.
    Cyclic(u32),
    N2,
    N21,
    N3,
    /// The monogenic semigroup of index 2 and period `n`.
    C2n(u32),
    /// The monogenic semigroup of index `r` and period `d`.
    Crd { r: u32, d: u32 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Indicator {
    A,
    B,
    CLambda,
    CRho,
    D,
    K(u32),
    FLambda,
    FRho,
    WLambda,
    WRho,
    L21,
    R21,
    N3,
}

/// Both sides of an identity with their profiles.
struct Sides {
    u: WordProfile,
    v: WordProfile,
}

impl Sides {
    fn new(id: &Identity) -> Sides {
        Sides { u: analyze(&id.lhs), v: analyze(&id.rhs) }
    }

    fn same_content(&self) -> bool {
        self.u.content == self.v.content
    }

    fn congruent_mod(&self, n: u32) -> bool {
        let n = n as usize;
        let diff = |x: &Letter| self.u.occ(*x).abs_diff(self.v.occ(*x)).is_multiple_of(n);
        self.u.occurrences.keys().all(diff) && self.v.occurrences.keys().all(diff)
    }

    fn same_heads(&self, s: usize) -> bool {
        (1..=s).all(|i| self.u.head_at(i).is_some() && self.u.head_at(i) == self.v.head_at(i))
    }
}

/// The smallest value `min(L, R)` over evaluation points `e >= 1` at which the
/// two sides of `x -> x^{e(x)}` reach different lengths `L != R`; `None` when
/// the sides have the same occurrence vector. Probes the all-ones point and its
/// unit perturbations.
pub fn unequal_length_floor(id: &Identity) -> Option<usize> {
    let (u, v) = (analyze(&id.lhs), analyze(&id.rhs));
    if u.occurrences == v.occurrences {
        return None;
    }
    let mut best: Option<usize> = None;
    let mut probe = |l: usize, r: usize| {
        if l != r {
            let m = l.min(r);
            best = Some(best.map_or(m, |b| b.min(m)));
        }
    };
    probe(u.length, v.length);
    for x in u.content.union(&v.content) {
        if u.occ(*x) != v.occ(*x) {
            probe(u.length + u.occ(*x), v.length + v.occ(*x));
        }
    }
    best
}

impl Helper {
    pub fn holds(&self, id: &Identity) -> bool {
        if id.is_trivial() {
            return true;
        }
        let (u, v) = (&id.lhs, &id.rhs);
        match *self {
            Helper::L2 => u.head() == v.head(),
            Helper::R2 => u.tail() == v.tail(),
            Helper::L21 => analyze(u).left_core == analyze(v).left_core,
            Helper::R21 => analyze(u).right_core == analyze(v).right_core,
            Helper::Y2 => u.content() == v.content(),
            Helper::Cyclic(n) => Sides::new(id).congruent_mod(n),
            Helper::N2 => u.len() > 1 && v.len() > 1,
            Helper::N21 => {
                let s = Sides::new(id);
                s.same_content() && s.u.simple_letters == s.v.simple_letters
            }
            Helper::N3 => {
                (u.len() >= 3 && v.len() >= 3) || (u.len() == 2 && u.head() != u.tail() && *v == u.reverse())
            }
            Helper::C2n(n) => u.len() >= 2 && v.len() >= 2 && Sides::new(id).congruent_mod(n),
            Helper::Crd { r, d } => match unequal_length_floor(id) {
                None => true,
                Some(floor) => floor >= r as usize && Sides::new(id).congruent_mod(d),
            },
        }
    }

    pub fn from_name(name: &str, n: Option<u32>) -> Result<Helper> {
        let need_n = || match n {
            Some(n) if n >= 1 => Ok(n),
            Some(_) => Err(Error::Parameter(format!("{name} needs n >= 1"))),
            None => Err(Error::MissingParameter(name.to_string())),
        };
        Ok(match name {
            "L2" => Helper::L2,
            "R2" => Helper::R2,
            "L2_1" => Helper::L21,
            "R2_1" => Helper::R21,
            "Y2" => Helper::Y2,
            "C" | "Cn" => Helper::Cyclic(need_n()?),
            "N2" => Helper::N2,
            "N2_1" => Helper::N21,
            "N3" => Helper::N3,
            "C2n" => Helper::C2n(need_n()?),
            _ => return Err(Error::UnknownName(name.to_string())),
        })
    }
}

impl Indicator {
    pub const FIXED: [Indicator; 12] = [
        Indicator::A,
        Indicator::B,
        Indicator::CLambda,
        Indicator::CRho,
        Indicator::N3,
        Indicator::D,
        Indicator::FLambda,
        Indicator::FRho,
        Indicator::WLambda,
        Indicator::WRho,
        Indicator::L21,
        Indicator::R21,
    ];

    pub fn holds(&self, id: &Identity) -> bool {
        if id.is_trivial() {
            return true;
        }
        match *self {
            Indicator::A => Helper::N21.holds(id),
            Indicator::B => b_criterion(id),
            Indicator::CLambda => c_lambda(&Sides::new(id)),
            Indicator::CRho => c_lambda(&Sides::new(&id.reverse())),
            Indicator::D => k_criterion(&Sides::new(id), id, 1),
            Indicator::K(n) => k_criterion(&Sides::new(id), id, n),
            Indicator::FLambda => Sides::new(id).same_heads(2),
            Indicator::FRho => Sides::new(&id.reverse()).same_heads(2),
            Indicator::WLambda => w_lambda(id),
            Indicator::WRho => w_lambda(&id.reverse()),
            Indicator::L21 => Helper::L21.holds(id),
            Indicator::R21 => Helper::R21.holds(id),
            Indicator::N3 => Helper::N3.holds(id),
        }
    }

    pub fn from_name(name: &str, n: Option<u32>) -> Result<Indicator> {
        Ok(match name {
            "A" => Indicator::A,
            "B" => Indicator::B,
            "C_lambda" => Indicator::CLambda,
            "C_rho" => Indicator::CRho,
            "D" => Indicator::D,
            "K" => match n {
                Some(n) if n >= 1 => Indicator::K(n),
                Some(_) => return Err(Error::Parameter("K needs n >= 1".into())),
                None => return Err(Error::MissingParameter("K".into())),
            },
            "F_lambda" => Indicator::FLambda,
            "F_rho" => Indicator::FRho,
            "W_lambda" => Indicator::WLambda,
            "W_rho" => Indicator::WRho,
            "L2_1" => Indicator::L21,
            "R2_1" => Indicator::R21,
            "N3" => Indicator::N3,
            _ => return Err(Error::UnknownName(name.to_string())),
        })
    }

    pub fn name(&self) -> &'static str {
        match self {
            Indicator::A => "A",
            Indicator::B => "B",
            Indicator::CLambda => "C_lambda",
            Indicator::CRho => "C_rho",
            Indicator::D => "D",
            Indicator::K(_) => "K",
            Indicator::FLambda => "F_lambda",
            Indicator::FRho => "F_rho",
            Indicator::WLambda => "W_lambda",
            Indicator::WRho => "W_rho",
            Indicator::L21 => "L2_1",
            Indicator::R21 => "R2_1",
            Indicator::N3 => "N3",
        }
    }

    pub fn param(&self) -> Option<u32> {
        match self {
            Indicator::K(n) => Some(*n),
            _ => None,
        }
    }

    pub fn semigroup(&self) -> FiniteSemigroup {
        catalog(self.name(), self.param()).expect("indicator names are in the catalog")
    }
}

impl fmt::Display for Indicator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Indicator::K(n) => write!(f, "K_{n}"),
            other => f.write_str(other.name()),
        }
    }
}

fn b_criterion(id: &Identity) -> bool {
    let (u, v) = (&id.lhs, &id.rhs);
    let trivial = |w: &Word| is_pq_trivial(w, 4, 2).expect("p and q are fixed");
    if !trivial(u) && !trivial(v) {
        return true;
    }
    let l = u.letters();
    if u.len() == 3 && u.content().len() == 3 && *v == u.reverse() {
        return true;
    }
    u.len() == 3 && l[0] == l[2] && l[0] != l[1] && v.letters() == [l[1], l[0], l[1]]
}

fn c_lambda(s: &Sides) -> bool {
    let (u, v) = (&s.u, &s.v);
    if u.length == 1 || v.length == 1 || !s.same_content() {
        return false;
    }
    let (hu, hv) = (u.head_occ(1) == Some(1), v.head_occ(1) == Some(1));
    if hu != hv || (hu && u.head != v.head) {
        return false;
    }
    let (h2u, h2v) = (u.head_occ(2) == Some(1), v.head_occ(2) == Some(1));
    h2u == h2v && (!h2u || s.same_heads(2))
}

/// Whether some assignment into `K_n` sends `w` to `xyx`.
fn reaches_xyx(w: &WordProfile, n: u32) -> bool {
    if w.length < 3 || w.head != w.tail || w.occ(w.head) != 2 {
        return false;
    }
    let x = xi(&w.word).value;
    x >= 1 && gcd(n as u64, x) == 1
}

fn k_criterion(s: &Sides, id: &Identity, n: u32) -> bool {
    let (u, v) = (&s.u, &s.v);
    if !s.same_content() || !Helper::C2n(n).holds(id) {
        return false;
    }
    let (ohu, ohv) = (u.occ(u.head), v.occ(v.head));
    let (otu, otv) = (u.occ(u.tail), v.occ(v.tail));
    let same_h = u.head == v.head;
    let same_t = u.tail == v.tail;
    let (ru, rv) = (reaches_xyx(u, n), reaches_xyx(v, n));
    let a = same_h && ohu == 1 && ohv == 1 && otu > 1 && otv > 1;
    let b = same_t && otu == 1 && otv == 1 && ohu > 1 && ohv > 1;
    let c = same_h && same_t && ohu == 1 && ohv == 1 && otu == 1 && otv == 1;
    let d = ru && rv && same_h;
    let e = ohu > 1 && ohv > 1 && otu > 1 && otv > 1 && !ru && !rv;
    a || b || c || d || e
}

pub fn sat_b2(id: &Identity) -> bool {
    if id.is_trivial() {
        return true;
    }
    b2_with_graph(id).is_some()
}

/// The B2 conditions; on success returns `Gr(lhs)` for further queries.
fn b2_with_graph(id: &Identity) -> Option<crate::occgraph::OccurrenceGraph> {
    let (u, v) = (&id.lhs, &id.rhs);
    if u.content() != v.content() {
        return None;
    }
    let gu = build_graph(u);
    if !gu.same_partition(&build_graph(v)) {
        return None;
    }
    let linked = |p, q| gu.same_component(p, q).expect("vertices of a common content");
    (linked(Vertex::new(u.head(), 1), Vertex::new(v.head(), 1))
        && linked(Vertex::new(u.tail(), 0), Vertex::new(v.tail(), 0)))
    .then_some(gu)
}

fn w_lambda(id: &Identity) -> bool {
    let (u, v) = (&id.lhs, &id.rhs);
    if u.head() != v.head() {
        return false;
    }
    let Some(gu) = b2_with_graph(id) else {
        return false;
    };
    let h = u.head();
    let split = !gu.same_component(Vertex::new(h, 0), Vertex::new(h, 1)).expect("head is in the content");
    !split || (u.len() >= 2 && v.len() >= 2 && u.head_at(2) == v.head_at(2))
}

pub fn sat_helper(name: &str, id: &Identity, n: Option<u32>) -> Result<bool> {
    Ok(Helper::from_name(name, n)?.holds(id))
}

pub fn sat_indicator(name: &str, id: &Identity, n: Option<u32>) -> Result<bool> {
    Ok(Indicator::from_name(name, n)?.holds(id))
}

/// Any semigroup of the catalog that has a polynomial criterion.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Criterion {
    Helper(Helper),
    Indicator(Indicator),
    B2,
}

impl Criterion {
    pub fn from_name(name: &str, n: Option<u32>) -> Result<Criterion> {
        Criterion::with_params(name, CatalogParams { n, ..Default::default() })
    }

    pub fn with_params(name: &str, params: CatalogParams) -> Result<Criterion> {
        if name == "B2" {
            return Ok(Criterion::B2);
        }
        if name == "Crd" {
            return match (params.r, params.d) {
                (Some(r), Some(d)) if r >= 1 && d >= 1 => Ok(Criterion::Helper(Helper::Crd { r, d })),
                (Some(_), Some(_)) => Err(Error::Parameter("Crd needs r, d >= 1".into())),
                _ => Err(Error::MissingParameter("Crd (r and d)".into())),
            };
        }
        match Indicator::from_name(name, params.n) {
            Err(Error::UnknownName(_)) => Helper::from_name(name, params.n).map(Criterion::Helper),
            other => other.map(Criterion::Indicator),
        }
    }

    pub fn holds(&self, id: &Identity) -> bool {
        match self {
            Criterion::Helper(h) => h.holds(id),
            Criterion::Indicator(i) => i.holds(id),
            Criterion::B2 => sat_b2(id),
        }
    }

    /// The catalog table the criterion describes.
    pub fn semigroup(&self) -> FiniteSemigroup {
        let built = match *self {
            Criterion::Indicator(i) => return i.semigroup(),
            Criterion::B2 => catalog("B2", None),
            Criterion::Helper(h) => match h {
                Helper::L2 => catalog("L2", None),
                Helper::R2 => catalog("R2", None),
                Helper::L21 => catalog("L2_1", None),
                Helper::R21 => catalog("R2_1", None),
                Helper::Y2 => catalog("Y2", None),
                Helper::Cyclic(n) => catalog("C", Some(n)),
                Helper::N2 => catalog("N2", None),
                Helper::N21 => catalog("N2_1", None),
                Helper::N3 => catalog("N3", None),
                Helper::C2n(n) => catalog("C2n", Some(n)),
                Helper::Crd { r, d } => catalog_with("Crd", CatalogParams { n: None, r: Some(r), d: Some(d) }),
            },
        };
        built.expect("criterion names are in the catalog")
    }

    /// The criteria covered by the exhaustive oracle comparison, with `K_n`
    /// for `n` in `1..=max_k`.
    pub fn oracle_suite(max_k: u32) -> Vec<Criterion> {
        let mut out: Vec<Criterion> = Indicator::FIXED.iter().map(|&i| Criterion::Indicator(i)).collect();
        out.push(Criterion::B2);
        for h in [Helper::L2, Helper::R2, Helper::Y2, Helper::N2, Helper::N21] {
            out.push(Criterion::Helper(h));
        }
        out.extend((1..=max_k).map(|n| Criterion::Indicator(Indicator::K(n))));
        out
    }
}

impl fmt::Display for Criterion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Criterion::Indicator(i) => write!(f, "{i}"),
            Criterion::B2 => f.write_str("B2"),
            Criterion::Helper(h) => match h {
                Helper::L2 => f.write_str("L2"),
                Helper::R2 => f.write_str("R2"),
                Helper::L21 => f.write_str("L2_1"),
                Helper::R21 => f.write_str("R2_1"),
                Helper::Y2 => f.write_str("Y2"),
                Helper::Cyclic(n) => write!(f, "C_{n}"),
                Helper::N2 => f.write_str("N2"),
                Helper::N21 => f.write_str("N2_1"),
                Helper::N3 => f.write_str("N3"),
                Helper::C2n(n) => write!(f, "C_{{2,{n}}}"),
                Helper::Crd { r, d } => write!(f, "C_{{{r},{d}}}"),
            },
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semigroups::satisfies_bruteforce;

    fn id(s: &str) -> Identity {
        s.parse().unwrap()
    }

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn xi_examples() {
        assert_eq!(xi(&w("ab")), XiValue { defined: true, value: 0 });
        assert_eq!(xi(&w("ab^3a")).value, 3);
        assert_eq!(xi(&w("ababa")).value, 0);
        assert_eq!(xi(&w("ab^2c^4a")).value, 2);
        assert!(!xi(&w("a")).defined);
    }

    #[test]
    fn helper_examples() {
        assert!(sat_helper("Y2", &id("xyx=yx^2"), None).unwrap());
        assert!(sat_helper("N2_1", &id("x^2=x^3"), None).unwrap());
        assert!(sat_helper("C2n", &id("xy^2x=x^2y^2"), Some(2)).unwrap());
        assert!(!sat_helper("C2n", &id("x=x^3"), Some(2)).unwrap());
        assert!(sat_helper("Cn", &id("x=x^3"), Some(2)).unwrap());
        assert!(sat_helper("L2", &id("x=xy"), None).unwrap());
        assert!(sat_helper("N3", &id("xy=yx"), None).unwrap());
        assert!(!sat_helper("N3", &id("xy=xyx"), None).unwrap());
        assert_eq!(sat_helper("C2n", &id("x=x"), None), Err(Error::MissingParameter("C2n".into())));
        assert!(matches!(sat_helper("Z", &id("x=x"), None), Err(Error::UnknownName(_))));
    }

    #[test]
    fn b2_examples() {
        assert!(sat_b2(&id("aba=ababa")));
        assert!(sat_b2(&id("ab^2c^2=ac^2b^2")));
        assert!(!sat_b2(&id("ab=ba")));
    }

    #[test]
    fn indicator_examples() {
        assert!(sat_indicator("B", &id("abc=cba"), None).unwrap());
        assert!(sat_indicator("B", &id("aba=bab"), None).unwrap());
        assert!(sat_indicator("C_lambda", &id("a^2b=b^2a"), None).unwrap());
        assert!(sat_indicator("K", &id("abcd=acbd"), Some(2)).unwrap());
        assert!(sat_indicator("F_lambda", &id("ab=abc"), None).unwrap());
        assert!(sat_indicator("W_lambda", &id("a^2b^2=ab^2a"), None).unwrap());
        assert!(sat_indicator("K", &id("aba=ab^2a"), Some(1)).unwrap());
        assert!(!sat_indicator("W_lambda", &id("ab=ba"), None).unwrap());
        assert!(matches!(sat_indicator("K", &id("x=y"), None), Err(Error::MissingParameter(_))));
    }

    #[test]
    fn unequal_length_floor_examples() {
        assert_eq!(unequal_length_floor(&id("x=x^3")), Some(1));
        assert_eq!(unequal_length_floor(&id("xy=yx")), None);
        assert_eq!(unequal_length_floor(&id("xyx=xyxyx")), Some(3));
        assert_eq!(unequal_length_floor(&id("xy=yy")), Some(2));
    }

    /// Small exhaustive comparison; the full suite lives in the integration tests.
    #[test]
    fn agrees_with_oracle_on_short_words() {
        let mut words = Vec::new();
        for len in 1..=4usize {
            for code in 0..(1usize << len) {
                let s: String = (0..len).map(|i| if code >> i & 1 == 0 { 'a' } else { 'b' }).collect();
                words.push(w(&s));
            }
        }
        let mut suite = Criterion::oracle_suite(3);
        suite.push(Criterion::Helper(Helper::Cyclic(2)));
        suite.push(Criterion::Helper(Helper::C2n(3)));
        suite.push(Criterion::Helper(Helper::Crd { r: 3, d: 2 }));
        for c in suite {
            let s = c.semigroup();
            for u in &words {
                for v in &words {
                    let e = Identity::new(u.clone(), v.clone());
                    assert_eq!(c.holds(&e), satisfies_bruteforce(&s, &e), "{c}: {e}");
                }
            }
        }
    }
}
