//! Pinned tables for the indicator Burnside semigroups and the small helper
//! semigroups whose varieties the criteria are built from.
//!
//! Each table comes from a concrete normal-form model rather than from the
//! presentation closure, so `from_presentation` can serve as an independent
//! cross-check.

use std::collections::BTreeMap;

use super::{dual, FiniteSemigroup};
use crate::error::{Error, Result};
use crate::words::Letter;

pub const CATALOG_NAMES: &[&str] = &[
    "A", "B", "C_lambda", "C_rho", "N3", "D", "K", "F_lambda", "F_rho", "W_lambda", "W_rho", "L2_1",
    "R2_1", "B2", "L2", "R2", "Y2", "N2", "N2_1", "C", "Crd", "C2n", "Gamma",
];

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct CatalogParams {
    pub n: Option<u32>,
    pub r: Option<u32>,
    pub d: Option<u32>,
}

pub fn catalog(name: &str, n: Option<u32>) -> Result<FiniteSemigroup> {
    catalog_with(name, CatalogParams { n, ..Default::default() })
}

pub fn catalog_with(name: &str, params: CatalogParams) -> Result<FiniteSemigroup> {
    let need_n = || match params.n {
        Some(n) if n >= 1 => Ok(n),
        Some(_) => Err(Error::Parameter(format!("{name} needs n >= 1"))),
        None => Err(Error::MissingParameter(name.to_string())),
    };
    let s = match name {
        "A" => rewriting("A", "xy", norm_a)?,
        "B" => rewriting("B", "xy", norm_b)?,
        "C_lambda" => rewriting("C_lambda", "xy", norm_c_lambda)?,
        "C_rho" => dual(&catalog("C_lambda", None)?),
        "N3" => rewriting("N3", "x", |s| (s.len() < 3).then_some(s))?,
        "D" => rewriting("D", "xy", norm_d)?,
        "K" => {
            let n = need_n()?;
            return Ok(k_n(n)?.renamed("K").with_param(Some(n)));
        }
        "F_lambda" => rewriting("F_lambda", "xy", |mut s| {
            s.truncate(2);
            Some(s)
        })?,
        "F_rho" => dual(&catalog("F_lambda", None)?),
        "W_lambda" => w_lambda()?,
        "W_rho" => dual(&catalog("W_lambda", None)?),
        "L2_1" => FiniteSemigroup::generated(
            "L2_1",
            &[(letter('a'), 'a'), (letter('x'), 'x'), (letter('y'), 'y')],
            |&p, &q| if p == 'a' { q } else { p },
            None,
        )?,
        "R2_1" => dual(&catalog("L2_1", None)?),
        "B2" => b2()?,
        "L2" => FiniteSemigroup::generated("L2", &[(letter('x'), 'x'), (letter('y'), 'y')], |&p, _| p, None)?,
        "R2" => dual(&catalog("L2", None)?),
        "Y2" => FiniteSemigroup::from_elements("Y2", &[("1".into(), 1u8), ("0".into(), 0)], |a, b| *a.min(b), Some(1))?,
        "N2" => FiniteSemigroup::generated("N2", &[(letter('a'), 1u8)], |_, _| 2u8, Some(2))?,
        "N2_1" => FiniteSemigroup::from_elements(
            "N2_1",
            &[("1".into(), 0u8), ("a".into(), 1), ("0".into(), 2)],
            |a, b| (a + b).min(2),
            Some(2),
        )?,
        "C" => {
            let n = need_n()?;
            return Ok(FiniteSemigroup::generated("C", &[(letter('c'), 1 % n)], move |a, b| (a + b) % n, None)?
                .with_param(Some(n)));
        }
        "C2n" => {
            let n = need_n()?;
            return Ok(cyclic(2, n)?.renamed("C2n").with_param(Some(n)));
        }
        "Crd" => {
            let (r, d) = match (params.r, params.d) {
                (Some(r), Some(d)) if r >= 1 && d >= 1 => (r, d),
                (Some(_), Some(_)) => return Err(Error::Parameter("Crd needs r, d >= 1".into())),
                _ => return Err(Error::MissingParameter("Crd (r and d)".into())),
            };
            cyclic(r, d)?
        }
        "Gamma" => gamma()?,
        _ => return Err(Error::UnknownName(name.to_string())),
    };
    Ok(s.renamed(name))
}

fn letter(c: char) -> Letter {
    Letter::from_char(c).expect("catalog letters are lowercase")
}

/// Elements are normal-form strings; `None` is the zero.
fn rewriting(name: &str, gens: &str, norm: fn(String) -> Option<String>) -> Result<FiniteSemigroup> {
    let gens: Vec<(Letter, Option<String>)> = gens
        .chars()
        .map(|c| (letter(c), norm(c.to_string())))
        .collect();
    FiniteSemigroup::generated(
        name,
        &gens,
        |a, b| match (a, b) {
            (Some(a), Some(b)) => norm(format!("{a}{b}")),
            _ => None,
        },
        Some(None),
    )
}

fn rewrite_to_fixpoint(mut s: String, rules: &[(&str, &str)], zeros: &[&str]) -> Option<String> {
    loop {
        if zeros.iter().any(|z| s.contains(z)) {
            return None;
        }
        match rules.iter().find(|(l, _)| s.contains(l)) {
            Some((l, r)) => s = s.replacen(l, r, 1),
            None => return Some(s),
        }
    }
}

// x = x^2, y^2 = 0, xy = yx
fn norm_a(s: String) -> Option<String> {
    let ys = s.chars().filter(|&c| c == 'y').count();
    let has_x = s.contains('x');
    match (has_x, ys) {
        (_, 2..) => None,
        (true, 1) => Some("xy".into()),
        (true, 0) => Some("x".into()),
        (false, _) => Some("y".into()),
    }
}

// x^2 = y^2 = 0, xyx = yxy; nilpotent of class 4
fn norm_b(s: String) -> Option<String> {
    if s.len() >= 4 || s.contains("xx") || s.contains("yy") {
        return None;
    }
    Some(if s == "yxy" { "xyx".into() } else { s })
}

// x^3 = x^2, yx = y, x^2y = 0, y^2 = 0
fn norm_c_lambda(s: String) -> Option<String> {
    rewrite_to_fixpoint(s, &[("yx", "y"), ("xxx", "xx")], &["xxy", "yy"])
}

// x^2 = 0, y^2 = y, yxy = 0
fn norm_d(s: String) -> Option<String> {
    rewrite_to_fixpoint(s, &[("yy", "y")], &["xx", "yxy"])
}

/// Normal forms of `K_n`: `x`, `y^k`, `xy^k`, `y^k x` for `1 <= k <= n+1`,
/// `xyx` and `0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[allow(clippy::upper_case_acronyms)]
enum KForm {
    X,
    Y(u32),
    XY(u32),
    YX(u32),
    XYX,
    Zero,
}

fn k_n(n: u32) -> Result<FiniteSemigroup> {
    use KForm::*;
    // y^{n+2} = y^2: exponents >= 2 live in [2, n+1]
    let norm = move |k: u32| if k <= n + 1 { k } else { 2 + (k - 2) % n };
    // x y^k x is xyx when k = 1 or k = n+1, and 0 for 2 <= k <= n
    let sandwich = move |k: u32| if k == 1 || k == n + 1 { XYX } else { Zero };
    let mul = move |a: &KForm, b: &KForm| match (*a, *b) {
        (X, Y(l)) => XY(l),
        (X, YX(l)) => sandwich(l),
        (Y(k), X) => YX(k),
        (Y(k), Y(l)) => Y(norm(k + l)),
        (Y(k), YX(l)) => YX(norm(k + l)),
        (XY(k), X) => sandwich(k),
        (XY(k), Y(l)) => XY(norm(k + l)),
        (XY(k), YX(l)) => sandwich(norm(k + l)),
        _ => Zero,
    };
    FiniteSemigroup::generated(format!("K_{n}"), &[(letter('x'), X), (letter('y'), Y(1))], mul, Some(Zero))
}

fn cyclic(r: u32, d: u32) -> Result<FiniteSemigroup> {
    let norm = move |e: u32| if e < r + d { e } else { r + (e - r) % d };
    FiniteSemigroup::generated(format!("C_{{{r},{d}}}"), &[(letter('c'), norm(1))], move |a, b| norm(a + b), None)
        .map(|s| s.with_param(Some(d)))
}

fn b2() -> Result<FiniteSemigroup> {
    let mut elems: Vec<(String, Option<(u8, u8)>)> = Vec::new();
    for i in 0..2u8 {
        for j in 0..2u8 {
            elems.push((format!("({i},{j})"), Some((i, j))));
        }
    }
    elems.push(("0".into(), None));
    FiniteSemigroup::from_elements(
        "B2",
        &elems,
        |a, b| match (a, b) {
            (Some((i, j)), Some((k, l))) if j == k => Some((*i, *l)),
            _ => None,
        },
        Some(4),
    )
}

type Quad = Option<(u8, u8, u8, u8)>;

fn gamma_mul(a: &Quad, b: &Quad) -> Quad {
    match (a, b) {
        (Some((i1, j1, k1, _)), Some((i2, j2, k2, _))) if j1 == i2 => {
            Some((*i1, *j2, if *k1 != 2 { *k1 } else { *k2 }, 1))
        }
        _ => None,
    }
}

const GAMMA_A: Quad = Some((0, 1, 2, 0));
const GAMMA_X: Quad = Some((1, 0, 0, 0));
const GAMMA_Y: Quad = Some((1, 0, 1, 0));

fn gamma() -> Result<FiniteSemigroup> {
    let mut elems: Vec<(String, Quad)> = Vec::new();
    for i in 0..2u8 {
        for j in 0..2u8 {
            for k in 0..2u8 {
                elems.push((format!("({i},{j},{k},1)"), Some((i, j, k, 1))));
            }
        }
    }
    for q in [GAMMA_A, GAMMA_X, GAMMA_Y] {
        let (i, j, k, l) = q.expect("nonzero");
        elems.push((format!("({i},{j},{k},{l})"), q));
    }
    elems.push(("0".into(), None));
    let s = FiniteSemigroup::from_elements("Gamma", &elems, gamma_mul, Some(11))?;
    let gens: BTreeMap<Letter, usize> = [(letter('a'), 8), (letter('x'), 9), (letter('y'), 10)].into();
    s.with_generators(gens)
}

/// `W_lambda` realised inside the four-tuple model, named by words in `a, x, y`.
fn w_lambda() -> Result<FiniteSemigroup> {
    FiniteSemigroup::generated(
        "W_lambda",
        &[(letter('a'), GAMMA_A), (letter('x'), GAMMA_X), (letter('y'), GAMMA_Y)],
        gamma_mul,
        Some(None),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sizes() {
        let cases = [
            ("A", 4),
            ("B", 6),
            ("C_lambda", 5),
            ("C_rho", 5),
            ("N3", 3),
            ("D", 6),
            ("F_lambda", 6),
            ("F_rho", 6),
            ("W_lambda", 12),
            ("W_rho", 12),
            ("L2_1", 3),
            ("R2_1", 3),
            ("B2", 5),
            ("Gamma", 12),
            ("L2", 2),
            ("Y2", 2),
            ("N2", 2),
            ("N2_1", 3),
        ];
        for (name, size) in cases {
            assert_eq!(catalog(name, None).unwrap().size(), size, "{name}");
        }
    }

    #[test]
    fn k_n_has_three_n_plus_six_elements() {
        for n in 1..=6 {
            assert_eq!(catalog("K", Some(n)).unwrap().size(), 3 * n as usize + 6);
        }
        assert_eq!(
            catalog("K", Some(1)).unwrap().elements(),
            ["x", "y", "xy", "yx", "y^2", "xyx", "xy^2", "y^2x", "0"]
        );
    }

    #[test]
    fn named_elements() {
        assert_eq!(catalog("B2", None).unwrap().elements(), ["(0,0)", "(0,1)", "(1,0)", "(1,1)", "0"]);
        assert_eq!(catalog("C_lambda", None).unwrap().elements(), ["x", "y", "x^2", "xy", "0"]);
        assert_eq!(catalog("C", Some(3)).unwrap().elements(), ["c", "c^2", "c^3"]);
        assert_eq!(
            catalog_with("Crd", CatalogParams { r: Some(2), d: Some(3), n: None }).unwrap().elements(),
            ["c", "c^2", "c^3", "c^4"]
        );
    }

    #[test]
    fn parameter_errors() {
        assert_eq!(catalog("K", None), Err(Error::MissingParameter("K".into())));
        assert!(matches!(catalog("K", Some(0)), Err(Error::Parameter(_))));
        assert!(matches!(catalog("Crd", None), Err(Error::MissingParameter(_))));
        assert_eq!(catalog("Q", None), Err(Error::UnknownName("Q".into())));
    }
    fn presented(gens: &str, rels: &str, cap: usize) -> FiniteSemigroup {
        let p = crate::semigroups::Presentation::parse(gens, rels, cap).unwrap();
        crate::semigroups::from_presentation(&p).unwrap()
    }

    fn assert_iso(name: &str, n: Option<u32>, gens: &str, rels: &str, cap: usize) {
        let s = catalog(name, n).unwrap();
        let t = presented(gens, rels, cap);
        assert!(
            crate::semigroups::generator_isomorphism(&s, &t).is_some(),
            "{name} {n:?}: {:?} vs {:?}",
            s.elements(),
            t.elements()
        );
    }

    #[test]
    fn agrees_with_presentations() {
        assert_iso("A", None, "xy", "x=x^2; y^2=0; xy=yx", 6);
        assert_iso("B", None, "xy", "x^2=0; y^2=0; xyx=yxy", 6);
        assert_iso("C_lambda", None, "xy", "x^3=x^2; yx=y; x^2y=0; y^2=0", 6);
        assert_iso("C_rho", None, "xy", "x^3=x^2; xy=y; yx^2=0; y^2=0", 6);
        assert_iso("N3", None, "x", "x^3=0", 4);
        assert_iso("D", None, "xy", "x^2=0; y=y^2; yxy=0", 6);
        assert_iso(
            "F_lambda",
            None,
            "xy",
            "xy=xyx; xy=xy^2; yx=yxy; yx=yx^2; x^2=x^2y; x^2=x^3; y^2=y^2x; y^2=y^3",
            5,
        );
        assert_iso(
            "F_rho",
            None,
            "xy",
            "xy=yxy; xy=x^2y; yx=xyx; yx=y^2x; x^2=yx^2; x^2=x^3; y^2=xy^2; y^2=y^3",
            5,
        );
        let w = "a^2=0; x^2=0; y^2=0; xy=0; yx=0; ax=axax; ay=ayay; xa=xaxa; ya=yaya";
        assert_iso("W_lambda", None, "axy", &format!("{w}; xay=xax; yax=yay"), 6);
        assert_iso("W_rho", None, "axy", &format!("{w}; xay=yay; yax=xax"), 6);
        let l = "x=x^2; y=y^2; a=a^2; ax=x; xa=x; ay=y; ya=y";
        assert_iso("L2_1", None, "axy", &format!("{l}; xy=x; yx=y"), 4);
        assert_iso("R2_1", None, "axy", &format!("{l}; xy=y; yx=x"), 4);
    }

    #[test]
    fn k_n_agrees_with_presentation() {
        for n in 1..=3u32 {
            let mut rels = format!("x^2=0; y^2=y^{}; yxy=0; xyx=xy^{}x", n + 2, n + 1);
            for q in 2..=n {
                rels.push_str(&format!("; xy^{q}x=0"));
            }
            assert_iso("K", Some(n), "xy", &rels, 2 * n as usize + 4);
        }
    }

    #[test]
    fn w_lambda_is_gamma() {
        let w = catalog("W_lambda", None).unwrap();
        let g = catalog("Gamma", None).unwrap();
        assert!(crate::semigroups::generator_isomorphism(&w, &g).is_some());
    }

    #[test]
    fn duals_of_lambda_tables() {
        for (l, r) in [("F_lambda", "F_rho"), ("C_lambda", "C_rho"), ("W_lambda", "W_rho"), ("L2", "R2")] {
            let d = dual(&catalog(l, None).unwrap());
            assert_eq!(d.rows(), catalog(r, None).unwrap().rows(), "{r}");
        }
    }

    #[test]
    fn every_table_is_associative() {
        for &name in CATALOG_NAMES {
            let params = CatalogParams { n: Some(3), r: Some(2), d: Some(3) };
            let s = catalog_with(name, params).unwrap();
            assert_eq!(s.check_associative(), Ok(()), "{name}");
        }
    }

}
