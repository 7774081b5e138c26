//! Deciding whether a finite identity system defines a Rees-Sushkevich
//! variety: the system must force periodicity and must fail in every
//! indicator Burnside semigroup.

use serde::{Deserialize, Serialize};

use crate::criteria::{gcd, unequal_length_floor, Indicator};
use crate::parser::{Identity, IdentitySystem};
use crate::semigroups::satisfies_bruteforce;

/// Index and period of the one-generated free object of `V(Σ)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct MonogenicProfile {
    pub periodic: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub r: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub d: Option<u64>,
}

/// Substituting `x -> c^{e(x)}` turns `u = v` into `c^L = c^R`. An identity
/// whose sides have equal occurrence vectors always gives `L = R`; otherwise
/// it forces period dividing the gcd of the occurrence differences and index
/// at most the smallest unequal `min(L, R)`.
pub fn monogenic_profile(system: &IdentitySystem) -> MonogenicProfile {
    let mut r: Option<u64> = None;
    let mut d: u64 = 0;
    for id in system.iter() {
        let Some(floor) = unequal_length_floor(id) else {
            continue;
        };
        r = Some(r.map_or(floor as u64, |r| r.min(floor as u64)));
        for x in id.variables() {
            d = gcd(d, id.lhs.occurrences(x).abs_diff(id.rhs.occurrences(x)) as u64);
        }
    }
    match r {
        Some(r) => MonogenicProfile { periodic: true, r: Some(r), d: Some(d) },
        None => MonogenicProfile { periodic: false, r: None, d: None },
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Verdict {
    RS,
    NotRS,
    NotPeriodic,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Membership {
    pub name: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<u32>,
    pub contained: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub violated_identity: Option<Identity>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RecognitionReport {
    pub verdict: Verdict,
    /// The first indicator semigroup found inside the variety.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    pub profile: MonogenicProfile,
    pub memberships: Vec<Membership>,
    /// `K_n` for every `n` up to the requested bound, when asked for.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub k_scan: Vec<Membership>,
    /// Values of `n` up to the bound with `K_n` in the variety while no `K_m`
    /// with `m` dividing the period is.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub k_discrepancies: Vec<u32>,
}

impl RecognitionReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }
}

impl std::fmt::Display for RecognitionReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match (self.verdict, &self.witness) {
            (Verdict::RS, _) => writeln!(f, "verdict: RS")?,
            (Verdict::NotRS, Some(w)) => writeln!(f, "verdict: NotRS (contains {w})")?,
            (Verdict::NotRS, None) => writeln!(f, "verdict: NotRS")?,
            (Verdict::NotPeriodic, _) => writeln!(f, "verdict: NotPeriodic (every instance is exponent-balanced)")?,
        }
        match (self.profile.r, self.profile.d) {
            (Some(r), Some(d)) => writeln!(f, "monogenic profile: index {r}, period {d}")?,
            _ => writeln!(f, "monogenic profile: not periodic")?,
        }
        for m in self.memberships.iter().chain(&self.k_scan) {
            let name = match m.n {
                Some(n) => format!("{}_{n}", m.name),
                None => m.name.clone(),
            };
            match &m.violated_identity {
                Some(id) => writeln!(f, "  {name:<10} not contained, violates {id}")?,
                None => writeln!(f, "  {name:<10} contained")?,
            }
        }
        for n in &self.k_discrepancies {
            writeln!(f, "  discrepancy: K_{n} is contained but no K_m with m dividing the period is")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum MembershipOracle {
    /// The polynomial criteria.
    #[default]
    Criteria,
    /// Exhaustive evaluation in the catalog tables.
    BruteForce,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct RecognizeOptions {
    pub oracle: MembershipOracle,
    /// Also test `K_n` for every `n` in `1..=k_bound`.
    pub k_bound: Option<u32>,
}

fn membership(s: Indicator, system: &IdentitySystem, oracle: MembershipOracle) -> Membership {
    let table = (oracle == MembershipOracle::BruteForce).then(|| s.semigroup());
    let violated = system
        .iter()
        .find(|id| match &table {
            Some(t) => !satisfies_bruteforce(t, id),
            None => !s.holds(id),
        })
        .cloned();
    Membership {
        name: s.name().to_string(),
        n: s.param(),
        contained: violated.is_none(),
        violated_identity: violated,
    }
}

pub fn rs_recognize(system: &IdentitySystem) -> RecognitionReport {
    rs_recognize_with(system, RecognizeOptions::default())
}

pub fn rs_recognize_with(system: &IdentitySystem, options: RecognizeOptions) -> RecognitionReport {
    let profile = monogenic_profile(system);
    let mut list: Vec<Indicator> = Indicator::FIXED.to_vec();
    if let Some(d) = profile.d {
        list.extend((1..=d as u32).filter(|n| d % *n as u64 == 0).map(Indicator::K));
    }
    let memberships: Vec<Membership> = list.iter().map(|&s| membership(s, system, options.oracle)).collect();

    let mut k_scan = Vec::new();
    let mut k_discrepancies = Vec::new();
    if let Some(bound) = options.k_bound {
        k_scan = (1..=bound).map(|n| membership(Indicator::K(n), system, options.oracle)).collect();
        let divisor_hit = memberships.iter().any(|m| m.name == "K" && m.contained);
        if !divisor_hit {
            k_discrepancies = k_scan.iter().filter(|m| m.contained).filter_map(|m| m.n).collect();
        }
    }

    let first = list.iter().zip(&memberships).find(|(_, m)| m.contained);
    let (verdict, witness) = if !profile.periodic {
        (Verdict::NotPeriodic, None)
    } else {
        match first {
            Some((s, _)) => (Verdict::NotRS, Some(s.to_string())),
            None => (Verdict::RS, None),
        }
    };
    RecognitionReport { verdict, witness, profile, memberships, k_scan, k_discrepancies }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parser::parse_system;

    fn sys(s: &str) -> IdentitySystem {
        parse_system(s).unwrap()
    }

    #[test]
    fn profiles() {
        let p = monogenic_profile(&sys("x=x^3"));
        assert_eq!((p.periodic, p.r, p.d), (true, Some(1), Some(2)));
        let p = monogenic_profile(&sys("x^2=x^3\nxyx=xyxyx\nxhzxyz=xyzxhz"));
        assert_eq!((p.periodic, p.r, p.d), (true, Some(2), Some(1)));
        assert!(!monogenic_profile(&sys("xy=yx")).periodic);
    }

    #[test]
    fn verdicts() {
        let r = rs_recognize(&sys("x^2=x^3"));
        assert_eq!(r.verdict, Verdict::NotRS);
        assert_eq!(r.witness.as_deref(), Some("A"));

        let r = rs_recognize(&sys("x^2=x^3\nxyx=(xy)^2x\nxhzxyz=xyzxhz"));
        assert_eq!(r.verdict, Verdict::RS, "{r}");
        assert!(r.memberships.iter().all(|m| !m.contained));

        assert_eq!(rs_recognize(&sys("xy=yx")).verdict, Verdict::NotPeriodic);
    }

    #[test]
    fn k1_violates_xyx() {
        let r = rs_recognize(&sys("x^2=x^3\nxyx=(xy)^2x\nxhzxyz=xyzxhz"));
        let k1 = r.memberships.iter().find(|m| m.name == "K").unwrap();
        assert_eq!(k1.n, Some(1));
        assert_eq!(k1.violated_identity, Some("xyx=(xy)^2x".parse().unwrap()));
    }

    #[test]
    fn json_round_trip() {
        let r = rs_recognize_with(
            &sys("x^2=x^4\nxyx=(xy)^3x"),
            RecognizeOptions { k_bound: Some(4), ..Default::default() },
        );
        let back: RecognitionReport = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(back, r);
    }
}
