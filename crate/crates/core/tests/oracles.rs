use proptest::prelude::*;

use indicator_burnside::criteria::{Criterion, Helper};
use indicator_burnside::fuzz::{desk_identities, fuzz};
use indicator_burnside::parser::{Identity, IdentitySystem};
use indicator_burnside::recognizer::{
    monogenic_profile, rs_recognize_with, MembershipOracle, MonogenicProfile, RecognizeOptions,
};
use indicator_burnside::words::{Letter, Word};

const CAP: usize = 64;
const MAX_EXPONENT: usize = 4;

fn find(parent: &mut [usize], mut i: usize) -> usize {
    while parent[i] != i {
        parent[i] = parent[parent[i]];
        i = parent[i];
    }
    i
}

/// Index and period of the one-generated free object, computed as the
/// congruence on `{c, c^2, ..., c^CAP}` generated by every instance
/// `x -> c^e(x)` with `e(x) <= MAX_EXPONENT`, closed under translation.
fn congruence_profile(system: &IdentitySystem) -> MonogenicProfile {
    let mut parent: Vec<usize> = (0..=CAP).collect();
    let mut pairs = Vec::new();
    for id in system.iter() {
        let vars = id.variables();
        let mut e = vec![1usize; vars.len()];
        loop {
            let len = |w: &Word| -> usize {
                w.letters().iter().map(|x| e[vars.iter().position(|y| y == x).unwrap()]).sum()
            };
            pairs.push((len(&id.lhs), len(&id.rhs)));
            let mut k = 0;
            while k < e.len() && e[k] == MAX_EXPONENT {
                e[k] = 1;
                k += 1;
            }
            if k == e.len() {
                break;
            }
            e[k] += 1;
        }
    }
    for (l, r) in pairs {
        let mut t = 0;
        while l.max(r) + t <= CAP {
            let (a, b) = (find(&mut parent, l + t), find(&mut parent, r + t));
            parent[a] = b;
            t += 1;
        }
    }
    let class: Vec<usize> = (0..=CAP).map(|i| find(&mut parent, i)).collect();
    let r = (1..=CAP).find(|&i| (i + 1..=CAP).any(|j| class[j] == class[i]));
    match r {
        None => MonogenicProfile { periodic: false, r: None, d: None },
        Some(r) => {
            let d = (1..=CAP - r).find(|&p| class[r + p] == class[r]).unwrap();
            MonogenicProfile { periodic: true, r: Some(r as u64), d: Some(d as u64) }
        }
    }
}

fn small_word() -> impl Strategy<Value = Word> {
    prop::collection::vec(0u32..3, 1..=5).prop_map(|v| Word::new(v.into_iter().map(Letter).collect()).unwrap())
}

fn small_system() -> impl Strategy<Value = IdentitySystem> {
    prop::collection::vec((small_word(), small_word()), 1..=3)
        .prop_map(|v| IdentitySystem::new(v.into_iter().map(|(u, w)| Identity::new(u, w))).unwrap())
}

#[test]
fn profile_matches_congruence_on_single_identities() {
    for id in desk_identities(2, 5) {
        let system = IdentitySystem::new([id.clone()]).unwrap();
        assert_eq!(monogenic_profile(&system), congruence_profile(&system), "{id}");
    }
}

#[test]
fn helper_criteria_match_their_tables() {
    let mut helpers = vec![Helper::L21, Helper::R21, Helper::N3];
    helpers.extend((1..=4).map(Helper::Cyclic));
    helpers.extend((1..=3).map(Helper::C2n));
    helpers.extend([(1, 1), (1, 3), (2, 2), (3, 2), (4, 3)].map(|(r, d)| Helper::Crd { r, d }));
    for h in helpers {
        let c = Criterion::Helper(h);
        for (letters, max_len) in [(2, 6), (3, 4)] {
            let report = fuzz(&c, letters, max_len);
            assert_eq!(report.mismatches, 0, "{c}: {:?}", report.examples);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn profile_matches_congruence_on_systems(system in small_system()) {
        prop_assert_eq!(monogenic_profile(&system), congruence_profile(&system));
    }

    #[test]
    fn recognizer_oracles_agree(system in small_system(), k_bound in prop::option::of(1u32..5)) {
        let by_criteria = rs_recognize_with(&system, RecognizeOptions { oracle: MembershipOracle::Criteria, k_bound });
        let by_tables = rs_recognize_with(&system, RecognizeOptions { oracle: MembershipOracle::BruteForce, k_bound });
        prop_assert_eq!(by_criteria, by_tables);
    }
}
