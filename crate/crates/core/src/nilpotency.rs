//! Sub-fusion rules, the adjoint sub-rule and the descending central series.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::rule::FusionRule;

/// A sorted set of label indices that contains the vacuum and is closed under
/// duals and fusion. Only [`closure`] and [`LabelSet::all`] construct one.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct LabelSet {
    members: Vec<usize>,
}

impl LabelSet {
    /// Every label of a rule of the given rank.
    pub fn all(rank: usize) -> Self {
        LabelSet {
            members: (0..rank).collect(),
        }
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, label: usize) -> bool {
        self.members.binary_search(&label).is_ok()
    }

    pub fn is_subset(&self, other: &LabelSet) -> bool {
        self.members.iter().all(|&m| other.contains(m))
    }

    pub fn names(&self, rule: &FusionRule) -> Vec<String> {
        self.members.iter().map(|&i| rule.label(i).to_string()).collect()
    }

    /// Re-checks closure against a rule, for sets obtained elsewhere.
    pub fn check_closed(&self, rule: &FusionRule) -> Result<()> {
        if is_closed(rule, &self.members) {
            Ok(())
        } else {
            Err(Error::NotClosed {
                members: self.members.clone(),
            })
        }
    }
}

/// Whether `members` is a sub-fusion rule of `rule`.
pub fn is_closed(rule: &FusionRule, members: &[usize]) -> bool {
    let set: BTreeSet<usize> = members.iter().copied().collect();
    if !set.contains(&0) || set.iter().any(|&i| i >= rule.rank()) {
        return false;
    }
    set.iter().all(|&i| set.contains(&rule.dual(i)))
        && set
            .iter()
            .all(|&i| set.iter().all(|&j| rule.fuse(i, j).all(|(k, _)| set.contains(&k))))
}

/// Attempts to interpret an arbitrary index list as a closed set.
pub fn label_set(rule: &FusionRule, members: &[usize]) -> Result<LabelSet> {
    if is_closed(rule, members) {
        let set: BTreeSet<usize> = members.iter().copied().collect();
        Ok(LabelSet {
            members: set.into_iter().collect(),
        })
    } else {
        let mut members = members.to_vec();
        members.sort_unstable();
        members.dedup();
        Err(Error::NotClosed { members })
    }
}

/// Smallest sub-fusion rule containing `seed`.
///
/// Worklist saturation: labels are taken from the worklist in ascending
/// order, and each is fused (both sides) with every label already present.
pub fn closure(rule: &FusionRule, seed: impl IntoIterator<Item = usize>) -> LabelSet {
    let mut members = BTreeSet::new();
    let mut pending = BTreeSet::new();
    pending.insert(0);
    pending.extend(seed);

    while let Some(x) = pending.pop_first() {
        if !members.insert(x) {
            continue;
        }
        let dx = rule.dual(x);
        if !members.contains(&dx) {
            pending.insert(dx);
        }
        for &y in members.iter() {
            for (k, _) in rule.fuse(x, y).chain(rule.fuse(y, x)) {
                if !members.contains(&k) {
                    pending.insert(k);
                }
            }
        }
    }
    LabelSet {
        members: members.into_iter().collect(),
    }
}

/// `(support)_ad`: the closure of every channel of `x x̄` for `x` in `support`.
pub fn adjoint_subrule(rule: &FusionRule, support: &LabelSet) -> Result<LabelSet> {
    support.check_closed(rule)?;
    let seed: BTreeSet<usize> = support
        .members()
        .iter()
        .flat_map(|&i| rule.fuse(i, rule.dual(i)).map(|(k, _)| k))
        .collect();
    // The support is closed, so fusion inside the restricted rule is fusion in `rule`.
    Ok(closure(rule, seed))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CentralSeries {
    pub chain: Vec<LabelSet>,
    pub nilpotent: bool,
    pub class: Option<usize>,
}

impl CentralSeries {
    /// The terminal sub-rule: the vacuum when nilpotent, otherwise the stable term.
    pub fn last(&self) -> &LabelSet {
        self.chain.last().expect("chain is never empty")
    }
}

/// Iterates `A⁽ⁿ⁺¹⁾ = (A⁽ⁿ⁾)_ad` until rank one or until a term repeats.
pub fn central_series(rule: &FusionRule) -> CentralSeries {
    let mut chain = vec![LabelSet::all(rule.rank())];
    loop {
        let current = chain.last().unwrap();
        if current.len() == 1 {
            return CentralSeries {
                class: Some(chain.len() - 1),
                nilpotent: true,
                chain,
            };
        }
        let next = adjoint_subrule(rule, current).expect("series terms are closed");
        let stable = &next == current;
        chain.push(next);
        if stable {
            return CentralSeries {
                chain,
                nilpotent: false,
                class: None,
            };
        }
    }
}

/// Materializes a sub-fusion rule as a standalone rule.
///
/// Relative label order is preserved, so the vacuum stays at index 0.
pub fn restrict(rule: &FusionRule, support: &LabelSet) -> Result<FusionRule> {
    support.check_closed(rule)?;
    let m = support.members();
    let position = |x: usize| m.binary_search(&x).expect("closed set contains duals");
    let labels = m.iter().map(|&i| rule.label(i).to_string()).collect();
    let dual = m.iter().map(|&i| position(rule.dual(i))).collect();
    FusionRule::from_fn(labels, dual, |a, b, c| rule.n(m[a], m[b], m[c]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{named_fixture, pointed, su2k, FiniteGroup};

    #[test]
    fn closure_examples() {
        let ising = named_fixture("ising").unwrap();
        assert_eq!(closure(&ising, []).members(), &[0]);
        assert_eq!(closure(&ising, [2]).members(), &[0, 2]);
        assert_eq!(closure(&su2k(4), [2]).members(), &[0, 2, 4]);
    }

    #[test]
    fn closure_ignores_seed_order() {
        let r = su2k(5);
        assert_eq!(closure(&r, [4, 2]), closure(&r, [2, 4]));
    }

    #[test]
    fn adjoint_examples() {
        let z5 = pointed(&FiniteGroup::cyclic(5));
        let ad = adjoint_subrule(&z5, &LabelSet::all(5)).unwrap();
        assert_eq!(ad.members(), &[0]);

        let ising = named_fixture("ising").unwrap();
        let ad = adjoint_subrule(&ising, &LabelSet::all(3)).unwrap();
        assert_eq!(ad.names(&ising), vec!["1", "ψ"]);

        let fib = named_fixture("fibonacci").unwrap();
        assert_eq!(adjoint_subrule(&fib, &LabelSet::all(2)).unwrap().len(), 2);
    }

    #[test]
    fn adjoint_rejects_open_support() {
        let ising = named_fixture("ising").unwrap();
        let open = LabelSet {
            members: vec![0, 1],
        };
        assert!(matches!(
            adjoint_subrule(&ising, &open),
            Err(Error::NotClosed { .. })
        ));
        assert!(label_set(&ising, &[0, 1]).is_err());
        assert!(label_set(&ising, &[2, 0]).is_ok());
    }

    #[test]
    fn series_examples() {
        let ising = named_fixture("ising").unwrap();
        let s = central_series(&ising);
        let sets: Vec<_> = s.chain.iter().map(|c| c.members().to_vec()).collect();
        assert_eq!(sets, vec![vec![0, 1, 2], vec![0, 2], vec![0]]);
        assert_eq!(s.class, Some(2));

        let z2 = pointed(&FiniteGroup::cyclic(2));
        let s = central_series(&z2);
        assert_eq!(s.chain.len(), 2);
        assert_eq!(s.class, Some(1));

        let s = central_series(&su2k(4));
        assert!(!s.nilpotent);
        assert_eq!(s.class, None);
        let n = s.chain.len();
        assert_eq!(s.chain[n - 1], s.chain[n - 2]);
        assert_eq!(s.last().members(), &[0, 2, 4]);

        let s = central_series(&FusionRule::trivial());
        assert_eq!(s.class, Some(0));
        assert_eq!(s.chain.len(), 1);
    }

    #[test]
    fn restrict_examples() {
        let ising = named_fixture("ising").unwrap();
        let sub = restrict(&ising, &label_set(&ising, &[0, 2]).unwrap()).unwrap();
        assert_eq!(sub.rank(), 2);
        assert_eq!(sub.n(1, 1, 0), 1);
        assert_eq!(sub.n(1, 1, 1), 0);
        assert_eq!(restrict(&ising, &LabelSet::all(3)).unwrap(), ising);

        let su4 = su2k(4);
        let sub = restrict(&su4, &closure(&su4, [2])).unwrap();
        assert_eq!(sub.rank(), 3);
        assert!(sub.validate().valid);
    }
}
