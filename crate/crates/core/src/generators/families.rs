//! Pointed rules, SU(2)_k and the named fixture catalogue.

use std::sync::OnceLock;

use super::group::FiniteGroup;
use crate::acyclicity::is_acyclic;
use crate::error::{Error, Result};
use crate::fpdim::{fp_dimensions, DEFAULT_TOLERANCE};
use crate::io::parse_rule;
use crate::rule::{product, FusionRule};

/// The group fusion rule: `x_g x_h = x_{gh}`.
pub fn pointed(group: &FiniteGroup) -> FusionRule {
    let n = group.order();
    let labels = (0..n)
        .map(|g| if g == 0 { "1".to_string() } else { format!("g{g}") })
        .collect();
    let dual = (0..n).map(|g| group.inv(g)).collect();
    FusionRule::from_fn(labels, dual, |i, j, k| u32::from(group.mul(i, j) == k))
        .expect("group tables give well-formed rules")
}

/// SU(2) at level `k`. Label `a` is the doubled spin, displayed as the spin `a/2`.
pub fn su2k(k: usize) -> FusionRule {
    assert!(k >= 1, "level must be positive");
    let labels = (0..=k)
        .map(|a| {
            if a % 2 == 0 {
                format!("{}", a / 2)
            } else {
                format!("{a}/2")
            }
        })
        .collect();
    FusionRule::from_fn(labels, (0..=k).collect(), |a, b, c| {
        let lo = a.abs_diff(b);
        let hi = (a + b).min(2 * k - a - b);
        u32::from((a + b + c) % 2 == 0 && lo <= c && c <= hi)
    })
    .expect("level-k truncation is well-formed")
}

/// Rule from a multiplication table of label indices: `table(i, j)` lists the
/// channels of `x_i x_j` (with repetition for multiplicity).
fn from_channels(labels: &[&str], dual: Vec<usize>, table: impl Fn(usize, usize) -> Vec<usize>) -> FusionRule {
    let labels = labels.iter().map(|s| s.to_string()).collect();
    FusionRule::from_fn(labels, dual, |i, j, k| {
        table(i, j).iter().filter(|&&c| c == k).count() as u32
    })
    .expect("fixture is well-formed")
}

fn ising() -> FusionRule {
    from_channels(&["1", "σ", "ψ"], vec![0, 1, 2], |i, j| match (i, j) {
        (0, x) | (x, 0) => vec![x],
        (1, 1) => vec![0, 2],
        (1, 2) | (2, 1) => vec![1],
        _ => vec![0],
    })
}

fn fibonacci() -> FusionRule {
    from_channels(&["1", "τ"], vec![0, 1], |i, j| match (i, j) {
        (0, x) | (x, 0) => vec![x],
        _ => vec![0, 1],
    })
}

fn semion() -> FusionRule {
    pointed(&FiniteGroup::cyclic(2)).with_labels(vec!["1".into(), "s".into()]).unwrap()
}

fn toric() -> FusionRule {
    // Z2×Z2 with e = (1,0), m = (0,1), ε = (1,1)
    pointed(&FiniteGroup::klein_four())
        .with_labels(vec!["1".into(), "m".into(), "e".into(), "ε".into()])
        .unwrap()
}

fn rep_s3() -> FusionRule {
    from_channels(&["1", "sgn", "V"], vec![0, 1, 2], |i, j| match (i, j) {
        (0, x) | (x, 0) => vec![x],
        (1, 1) => vec![0],
        (1, 2) | (2, 1) => vec![2],
        _ => vec![0, 1, 2],
    })
}

fn tambara_yamagami_z3() -> FusionRule {
    // 1, a, a², m with a·m = m·a = m and m·m = 1 + a + a²
    from_channels(&["1", "a", "a2", "m"], vec![0, 2, 1, 3], |i, j| match (i, j) {
        (0, x) | (x, 0) => vec![x],
        (3, 3) => vec![0, 1, 2],
        (3, _) | (_, 3) => vec![3],
        (a, b) => vec![(a + b) % 3],
    })
}

const SO8_2: &str = include_str!("../../fixtures/so8_2.json");

/// Loads the SO(8)_2 fusion rules and checks its known invariants:
/// rank 11, all labels self-dual, dimensions four 1's and seven 2's,
/// global dimension 32, acyclic adjoint graph.
pub fn so8_level2() -> Result<FusionRule> {
    let rule = parse_rule(SO8_2)?;
    let fail = |what: &str| Err(Error::Structural(format!("so8_2 fixture: {what}")));
    if rule.rank() != 11 {
        return fail("rank is not 11");
    }
    if !rule.is_self_dual() {
        return fail("not every label is self-dual");
    }
    if !rule.validate().valid {
        return fail("fails axiom validation");
    }
    let fp = fp_dimensions(&rule, DEFAULT_TOLERANCE)?;
    let ones = fp.dims.iter().filter(|d| (*d - 1.0).abs() <= 1e-6).count();
    let twos = fp.dims.iter().filter(|d| (*d - 2.0).abs() <= 1e-6).count();
    if ones != 4 || twos != 7 || (fp.global - 32.0).abs() > 1e-6 {
        return fail("dimensions are not four 1's and seven 2's with global 32");
    }
    if !is_acyclic(&rule).acyclic {
        return fail("adjoint graph has a cycle");
    }
    Ok(rule)
}

/// Names accepted by [`named_fixture`].
pub const FIXTURE_NAMES: &[&str] = &[
    "trivial",
    "semion",
    "toric",
    "ising",
    "fibonacci",
    "rep_s3",
    "ty_z3",
    "so8_2",
];

pub fn named_fixture(name: &str) -> Result<FusionRule> {
    static SO8: OnceLock<std::result::Result<FusionRule, String>> = OnceLock::new();
    match name {
        "trivial" => Ok(FusionRule::trivial()),
        "semion" => Ok(semion()),
        "toric" => Ok(toric()),
        "ising" => Ok(ising()),
        "fibonacci" => Ok(fibonacci()),
        "rep_s3" => Ok(rep_s3()),
        "ty_z3" => Ok(tambara_yamagami_z3()),
        "so8_2" => SO8
            .get_or_init(|| so8_level2().map_err(|e| e.to_string()))
            .clone()
            .map_err(Error::Structural),
        _ => Err(Error::Unknown {
            kind: "fixture",
            name: name.to_string(),
            available: FIXTURE_NAMES.iter().map(|s| s.to_string()).collect(),
        }),
    }
}

/// Every named fixture, in catalogue order.
pub fn fixture_catalogue() -> Vec<(&'static str, FusionRule)> {
    FIXTURE_NAMES
        .iter()
        .map(|&n| (n, named_fixture(n).expect("catalogue fixtures load")))
        .collect()
}

/// Product of two named fixtures, labelled by pairs.
pub fn fixture_product(a: &str, b: &str) -> Result<FusionRule> {
    Ok(product(&named_fixture(a)?, &named_fixture(b)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::nilpotency::central_series;

    #[test]
    fn all_fixtures_validate() {
        for (name, rule) in fixture_catalogue() {
            let report = rule.validate();
            assert!(report.valid, "{name}: {:?}", report.violations);
        }
    }

    #[test]
    fn su2k_small_levels() {
        let s1 = su2k(1);
        assert_eq!(s1.rank(), 2);
        assert!(s1.is_pointed());
        let s2 = su2k(2);
        assert!(s2.same_structure(&ising()));
        assert_eq!(su2k(3).rank(), 4);
        for k in 1..=8 {
            assert!(su2k(k).validate().valid, "k = {k}");
        }
    }

    #[test]
    fn su2k_labels() {
        let r = su2k(4);
        assert_eq!(r.labels(), &["0", "1/2", "1", "3/2", "2"]);
    }

    #[test]
    fn pointed_examples() {
        let z2 = pointed(&FiniteGroup::cyclic(2));
        assert_eq!(central_series(&z2).class, Some(1));
        let s3 = pointed(&FiniteGroup::symmetric(3));
        assert_eq!(s3.rank(), 6);
        assert!(s3.validate().valid);
        assert!(!s3.is_commutative());
        assert!(is_acyclic(&s3).acyclic);
        let t = pointed(&FiniteGroup::trivial());
        assert_eq!(t, FusionRule::trivial());
        assert_eq!(central_series(&t).class, Some(0));
    }

    #[test]
    fn so8_constraints() {
        let r = named_fixture("so8_2").unwrap();
        assert_eq!(r.rank(), 11);
        assert!(r.is_self_dual());
    }

    #[test]
    fn unknown_fixture_lists_catalogue() {
        match named_fixture("nope") {
            Err(Error::Unknown { available, .. }) => assert!(available.contains(&"so8_2".to_string())),
            other => panic!("{other:?}"),
        }
    }
}
