//! Exhaustive enumeration of fusion rules at small rank.
//!
//! For each involution of the non-vacuum labels the tensor positions are
//! split into orbits of the symmetries every valid rule must have:
//!
//! * `N_{ij}^k = N_{j̄ ī}^{k̄}` (dual product), and
//! * `N_{ij}^k = N_{j k̄}^{ī}` (Frobenius reciprocity), which follows from
//!   associativity once `N_{ij}^0 = δ_{j,ī}`. Under the literal axiom set it
//!   is not implied and is not used.
//!
//! Orbits that touch a forced entry (unit row/column, vacuum channel) are
//! fixed; the rest are free variables filled in order of their smallest
//! position with values `0..=max_mult`. Each associativity instance is
//! checked as soon as the last variable it reads is assigned. Within one
//! involution this visits tensors in lexicographic order; the per-involution
//! results are merged into a single lexicographic stream. Counts are of
//! labeled rules: no quotient by relabeling is taken.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::acyclicity::check_theorem;
use crate::error::{Error, Result};
use crate::fpdim::fp_dimensions;
use crate::io::RuleFile;
use crate::nilpotency::central_series;
use crate::rule::{AxiomSet, FusionRule};

pub const DEFAULT_RANK_CAP: usize = 5;
pub const DEFAULT_MULT_CAP: u32 = 3;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EnumSpec {
    pub rank: usize,
    pub max_mult: u32,
    /// Only enumerate these dual maps (each must be an involution fixing 0).
    pub dual_maps: Option<Vec<Vec<usize>>>,
    /// Stop after this many rules, in output order.
    pub limit: Option<usize>,
    pub axioms: AxiomSet,
    pub rank_cap: usize,
    pub mult_cap: u32,
}

impl EnumSpec {
    pub fn new(rank: usize, max_mult: u32) -> Self {
        EnumSpec {
            rank,
            max_mult,
            dual_maps: None,
            limit: None,
            axioms: AxiomSet::Standard,
            rank_cap: DEFAULT_RANK_CAP,
            mult_cap: DEFAULT_MULT_CAP,
        }
    }

    pub fn literal(mut self) -> Self {
        self.axioms = AxiomSet::Literal;
        self
    }

    pub fn with_limit(mut self, limit: usize) -> Self {
        self.limit = Some(limit);
        self
    }

    pub fn with_dual_maps(mut self, maps: Vec<Vec<usize>>) -> Self {
        self.dual_maps = Some(maps);
        self
    }

    /// Raises the rank and multiplicity caps.
    pub fn with_caps(mut self, rank_cap: usize, mult_cap: u32) -> Self {
        self.rank_cap = rank_cap;
        self.mult_cap = mult_cap;
        self
    }

    fn check(&self) -> Result<()> {
        if self.rank == 0 || self.rank > self.rank_cap {
            return Err(Error::Capacity(format!(
                "rank {} outside 1..={}",
                self.rank, self.rank_cap
            )));
        }
        if self.max_mult > self.mult_cap {
            return Err(Error::Capacity(format!(
                "max multiplicity {} above the cap {}",
                self.max_mult, self.mult_cap
            )));
        }
        if let Some(maps) = &self.dual_maps {
            for d in maps {
                let ok = d.len() == self.rank
                    && d.first() == Some(&0)
                    && d.iter().all(|&x| x < self.rank)
                    && d.iter().enumerate().all(|(i, &x)| d[x] == i);
                if !ok {
                    return Err(Error::Structural(format!(
                        "{d:?} is not an involution of 0..{} fixing 0",
                        self.rank
                    )));
                }
            }
        }
        Ok(())
    }
}

/// Involutions of `0..n` fixing 0, in lexicographic order.
pub fn involutions(n: usize) -> Vec<Vec<usize>> {
    fn go(d: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let Some(first) = d.iter().position(|&x| x == usize::MAX) else {
            out.push(d.clone());
            return;
        };
        // first unset label: fixed point, or paired with a later unset label
        d[first] = first;
        go(d, out);
        for j in first + 1..d.len() {
            if d[j] == usize::MAX {
                d[first] = j;
                d[j] = first;
                go(d, out);
                d[j] = usize::MAX;
            }
        }
        d[first] = usize::MAX;
    }
    if n == 0 {
        return Vec::new();
    }
    let mut d = vec![usize::MAX; n];
    d[0] = 0;
    let mut out = Vec::new();
    go(&mut d, &mut out);
    out.sort();
    out
}

struct Search {
    rank: usize,
    max_mult: u32,
    /// Positions of each free orbit.
    vars: Vec<Vec<usize>>,
    /// Associativity instances to check right after each variable is set.
    checks: Vec<Vec<[usize; 4]>>,
    tensor: Vec<u32>,
    out: Vec<Vec<u32>>,
    limit: usize,
}

impl Search {
    #[inline]
    fn n(&self, i: usize, j: usize, k: usize) -> u32 {
        self.tensor[(i * self.rank + j) * self.rank + k]
    }

    fn associative(&self, [i, j, k, l]: [usize; 4]) -> bool {
        let r = self.rank;
        let lhs: u32 = (0..r).map(|m| self.n(i, j, m) * self.n(m, k, l)).sum();
        let rhs: u32 = (0..r).map(|m| self.n(j, k, m) * self.n(i, m, l)).sum();
        lhs == rhs
    }

    fn run(&mut self, var: usize) {
        if self.out.len() >= self.limit {
            return;
        }
        if var == self.vars.len() {
            self.out.push(self.tensor.clone());
            return;
        }
        for value in 0..=self.max_mult {
            for p in 0..self.vars[var].len() {
                let pos = self.vars[var][p];
                self.tensor[pos] = value;
            }
            if self.checks[var].iter().all(|&q| self.associative(q)) {
                self.run(var + 1);
            }
        }
        for p in 0..self.vars[var].len() {
            let pos = self.vars[var][p];
            self.tensor[pos] = 0;
        }
    }
}

fn enumerate_for_dual(spec: &EnumSpec, dual: &[usize], limit: usize) -> Vec<Vec<u32>> {
    let r = spec.rank;
    let flat = |i: usize, j: usize, k: usize| (i * r + j) * r + k;
    let unflat = |p: usize| (p / (r * r), (p / r) % r, p % r);
    let size = r * r * r;

    // Union-find over positions.
    let mut parent: Vec<usize> = (0..size).collect();
    fn find(parent: &mut [usize], x: usize) -> usize {
        let mut root = x;
        while parent[root] != root {
            root = parent[root];
        }
        let mut x = x;
        while parent[x] != root {
            let next = parent[x];
            parent[x] = root;
            x = next;
        }
        root
    }
    let union = |parent: &mut Vec<usize>, a: usize, b: usize| {
        let (ra, rb) = (find(parent, a), find(parent, b));
        if ra != rb {
            let (lo, hi) = (ra.min(rb), ra.max(rb));
            parent[hi] = lo;
        }
    };
    for p in 0..size {
        let (i, j, k) = unflat(p);
        union(&mut parent, p, flat(dual[j], dual[i], dual[k]));
        if spec.axioms == AxiomSet::Standard {
            union(&mut parent, p, flat(j, dual[k], dual[i]));
        }
    }

    let forced = |i: usize, j: usize, k: usize| -> Option<u32> {
        if i == 0 {
            return Some(u32::from(j == k));
        }
        if j == 0 {
            return Some(u32::from(i == k));
        }
        if k == 0 {
            if j == dual[i] {
                return Some(1);
            }
            if spec.axioms == AxiomSet::Standard {
                return Some(0);
            }
        }
        None
    };

    let mut orbits: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for p in 0..size {
        let root = find(&mut parent, p);
        orbits.entry(root).or_default().push(p);
    }

    let mut tensor = vec![0u32; size];
    let mut var_of = vec![usize::MAX; size];
    let mut vars = Vec::new();
    // BTreeMap keys are orbit minima, so variables come out in position order.
    for positions in orbits.into_values() {
        let fixed: Vec<u32> = positions
            .iter()
            .filter_map(|&p| {
                let (i, j, k) = unflat(p);
                forced(i, j, k)
            })
            .collect();
        match fixed.first() {
            Some(&v) => {
                if fixed.iter().any(|&w| w != v) {
                    return Vec::new();
                }
                for &p in &positions {
                    tensor[p] = v;
                }
            }
            None => {
                for &p in &positions {
                    var_of[p] = vars.len();
                }
                vars.push(positions);
            }
        }
    }

    let mut checks = vec![Vec::new(); vars.len()];
    let mut upfront = Vec::new();
    for i in 1..r {
        for j in 1..r {
            for k in 1..r {
                for l in 0..r {
                    let last = (0..r)
                        .flat_map(|m| {
                            [flat(i, j, m), flat(m, k, l), flat(j, k, m), flat(i, m, l)]
                        })
                        .filter_map(|p| (var_of[p] != usize::MAX).then_some(var_of[p]))
                        .max();
                    match last {
                        Some(v) => checks[v].push([i, j, k, l]),
                        None => upfront.push([i, j, k, l]),
                    }
                }
            }
        }
    }

    let mut search = Search {
        rank: r,
        max_mult: spec.max_mult,
        vars,
        checks,
        tensor,
        out: Vec::new(),
        limit,
    };
    if !upfront.iter().all(|&q| search.associative(q)) {
        return Vec::new();
    }
    search.run(0);
    search.out
}

/// Every rule satisfying the selected axiom set within the bounds, in
/// lexicographic order of the flat tensor, each exactly once.
pub fn enumerate(spec: &EnumSpec) -> Result<Vec<FusionRule>> {
    spec.check()?;
    let duals = spec
        .dual_maps
        .clone()
        .unwrap_or_else(|| involutions(spec.rank));
    let limit = spec.limit.unwrap_or(usize::MAX);
    let mut found: Vec<(Vec<u32>, Vec<usize>)> = Vec::new();
    for dual in &duals {
        // each involution's stream is sorted, so `limit` per stream suffices
        for t in enumerate_for_dual(spec, dual, limit) {
            found.push((t, dual.clone()));
        }
    }
    found.sort();
    found.dedup();
    found.truncate(limit);
    found
        .into_iter()
        .map(|(t, d)| FusionRule::new(FusionRule::default_labels(spec.rank), d, t))
        .collect()
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TheoremSurvey {
    pub rank: usize,
    pub max_mult: u32,
    pub total: usize,
    pub acyclic_count: usize,
    pub nilpotent_count: usize,
    pub disagreements: Vec<RuleFile>,
    pub weak_integrality_failures: Vec<RuleFile>,
    /// Nilpotency class → number of rules; non-nilpotent rules are not listed.
    pub class_histogram: BTreeMap<usize, usize>,
    /// Acyclic rules of rank > 1 whose adjoint sub-rule is not strictly smaller.
    pub rank_drop_failures: Vec<RuleFile>,
}

impl TheoremSurvey {
    pub fn is_clean(&self) -> bool {
        self.disagreements.is_empty()
            && self.weak_integrality_failures.is_empty()
            && self.rank_drop_failures.is_empty()
            && self.acyclic_count == self.nilpotent_count
    }
}

/// Runs both decision procedures and the integrality check on one rule,
/// accumulating into `survey`.
pub fn survey_rule(survey: &mut TheoremSurvey, rule: &FusionRule, tolerance: f64) -> Result<()> {
    survey.total += 1;
    let check = check_theorem(rule);
    let series = central_series(rule);
    if check.acyclic {
        survey.acyclic_count += 1;
    }
    if check.nilpotent {
        survey.nilpotent_count += 1;
    }
    if let Some(class) = series.class {
        *survey.class_histogram.entry(class).or_default() += 1;
    }
    if !check.agree {
        survey.disagreements.push(RuleFile::from_rule(rule));
    }
    if check.acyclic {
        let fp = fp_dimensions(rule, tolerance).map_err(|e| match e {
            Error::Numerical { message, residual } => Error::Numerical {
                message: format!("{message}; rule: {}", crate::io::write_rule(rule).replace('\n', " ")),
                residual,
            },
            other => other,
        })?;
        if !fp.is_weakly_integral {
            survey.weak_integrality_failures.push(RuleFile::from_rule(rule));
        }
        if rule.rank() > 1 && series.chain.get(1).is_none_or(|ad| ad.len() >= rule.rank()) {
            survey.rank_drop_failures.push(RuleFile::from_rule(rule));
        }
    }
    Ok(())
}

pub fn survey(spec: &EnumSpec, tolerance: f64) -> Result<TheoremSurvey> {
    let mut out = TheoremSurvey {
        rank: spec.rank,
        max_mult: spec.max_mult,
        total: 0,
        acyclic_count: 0,
        nilpotent_count: 0,
        disagreements: Vec::new(),
        weak_integrality_failures: Vec::new(),
        class_histogram: BTreeMap::new(),
        rank_drop_failures: Vec::new(),
    };
    for rule in enumerate(spec)? {
        survey_rule(&mut out, &rule, tolerance)?;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fpdim::DEFAULT_TOLERANCE;

    #[test]
    fn involution_counts() {
        // involutions on n-1 points: 1, 1, 2, 4, 10
        let counts: Vec<usize> = (1..=5).map(|n| involutions(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 4, 10]);
    }

    #[test]
    fn rank_one() {
        let rules = enumerate(&EnumSpec::new(1, 2)).unwrap();
        assert_eq!(rules, vec![FusionRule::trivial()]);
    }

    #[test]
    fn rank_two_census() {
        let rules = enumerate(&EnumSpec::new(2, 2)).unwrap();
        let xx: Vec<u32> = rules.iter().map(|r| r.n(1, 1, 1)).collect();
        assert_eq!(xx, vec![0, 1, 2]);
        let rules = enumerate(&EnumSpec::new(2, 0)).unwrap();
        assert_eq!(rules.len(), 1);
    }

    #[test]
    fn bounds_are_enforced() {
        assert!(matches!(enumerate(&EnumSpec::new(6, 1)), Err(Error::Capacity(_))));
        assert!(matches!(enumerate(&EnumSpec::new(0, 1)), Err(Error::Capacity(_))));
        assert!(matches!(enumerate(&EnumSpec::new(2, 4)), Err(Error::Capacity(_))));
        assert!(enumerate(&EnumSpec::new(2, 4).with_caps(5, 4)).is_ok());
        let bad = EnumSpec::new(3, 1).with_dual_maps(vec![vec![0, 2, 0]]);
        assert!(enumerate(&bad).is_err());
    }

    #[test]
    fn limit_and_dual_filter() {
        let all = enumerate(&EnumSpec::new(3, 1)).unwrap();
        let first = enumerate(&EnumSpec::new(3, 1).with_limit(2)).unwrap();
        assert_eq!(first, all[..2].to_vec());
        let swapped = enumerate(&EnumSpec::new(3, 1).with_dual_maps(vec![vec![0, 2, 1]])).unwrap();
        assert!(swapped.iter().all(|r| r.dual_map() == [0, 2, 1]));
        assert_eq!(
            swapped.len(),
            all.iter().filter(|r| r.dual_map() == [0, 2, 1]).count()
        );
    }

    #[test]
    fn rank_two_survey() {
        let s = survey(&EnumSpec::new(2, 2), DEFAULT_TOLERANCE).unwrap();
        assert_eq!((s.total, s.acyclic_count), (3, 1));
        assert!(s.is_clean());
        let s = survey(&EnumSpec::new(1, 0), DEFAULT_TOLERANCE).unwrap();
        assert_eq!(s.class_histogram, BTreeMap::from([(0, 1)]));
    }
}
