//! The fusion-rule data type, axiom validation and direct products.
//!
//! A rule of rank `n` stores the full `n × n × n` tensor of structure
//! constants `N_{ij}^k` as a flat row-major array. Label 0 is always the
//! vacuum.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

/// Which axiom family a [`Violation`] belongs to.
///
/// The variant order is the order violations are reported in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Axiom {
    /// `x ↦ x̄` must be an involution fixing the vacuum.
    Involution,
    /// The vacuum is a two-sided unit.
    Unit,
    /// `(x_i x_j) x_k = x_i (x_j x_k)`.
    Associativity,
    /// `N_{ij}^k = N_{j̄ ī}^{k̄}`.
    DualProduct,
    /// `N_{i ī}^0 = 1`.
    VacuumMultiplicity,
    /// `N_{ij}^0 = 0` whenever `j ≠ ī`. Not one of the four literal axioms;
    /// reported under its own code so rules failing only this can be told apart.
    VacuumChannel,
    /// `N_{i ī}^j = N_{i ī}^{j̄}`, a consequence of the dual-product axiom.
    AdjointSymmetry,
}

impl Axiom {
    pub fn code(self) -> &'static str {
        match self {
            Axiom::Involution => "c/involution",
            Axiom::Unit => "b/unit",
            Axiom::Associativity => "a/associativity",
            Axiom::DualProduct => "c/dual-product",
            Axiom::VacuumMultiplicity => "d/vacuum-multiplicity",
            Axiom::VacuumChannel => "vacuum-channel",
            Axiom::AdjointSymmetry => "derived/adjoint-symmetry",
        }
    }
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.code())
    }
}

/// Axiom set used by [`FusionRule::validate_with`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum AxiomSet {
    /// The four literal axioms plus `N_{ij}^0 = δ_{j,ī}`.
    #[default]
    Standard,
    /// The four literal axioms only.
    Literal,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub axiom: Axiom,
    pub indices: Vec<usize>,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub valid: bool,
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    fn from_violations(mut violations: Vec<Violation>) -> Self {
        violations.sort_by(|a, b| (a.axiom, &a.indices).cmp(&(b.axiom, &b.indices)));
        ValidationReport {
            valid: violations.is_empty(),
            violations,
        }
    }

    /// True when the only failures are of the `N_{ij}^0 = δ_{j,ī}` check.
    pub fn fails_only_vacuum_channel(&self) -> bool {
        !self.valid
            && self
                .violations
                .iter()
                .all(|v| v.axiom == Axiom::VacuumChannel)
    }
}

/// A fusion rule `(A, N)` with exact non-negative integer structure constants.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FusionRule {
    labels: Vec<String>,
    dual: Vec<usize>,
    tensor: Vec<u32>,
}

impl FusionRule {
    /// Builds a rule from a flat row-major tensor (`tensor[(i*n + j)*n + k] = N_{ij}^k`).
    ///
    /// Only the shape is checked here; use [`FusionRule::validate`] for the axioms.
    pub fn new(labels: Vec<String>, dual: Vec<usize>, tensor: Vec<u32>) -> Result<Self> {
        let rank = labels.len();
        if rank == 0 {
            return Err(Error::Structural("rank must be at least 1".into()));
        }
        if dual.len() != rank {
            return Err(Error::Structural(format!(
                "dual map has {} entries, expected {rank}",
                dual.len()
            )));
        }
        if let Some((i, &d)) = dual.iter().enumerate().find(|(_, &d)| d >= rank) {
            return Err(Error::Structural(format!(
                "dual of label {i} is {d}, out of range for rank {rank}"
            )));
        }
        if tensor.len() != rank * rank * rank {
            return Err(Error::Structural(format!(
                "fusion tensor has {} entries, expected rank³ = {}",
                tensor.len(),
                rank * rank * rank
            )));
        }
        Ok(FusionRule {
            labels,
            dual,
            tensor,
        })
    }

    pub fn from_fn(
        labels: Vec<String>,
        dual: Vec<usize>,
        mut f: impl FnMut(usize, usize, usize) -> u32,
    ) -> Result<Self> {
        let n = labels.len();
        let mut tensor = Vec::with_capacity(n * n * n);
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    tensor.push(f(i, j, k));
                }
            }
        }
        Self::new(labels, dual, tensor)
    }

    /// Default display names: `1, x1, x2, …`.
    pub fn default_labels(rank: usize) -> Vec<String> {
        (0..rank)
            .map(|i| if i == 0 { "1".to_string() } else { format!("x{i}") })
            .collect()
    }

    /// The rank-one rule containing only the vacuum.
    pub fn trivial() -> Self {
        FusionRule {
            labels: vec!["1".into()],
            dual: vec![0],
            tensor: vec![1],
        }
    }

    pub fn rank(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn dual(&self, i: usize) -> usize {
        self.dual[i]
    }

    pub fn dual_map(&self) -> &[usize] {
        &self.dual
    }

    pub fn tensor(&self) -> &[u32] {
        &self.tensor
    }

    /// `N_{ij}^k`.
    #[inline]
    pub fn n(&self, i: usize, j: usize, k: usize) -> u32 {
        let r = self.rank();
        self.tensor[(i * r + j) * r + k]
    }

    /// Nonzero channels of `x_i x_j` as `(k, N_{ij}^k)`.
    pub fn fuse(&self, i: usize, j: usize) -> impl Iterator<Item = (usize, u32)> + '_ {
        let r = self.rank();
        let row = &self.tensor[(i * r + j) * r..(i * r + j + 1) * r];
        row.iter()
            .enumerate()
            .filter(|(_, &m)| m > 0)
            .map(|(k, &m)| (k, m))
    }

    /// Index of the label with the given display name.
    pub fn find_label(&self, name: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == name)
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.rank() {
            return Err(Error::Structural(format!(
                "{} labels supplied for a rule of rank {}",
                labels.len(),
                self.rank()
            )));
        }
        self.labels = labels;
        Ok(self)
    }

    pub fn is_self_dual(&self) -> bool {
        self.dual.iter().enumerate().all(|(i, &d)| i == d)
    }

    /// Every product has exactly one outcome.
    pub fn is_pointed(&self) -> bool {
        let r = self.rank();
        (0..r).all(|i| (0..r).all(|j| self.fuse(i, j).map(|(_, m)| m).sum::<u32>() == 1))
    }

    pub fn is_commutative(&self) -> bool {
        let r = self.rank();
        (0..r).all(|i| (0..r).all(|j| (0..r).all(|k| self.n(i, j, k) == self.n(j, i, k))))
    }

    /// `(N_i)_{jk} = N_{ij}^k`, as rows.
    pub fn fusion_matrix(&self, i: usize) -> Vec<Vec<u32>> {
        let r = self.rank();
        (0..r)
            .map(|j| (0..r).map(|k| self.n(i, j, k)).collect())
            .collect()
    }

    /// Human-readable `a × b = c + 2d`.
    pub fn format_product(&self, i: usize, j: usize) -> String {
        let terms: Vec<String> = self
            .fuse(i, j)
            .map(|(k, m)| {
                if m == 1 {
                    self.labels[k].clone()
                } else {
                    format!("{m}{}", self.labels[k])
                }
            })
            .collect();
        let rhs = if terms.is_empty() {
            "0".to_string()
        } else {
            terms.join(" + ")
        };
        format!("{} × {} = {}", self.labels[i], self.labels[j], rhs)
    }

    pub fn validate(&self) -> ValidationReport {
        self.validate_with(AxiomSet::Standard)
    }

    /// Checks every axiom instance and reports all failures.
    pub fn validate_with(&self, axioms: AxiomSet) -> ValidationReport {
        let r = self.rank();
        let d = &self.dual;
        let mut out = Vec::new();
        let mut push = |axiom, indices: Vec<usize>, message: String| {
            out.push(Violation {
                axiom,
                indices,
                message,
            })
        };

        if d[0] != 0 {
            push(
                Axiom::Involution,
                vec![0],
                format!("dual of the vacuum is {}, expected 0", d[0]),
            );
        }
        for i in 0..r {
            if d[d[i]] != i {
                push(
                    Axiom::Involution,
                    vec![i],
                    format!("dual(dual({i})) = {}, not {i}", d[d[i]]),
                );
            }
        }

        for j in 0..r {
            for k in 0..r {
                let expect = u32::from(j == k);
                if self.n(0, j, k) != expect {
                    push(
                        Axiom::Unit,
                        vec![0, j, k],
                        format!("N[0,{j}→{k}] = {}, expected {expect}", self.n(0, j, k)),
                    );
                }
                if j != 0 && self.n(j, 0, k) != expect {
                    push(
                        Axiom::Unit,
                        vec![j, 0, k],
                        format!("N[{j},0→{k}] = {}, expected {expect}", self.n(j, 0, k)),
                    );
                }
            }
        }

        // (x_i x_j) x_k and x_i (x_j x_k), accumulated over their supports
        let support: Vec<Vec<(usize, u64)>> = (0..r * r)
            .map(|p| {
                self.fuse(p / r, p % r)
                    .map(|(k, m)| (k, u64::from(m)))
                    .collect()
            })
            .collect();
        let mut lhs = vec![0u64; r];
        let mut rhs = vec![0u64; r];
        let mut touched: Vec<usize> = Vec::new();
        for i in 0..r {
            for j in 0..r {
                for k in 0..r {
                    for &(m, a) in &support[i * r + j] {
                        for &(l, b) in &support[m * r + k] {
                            lhs[l] += a * b;
                            touched.push(l);
                        }
                    }
                    for &(m, a) in &support[j * r + k] {
                        for &(l, b) in &support[i * r + m] {
                            rhs[l] += a * b;
                            touched.push(l);
                        }
                    }
                    touched.sort_unstable();
                    touched.dedup();
                    for &l in &touched {
                        if lhs[l] != rhs[l] {
                            push(
                                Axiom::Associativity,
                                vec![i, j, k, l],
                                format!(
                                    "((x{i}x{j})x{k})→x{l} = {} but (x{i}(x{j}x{k}))→x{l} = {}",
                                    lhs[l], rhs[l]
                                ),
                            );
                        }
                        lhs[l] = 0;
                        rhs[l] = 0;
                    }
                    touched.clear();
                }
            }
        }

        for i in 0..r {
            for j in 0..r {
                for k in 0..r {
                    let a = self.n(i, j, k);
                    let b = self.n(d[j], d[i], d[k]);
                    if a != b {
                        push(
                            Axiom::DualProduct,
                            vec![i, j, k],
                            format!(
                                "N[{i},{j}→{k}] = {a} but N[{},{}→{}] = {b}",
                                d[j], d[i], d[k]
                            ),
                        );
                    }
                }
            }
        }

        for (i, &di) in d.iter().enumerate() {
            let m = self.n(i, di, 0);
            if m != 1 {
                push(
                    Axiom::VacuumMultiplicity,
                    vec![i],
                    format!("x{i} × dual contains the vacuum {m} times, expected once"),
                );
            }
        }

        if axioms == AxiomSet::Standard {
            for (i, &di) in d.iter().enumerate() {
                for j in 0..r {
                    if j != di && self.n(i, j, 0) != 0 {
                        push(
                            Axiom::VacuumChannel,
                            vec![i, j],
                            format!(
                                "N[{i},{j}→0] = {} although {j} is not the dual of {i}",
                                self.n(i, j, 0)
                            ),
                        );
                    }
                }
            }
        }

        for i in 0..r {
            for j in 0..r {
                let a = self.n(i, d[i], j);
                let b = self.n(i, d[i], d[j]);
                if a != b {
                    push(
                        Axiom::AdjointSymmetry,
                        vec![i, j],
                        format!(
                            "N[{i},{}→{j}] = {a} but N[{i},{}→{}] = {b}",
                            d[i], d[i], d[j]
                        ),
                    );
                }
            }
        }

        ValidationReport::from_violations(out)
    }

    /// Same tensor and dual map, ignoring display names.
    pub fn same_structure(&self, other: &FusionRule) -> bool {
        self.dual == other.dual && self.tensor == other.tensor
    }

    /// Applies a label permutation: label `i` of `self` becomes label `perm[i]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<FusionRule> {
        let r = self.rank();
        let mut seen = vec![false; r];
        if perm.len() != r || perm.iter().any(|&p| p >= r || std::mem::replace(&mut seen[p], true)) {
            return Err(Error::Structural("relabeling is not a permutation".into()));
        }
        if perm[0] != 0 {
            return Err(Error::Structural("relabeling must fix the vacuum".into()));
        }
        let mut inv = vec![0; r];
        for (i, &p) in perm.iter().enumerate() {
            inv[p] = i;
        }
        let labels = (0..r).map(|p| self.labels[inv[p]].clone()).collect();
        let dual = (0..r).map(|p| perm[self.dual[inv[p]]]).collect();
        FusionRule::from_fn(labels, dual, |i, j, k| self.n(inv[i], inv[j], inv[k]))
    }
}

impl fmt::Display for FusionRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "rank {}: {}", self.rank(), self.labels.join(", "))?;
        for i in 1..self.rank() {
            for j in 1..self.rank() {
                writeln!(f, "  {}", self.format_product(i, j))?;
            }
        }
        Ok(())
    }
}

/// Direct product `a ⊠ b`.
///
/// Label `(i, p)` sits at index `i * rank(b) + p`, so `(1, 1)` is index 0.
pub fn product(a: &FusionRule, b: &FusionRule) -> FusionRule {
    let rb = b.rank();
    let split = |x: usize| (x / rb, x % rb);
    let labels = (0..a.rank() * rb)
        .map(|x| {
            let (i, p) = split(x);
            format!("({},{})", a.label(i), b.label(p))
        })
        .collect();
    let dual = (0..a.rank() * rb)
        .map(|x| {
            let (i, p) = split(x);
            a.dual(i) * rb + b.dual(p)
        })
        .collect();
    FusionRule::from_fn(labels, dual, |x, y, z| {
        let ((i, p), (j, q), (k, s)) = (split(x), split(y), split(z));
        a.n(i, j, k) * b.n(p, q, s)
    })
    .expect("product of well-formed rules is well-formed")
}
