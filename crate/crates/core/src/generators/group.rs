//! Finite groups given by Cayley tables.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::error::{Error, Result};

/// A finite group with elements `0..order`, identity at 0.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FiniteGroup {
    name: String,
    order: usize,
    /// Row-major: `table[a * order + b] = a·b`.
    table: Vec<usize>,
    #[serde(skip)]
    inverse: Vec<usize>,
}

impl FiniteGroup {
    /// Checks the Latin-square, identity and associativity conditions.
    pub fn from_table(name: impl Into<String>, order: usize, table: Vec<usize>) -> Result<Self> {
        let name = name.into();
        if order == 0 {
            return Err(Error::Structural("group order must be positive".into()));
        }
        if table.len() != order * order {
            return Err(Error::Structural(format!(
                "Cayley table has {} entries, expected {}",
                table.len(),
                order * order
            )));
        }
        if let Some(&bad) = table.iter().find(|&&x| x >= order) {
            return Err(Error::Structural(format!(
                "Cayley table entry {bad} out of range for order {order}"
            )));
        }
        let at = |a: usize, b: usize| table[a * order + b];
        for a in 0..order {
            let mut row = vec![false; order];
            let mut col = vec![false; order];
            for b in 0..order {
                if std::mem::replace(&mut row[at(a, b)], true)
                    || std::mem::replace(&mut col[at(b, a)], true)
                {
                    return Err(Error::Structural(format!(
                        "Cayley table is not a Latin square (row/column {a})"
                    )));
                }
            }
            if at(0, a) != a || at(a, 0) != a {
                return Err(Error::Structural(
                    "element 0 is not a two-sided identity".into(),
                ));
            }
        }
        for a in 0..order {
            for b in 0..order {
                for c in 0..order {
                    if at(at(a, b), c) != at(a, at(b, c)) {
                        return Err(Error::Structural(format!(
                            "Cayley table is not associative at ({a}, {b}, {c})"
                        )));
                    }
                }
            }
        }
        let inverse = (0..order)
            .map(|a| (0..order).find(|&b| at(a, b) == 0).unwrap())
            .collect();
        Ok(FiniteGroup {
            name,
            order,
            table,
            inverse,
        })
    }

    /// Closes `generators` under `mul` and indexes the result, identity first
    /// and the rest in the natural order of `T`.
    pub fn from_generators<T, F>(name: impl Into<String>, identity: T, generators: &[T], mul: F) -> Self
    where
        T: Ord + Clone,
        F: Fn(&T, &T) -> T,
    {
        let mut elements: BTreeSet<T> = BTreeSet::new();
        elements.insert(identity.clone());
        let mut frontier = vec![identity.clone()];
        while let Some(x) = frontier.pop() {
            for g in generators {
                let y = mul(&x, g);
                if elements.insert(y.clone()) {
                    frontier.push(y);
                }
            }
        }
        let mut list: Vec<T> = Vec::with_capacity(elements.len());
        list.push(identity.clone());
        list.extend(elements.into_iter().filter(|e| *e != identity));
        let index: BTreeMap<&T, usize> = list.iter().enumerate().map(|(i, e)| (e, i)).collect();
        let n = list.len();
        let mut table = Vec::with_capacity(n * n);
        for a in &list {
            for b in &list {
                table.push(index[&mul(a, b)]);
            }
        }
        Self::from_table(name, n, table).expect("closure of generators is a group")
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn table(&self) -> &[usize] {
        &self.table
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b]
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    /// `a⁻¹ b⁻¹ a b`.
    pub fn commutator(&self, a: usize, b: usize) -> usize {
        self.mul(self.mul(self.inv(a), self.inv(b)), self.mul(a, b))
    }

    /// `x a x⁻¹`.
    pub fn conjugate(&self, x: usize, a: usize) -> usize {
        self.mul(self.mul(x, a), self.inv(x))
    }

    pub fn commutes(&self, a: usize, b: usize) -> bool {
        self.mul(a, b) == self.mul(b, a)
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (0..a).all(|b| self.commutes(a, b)))
    }

    /// Subgroup generated by `elements`, as a sorted list.
    pub fn generated_subgroup(&self, elements: impl IntoIterator<Item = usize>) -> Vec<usize> {
        let gens: Vec<usize> = elements.into_iter().collect();
        let mut seen = vec![false; self.order];
        seen[0] = true;
        let mut frontier = vec![0];
        while let Some(x) = frontier.pop() {
            for &g in &gens {
                let y = self.mul(x, g);
                if !std::mem::replace(&mut seen[y], true) {
                    frontier.push(y);
                }
            }
        }
        (0..self.order).filter(|&x| seen[x]).collect()
    }

    /// Conjugacy classes, each sorted, ordered by smallest element.
    pub fn conjugacy_classes(&self) -> Vec<Vec<usize>> {
        let mut class_of = vec![usize::MAX; self.order];
        let mut classes = Vec::new();
        for a in 0..self.order {
            if class_of[a] != usize::MAX {
                continue;
            }
            let members: BTreeSet<usize> = (0..self.order).map(|x| self.conjugate(x, a)).collect();
            for &m in &members {
                class_of[m] = classes.len();
            }
            classes.push(members.into_iter().collect());
        }
        classes
    }

    pub fn centralizer(&self, a: usize) -> Vec<usize> {
        (0..self.order).filter(|&x| self.commutes(x, a)).collect()
    }

    /// The subgroup on `elements` (which must contain 0 and be closed) as a
    /// group in its own right; element `t` of the result is `elements[t]`.
    pub fn subgroup(&self, name: impl Into<String>, elements: &[usize]) -> Result<FiniteGroup> {
        let pos = |x: usize| {
            elements.iter().position(|&e| e == x).ok_or_else(|| {
                Error::Structural(format!("element set {elements:?} is not closed"))
            })
        };
        if elements.first() != Some(&0) {
            return Err(Error::Structural("subgroup must list the identity first".into()));
        }
        let mut table = Vec::with_capacity(elements.len() * elements.len());
        for &a in elements {
            for &b in elements {
                table.push(pos(self.mul(a, b))?);
            }
        }
        FiniteGroup::from_table(name, elements.len(), table)
    }

    /// Direct product; `(a, b)` sits at index `a * |H| + b`.
    pub fn direct_product(&self, other: &FiniteGroup) -> FiniteGroup {
        let (n, m) = (self.order, other.order);
        let mut table = Vec::with_capacity(n * m * n * m);
        for x in 0..n * m {
            for y in 0..n * m {
                let (a, b) = (x / m, x % m);
                let (c, d) = (y / m, y % m);
                table.push(self.mul(a, c) * m + other.mul(b, d));
            }
        }
        FiniteGroup::from_table(format!("{}x{}", self.name, other.name), n * m, table)
            .expect("direct product of groups is a group")
    }

    /// The lower central series `G₁ = G, G_{n+1} = [G, G_n]`, stopping at the
    /// trivial subgroup or at the first repeated term.
    pub fn lower_central_series(&self) -> Vec<Vec<usize>> {
        let mut series = vec![(0..self.order).collect::<Vec<_>>()];
        loop {
            let current = series.last().unwrap();
            if current.len() == 1 {
                return series;
            }
            let commutators: BTreeSet<usize> = (0..self.order)
                .flat_map(|g| current.iter().map(move |&h| (g, h)))
                .map(|(g, h)| self.commutator(g, h))
                .collect();
            let next = self.generated_subgroup(commutators);
            if &next == current {
                return series;
            }
            series.push(next);
        }
    }

    /// Nilpotency class of the group, `None` if the group is not nilpotent.
    ///
    /// The trivial group has class 0 and nontrivial abelian groups class 1.
    pub fn nilpotency_class(&self) -> Option<usize> {
        let series = self.lower_central_series();
        (series.last().unwrap().len() == 1).then(|| series.len() - 1)
    }

    pub fn is_nilpotent(&self) -> bool {
        self.nilpotency_class().is_some()
    }

    // --- catalogue ---

    pub fn trivial() -> Self {
        Self::cyclic(1)
    }

    pub fn cyclic(n: usize) -> Self {
        let table = (0..n * n).map(|x| (x / n + x % n) % n).collect();
        Self::from_table(format!("Z{n}"), n, table).expect("cyclic table is valid")
    }

    /// Symmetric group on `n` points.
    pub fn symmetric(n: usize) -> Self {
        let identity: Vec<u8> = (0..n as u8).collect();
        let mut gens = Vec::new();
        if n >= 2 {
            let mut swap = identity.clone();
            swap.swap(0, 1);
            gens.push(swap);
            let cycle: Vec<u8> = (0..n).map(|i| ((i + 1) % n) as u8).collect();
            gens.push(cycle);
        }
        Self::from_generators(format!("S{n}"), identity, &gens, |p, q| compose(p, q))
    }

    /// Alternating group on `n ≥ 3` points, generated by 3-cycles.
    pub fn alternating(n: usize) -> Self {
        let identity: Vec<u8> = (0..n as u8).collect();
        let gens: Vec<Vec<u8>> = (2..n)
            .map(|k| {
                let mut p = identity.clone();
                p[0] = 1;
                p[1] = k as u8;
                p[k] = 0;
                p
            })
            .collect();
        Self::from_generators(format!("A{n}"), identity, &gens, |p, q| compose(p, q))
    }

    /// Dihedral group of order `2n`, the symmetries of an `n`-gon.
    pub fn dihedral(n: usize) -> Self {
        let identity: Vec<u8> = (0..n as u8).collect();
        let rotation: Vec<u8> = (0..n).map(|i| ((i + 1) % n) as u8).collect();
        let reflection: Vec<u8> = (0..n).map(|i| ((n - i) % n) as u8).collect();
        Self::from_generators(format!("D{n}"), identity, &[rotation, reflection], |p, q| compose(p, q))
    }

    /// Quaternion group `{±1, ±i, ±j, ±k}`.
    pub fn quaternion() -> Self {
        // Unit quaternions with integer coordinates (w, x, y, z).
        fn hamilton(a: &[i8; 4], b: &[i8; 4]) -> [i8; 4] {
            [
                a[0] * b[0] - a[1] * b[1] - a[2] * b[2] - a[3] * b[3],
                a[0] * b[1] + a[1] * b[0] + a[2] * b[3] - a[3] * b[2],
                a[0] * b[2] - a[1] * b[3] + a[2] * b[0] + a[3] * b[1],
                a[0] * b[3] + a[1] * b[2] - a[2] * b[1] + a[3] * b[0],
            ]
        }
        Self::from_generators("Q8", [1, 0, 0, 0], &[[0, 1, 0, 0], [0, 0, 1, 0]], hamilton)
    }

    pub fn klein_four() -> Self {
        let z2 = Self::cyclic(2);
        let mut g = z2.direct_product(&z2);
        g.name = "Z2xZ2".into();
        g
    }

    /// Looks up a built-in group by name (`z1`…`z16`, `z2xz2`, `s3`, `d4`, `d5`, `q8`, `a4`, …).
    pub fn builtin(name: &str) -> Result<Self> {
        let key = name.to_ascii_lowercase();
        if let Some(n) = key.strip_prefix('z').and_then(|s| s.parse::<usize>().ok()) {
            if (1..=16).contains(&n) {
                return Ok(Self::cyclic(n));
            }
        }
        match key.as_str() {
            "trivial" => Ok(Self::trivial()),
            "z2xz2" | "v4" | "klein" => Ok(Self::klein_four()),
            "s3" => Ok(Self::symmetric(3)),
            "s4" => Ok(Self::symmetric(4)),
            "d3" => Ok(Self::dihedral(3)),
            "d4" => Ok(Self::dihedral(4)),
            "d5" => Ok(Self::dihedral(5)),
            "d6" => Ok(Self::dihedral(6)),
            "q8" => Ok(Self::quaternion()),
            "a4" => Ok(Self::alternating(4)),
            _ => Err(Error::Unknown {
                kind: "group",
                name: name.to_string(),
                available: Self::builtin_names().iter().map(|s| s.to_string()).collect(),
            }),
        }
    }

    pub fn builtin_names() -> &'static [&'static str] {
        &[
            "z1..z16", "z2xz2", "s3", "s4", "d3", "d4", "d5", "d6", "q8", "a4",
        ]
    }

    /// Every group accepted by [`FiniteGroup::builtin`], one per isomorphism
    /// class of name (`d3` duplicates `s3` and is omitted).
    pub fn builtin_groups() -> Vec<FiniteGroup> {
        let mut groups: Vec<FiniteGroup> = (1..=16).map(Self::cyclic).collect();
        groups.extend([
            Self::klein_four(),
            Self::symmetric(3),
            Self::symmetric(4),
            Self::dihedral(4),
            Self::dihedral(5),
            Self::dihedral(6),
            Self::quaternion(),
            Self::alternating(4),
        ]);
        groups
    }

    /// Groups for the double-vs-nilpotency check, nilpotent and not.
    pub fn catalogue() -> Vec<FiniteGroup> {
        vec![
            Self::cyclic(2),
            Self::cyclic(3),
            Self::cyclic(4),
            Self::klein_four(),
            Self::cyclic(6),
            Self::quaternion(),
            Self::dihedral(4),
            Self::symmetric(3),
            Self::dihedral(5),
            Self::alternating(4),
        ]
    }
}

/// `(p ∘ q)(i) = p(q(i))`.
fn compose(p: &[u8], q: &[u8]) -> Vec<u8> {
    q.iter().map(|&i| p[i as usize]).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orders() {
        assert_eq!(FiniteGroup::symmetric(3).order(), 6);
        assert_eq!(FiniteGroup::symmetric(4).order(), 24);
        assert_eq!(FiniteGroup::alternating(4).order(), 12);
        assert_eq!(FiniteGroup::dihedral(4).order(), 8);
        assert_eq!(FiniteGroup::dihedral(5).order(), 10);
        assert_eq!(FiniteGroup::quaternion().order(), 8);
        assert_eq!(FiniteGroup::klein_four().order(), 4);
    }

    #[test]
    fn class_counts() {
        assert_eq!(FiniteGroup::symmetric(3).conjugacy_classes().len(), 3);
        assert_eq!(FiniteGroup::quaternion().conjugacy_classes().len(), 5);
        assert_eq!(FiniteGroup::dihedral(4).conjugacy_classes().len(), 5);
        assert_eq!(FiniteGroup::dihedral(5).conjugacy_classes().len(), 4);
        assert_eq!(FiniteGroup::alternating(4).conjugacy_classes().len(), 4);
    }

    #[test]
    fn quaternion_is_not_dihedral() {
        // Q8 has a single involution, D4 has five.
        let involutions = |g: &FiniteGroup| (1..g.order()).filter(|&a| g.mul(a, a) == 0).count();
        assert_eq!(involutions(&FiniteGroup::quaternion()), 1);
        assert_eq!(involutions(&FiniteGroup::dihedral(4)), 5);
    }

    #[test]
    fn nilpotency() {
        assert_eq!(FiniteGroup::cyclic(6).nilpotency_class(), Some(1));
        assert_eq!(FiniteGroup::trivial().nilpotency_class(), Some(0));
        let s3 = FiniteGroup::symmetric(3);
        assert_eq!(s3.nilpotency_class(), None);
        // stabilizes at A3
        assert_eq!(s3.lower_central_series().last().unwrap().len(), 3);
        assert_eq!(FiniteGroup::dihedral(4).nilpotency_class(), Some(2));
        assert_eq!(FiniteGroup::quaternion().nilpotency_class(), Some(2));
        assert_eq!(FiniteGroup::alternating(4).nilpotency_class(), None);
        assert_eq!(FiniteGroup::dihedral(5).nilpotency_class(), None);
    }

    #[test]
    fn rejects_bad_tables() {
        assert!(FiniteGroup::from_table("x", 2, vec![0, 1, 1, 1]).is_err());
        assert!(FiniteGroup::from_table("x", 2, vec![1, 0, 0, 1]).is_err());
        assert!(FiniteGroup::from_table("x", 2, vec![0, 1, 1]).is_err());
        // Latin square with identity that is not associative (order 5 loop).
        let loop5 = vec![
            0, 1, 2, 3, 4, //
            1, 0, 3, 4, 2, //
            2, 4, 0, 1, 3, //
            3, 2, 4, 0, 1, //
            4, 3, 1, 2, 0,
        ];
        assert!(FiniteGroup::from_table("loop", 5, loop5).is_err());
    }

    #[test]
    fn subgroup_and_product() {
        let s3 = FiniteGroup::symmetric(3);
        let c = s3.centralizer(1);
        let sub = s3.subgroup("C", &c).unwrap();
        assert_eq!(sub.order(), c.len());
        let p = FiniteGroup::cyclic(2).direct_product(&FiniteGroup::cyclic(3));
        assert_eq!(p.order(), 6);
        assert!(p.is_abelian());
    }

    #[test]
    fn builtin_lookup() {
        assert_eq!(FiniteGroup::builtin("Z16").unwrap().order(), 16);
        assert_eq!(FiniteGroup::builtin("q8").unwrap().order(), 8);
        assert!(matches!(
            FiniteGroup::builtin("z17"),
            Err(Error::Unknown { .. })
        ));
    }
}
