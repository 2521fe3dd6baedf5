//! Fusion rules of the Drinfeld double `D(G)` (untwisted Dijkgraaf–Witten theory).
//!
//! Simples are pairs `(class of a, irrep χ of C(a))`. The character of such a
//! simple on a commuting pair `(g, h)` is
//!
//! ```text
//! Θ(g, h) = χ(x_g⁻¹ h x_g)   if g is in the class (x_g a x_g⁻¹ = g)
//!         = 0                otherwise
//! ```
//!
//! Tensor products convolve in the flux coordinate and multiply pointwise in
//! the charge coordinate, and multiplicities are inner products
//! `N_{XY}^Z = |G|⁻¹ Σ_{(g,h)} (Θ_X ⋆ Θ_Y)(g, h) · conj Θ_Z(g, h)`.

use num_complex::Complex64;

use super::chartab::{character_table_with_cap, CharacterTable, DEFAULT_ORDER_CAP};
use super::group::FiniteGroup;
use crate::error::{Error, Result};
use crate::rule::FusionRule;

/// One simple object of `D(G)`.
#[derive(Debug, Clone)]
pub struct DoubleSimple {
    pub class: usize,
    pub irrep: usize,
    /// `Θ` on every commuting pair, indexed like [`DoubleData::pairs`].
    pub character: Vec<Complex64>,
}

/// Intermediate data of the construction, exposed for testing and reporting.
#[derive(Debug, Clone)]
pub struct DoubleData {
    pub classes: Vec<Vec<usize>>,
    /// Character table of the centralizer of each class representative.
    pub centralizer_tables: Vec<CharacterTable>,
    /// All commuting pairs `(g, h)`, lexicographic.
    pub pairs: Vec<(usize, usize)>,
    pub simples: Vec<DoubleSimple>,
}

pub fn double_data(group: &FiniteGroup, cap: usize) -> Result<DoubleData> {
    let order = group.order();
    if order > cap {
        return Err(Error::Capacity(format!(
            "group {} has order {order}, above the cap of {cap}",
            group.name()
        )));
    }
    let classes = group.conjugacy_classes();
    let mut pair_index = vec![usize::MAX; order * order];
    let mut pairs = Vec::new();
    for g in 0..order {
        for h in 0..order {
            if group.commutes(g, h) {
                pair_index[g * order + h] = pairs.len();
                pairs.push((g, h));
            }
        }
    }

    let mut centralizer_tables = Vec::with_capacity(classes.len());
    let mut simples = Vec::new();
    for (c, class) in classes.iter().enumerate() {
        let a = class[0];
        let cent = group.centralizer(a);
        let sub = group.subgroup(format!("C({a})"), &cent)?;
        let table = character_table_with_cap(&sub, cap)?;
        let position = |x: usize| cent.binary_search(&x).expect("element lies in the centralizer");
        // x_g with x_g a x_g⁻¹ = g, smallest such element
        let transversal: Vec<(usize, usize)> = class
            .iter()
            .map(|&g| {
                let x = (0..order)
                    .find(|&x| group.conjugate(x, a) == g)
                    .expect("g is conjugate to a");
                (g, x)
            })
            .collect();
        for irrep in 0..table.num_irreps() {
            let mut character = vec![Complex64::new(0.0, 0.0); pairs.len()];
            for &(g, x) in &transversal {
                for h in group.centralizer(g) {
                    let inner = group.mul(group.mul(group.inv(x), h), x);
                    character[pair_index[g * order + h]] = table.value(irrep, position(inner));
                }
            }
            simples.push(DoubleSimple {
                class: c,
                irrep,
                character,
            });
        }
        centralizer_tables.push(table);
    }
    Ok(DoubleData {
        classes,
        centralizer_tables,
        pairs,
        simples,
    })
}

pub fn drinfeld_double(group: &FiniteGroup, tolerance: f64) -> Result<FusionRule> {
    drinfeld_double_with_cap(group, tolerance, DEFAULT_ORDER_CAP)
}

pub fn drinfeld_double_with_cap(group: &FiniteGroup, tolerance: f64, cap: usize) -> Result<FusionRule> {
    let data = double_data(group, cap)?;
    let order = group.order();
    let rank = data.simples.len();
    let pair_index = |g: usize, h: usize| {
        data.pairs
            .binary_search(&(g, h))
            .expect("pair commutes")
    };

    let mut class_of = vec![0usize; order];
    for (c, class) in data.classes.iter().enumerate() {
        for &g in class {
            class_of[g] = c;
        }
    }
    let mut simples_of_class: Vec<Vec<usize>> = vec![Vec::new(); data.classes.len()];
    for (z, s) in data.simples.iter().enumerate() {
        simples_of_class[s.class].push(z);
    }

    let zero = Complex64::new(0.0, 0.0);
    let mut tensor = vec![0u32; rank * rank * rank];
    let mut product = vec![zero; data.pairs.len()];
    let mut touched: Vec<usize> = Vec::new();
    let mut raw = vec![zero; rank];
    for (x, sx) in data.simples.iter().enumerate() {
        let class_x = &data.classes[sx.class];
        for (y, sy) in data.simples.iter().enumerate() {
            let class_y = &data.classes[sy.class];
            for &g1 in class_x {
                for &g2 in class_y {
                    let g = group.mul(g1, g2);
                    for h in 0..order {
                        if group.commutes(g1, h) && group.commutes(g2, h) {
                            let v = sx.character[pair_index(g1, h)] * sy.character[pair_index(g2, h)];
                            let p = pair_index(g, h);
                            product[p] += v;
                            touched.push(p);
                        }
                    }
                }
            }
            touched.sort_unstable();
            touched.dedup();
            // Θ_Z vanishes off its own class
            let mut candidates: Vec<usize> = Vec::new();
            for &p in &touched {
                let c = class_of[data.pairs[p].0];
                for &z in &simples_of_class[c] {
                    raw[z] += product[p] * data.simples[z].character[p].conj();
                }
                candidates.push(c);
                product[p] = zero;
            }
            touched.clear();
            candidates.sort_unstable();
            candidates.dedup();
            for z in candidates.iter().flat_map(|&c| simples_of_class[c].iter().copied()) {
                let value = raw[z] / order as f64;
                raw[z] = zero;
                let rounded = value.re.round();
                let deviation = (value - rounded).norm();
                if deviation > tolerance || rounded < 0.0 {
                    return Err(Error::Numerical {
                        message: format!(
                            "D({}) multiplicity N[{x},{y}→{z}] = {value} is not a non-negative integer",
                            group.name()
                        ),
                        residual: deviation,
                    });
                }
                tensor[(x * rank + y) * rank + z] = rounded as u32;
            }
        }
    }

    let mut dual = Vec::with_capacity(rank);
    for x in 0..rank {
        let candidates: Vec<usize> = (0..rank)
            .filter(|&z| tensor[(x * rank + z) * rank] == 1)
            .collect();
        match candidates.as_slice() {
            [z] => dual.push(*z),
            _ => {
                return Err(Error::Numerical {
                    message: format!("simple {x} of D({}) has no unique dual", group.name()),
                    residual: candidates.len() as f64,
                })
            }
        }
    }

    let labels = data
        .simples
        .iter()
        .enumerate()
        .map(|(i, s)| {
            if i == 0 {
                "1".to_string()
            } else {
                format!("[{}|χ{}]", data.classes[s.class][0], s.irrep)
            }
        })
        .collect();
    FusionRule::new(labels, dual, tensor)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fpdim::fp_dimensions;

    #[test]
    fn toric_code_from_z2() {
        let d = drinfeld_double(&FiniteGroup::cyclic(2), 1e-6).unwrap();
        assert_eq!(d.rank(), 4);
        assert!(d.validate().valid);
        assert!(d.is_pointed());
    }

    #[test]
    fn s3_double() {
        let d = drinfeld_double(&FiniteGroup::symmetric(3), 1e-6).unwrap();
        assert_eq!(d.rank(), 8);
        let report = d.validate();
        assert!(report.valid, "{:?}", &report.violations[..report.violations.len().min(5)]);
        let fp = fp_dimensions(&d, 1e-6).unwrap();
        let mut dims: Vec<i64> = fp.dims.iter().map(|x| x.round() as i64).collect();
        dims.sort();
        assert_eq!(dims, vec![1, 1, 2, 2, 2, 2, 3, 3]);
        assert!((fp.global - 36.0).abs() < 1e-6);
    }

    /// Orbits of commuting pairs under simultaneous conjugation, counted directly.
    fn commuting_pair_orbits(g: &FiniteGroup) -> usize {
        let n = g.order();
        let mut seen = vec![false; n * n];
        let mut orbits = 0;
        for a in 0..n {
            for b in 0..n {
                if !g.commutes(a, b) || seen[a * n + b] {
                    continue;
                }
                orbits += 1;
                for x in 0..n {
                    seen[g.conjugate(x, a) * n + g.conjugate(x, b)] = true;
                }
            }
        }
        orbits
    }

    #[test]
    fn rank_counts_commuting_pair_orbits() {
        for g in FiniteGroup::catalogue() {
            let data = double_data(&g, DEFAULT_ORDER_CAP).unwrap();
            let per_class: usize = data.centralizer_tables.iter().map(|t| t.num_irreps()).sum();
            assert_eq!(per_class, data.simples.len());
            assert_eq!(per_class, commuting_pair_orbits(&g), "{}", g.name());
            // every commuting pair is counted once per class
            assert_eq!(data.pairs.len(), g.order() * data.classes.len());
        }
    }

    #[test]
    fn cap_is_enforced() {
        assert!(matches!(
            drinfeld_double_with_cap(&FiniteGroup::quaternion(), 1e-6, 4),
            Err(Error::Capacity(_))
        ));
    }
}
