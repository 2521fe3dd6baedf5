//! Character tables by the Burnside class-algebra method.
//!
//! The class sums `C_1, …, C_h` span the centre of the group algebra. With the
//! trace form `⟨a, b⟩ = τ(a b*)` they are orthogonal with `‖C_j‖² = |G|·|C_j|`,
//! and multiplication by `C_j` is a normal operator whose adjoint is
//! multiplication by the inverse class. In the normalized basis the
//! multiplication matrices are therefore simultaneously unitarily
//! diagonalizable, and a generic Hermitian combination of them has the
//! primitive central idempotents as its (non-degenerate) eigenvectors. The
//! eigenvalue of `C_j` on the `r`-th idempotent is the central character
//! `ω_r(C_j) = |C_j| χ_r(g_j) / χ_r(1)`, from which degrees and characters
//! follow by the first orthogonality relation.

use nalgebra::{DMatrix, SymmetricEigen};
use num_complex::Complex64;
use serde::Serialize;

use super::group::FiniteGroup;
use crate::error::{Error, Result};

/// Largest group order accepted by [`character_table`] and the Drinfeld double.
pub const DEFAULT_ORDER_CAP: usize = 24;

const ORTHOGONALITY_TOLERANCE: f64 = 1e-6;
const MAX_ATTEMPTS: usize = 16;

#[derive(Debug, Clone, Serialize)]
pub struct CharacterTable {
    /// Conjugacy classes ordered by representative (smallest element).
    pub classes: Vec<Vec<usize>>,
    /// `characters[r][c] = χ_r(g_c)`.
    pub characters: Vec<Vec<Complex64>>,
    pub degrees: Vec<usize>,
    #[serde(skip)]
    class_of: Vec<usize>,
}

impl CharacterTable {
    pub fn num_irreps(&self) -> usize {
        self.degrees.len()
    }

    pub fn class_of(&self, element: usize) -> usize {
        self.class_of[element]
    }

    /// `χ_r(g)` for a group element.
    pub fn value(&self, irrep: usize, element: usize) -> Complex64 {
        self.characters[irrep][self.class_of[element]]
    }

    /// Largest deviation from `Σ_c |c| χ_r(c) conj(χ_s(c)) = |G| δ_{rs}`.
    pub fn orthogonality_residual(&self) -> f64 {
        let order: usize = self.classes.iter().map(Vec::len).sum();
        let n = self.num_irreps();
        let mut worst = 0.0f64;
        for r in 0..n {
            for s in 0..n {
                let sum: Complex64 = self
                    .classes
                    .iter()
                    .enumerate()
                    .map(|(c, cls)| {
                        self.characters[r][c] * self.characters[s][c].conj() * cls.len() as f64
                    })
                    .sum();
                let expect = if r == s { order as f64 } else { 0.0 };
                worst = worst.max((sum - expect).norm());
            }
        }
        worst
    }
}

/// Structure constants `coeff[j][i][k]`: number of `(x, y) ∈ C_j × C_i` with `xy = g_k`.
fn class_coefficients(group: &FiniteGroup, classes: &[Vec<usize>], class_of: &[usize]) -> Vec<Vec<Vec<u64>>> {
    let h = classes.len();
    let mut coeff = vec![vec![vec![0u64; h]; h]; h];
    for (j, cj) in classes.iter().enumerate() {
        for (i, ci) in classes.iter().enumerate() {
            for &x in cj {
                for &y in ci {
                    let z = group.mul(x, y);
                    let k = class_of[z];
                    if classes[k][0] == z {
                        coeff[j][i][k] += 1;
                    }
                }
            }
        }
    }
    coeff
}

fn mixing_weight(seed: usize, j: usize) -> f64 {
    // Golden-ratio and √2 Weyl sequences give distinct, irrational-looking weights.
    let t = (seed * 31 + j * 7 + 1) as f64;
    0.5 + (t * 0.618_033_988_749_895).fract() + 0.25 * (t * std::f64::consts::SQRT_2).fract()
}

pub fn character_table(group: &FiniteGroup) -> Result<CharacterTable> {
    character_table_with_cap(group, DEFAULT_ORDER_CAP)
}

pub fn character_table_with_cap(group: &FiniteGroup, cap: usize) -> Result<CharacterTable> {
    let order = group.order();
    if order > cap {
        return Err(Error::Capacity(format!(
            "group {} has order {order}, above the cap of {cap}",
            group.name()
        )));
    }
    let classes = group.conjugacy_classes();
    let h = classes.len();
    let mut class_of = vec![0; order];
    for (c, cls) in classes.iter().enumerate() {
        for &x in cls {
            class_of[x] = c;
        }
    }
    let coeff = class_coefficients(group, &classes, &class_of);
    let size: Vec<f64> = classes.iter().map(|c| c.len() as f64).collect();

    // A_j[k][i] = coeff[j][i][k] · sqrt(|C_k| / |C_i|)
    let mats: Vec<DMatrix<f64>> = (0..h)
        .map(|j| DMatrix::from_fn(h, h, |k, i| coeff[j][i][k] as f64 * (size[k] / size[i]).sqrt()))
        .collect();

    let mut last_residual = f64::INFINITY;
    for attempt in 0..MAX_ATTEMPTS {
        let mut herm = DMatrix::<Complex64>::zeros(h, h);
        for (j, a) in mats.iter().enumerate() {
            let (wa, wb) = (mixing_weight(attempt, j), mixing_weight(attempt + 101, j));
            let sym = a + a.transpose();
            let anti = a - a.transpose();
            herm += sym.map(|x| Complex64::new(wa * x, 0.0));
            herm += anti.map(|x| Complex64::new(0.0, wb * x));
        }
        let eig = SymmetricEigen::new(herm);
        let mut evals: Vec<f64> = eig.eigenvalues.iter().copied().collect();
        evals.sort_by(f64::total_cmp);
        let scale = evals.iter().map(|x| x.abs()).fold(1.0, f64::max);
        let min_gap = evals.windows(2).map(|w| w[1] - w[0]).fold(f64::INFINITY, f64::min);
        if h > 1 && min_gap < 1e-7 * scale {
            last_residual = min_gap;
            continue;
        }

        let mut rows = Vec::with_capacity(h);
        for r in 0..h {
            let v = eig.eigenvectors.column(r).into_owned();
            let omega: Vec<Complex64> = mats
                .iter()
                .map(|a| {
                    let av = a.map(|x| Complex64::new(x, 0.0)) * &v;
                    v.dotc(&av)
                })
                .collect();
            let norm: f64 = omega.iter().zip(&size).map(|(w, s)| w.norm_sqr() / s).sum();
            let degree_f = (order as f64 / norm).sqrt();
            let degree = degree_f.round() as usize;
            if degree == 0 || (degree_f - degree as f64).abs() > 1e-4 {
                last_residual = (degree_f - degree as f64).abs();
                rows.clear();
                break;
            }
            let chars: Vec<Complex64> = omega
                .iter()
                .zip(&size)
                .map(|(w, s)| clean(*w * degree as f64 / *s))
                .collect();
            rows.push((degree, chars));
        }
        if rows.len() != h {
            continue;
        }

        rows.sort_by(|(da, ca), (db, cb)| {
            let trivial = |c: &[Complex64]| c.iter().all(|z| (*z - 1.0).norm() < 1e-6);
            da.cmp(db)
                .then_with(|| trivial(cb).cmp(&trivial(ca)))
                .then_with(|| sort_key(ca).cmp(&sort_key(cb)))
        });
        let table = CharacterTable {
            classes: classes.clone(),
            degrees: rows.iter().map(|(d, _)| *d).collect(),
            characters: rows.into_iter().map(|(_, c)| c).collect(),
            class_of: class_of.clone(),
        };
        let residual = table.orthogonality_residual();
        let degree_sum: usize = table.degrees.iter().map(|d| d * d).sum();
        if residual <= ORTHOGONALITY_TOLERANCE && degree_sum == order {
            return Ok(table);
        }
        last_residual = residual;
    }
    Err(Error::Numerical {
        message: format!(
            "character table of {} failed the orthogonality checks",
            group.name()
        ),
        residual: last_residual,
    })
}

/// Snaps real and imaginary parts that are within 1e-10 of an integer.
fn clean(z: Complex64) -> Complex64 {
    let snap = |x: f64| if (x - x.round()).abs() < 1e-10 { x.round() + 0.0 } else { x };
    Complex64::new(snap(z.re), snap(z.im))
}

fn sort_key(chars: &[Complex64]) -> Vec<(i64, i64)> {
    // Descending real part then imaginary part, at 1e-6 resolution.
    chars
        .iter()
        .map(|z| (-(z.re * 1e6).round() as i64, -(z.im * 1e6).round() as i64))
        .collect()
}
