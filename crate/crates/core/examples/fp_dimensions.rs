//! Frobenius–Perron dimensions and integrality flags.

use acyclic_fusion::generators::{fixture_catalogue, su2k};
use acyclic_fusion::{fp_dimensions, FusionRule, DEFAULT_TOLERANCE};

fn show(name: &str, rule: &FusionRule) {
    let fp = fp_dimensions(rule, DEFAULT_TOLERANCE).expect("power iteration converges");
    let dims: Vec<String> = fp.dims.iter().map(|d| format!("{d:.4}")).collect();
    println!(
        "{name:12} global {:9.4}  integral {:5}  weakly integral {:5}  [{}]",
        fp.global,
        fp.is_integral,
        fp.is_weakly_integral,
        dims.join(" ")
    );
}

fn main() {
    for (name, rule) in fixture_catalogue() {
        show(name, &rule);
    }
    for k in 1..=6 {
        show(&format!("SU(2)_{k}"), &su2k(k));
    }
}
