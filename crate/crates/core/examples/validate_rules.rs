//! Axiom checks on the fixture catalogue and on a deliberately broken rule.

use acyclic_fusion::explorer::{enumerate, EnumSpec};
use acyclic_fusion::generators::fixture_catalogue;
use acyclic_fusion::{AxiomSet, FusionRule};

fn main() {
    for (name, rule) in fixture_catalogue() {
        let report = rule.validate();
        println!("{name:10} rank {:2}  valid {}", rule.rank(), report.valid);
    }

    // x·x = 2·1 + x: the vacuum appears twice
    let broken = FusionRule::new(
        FusionRule::default_labels(2),
        vec![0, 1],
        vec![1, 0, 0, 1, 0, 1, 2, 1],
    )
    .expect("shape is fine");
    for set in [AxiomSet::Standard, AxiomSet::Literal] {
        let report = broken.validate_with(set);
        println!("\nbroken rule under {set:?}: {} violation(s)", report.violations.len());
        for v in report.violations.iter().take(5) {
            println!("  [{}] {}", v.axiom, v.message);
        }
    }

    // accepted only when the vacuum-channel condition is dropped
    let literal = enumerate(&EnumSpec::new(3, 1).literal()).unwrap();
    if let Some(rule) = literal.iter().find(|r| r.validate().fails_only_vacuum_channel()) {
        println!("
literal-only rule:");
        for i in 1..rule.rank() {
            for j in 1..rule.rank() {
                println!("  {}", rule.format_product(i, j));
            }
        }
    }
}
