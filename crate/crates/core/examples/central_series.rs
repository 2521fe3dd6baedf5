//! Descending central series A ⊇ A_ad ⊇ (A_ad)_ad ⊇ … and nilpotency class.

use acyclic_fusion::central_series;
use acyclic_fusion::generators::{named_fixture, su2k};

fn main() {
    let mut rules: Vec<(String, _)> = ["so8_2", "rep_s3", "ty_z3", "toric", "ising"]
        .iter()
        .map(|&n| (n.to_string(), named_fixture(n).unwrap()))
        .collect();
    rules.push(("SU(2)_4".into(), su2k(4)));

    for (name, rule) in &rules {
        let series = central_series(rule);
        match series.class {
            Some(c) => println!("{name}: nilpotent of class {c}"),
            None => println!("{name}: not nilpotent, series stalls"),
        }
        for (n, term) in series.chain.iter().enumerate() {
            println!("  A({n}) = {{{}}}", term.names(rule).join(", "));
        }
    }
}
