//! Adjoint graphs: cycle witnesses for SU(2)_k and DOT for SO(8)_2.
//!
//! Pass a path to write the SO(8)_2 graph there; otherwise it goes to stdout.

use acyclic_fusion::generators::{named_fixture, su2k};
use acyclic_fusion::io::adjoint_dot;
use acyclic_fusion::is_acyclic;

fn main() -> std::io::Result<()> {
    for k in 1..=6 {
        let rule = su2k(k);
        let a = is_acyclic(&rule);
        match a.witness {
            None => println!("SU(2)_{k}: acyclic"),
            Some(w) => println!(
                "SU(2)_{k}: cycle ({}) with multiplicities {:?}",
                w.names(&rule).join(" -> "),
                w.multiplicities
            ),
        }
    }

    let dot = adjoint_dot(&named_fixture("so8_2").unwrap());
    match std::env::args().nth(1) {
        Some(path) => std::fs::write(path, dot),
        None => {
            println!();
            print!("{dot}");
            Ok(())
        }
    }
}
