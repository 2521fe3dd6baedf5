//! Character tables of the built-in non-abelian groups.

use acyclic_fusion::generators::{character_table, FiniteGroup};

fn main() {
    for g in [
        FiniteGroup::symmetric(3),
        FiniteGroup::quaternion(),
        FiniteGroup::dihedral(5),
        FiniteGroup::alternating(4),
    ] {
        let t = character_table(&g).expect("order within cap");
        let sizes: Vec<usize> = t.classes.iter().map(Vec::len).collect();
        println!("{} (class sizes {:?})", g.name(), sizes);
        for row in &t.characters {
            let cells: Vec<String> = row
                .iter()
                .map(|z| {
                    if z.im.abs() < 1e-9 {
                        format!("{:7.3}", z.re)
                    } else {
                        format!("{:.2}{:+.2}i", z.re, z.im)
                    }
                })
                .collect();
            println!("  {}", cells.join(" "));
        }
    }
}
