//! D(G) is acyclic exactly when G is nilpotent.

use acyclic_fusion::generators::{drinfeld_double, FiniteGroup};
use acyclic_fusion::{central_series, fp_dimensions, is_acyclic, DEFAULT_TOLERANCE};

fn main() {
    println!("{:6} {:>5} {:>5} {:>8} {:>10} {:>9} {:>6}", "G", "|G|", "rank", "global", "G nilp.", "acyclic", "class");
    for g in FiniteGroup::catalogue() {
        let d = drinfeld_double(&g, DEFAULT_TOLERANCE).expect("order within cap");
        let fp = fp_dimensions(&d, DEFAULT_TOLERANCE).unwrap();
        let class = central_series(&d)
            .class
            .map_or("-".to_string(), |c| c.to_string());
        println!(
            "{:6} {:>5} {:>5} {:>8.2} {:>10} {:>9} {:>6}",
            g.name(),
            g.order(),
            d.rank(),
            fp.global,
            g.is_nilpotent(),
            is_acyclic(&d).acyclic,
            class
        );
    }
}
