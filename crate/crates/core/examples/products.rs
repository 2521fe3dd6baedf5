//! Direct products of fixtures: acyclic iff both factors are, and the
//! nilpotency class is the larger of the two.

use acyclic_fusion::generators::fixture_product;
use acyclic_fusion::{central_series, is_acyclic};

fn main() {
    let names = ["semion", "ising", "fibonacci", "rep_s3", "so8_2"];
    for a in names {
        for b in names {
            let p = fixture_product(a, b).unwrap();
            let class = central_series(&p).class;
            println!(
                "{a:9} x {b:9}  rank {:3}  acyclic {:5}  class {class:?}",
                p.rank(),
                is_acyclic(&p).acyclic
            );
        }
    }
}
