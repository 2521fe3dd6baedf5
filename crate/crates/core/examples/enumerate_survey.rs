//! Exhaustive enumeration of small fusion rules and an equivalence survey.
//!
//! Usage: `enumerate_survey [max_rank] [max_mult]`, default 4 and 2.

use acyclic_fusion::explorer::{survey, EnumSpec};
use acyclic_fusion::DEFAULT_TOLERANCE;

fn main() {
    let mut args = std::env::args().skip(1).map(|a| a.parse().expect("integer argument"));
    let max_rank = args.next().unwrap_or(4) as usize;
    let max_mult = args.next().unwrap_or(2) as u32;

    for rank in 1..=max_rank {
        for (label, spec) in [
            ("standard", EnumSpec::new(rank, max_mult)),
            ("literal", EnumSpec::new(rank, max_mult).literal()),
        ] {
            let start = std::time::Instant::now();
            let s = survey(&spec, DEFAULT_TOLERANCE).expect("within enumeration caps");
            println!(
                "rank {rank} mult <= {max_mult} {label:8}: {:5} rules, {:4} acyclic, {:4} nilpotent, classes {:?}, clean {} ({:.1?})",
                s.total,
                s.acyclic_count,
                s.nilpotent_count,
                s.class_histogram,
                s.is_clean(),
                start.elapsed()
            );
        }
    }
}
