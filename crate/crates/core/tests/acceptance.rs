//! Acceptance suite. Runs without the libtest harness so the per-criterion
//! PASS/FAIL lines are always printed; exits non-zero if any criterion fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use acyclic_fusion::explorer::{enumerate, EnumSpec};
use acyclic_fusion::generators::{drinfeld_double, fixture_catalogue, named_fixture, pointed, su2k, FiniteGroup};
use acyclic_fusion::{adjoint_subrule, check_theorem, fp_dimensions, is_acyclic, product, FusionRule, LabelSet};

/// Absolute tolerance for FP dimensions and global dimensions.
const FP_TOL: f64 = 1e-6;
const CORPUS_BUDGET: Duration = Duration::from_secs(15 * 60);
const DOUBLES_BUDGET: Duration = Duration::from_secs(120);
const ENUM_RANK: usize = 4;
const ENUM_MULT: u32 = 2;
const ORACLE_MAX_RANK: usize = 6;

struct Criterion {
    id: usize,
    title: &'static str,
    failures: Vec<String>,
    summary: String,
}

impl Criterion {
    fn new(id: usize, title: &'static str) -> Self {
        Criterion {
            id,
            title,
            failures: Vec::new(),
            summary: String::new(),
        }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        if !ok {
            self.failures.push(what());
        }
    }

    fn report(&self) -> bool {
        let pass = self.failures.is_empty();
        println!(
            "[{}] criterion {}: {} ({})",
            if pass { "PASS" } else { "FAIL" },
            self.id,
            self.title,
            self.summary
        );
        for f in self.failures.iter().take(10) {
            println!("        {f}");
        }
        if self.failures.len() > 10 {
            println!("        ... {} more", self.failures.len() - 10);
        }
        pass
    }
}

fn close(a: f64, b: f64) -> bool {
    (a - b).abs() <= FP_TOL
}

fn corpus() -> Vec<(String, FusionRule)> {
    let mut out: Vec<(String, FusionRule)> = fixture_catalogue()
        .into_iter()
        .map(|(n, r)| (format!("fixture {n}"), r))
        .collect();
    for g in FiniteGroup::builtin_groups() {
        out.push((format!("pointed {}", g.name()), pointed(&g)));
    }
    for k in 1..=20 {
        out.push((format!("su2k {k}"), su2k(k)));
    }
    for g in FiniteGroup::builtin_groups() {
        let d = drinfeld_double(&g, FP_TOL).expect("double of a built-in group");
        out.push((format!("double {}", g.name()), d));
    }
    for rank in 1..=ENUM_RANK {
        let rules = enumerate(&EnumSpec::new(rank, ENUM_MULT)).expect("enumeration within caps");
        for (n, r) in rules.into_iter().enumerate() {
            out.push((format!("enumerated rank {rank} #{n}"), r));
        }
    }
    out
}

/// The sequence definition taken literally: some closed walk
/// `i_1 → i_2 → … → i_{n+1} = i_1` with `i_1 ≠ 0`, `n ≤ rank`, and every
/// factor `N_{i_k, dual(i_k)}^{i_{k+1}}` positive. Tries every sequence.
fn has_cyclic_sequence(rule: &FusionRule) -> bool {
    let r = rule.rank();
    let factor = |a: usize, b: usize| rule.n(a, rule.dual(a), b);
    for n in 1..=r {
        // interior labels i_2..i_n as an odometer over 0..r
        let mut seq = vec![0usize; n - 1];
        for start in 1..r {
            loop {
                let mut walk = Vec::with_capacity(n + 1);
                walk.push(start);
                walk.extend_from_slice(&seq);
                walk.push(start);
                if walk.windows(2).all(|w| factor(w[0], w[1]) > 0) {
                    return true;
                }
                let mut pos = 0;
                while pos < seq.len() && seq[pos] == r - 1 {
                    seq[pos] = 0;
                    pos += 1;
                }
                if pos == seq.len() {
                    break;
                }
                seq[pos] += 1;
            }
        }
    }
    false
}

fn main() -> ExitCode {
    let t0 = Instant::now();
    let corpus = corpus();
    let mut results = Vec::new();

    // 1
    let mut c = Criterion::new(1, "acyclic <=> nilpotent on the full corpus");
    let mut verdicts = Vec::with_capacity(corpus.len());
    for (name, rule) in &corpus {
        let report = rule.validate();
        c.check(report.valid, || format!("{name}: invalid rule"));
        let t = check_theorem(rule);
        c.check(t.agree, || {
            format!("{name}: acyclic = {}, nilpotent = {}", t.acyclic, t.nilpotent)
        });
        verdicts.push(t.acyclic);
    }
    let elapsed = t0.elapsed();
    c.check(elapsed <= CORPUS_BUDGET, || format!("took {elapsed:?}"));
    c.summary = format!(
        "{} rules, {} acyclic, {:.1?}",
        corpus.len(),
        verdicts.iter().filter(|&&a| a).count(),
        elapsed
    );
    results.push(c);

    // 2
    let mut c = Criterion::new(2, "SU(2)_2 acyclic, SU(2)_3 and SU(2)_4 not");
    let got: Vec<bool> = (2..=4).map(|k| is_acyclic(&su2k(k)).acyclic).collect();
    c.check(got == [true, false, false], || format!("got {got:?}"));
    c.summary = format!("k = 2, 3, 4 -> {got:?}");
    results.push(c);

    // 3
    let mut c = Criterion::new(3, "SO(8)_2 fixture");
    match named_fixture("so8_2") {
        Ok(rule) => {
            c.check(rule.rank() == 11, || format!("rank {}", rule.rank()));
            c.check(rule.is_self_dual(), || "not all labels self-dual".into());
            c.check(is_acyclic(&rule).acyclic, || "not acyclic".into());
            match fp_dimensions(&rule, FP_TOL) {
                Ok(fp) => {
                    let ones = fp.dims.iter().filter(|&&d| close(d, 1.0)).count();
                    let twos = fp.dims.iter().filter(|&&d| close(d, 2.0)).count();
                    c.check(ones == 4 && twos == 7, || format!("dims {:?}", fp.dims));
                    c.check(close(fp.global, 32.0), || format!("global {}", fp.global));
                    c.summary = format!("rank {}, {ones} ones, {twos} twos, global {:.9}", rule.rank(), fp.global);
                }
                Err(e) => c.check(false, || format!("FP dims: {e}")),
            }
        }
        Err(e) => c.check(false, || format!("fixture failed to load: {e}")),
    }
    results.push(c);

    // 4
    let mut c = Criterion::new(4, "D(G) acyclic <=> G nilpotent");
    let t = Instant::now();
    let groups = [
        (FiniteGroup::cyclic(2), true),
        (FiniteGroup::cyclic(4), true),
        (FiniteGroup::klein_four(), true),
        (FiniteGroup::quaternion(), true),
        (FiniteGroup::dihedral(4), true),
        (FiniteGroup::symmetric(3), false),
        (FiniteGroup::dihedral(5), false),
        (FiniteGroup::alternating(4), false),
    ];
    let mut line = Vec::new();
    for (g, nilpotent) in &groups {
        let name = g.name();
        c.check(g.is_nilpotent() == *nilpotent, || format!("{name}: group nilpotency"));
        let d = match drinfeld_double(g, FP_TOL) {
            Ok(d) => d,
            Err(e) => {
                c.check(false, || format!("{name}: {e}"));
                continue;
            }
        };
        c.check(d.validate().valid, || format!("D({name}) invalid"));
        let acyclic = is_acyclic(&d).acyclic;
        c.check(acyclic == *nilpotent, || format!("D({name}): acyclic = {acyclic}"));
        let order = g.order() as f64;
        match fp_dimensions(&d, FP_TOL) {
            Ok(fp) => c.check(close(fp.global, order * order), || {
                format!("D({name}): global {} vs {}", fp.global, order * order)
            }),
            Err(e) => c.check(false, || format!("D({name}): {e}")),
        }
        line.push(format!("{name}:{}", if acyclic { "acyclic" } else { "cyclic" }));
    }
    let elapsed = t.elapsed();
    c.check(elapsed <= DOUBLES_BUDGET, || format!("took {elapsed:?}"));
    c.summary = format!("{}, {elapsed:.1?}", line.join(" "));
    results.push(c);

    // 5 and 6
    let mut c5 = Criterion::new(5, "acyclic rules are weakly integral");
    let mut c6 = Criterion::new(6, "acyclic rank > 1 has rank(A_ad) < rank(A)");
    let mut checked5 = 0;
    let mut checked6 = 0;
    for ((name, rule), &acyclic) in corpus.iter().zip(&verdicts) {
        if !acyclic {
            continue;
        }
        checked5 += 1;
        match fp_dimensions(rule, FP_TOL) {
            Ok(fp) => c5.check(fp.is_weakly_integral, || format!("{name}: global {}", fp.global)),
            Err(e) => c5.check(false, || format!("{name}: {e}")),
        }
        if rule.rank() > 1 {
            checked6 += 1;
            let ad = adjoint_subrule(rule, &LabelSet::all(rule.rank())).expect("whole rule is closed");
            c6.check(ad.len() < rule.rank(), || {
                format!("{name}: rank(A_ad) = {} of {}", ad.len(), rule.rank())
            });
        }
    }
    c5.summary = format!("{checked5} acyclic rules");
    c6.summary = format!("{checked6} acyclic rules of rank > 1");
    results.push(c5);
    results.push(c6);

    // 7
    let mut c = Criterion::new(7, "products: acyclic iff both factors acyclic");
    let fixtures = fixture_catalogue();
    let mut pairs = 0;
    for (a, ra) in &fixtures {
        for (b, rb) in &fixtures {
            pairs += 1;
            let p = product(ra, rb);
            let expected = is_acyclic(ra).acyclic && is_acyclic(rb).acyclic;
            let got = is_acyclic(&p).acyclic;
            c.check(got == expected, || format!("{a} x {b}: acyclic = {got}, expected {expected}"));
        }
    }
    c.summary = format!("{pairs} ordered fixture pairs");
    results.push(c);

    // 8
    let mut c = Criterion::new(8, "sequence definition agrees with the adjoint graph");
    let mut checked = 0;
    for ((name, rule), &acyclic) in corpus.iter().zip(&verdicts) {
        if rule.rank() > ORACLE_MAX_RANK {
            continue;
        }
        checked += 1;
        let by_definition = !has_cyclic_sequence(rule);
        c.check(by_definition == acyclic, || {
            format!("{name}: definition says {by_definition}, graph says {acyclic}")
        });
    }
    c.summary = format!("{checked} rules of rank <= {ORACLE_MAX_RANK}");
    results.push(c);

    // 9
    let mut c = Criterion::new(9, "rank-2 census at max_mult 2");
    match enumerate(&EnumSpec::new(2, 2)) {
        Ok(rules) => {
            let acyclic = rules.iter().filter(|r| is_acyclic(r).acyclic).count();
            c.check(rules.len() == 3, || format!("{} rules", rules.len()));
            c.check(acyclic == 1, || format!("{acyclic} acyclic"));
            c.summary = format!("{} rules, {acyclic} acyclic", rules.len());
        }
        Err(e) => c.check(false, || format!("{e}")),
    }
    results.push(c);

    let passed = results.iter().map(Criterion::report).filter(|&p| p).count();
    println!("acceptance: {passed}/{} criteria passed in {:.1?}", results.len(), t0.elapsed());
    if passed == results.len() {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
