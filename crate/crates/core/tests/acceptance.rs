//! Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any
//! failure.

use std::collections::BTreeMap;
use std::process::ExitCode;
use std::sync::Arc;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use stralg::artheory::{ar_sequence, defect_vector, full_catalog, ArTable, Catalog};
use stralg::classify::{build_witness, classify, find_witness_triple, Evidence, RepType};
use stralg::decomp::{catalog_decompose, summand_count, DecomposeOptions};
use stralg::fixtures;
use stralg::homalg::{middle_census, CensusLimits};
use stralg::repmod::{direct_sum, parse_module};
use stralg::runs::{degeneration_sweep, test_modules, verify_main_theorem, DegenerationReport};
use stralg::words::{common_prefix_of_powers, fine_wolf_common_power, fine_wolf_threshold, Verdict};
use stralg::{Field, Representation};

type Outcome = Result<String, String>;

fn ensure(ok: bool, msg: impl Into<String>) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn within(start: Instant, limit: Duration) -> Result<(), String> {
    let t = start.elapsed();
    ensure(t <= limit, format!("took {:.1}s, limit {}s", t.as_secs_f64(), limit.as_secs()))
}

fn e(err: stralg::Error) -> String {
    err.to_string()
}

fn main_theorem() -> Outcome {
    let start = Instant::now();
    let mut lines = 0;
    for (name, p) in [("a3", fixtures::a3()), ("a3nr", fixtures::a3nr())] {
        let p = Arc::new(p);
        let mods = test_modules(&p, 4, false).map_err(e)?;
        let r = verify_main_theorem(&mods, CensusLimits::default(), &DecomposeOptions::default()).map_err(e)?;
        if let Some((pair, i)) = r.violation() {
            return Err(format!("{name}: M={} N={} has {} summands", pair.m, pair.n, pair.census.lines[i].summands));
        }
        lines += r.pairs.iter().map(|c| c.census.lines.len()).sum::<usize>();
    }
    within(start, Duration::from_secs(60))?;
    Ok(format!("{lines} census lines, all middles with at most 2 summands"))
}

fn d4_census() -> Outcome {
    let start = Instant::now();
    let p = Arc::new(fixtures::d4sub());
    let m = parse_module(&p, fixtures::D4SUB_M2111).map_err(e)?;
    let s = parse_module(&p, fixtures::D4SUB_S0).map_err(e)?;
    let c = middle_census(&m, &s, CensusLimits::default(), &DecomposeOptions::default()).map_err(e)?;
    let expected: BTreeMap<usize, usize> = [(2, 3), (3, 3)].into_iter().collect();
    let seen = format!("ext_dim={} histogram={:?}", c.ext_dim, c.histogram);
    ensure(
        c.ext_dim == 2 && c.histogram == expected,
        format!("{seen}; expected ext_dim=2 histogram={expected:?}"),
    )?;
    within(start, Duration::from_secs(10))?;
    Ok(seen)
}

fn sweeps() -> Result<Vec<(String, Catalog, DegenerationReport)>, String> {
    let opts = DecomposeOptions::default();
    let mut out = Vec::new();
    for (name, p) in [("a3", fixtures::a3()), ("a3nr", fixtures::a3nr())] {
        let cat = full_catalog(&Arc::new(p)).map_err(e)?;
        let table = ArTable::new(&cat, &opts).map_err(e)?;
        let r = degeneration_sweep(&cat, &table, 8, &opts).map_err(e)?;
        out.push((name.to_string(), cat, r));
    }
    Ok(out)
}

fn degeneration_counts(sweeps: &Result<Vec<(String, Catalog, DegenerationReport)>, String>, elapsed: Duration) -> Outcome {
    let sweeps = sweeps.as_ref().map_err(|m| m.clone())?;
    let mut pairs = 0;
    for (name, cat, r) in sweeps {
        if let Some(bad) = r.lines.iter().find(|l| !l.counts_ok()) {
            return Err(format!("{name}: {}", bad.render(&r.sums, cat)));
        }
        pairs += r.leq_pairs().count();
    }
    ensure(elapsed <= Duration::from_secs(300), format!("took {:.1}s, limit 300s", elapsed.as_secs_f64()))?;
    Ok(format!("{pairs} hom-ordered pairs satisfy |M| <= |N| and the delta formula"))
}

fn riedtmann(sweeps: &Result<Vec<(String, Catalog, DegenerationReport)>, String>) -> Outcome {
    let sweeps = sweeps.as_ref().map_err(|m| m.clone())?;
    let mut pairs = 0;
    for (name, cat, r) in sweeps {
        for l in r.leq_pairs() {
            ensure(l.witness_counts.is_some(), format!("{name}: no witness for {}", l.render(&r.sums, cat)))?;
            pairs += 1;
        }
    }
    Ok(format!("{pairs} witnesses verified by hom vectors"))
}

fn ar_certification() -> Outcome {
    let opts = DecomposeOptions::default();
    let mut checked = 0;
    for (name, p) in [("a3", fixtures::a3()), ("a3nr", fixtures::a3nr())] {
        let cat = full_catalog(&Arc::new(p)).map_err(e)?;
        for v in 0..cat.len() {
            if cat.is_projective(v).map_err(e)? {
                continue;
            }
            let s = ar_sequence(&cat, v, &opts).map_err(e)?;
            let d = defect_vector(&cat, &s.sequence).map_err(e)?;
            let unit: Vec<i64> = (0..cat.len()).map(|u| (u == v) as i64).collect();
            ensure(d == unit, format!("{name} {}: defect {d:?}", cat.name(v)))?;
            ensure(
                s.middle_summand_count <= 2,
                format!("{name} {}: {} middle summands", cat.name(v), s.middle_summand_count),
            )?;
            checked += 1;
        }
    }
    Ok(format!("{checked} sequences certified"))
}

fn witness_count(prime: u64, q: u64) -> Result<String, String> {
    let start = Instant::now();
    let p = Arc::new(fixtures::gp().with_field(Field::new(q).map_err(e)?));
    let t = find_witness_triple(&p, 6).map_err(e)?.ok_or("no witness triple found")?;
    let w = build_witness(&p, &t, prime).map_err(e)?;
    w.sequence.verify().map_err(e)?;
    let opts = DecomposeOptions::default();
    let (cu, cv) = (summand_count(&w.b_u, &opts).map_err(e)?, summand_count(&w.b_v, &opts).map_err(e)?);
    ensure(cu == 1 && cv == 1, format!("p={prime}: B(u), B(v) have {cu}, {cv} summands"))?;
    let count = summand_count(&w.glued, &opts).map_err(e)?;
    ensure(
        count == prime as usize,
        format!("p={prime} q={q}: decompose(M').count = {count}, expected {prime}"),
    )?;
    within(start, Duration::from_secs(120))?;
    Ok(format!("p={prime} q={q} count={count}"))
}

fn witness() -> Outcome {
    let a = witness_count(11, 23);
    let b = witness_count(13, 53);
    match (a, b) {
        (Ok(a), Ok(b)) => Ok(format!("{a}; {b}")),
        (a, b) => Err(format!("{}; {}", a.unwrap_or_else(|x| x), b.unwrap_or_else(|x| x))),
    }
}

fn classification() -> Outcome {
    for (name, p) in [("a3", fixtures::a3()), ("a3nr", fixtures::a3nr())] {
        let c = classify(&p, None);
        ensure(c.verdict == RepType::Finite, format!("{name}: {:?}", c.verdict))?;
        ensure(matches!(c.evidence, Evidence::NoCyclicWord { .. }), format!("{name}: search not exhausted"))?;
    }
    let k = classify(&fixtures::kronecker(), None);
    ensure(matches!(k.verdict, RepType::Domestic { .. }), format!("kronecker: {:?}", k.verdict))?;
    match &k.evidence {
        Evidence::Bands { bands, .. } => ensure(bands.len() == 1, format!("kronecker: {} band classes", bands.len()))?,
        other => return Err(format!("kronecker evidence {other:?}")),
    }
    let g = classify(&fixtures::gp(), None);
    ensure(g.verdict == RepType::NonDomestic, format!("gp: {:?}", g.verdict))?;
    match &g.evidence {
        Evidence::GeneratorPair { first, second, .. } => {
            let (x, y) = (first.letters(), second.letters());
            ensure(!commute(x, y), "gp: generator pair shares a primitive root")?;
        }
        other => return Err(format!("gp evidence {other:?}")),
    }
    Ok(format!("a3, a3nr Finite; kronecker Domestic (bound {}); gp NonDomestic", k.bound))
}

/// Two nonempty sequences are powers of one word iff `xy = yx`.
fn commute<T: PartialEq + Clone>(x: &[T], y: &[T]) -> bool {
    let xy: Vec<T> = x.iter().chain(y).cloned().collect();
    let yx: Vec<T> = y.iter().chain(x).cloned().collect();
    xy == yx
}

fn fine_wolf_case(x: &[u8], y: &[u8]) -> Result<usize, String> {
    let t = fine_wolf_threshold(x.len(), y.len());
    let prefix = common_prefix_of_powers(x, y, x.len() + y.len());
    let forced = fine_wolf_common_power(x, y, prefix) == Verdict::ForcedCommonRoot;
    ensure(!forced || commute(x, y), format!("false common root for {x:?}, {y:?}"))?;
    ensure(prefix < t || commute(x, y), format!("{x:?}, {y:?} share {prefix} >= {t} without a common root"))?;
    Ok(prefix)
}

fn fine_wolf() -> Outcome {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for _ in 0..10_000 {
        let (lx, ly) = (rng.gen_range(1..=12), rng.gen_range(1..=12));
        // bias towards shared prefixes by deriving y from a power of x
        let x: Vec<u8> = (0..lx).map(|_| rng.gen_range(0..2)).collect();
        let y: Vec<u8> = if rng.gen_bool(0.5) {
            (0..ly).map(|i| x[i % lx] ^ (rng.gen_bool(0.1) as u8)).collect()
        } else {
            (0..ly).map(|_| rng.gen_range(0..2)).collect()
        };
        fine_wolf_case(&x, &y)?;
    }
    let all = |len: usize| (0..1u32 << len).map(move |bits| (0..len).map(|i| ((bits >> i) & 1) as u8).collect::<Vec<u8>>());
    for lx in 1..=6 {
        for ly in 1..=6 {
            let mut best = 0;
            for x in all(lx) {
                for y in all(ly) {
                    let prefix = fine_wolf_case(&x, &y)?;
                    if !commute(&x, &y) {
                        best = best.max(prefix);
                    }
                }
            }
            let t = fine_wolf_threshold(lx, ly);
            ensure(best + 1 == t, format!("|x|={lx} |y|={ly}: longest shared prefix {best}, threshold {t}"))?;
        }
    }
    within(start, Duration::from_secs(30))?;
    Ok("10000 random cases and all |x|,|y| <= 6; threshold is sharp".into())
}

fn oracle_agreement() -> Outcome {
    let p = Arc::new(fixtures::a3());
    let cat = full_catalog(&p).map_err(e)?;
    let opts = DecomposeOptions::default();
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for case in 0..100 {
        let mult: Vec<usize> = loop {
            let m: Vec<usize> = (0..cat.len()).map(|_| rng.gen_range(0..=2)).collect();
            if m.iter().any(|&k| k > 0) {
                break m;
            }
        };
        let parts: Vec<&Representation> = mult.iter().enumerate().flat_map(|(i, &k)| std::iter::repeat_n(&cat.modules()[i], k)).collect();
        let m = direct_sum(&p, &parts).map_err(e)?;
        let count = summand_count(&m, &opts).map_err(e)?;
        let oracle = catalog_decompose(&m, cat.modules()).map_err(e)?;
        ensure(oracle == mult, format!("case {case}: catalog multiplicities {oracle:?}, built {mult:?}"))?;
        let total: usize = oracle.iter().sum();
        ensure(count == total, format!("case {case}: decompose {count}, catalog {total}"))?;
    }
    Ok("100 random sums agree".into())
}

fn report(n: usize, outcome: &Outcome) -> bool {
    match outcome {
        Ok(detail) => println!("criterion {n}: PASS  {detail}"),
        Err(detail) => println!("criterion {n}: FAIL  {detail}"),
    }
    outcome.is_ok()
}

fn main() -> ExitCode {
    let mut ok = true;
    ok &= report(1, &main_theorem());
    ok &= report(2, &d4_census());
    let start = Instant::now();
    let s = sweeps();
    let elapsed = start.elapsed();
    ok &= report(3, &degeneration_counts(&s, elapsed));
    ok &= report(4, &riedtmann(&s));
    ok &= report(5, &ar_certification());
    ok &= report(6, &witness());
    ok &= report(7, &classification());
    ok &= report(8, &fine_wolf());
    ok &= report(9, &oracle_agreement());
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
