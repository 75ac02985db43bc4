//! Acceptance criteria. Runs without the libtest harness so every
//! criterion prints one PASS/FAIL line; exits nonzero if any fails.

mod common;

use std::fs;
use std::time::{Duration, Instant};

use common::{hyperplanes_from_table, paving_circuits, rank_table};
use pavmat::catalog;
use pavmat::census::{census, hyperplanes, subset_profile, Classification, Counts};
use pavmat::cli;
use pavmat::points::from_points;
use pavmat::screen::{
    bound, double_count, screen, verify_extension, verify_recurrence, Inapplicable, Verdict,
};
use pavmat::search::{generate_sparse_paving, problem2_scan, GenerationMode};
use pavmat::set::binomial;
use pavmat::{ElementSet, ExactRational, Matroid, Representation};

const AG32_PRIME_LIMIT: Duration = Duration::from_secs(1);
const APEX_LIMIT: Duration = Duration::from_secs(5);
const UNIFORM_16_4_LIMIT: Duration = Duration::from_secs(2);
const EXHAUSTIVE_7_3_LIMIT: Duration = Duration::from_secs(60);
const RANDOM_SPARSE_PAVING: u64 = 50;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn within(start: Instant, limit: Duration, what: &str) -> Result<Duration, String> {
    let took = start.elapsed();
    ensure!(took < limit, "{what} took {took:?}, limit {limit:?}");
    Ok(took)
}

fn set(n: usize, e: &[u32]) -> ElementSet {
    ElementSet::new(n, e.iter().copied()).unwrap()
}

fn ag32_prime_regression() -> Outcome {
    let start = Instant::now();
    let m = catalog::ag32_prime().matroid;
    let report = census(&m).map_err(|e| e.to_string())?;
    ensure!(
        report.hyperplanes.len() == 17,
        "{} hyperplanes",
        report.hyperplanes.len()
    );
    let multiple: Vec<Vec<u32>> = report
        .hyperplanes
        .iter()
        .filter(|h| h.classification == Classification::Multiple)
        .map(|h| h.elements.to_vec())
        .collect();
    // six faces, six diagonals and the twisted plane {1,8,3,6}
    let mut planes: Vec<Vec<u32>> = [
        [1, 2, 3, 4],
        [5, 6, 7, 8],
        [1, 2, 5, 6],
        [3, 4, 7, 8],
        [1, 4, 5, 8],
        [2, 3, 6, 7],
        [1, 2, 7, 8],
        [3, 4, 5, 6],
        [1, 4, 6, 7],
        [2, 3, 5, 8],
        [1, 3, 5, 7],
        [2, 4, 6, 8],
        [1, 3, 6, 8],
    ]
    .iter()
    .map(|p| p.to_vec())
    .collect();
    planes.sort();
    let mut multiple_sorted = multiple.clone();
    multiple_sorted.sort();
    ensure!(
        multiple_sorted == planes,
        "multiple hyperplanes {multiple:?}"
    );
    let independent: Vec<Vec<u32>> = report.independent().map(|h| h.elements.to_vec()).collect();
    let expected = vec![vec![2, 4, 5], vec![2, 4, 7], vec![2, 5, 7], vec![4, 5, 7]];
    ensure!(
        independent == expected,
        "independent hyperplanes {independent:?}"
    );
    ensure!(
        report.counts
            == Counts {
                independent: 4,
                simple: 4,
                multiple: 13
            },
        "counts {:?}",
        report.counts
    );
    let b = bound(8, 4).map_err(|e| e.to_string())?;
    ensure!(b == ExactRational::new(112, 13), "bound {b}");
    let v = screen(&m);
    ensure!(
        v.verdict == Verdict::NotOrientable,
        "verdict {:?}",
        v.verdict
    );
    let took = within(start, AG32_PRIME_LIMIT, "ag32_prime")?;
    Ok(format!(
        "17 hyperplanes, 4 independent, 4 < 112/13, {took:.2?}"
    ))
}

fn bound_values() -> Outcome {
    let b = bound(8, 4).map_err(|e| e.to_string())?;
    ensure!(b == ExactRational::new(336, 39), "bound(8,4) = {b}");
    ensure!(b.to_string() == "112/13", "reduced form {b}");
    for n in 8..=30usize {
        let b = bound(n, 3).map_err(|e| e.to_string())?;
        ensure!(
            b == ExactRational::new(6 * n as i64, 13),
            "bound({n},3) = {b}"
        );
    }
    ensure!(verify_recurrence(8, 25), "recurrence fails below (8, 25)");
    Ok("336/39 = 112/13, 6n/13 on 8..=30, recurrence to (8,25)".into())
}

fn hansen() -> Outcome {
    let m = from_points(&catalog::hansen_points()).map_err(|e| e.to_string())?;
    ensure!(m.r() == 4, "rank {}", m.r());
    ensure!(!m.is_paving(), "reported paving");
    let small: Vec<Vec<u32>> = m
        .circuits()
        .iter()
        .filter(|c| c.len() == 3)
        .map(|c| c.to_vec())
        .collect();
    ensure!(
        small == vec![vec![1, 2, 3], vec![4, 5, 6]],
        "3-circuits {small:?}"
    );
    let count = census(&m).map_err(|e| e.to_string())?.counts.independent;
    ensure!(count == 0, "independent count {count}");
    let v = screen(&m);
    ensure!(
        v.reason_if_not == Some(Inapplicable::NotPaving),
        "reason {:?}",
        v.reason_if_not
    );
    Ok("rank 4, 3-circuits {1,2,3} {4,5,6}, 0 independent, not_paving".into())
}

fn kelly_moser() -> Outcome {
    let m = catalog::kelly_moser().matroid;
    ensure!(m.n() == 7 && m.r() == 3, "n={} r={}", m.n(), m.r());
    let count = census(&m).map_err(|e| e.to_string())?.counts.independent;
    ensure!(
        count == 3 && 7 * count == 3 * m.n(),
        "independent count {count}"
    );
    let v = screen(&m);
    ensure!(!v.applicable, "screen applied");
    ensure!(
        v.reason_if_not == Some(Inapplicable::TooFewElements),
        "reason {:?}",
        v.reason_if_not
    );
    Ok("3 = 3n/7 independent, too_few_elements".into())
}

fn apex_family() -> Outcome {
    let start = Instant::now();
    for n in 8..=10usize {
        let m = catalog::apex(3, n).map_err(|e| e.to_string())?.matroid;
        ensure!(
            m.r() == 4 && m.is_paving(),
            "apex(3,{n}) r={} paving={}",
            m.r(),
            m.is_paving()
        );
        let c = census(&m).map_err(|e| e.to_string())?.counts;
        let want = binomial(n as u64 - 1, 2) as usize;
        ensure!(
            c.independent == want && c.multiple == 1 && c.total() == want + 1,
            "apex(3,{n}) counts {c:?}"
        );
        if n >= 9 {
            let v = screen(&m);
            ensure!(
                v.verdict == Verdict::Inconclusive,
                "apex(3,{n}) verdict {:?}",
                v.verdict
            );
            let f = bound(n, 4).map_err(|e| e.to_string())?;
            ensure!(
                ExactRational::from(c.independent as i64) >= f,
                "apex(3,{n}) below bound"
            );
        }
    }
    let took = within(start, APEX_LIMIT, "apex family")?;
    Ok(format!(
        "C(n-1,2) independent and 1 multiple for n = 8, 9, 10, {took:.2?}"
    ))
}

fn check_identity(m: &Matroid) -> Result<(), String> {
    let (sum, scaled) = double_count(m).map_err(|e| e.to_string())?;
    ensure!(
        sum == scaled,
        "{}: sum {sum} vs (r-1) count {scaled}",
        m.label()
    );
    for e in 1..=m.n() as u32 {
        if m.is_loop(e).map_err(|e| e.to_string())? {
            continue;
        }
        ensure!(
            verify_extension(m, e).map_err(|e| e.to_string())?,
            "{}: extension fails at {e}",
            m.label()
        );
    }
    Ok(())
}

fn extension_identity() -> Outcome {
    let mut checked = 0;
    for entry in catalog::all() {
        if entry.matroid.is_simple() {
            check_identity(&entry.matroid)?;
            checked += 1;
        }
    }
    for seed in 0..RANDOM_SPARSE_PAVING {
        let n = 6 + (seed % 5) as usize;
        let m = generate_sparse_paving(n, 4, GenerationMode::Random, seed, 1)
            .map_err(|e| e.to_string())?
            .next()
            .ok_or("empty stream")?;
        check_identity(&m)?;
    }
    Ok(format!(
        "{checked} simple catalog matroids, {RANDOM_SPARSE_PAVING} random sparse paving"
    ))
}

fn minor_closure() -> Outcome {
    let mut checked = 0;
    for entry in catalog::all() {
        let m = &entry.matroid;
        if !m.is_paving() {
            continue;
        }
        for e in 1..=m.n() as u32 {
            let d = m.delete(e).map_err(|x| x.to_string())?;
            ensure!(d.matroid.is_paving(), "{}\\{e} not paving", entry.name);
            let c = m.contract(e).map_err(|x| x.to_string())?;
            ensure!(c.matroid.is_paving(), "{}/{e} not paving", entry.name);
            checked += 2;
        }
    }
    Ok(format!("{checked} single-element minors paving"))
}

fn oracle_equivalence() -> Outcome {
    let mut families = 0;
    for n in 3..=7usize {
        for m in generate_sparse_paving(n, 3, GenerationMode::Exhaustive, 0, usize::MAX)
            .map_err(|e| e.to_string())?
        {
            let Representation::Paving(pf) = m.representation() else {
                return Err("exhaustive mode produced a circuit list".into());
            };
            let circuits = paving_circuits(n, 3, pf.block_masks());
            let table = rank_table(n, &circuits);
            let as_circuits =
                Matroid::from_circuits(n, &m.circuits()).map_err(|e| e.to_string())?;
            for s in 0u64..1 << n {
                let x = ElementSet::from_bits(n, s).unwrap();
                let paving_rank = m.rank(&x).unwrap();
                ensure!(
                    paving_rank == table[s as usize]
                        && as_circuits.rank(&x).unwrap() == paving_rank,
                    "{}: rank of {x}",
                    m.label()
                );
            }
            let got: Vec<Vec<u32>> = hyperplanes(&m)
                .unwrap()
                .iter()
                .map(|h| h.to_vec())
                .collect();
            ensure!(
                got == hyperplanes_from_table(n, &table),
                "{}: hyperplanes",
                m.label()
            );
            families += 1;
        }
    }
    Ok(format!("{families} families on n = 3..=7"))
}

fn k4_counterexample() -> Outcome {
    let m = catalog::k4().matroid;
    ensure!(m.is_paving(), "k4 not paving");
    let p = problem2_scan(&m);
    ensure!(matches!(p, Ok(None)), "problem2_scan returned {p:?}");
    for e in 1..=6u32 {
        let prof = subset_profile(&m, &set(6, &[e])).map_err(|x| x.to_string())?;
        ensure!(prof == (1, 2), "edge {e} profile {prof:?}");
    }
    Ok("no witness, every edge in 1 simple and 2 multiple hyperplanes".into())
}

fn search_bytes(dir: &std::path::Path, tag: &str, workers: &str) -> Result<Vec<u8>, String> {
    let path = dir.join(format!("{tag}.jsonl"));
    let p = path.to_str().unwrap();
    let args = [
        "pavmat",
        "search",
        "--n",
        "8",
        "--rank",
        "4",
        "--mode",
        "random",
        "--seed",
        "7",
        "--budget",
        "100",
        "--out",
        p,
        "--workers",
        workers,
    ];
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = cli::run(args, &mut out, &mut err);
    ensure!(
        code == cli::EXIT_OK,
        "search exited {code}: {}",
        String::from_utf8_lossy(&err)
    );
    fs::read(&path).map_err(|e| e.to_string())
}

fn determinism() -> Outcome {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let a = search_bytes(dir.path(), "a", "1")?;
    let b = search_bytes(dir.path(), "b", "1")?;
    let c = search_bytes(dir.path(), "c", "4")?;
    let d = search_bytes(dir.path(), "d", "4")?;
    ensure!(a == b, "two runs with 1 worker differ");
    ensure!(a == c && c == d, "output depends on worker count");
    let lines = a.iter().filter(|&&x| x == b'\n').count();
    ensure!(lines == 101, "{lines} lines");
    Ok(format!(
        "{} bytes identical across runs and workers 1, 4",
        a.len()
    ))
}

fn performance() -> Outcome {
    let start = Instant::now();
    let u = Matroid::uniform(16, 4).map_err(|e| e.to_string())?;
    let c = census(&u).map_err(|e| e.to_string())?;
    ensure!(
        c.counts.independent == 560 && c.hyperplanes.len() == 560,
        "U(16,4) counts {:?}",
        c.counts
    );
    let t1 = within(start, UNIFORM_16_4_LIMIT, "U(16,4) census")?;
    let start = Instant::now();
    let count = generate_sparse_paving(7, 3, GenerationMode::Exhaustive, 0, usize::MAX)
        .map_err(|e| e.to_string())?
        .count();
    ensure!(
        count == common::count_stable_families_dfs(7, 3),
        "{count} families at (7,3)"
    );
    let t2 = within(start, EXHAUSTIVE_7_3_LIMIT, "exhaustive (7,3)")?;
    Ok(format!(
        "U(16,4) census {t1:.2?}; {count} families at (7,3) in {t2:.2?}"
    ))
}

fn main() {
    let criteria: [Criterion; 11] = [
        ("ag32_prime regression", ag32_prime_regression),
        ("bound values", bound_values),
        ("hansen", hansen),
        ("kelly_moser", kelly_moser),
        ("apex family", apex_family),
        ("extension and double count", extension_identity),
        ("minor closure", minor_closure),
        ("oracle equivalence", oracle_equivalence),
        ("k4 counterexample", k4_counterexample),
        ("search determinism", determinism),
        ("performance smoke", performance),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(detail) => println!("criterion {:>2} {name}: PASS ({detail})", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} {name}: FAIL ({why})", i + 1);
            }
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
