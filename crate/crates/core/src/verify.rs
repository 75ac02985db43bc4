//! Property suites over the catalog, runnable from the command line.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::catalog::{self, CatalogEntry};
use crate::census::census;
use crate::error::Error;
use crate::rational::ExactRational;
use crate::screen::{bound, double_count, verify_extension, verify_recurrence};
use crate::set::full_mask;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Axioms,
    Extension,
    Recurrence,
    Minors,
}

impl Suite {
    pub const ALL: [Suite; 4] = [
        Suite::Axioms,
        Suite::Extension,
        Suite::Recurrence,
        Suite::Minors,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            Suite::Axioms => "axioms",
            Suite::Extension => "extension",
            Suite::Recurrence => "recurrence",
            Suite::Minors => "minors",
        }
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.as_str() == s)
            .ok_or_else(|| Error::ParameterOutOfRange(format!("unknown suite '{s}'")))
    }
}

#[derive(Debug, Clone, Default)]
pub struct SuiteReport {
    pub passed: usize,
    pub failures: Vec<String>,
}

impl SuiteReport {
    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        if ok {
            self.passed += 1;
        } else {
            self.failures.push(what());
        }
    }

    pub fn failed(&self) -> usize {
        self.failures.len()
    }

    pub fn ok(&self) -> bool {
        self.failures.is_empty()
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "checks={} passed={} failed={}",
            self.passed + self.failed(),
            self.passed,
            self.failed()
        )
    }
}

/// Catalog entries used by the suites: every published name plus a few
/// parameterized family members.
pub fn suite_entries() -> Vec<CatalogEntry> {
    let mut entries = catalog::all();
    for name in [
        "uniform(5,3)",
        "uniform(9,4)",
        "apex(2,5)",
        "apex(3,9)",
        "apex(3,10)",
    ] {
        entries.push(catalog::get(name).expect("fixed names"));
    }
    entries
}

pub fn run(suite: Suite) -> SuiteReport {
    match suite {
        Suite::Axioms => axioms(),
        Suite::Extension => extension(),
        Suite::Recurrence => recurrence(),
        Suite::Minors => minors(),
    }
}

fn axioms() -> SuiteReport {
    let mut rep = SuiteReport::default();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for entry in suite_entries() {
        let m = &entry.matroid;
        let name = entry.name.as_str();
        let ground = full_mask(m.n());
        rep.check(m.rank_bits(ground) == m.r(), || {
            format!("{name}: rank of ground set")
        });
        for _ in 0..500 {
            let a = rng.gen::<u64>() & ground;
            let b = rng.gen::<u64>() & ground;
            let (ra, rb) = (m.rank_bits(a), m.rank_bits(b));
            rep.check(ra <= a.count_ones() as usize, || {
                format!("{name}: rank bounded by size")
            });
            rep.check(ra + rb >= m.rank_bits(a | b) + m.rank_bits(a & b), || {
                format!("{name}: submodularity")
            });
            rep.check(m.rank_bits(a & b) <= ra, || format!("{name}: monotonicity"));
            let cl = m.closure_bits(a);
            rep.check(
                cl & a == a && m.closure_bits(cl) == cl && m.closure_bits(a & b) & !cl == 0,
                || format!("{name}: closure operator"),
            );
        }
        rep.check(m.validate_circuit_axioms().is_ok(), || {
            format!("{name}: circuit axioms")
        });
        rep.check(m.dual().dual().equivalent(m), || {
            format!("{name}: double dual")
        });
        if let Some(expected) = entry.expected_census {
            let got = census(m).map(|c| c.counts);
            rep.check(got == Ok(expected), || {
                format!("{name}: census {got:?} != expected {expected:?}")
            });
        }
        if m.is_paving() && m.r() >= 3 {
            rep.check(m.is_simple(), || {
                format!("{name}: paving of rank >= 3 is simple")
            });
        }
    }
    rep
}

fn extension() -> SuiteReport {
    let mut rep = SuiteReport::default();
    for entry in suite_entries() {
        let m = &entry.matroid;
        let name = entry.name.as_str();
        if !m.is_simple() || m.r() < 2 {
            continue;
        }
        for e in 1..=m.n() as u32 {
            let ok = verify_extension(m, e);
            rep.check(ok == Ok(true), || {
                format!("{name}: extension at {e}: {ok:?}")
            });
        }
        let dc = double_count(m);
        rep.check(matches!(dc, Ok((a, b)) if a == b), || {
            format!("{name}: double count {dc:?}")
        });
    }
    rep
}

fn recurrence() -> SuiteReport {
    let mut rep = SuiteReport::default();
    rep.check(verify_recurrence(8, 25), || {
        "recurrence up to (8, 25)".into()
    });
    rep.check(
        bound(8, 4).ok() == Some(ExactRational::new(336, 39)),
        || "f(8,4) = 336/39".into(),
    );
    for n in 8..=30usize {
        rep.check(
            bound(n, 3).ok() == Some(ExactRational::new(6 * n as i64, 13)),
            || format!("f({n},3) = 6n/13"),
        );
    }
    rep
}

fn minors() -> SuiteReport {
    let mut rep = SuiteReport::default();
    for entry in suite_entries() {
        let m = &entry.matroid;
        if !m.is_paving() {
            continue;
        }
        let name = entry.name.as_str();
        for e in 1..=m.n() as u32 {
            let del = m.delete(e).map(|d| d.matroid.is_paving());
            rep.check(del == Ok(true), || format!("{name}\\{e}: {del:?}"));
            if m.is_loop(e).unwrap_or(true) {
                continue;
            }
            let con = m.contract(e).map(|c| c.matroid.is_paving());
            rep.check(con == Ok(true), || format!("{name}/{e}: {con:?}"));
        }
    }
    rep
}
