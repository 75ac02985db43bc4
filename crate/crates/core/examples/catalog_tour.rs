//! Every catalog entry with its expected and computed census.

use pavmat::catalog;
use pavmat::census::census;

fn main() {
    for entry in catalog::all() {
        let m = &entry.matroid;
        let got = census(m).unwrap().counts;
        let status = match entry.expected_census {
            Some(want) if want == got => "matches",
            Some(_) => "DIFFERS",
            None => "no reference",
        };
        println!(
            "{:<12} n={:<2} r={} paving={:<5} independent={:<3} simple={:<3} multiple={:<3} {status}",
            entry.name,
            m.n(),
            m.r(),
            m.is_paving(),
            got.independent,
            got.simple,
            got.multiple
        );
    }
}
