//! Hyperplane census with per-subset profiles, as text and as JSON.
//!
//! Run with an optional catalog name: `cargo run --example census_report -- k4`

use pavmat::catalog;
use pavmat::census::census_with_profiles;

fn main() {
    let name = std::env::args()
        .nth(1)
        .unwrap_or_else(|| "ag32_prime".into());
    let entry = catalog::get(&name).unwrap_or_else(|e| {
        eprintln!("{e}; known: {}", catalog::NAMES.join(", "));
        std::process::exit(1);
    });
    let report = census_with_profiles(&entry.matroid).expect("catalog matroids have rank >= 1");
    let c = report.counts;
    println!("{} ({})", entry.name, entry.provenance);
    println!(
        "{} hyperplanes: {} independent, {} simple, {} multiple",
        report.hyperplanes.len(),
        c.independent,
        c.simple,
        c.multiple
    );
    for h in &report.hyperplanes {
        println!(
            "  {:<14} {}",
            h.elements.to_string(),
            h.classification.as_str()
        );
    }
    if let Some(profiles) = &report.per_subset_profiles {
        println!("(r-2)-subsets with simple >= multiple:");
        for p in profiles.iter().filter(|p| p.simple >= p.multiple) {
            println!("  {} simple={} multiple={}", p.subset, p.simple, p.multiple);
        }
    }
    println!("{}", serde_json::to_string(&report.counts).unwrap());
}
