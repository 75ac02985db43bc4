//! Random sparse paving matroids of rank 4, ranked by independent
//! hyperplanes, written as JSONL to stdout.
//!
//! `cargo run --release --example sparse_paving_search -- 9 200`

use std::io;

use pavmat::search::{problem1_scan, write_jsonl, GenerationMode, SearchHeader};

fn main() {
    let mut args = std::env::args().skip(1);
    let n: usize = args.next().map_or(8, |a| a.parse().expect("n"));
    let budget: usize = args.next().map_or(50, |a| a.parse().expect("budget"));
    let seed = 7;
    let records =
        problem1_scan(n..=n, 4, GenerationMode::Random, seed, budget, 4).expect("valid parameters");
    if let Some(best) = records.first() {
        eprintln!(
            "n={n}: fewest independent hyperplanes {} (bound {}), {} blocks, flagged {}",
            best.independent_count,
            best.bound,
            best.blocks.len(),
            records.iter().filter(|r| r.not_orientable).count()
        );
    }
    let header = SearchHeader::new(n, 4, GenerationMode::Random, seed, budget);
    write_jsonl(io::stdout().lock(), &header, &records).expect("stdout");
}
