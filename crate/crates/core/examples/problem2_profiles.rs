//! Looks for an (r-2)-subset lying in at least as many simple hyperplanes
//! as multiple ones.

use pavmat::catalog;
use pavmat::census::subset_profile;
use pavmat::search::{generate_sparse_paving, problem2_scan, GenerationMode};
use pavmat::ElementSet;

fn main() {
    for name in ["ag32_prime", "ag32", "k4", "kelly_moser", "apex"] {
        let m = catalog::get(name).unwrap().matroid;
        match problem2_scan(&m) {
            Ok(Some(s)) => {
                let (simple, multiple) = subset_profile(&m, &s).unwrap();
                println!("{name}: witness {s} ({simple} simple, {multiple} multiple)");
            }
            Ok(None) => println!("{name}: none"),
            Err(e) => println!("{name}: {e}"),
        }
    }
    let k4 = catalog::k4().matroid;
    for e in 1..=6 {
        let s = ElementSet::new(6, [e]).unwrap();
        println!("k4 edge {e}: {:?}", subset_profile(&k4, &s).unwrap());
    }
    let without = generate_sparse_paving(8, 4, GenerationMode::Random, 3, 200)
        .unwrap()
        .filter(|m| problem2_scan(m).unwrap().is_none())
        .count();
    println!("random (8,4) sparse paving matroids without a witness: {without} of 200");
}
