//! Table of the lower bound f(n, r) with the recurrence check.

use pavmat::screen::{bound, min_elements, verify_recurrence};

fn main() {
    println!("{:>3} {:>16} {:>16} {:>16}", "n", "r=3", "r=4", "r=5");
    for n in 8..=16 {
        let cells: Vec<String> = (3..=5)
            .map(|r| {
                if n < min_elements(r) {
                    return "-".into();
                }
                let b = bound(n, r).unwrap();
                format!("{b} ~{}", b.approx(4))
            })
            .collect();
        println!("{n:>3} {:>16} {:>16} {:>16}", cells[0], cells[1], cells[2]);
    }
    println!(
        "f(n,r) = n/(r-1) f(n-1,r-1) up to r=8, n=25: {}",
        verify_recurrence(8, 25)
    );
}
