//! Deletion, contraction and duality on the relaxed cube.

use pavmat::catalog;
use pavmat::census::census;

fn main() {
    let m = catalog::ag32_prime().matroid;
    for e in 1..=m.n() as u32 {
        let con = m.contract(e).unwrap();
        let del = m.delete(e).unwrap();
        let ci = census(&con.matroid).unwrap().counts.independent;
        println!(
            "e={e}: M/e rank {} paving={} independent={ci}; M\\e paving={}",
            con.matroid.r(),
            con.matroid.is_paving(),
            del.matroid.is_paving()
        );
    }
    let d = m.dual();
    println!(
        "dual: {} rank {} paving={} bases={} (primal bases={})",
        d.label(),
        d.r(),
        d.is_paving(),
        d.bases().len(),
        m.bases().len()
    );
    println!("double dual equals original: {}", d.dual().equivalent(&m));
}
