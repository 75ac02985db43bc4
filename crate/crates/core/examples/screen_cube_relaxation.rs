//! Screen the relaxed cube: four independent hyperplanes against a bound of
//! 112/13 rule out an orientation.

use pavmat::catalog;
use pavmat::screen::screen;

fn main() {
    let m = catalog::ag32_prime().matroid;
    let v = screen(&m);
    let bound = v.bound.as_ref().expect("rank 4 has a bound");
    println!("{}: n={} r={}", v.matroid_name, v.n, v.r);
    println!("independent hyperplanes: {}", v.independent_count);
    println!("bound f(8,4) = {bound} (~{})", bound.approx(5));
    println!("verdict: {}", v.verdict.as_str());
    if let Some(cert) = &v.certificate {
        for h in cert.independent() {
            println!("  witness {}", h.elements);
        }
    }

    // the unrelaxed cube has no independent hyperplanes at all
    let full = screen(&catalog::ag32().matroid);
    println!(
        "ag32: independent {} -> {}",
        full.independent_count,
        full.verdict.as_str()
    );
}
