//! Matroids from coordinates: two skew lines, the seven-line arrangement and
//! a point over a curve.

use pavmat::catalog;
use pavmat::census::census;
use pavmat::points::{from_points, Mode, PointConfiguration};
use pavmat::screen::screen;

fn describe(label: &str, config: &PointConfiguration) {
    let m = from_points(config).expect("nonempty configuration");
    let mut small: Vec<String> = m
        .circuits()
        .iter()
        .filter(|c| c.len() <= m.r())
        .map(|c| c.to_string())
        .collect();
    if small.len() > 6 {
        let more = small.len() - 5;
        small.truncate(5);
        small.push(format!("and {more} more"));
    }
    let count = census(&m).map(|c| c.counts.independent).unwrap_or(0);
    let v = screen(&m);
    println!(
        "{label}: n={} r={} paving={} small circuits [{}] independent={} screen={}",
        m.n(),
        m.r(),
        m.is_paving(),
        small.join(" "),
        count,
        v.reason_if_not.map_or(v.verdict.as_str(), |r| r.as_str())
    );
}

fn main() {
    describe("hansen", &catalog::hansen_points());
    describe("kelly_moser", &catalog::kelly_moser_lines());
    describe("apex(3,9)", &catalog::apex_points(3, 9).unwrap());
    let square = PointConfiguration::from_fractions(
        &[
            &[(0, 1), (0, 1)],
            &[(1, 2), (0, 1)],
            &[(1, 1), (0, 1)],
            &[(0, 1), (1, 3)],
        ],
        Mode::Affine,
    )
    .unwrap();
    describe("three on a line", &square);
}
