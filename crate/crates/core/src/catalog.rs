//! Named reference matroids.
//!
//! | name          | n   | r   | notes                                              |
//! |---------------|-----|-----|----------------------------------------------------|
//! | `uniform`     | n   | r   | `uniform(n,r)`, default `uniform(8,4)`             |
//! | `ag32`        | 8   | 4   | binary affine cube, 14 four-point planes           |
//! | `ag32_prime`  | 8   | 4   | `ag32` with the plane {2,4,5,7} relaxed            |
//! | `hansen`      | 6   | 4   | three points on each of two skew lines             |
//! | `kelly_moser` | 7   | 3   | complete quadrilateral plus its three diagonals    |
//! | `k4`          | 6   | 3   | graphic matroid of the complete graph on 4 vertices|
//! | `apex`        | n   | d+1 | `apex(d,n)`, default `apex(3,8)`                   |

use crate::census::Counts;
use crate::error::{Error, Result};
use crate::matroid::Matroid;
use crate::points::{from_points, Mode, PointConfiguration};
use crate::rational::ExactRational;
use crate::set::{binomial, ElementSet};

#[derive(Debug, Clone)]
pub struct CatalogEntry {
    pub name: String,
    pub matroid: Matroid,
    pub provenance: String,
    pub expected_census: Option<Counts>,
}

pub const NAMES: [&str; 7] = [
    "uniform",
    "ag32",
    "ag32_prime",
    "hansen",
    "kelly_moser",
    "k4",
    "apex",
];

/// Cube labeling: element `i + 1` sits at `CUBE[i]`.
pub const CUBE: [[u8; 3]; 8] = [
    [0, 0, 1],
    [1, 0, 1],
    [1, 0, 0],
    [0, 0, 0],
    [0, 1, 1],
    [1, 1, 1],
    [1, 1, 0],
    [0, 1, 0],
];

const AG32_FACES: [[u32; 4]; 6] = [
    [1, 2, 3, 4],
    [5, 6, 7, 8],
    [1, 2, 6, 5],
    [4, 3, 7, 8],
    [1, 4, 8, 5],
    [2, 3, 7, 6],
];

const AG32_DIAGONALS: [[u32; 4]; 6] = [
    [1, 2, 7, 8],
    [3, 4, 5, 6],
    [1, 4, 6, 7],
    [2, 3, 5, 8],
    [1, 3, 5, 7],
    [2, 4, 6, 8],
];

/// The twisted plane kept in `ag32_prime`.
pub const AG32_TWISTED_KEPT: [u32; 4] = [1, 8, 3, 6];
/// The twisted plane relaxed to obtain `ag32_prime`.
pub const AG32_TWISTED_RELAXED: [u32; 4] = [2, 4, 5, 7];

/// Edge `i + 1` of K4 joins the two listed vertices.
pub const K4_EDGES: [(u8, u8); 6] = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];

fn sets(n: usize, lists: &[&[u32]]) -> Vec<ElementSet> {
    lists
        .iter()
        .map(|l| ElementSet::new(n, l.iter().copied()).expect("catalog sets are in range"))
        .collect()
}

fn ag32_planes(include_relaxed: bool) -> Vec<ElementSet> {
    let mut lists: Vec<&[u32]> = Vec::new();
    lists.extend(AG32_FACES.iter().map(|p| p.as_slice()));
    lists.extend(AG32_DIAGONALS.iter().map(|p| p.as_slice()));
    lists.push(&AG32_TWISTED_KEPT);
    if include_relaxed {
        lists.push(&AG32_TWISTED_RELAXED);
    }
    sets(8, &lists)
}

pub fn uniform(n: usize, r: usize) -> Result<CatalogEntry> {
    let matroid = Matroid::uniform(n, r)?;
    let c = binomial(n as u64, r.saturating_sub(1) as u64) as usize;
    Ok(CatalogEntry {
        name: format!("uniform({n},{r})"),
        matroid,
        provenance: "uniform matroid: every r-subset is a basis".into(),
        expected_census: (r >= 1).then_some(Counts {
            independent: c,
            simple: c,
            multiple: 0,
        }),
    })
}

pub fn ag32() -> CatalogEntry {
    let matroid = Matroid::from_paving(8, 4, &ag32_planes(true))
        .expect("AG(3,2) planes form a paving family")
        .with_name("ag32");
    CatalogEntry {
        name: "ag32".into(),
        matroid,
        provenance: "binary affine cube AG(3,2): six faces, six diagonal planes, two twisted planes {1,3,6,8} and {2,4,5,7}".into(),
        expected_census: Some(Counts {
            independent: 0,
            simple: 0,
            multiple: 14,
        }),
    }
}

pub fn ag32_prime() -> CatalogEntry {
    let matroid = Matroid::from_paving(8, 4, &ag32_planes(false))
        .expect("AG(3,2)' planes form a paving family")
        .with_name("ag32_prime");
    CatalogEntry {
        name: "ag32_prime".into(),
        matroid,
        provenance: "relaxation of AG(3,2) at the twisted plane {2,4,5,7}; the 13 remaining planes are the six faces, six diagonals and {1,3,6,8}".into(),
        expected_census: Some(Counts {
            independent: 4,
            simple: 4,
            multiple: 13,
        }),
    }
}

/// Coordinates of the two skew lines, first line listed first.
pub fn hansen_points() -> PointConfiguration {
    PointConfiguration::from_fractions(
        &[
            &[(0, 1), (0, 1), (0, 1)],
            &[(0, 1), (-1, 1), (0, 1)],
            &[(0, 1), (-1, 2), (0, 1)],
            &[(0, 1), (0, 1), (-1, 1)],
            &[(-1, 2), (0, 1), (-1, 1)],
            &[(-1, 1), (0, 1), (-1, 1)],
        ],
        Mode::Affine,
    )
    .expect("fixed coordinates")
}

pub fn hansen() -> CatalogEntry {
    let matroid = from_points(&hansen_points())
        .expect("fixed coordinates")
        .with_name("hansen");
    CatalogEntry {
        name: "hansen".into(),
        matroid,
        provenance: "six points, three on each of two skew lines in affine 3-space; no plane meets exactly three of them".into(),
        expected_census: Some(Counts {
            independent: 0,
            simple: 6,
            multiple: 0,
        }),
    }
}

/// The seven lines as vectors `(a, b, c)` of `ax + by + cz = 0`: the four
/// general lines `x, y, z, x+y+z` and the diagonals `x+y, x+z, y+z`.
pub fn kelly_moser_lines() -> PointConfiguration {
    PointConfiguration::from_integers(
        &[
            &[1, 0, 0],
            &[0, 1, 0],
            &[0, 0, 1],
            &[1, 1, 1],
            &[1, 1, 0],
            &[1, 0, 1],
            &[0, 1, 1],
        ],
        Mode::Linear,
    )
    .expect("fixed coordinates")
}

pub fn kelly_moser() -> CatalogEntry {
    let matroid = from_points(&kelly_moser_lines())
        .expect("fixed coordinates")
        .to_paving()
        .expect("rank-3 simple matroids are paving")
        .with_name("kelly_moser");
    CatalogEntry {
        name: "kelly_moser".into(),
        matroid,
        provenance: "seven-line arrangement with three simple points: four general lines and the three diagonals of their complete quadrilateral; elements are lines".into(),
        expected_census: Some(Counts {
            independent: 3,
            simple: 3,
            multiple: 6,
        }),
    }
}

pub fn k4() -> CatalogEntry {
    // edges: 1=ab 2=ac 3=ad 4=bc 5=bd 6=cd
    let circuits = sets(
        6,
        &[
            &[1, 2, 4],
            &[1, 3, 5],
            &[2, 3, 6],
            &[4, 5, 6],
            &[1, 4, 6, 3],
            &[1, 5, 6, 2],
            &[2, 4, 5, 3],
        ],
    );
    let matroid = Matroid::from_circuits(6, &circuits)
        .expect("cycles of K4 satisfy the circuit axioms")
        .with_name("k4");
    CatalogEntry {
        name: "k4".into(),
        matroid,
        provenance: "graphic matroid of K4; hyperplanes are the four triangles and the three perfect matchings".into(),
        expected_census: Some(Counts {
            independent: 3,
            simple: 3,
            multiple: 4,
        }),
    }
}

/// `n - 1` points `(t, t^2, .., t^(d-1), 0)` for `t = 1..n-1` plus the apex
/// `(0, .., 0, 1)`, in affine `d`-space.
pub fn apex_points(d: usize, n: usize) -> Result<PointConfiguration> {
    if d < 2 || n < d + 2 {
        return Err(Error::ParameterOutOfRange(format!(
            "apex needs d >= 2 and n >= d + 2, got d = {d}, n = {n}"
        )));
    }
    if n > crate::set::MAX_ELEMENTS {
        return Err(Error::GroundSetTooLarge(n));
    }
    let mut points = Vec::with_capacity(n);
    for t in 1..n as i64 {
        let mut p: Vec<ExactRational> = Vec::with_capacity(d);
        let mut power = 1i64;
        for _ in 0..d - 1 {
            power *= t;
            p.push(ExactRational::from(power));
        }
        p.push(ExactRational::zero());
        points.push(p);
    }
    let mut apex = vec![ExactRational::zero(); d];
    apex[d - 1] = ExactRational::one();
    points.push(apex);
    PointConfiguration::new(points, Mode::Affine)
}

pub fn apex_matroid(d: usize, n: usize) -> Result<Matroid> {
    let m = from_points(&apex_points(d, n)?)?;
    let m = m.to_paving().unwrap_or(m);
    Ok(m.with_name(format!("apex({d},{n})")))
}

pub fn apex(d: usize, n: usize) -> Result<CatalogEntry> {
    let matroid = apex_matroid(d, n)?;
    let c = binomial((n - 1) as u64, (d - 1) as u64) as usize;
    Ok(CatalogEntry {
        name: format!("apex({d},{n})"),
        matroid,
        provenance: "n-1 moment-curve points in a hyperplane plus one apex point; a single multiple hyperplane".into(),
        expected_census: Some(Counts {
            independent: c,
            simple: c,
            multiple: 1,
        }),
    })
}

fn parse_params(name: &str, base: &str) -> Option<Result<(usize, usize)>> {
    let rest = name.strip_prefix(base)?;
    if rest.is_empty() {
        return None;
    }
    let inner = rest.strip_prefix('(').and_then(|s| s.strip_suffix(')'));
    let parsed = inner.and_then(|s| {
        let (a, b) = s.split_once(',')?;
        Some((a.trim().parse().ok()?, b.trim().parse().ok()?))
    });
    Some(parsed.ok_or_else(|| Error::UnknownName(name.to_string())))
}

/// Looks up an entry. `uniform` and `apex` accept `uniform(n,r)` and
/// `apex(d,n)`; bare names give `uniform(8,4)` and `apex(3,8)`.
pub fn get(name: &str) -> Result<CatalogEntry> {
    if let Some(p) = parse_params(name, "uniform") {
        let (n, r) = p?;
        return uniform(n, r);
    }
    if let Some(p) = parse_params(name, "apex") {
        let (d, n) = p?;
        return apex(d, n);
    }
    match name {
        "uniform" => uniform(8, 4),
        "ag32" => Ok(ag32()),
        "ag32_prime" => Ok(ag32_prime()),
        "hansen" => Ok(hansen()),
        "kelly_moser" => Ok(kelly_moser()),
        "k4" => Ok(k4()),
        "apex" => apex(3, 8),
        _ => Err(Error::UnknownName(name.to_string())),
    }
}

/// One entry per published name, parameterized families at their defaults.
pub fn all() -> Vec<CatalogEntry> {
    NAMES
        .iter()
        .map(|n| get(n).expect("published names resolve"))
        .collect()
}
