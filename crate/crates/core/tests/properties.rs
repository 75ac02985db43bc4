mod common;

use common::{q, rational_rank};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use pavmat::format::{parse, parse_matroid, serialize_matroid};
use pavmat::points::{from_points, integer_rank, Mode, PointConfiguration};
use pavmat::search::{generate_sparse_paving, GenerationMode};
use pavmat::{ElementSet, ExactRational, Matroid};
use proptest::prelude::*;

/// A random sparse paving matroid determined by `seed`.
fn paving_matroid(n: usize, r: usize, seed: u64) -> Matroid {
    generate_sparse_paving(n, r, GenerationMode::Random, seed, 1)
        .unwrap()
        .next()
        .unwrap()
}

fn arb_matroid() -> impl Strategy<Value = Matroid> {
    (3usize..=5, 0usize..=4, any::<u64>())
        .prop_map(|(r, extra, seed)| paving_matroid(r + extra.max(1), r, seed))
}

fn set_in(m: &Matroid, bits: u64) -> ElementSet {
    ElementSet::from_bits(m.n(), bits & ((1u64 << m.n()) - 1)).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig {
        cases: 64,
        failure_persistence: None,
        ..ProptestConfig::default()
    })]

    #[test]
    fn rank_axioms(m in arb_matroid(), a in any::<u64>(), b in any::<u64>()) {
        let (x, y) = (set_in(&m, a), set_in(&m, b));
        let rx = m.rank(&x).unwrap();
        let ry = m.rank(&y).unwrap();
        prop_assert!(rx <= x.len());
        prop_assert!(m.rank(&x.union(&y)).unwrap() + m.rank(&x.intersection(&y)).unwrap() <= rx + ry);
        prop_assert!(m.rank(&x.intersection(&y)).unwrap() <= rx);
        prop_assert_eq!(m.rank(&m.ground()).unwrap(), m.r());
    }

    #[test]
    fn closure_is_a_closure_operator(m in arb_matroid(), a in any::<u64>(), b in any::<u64>()) {
        let x = set_in(&m, a);
        let y = x.union(&set_in(&m, b));
        let cx = m.closure(&x).unwrap();
        prop_assert!(x.is_subset(&cx));
        prop_assert_eq!(m.closure(&cx).unwrap(), cx);
        prop_assert!(cx.is_subset(&m.closure(&y).unwrap()));
        prop_assert_eq!(m.rank(&cx).unwrap(), m.rank(&x).unwrap());
        prop_assert!(m.is_flat(&cx).unwrap());
    }

    #[test]
    fn duality_is_an_involution(m in arb_matroid()) {
        let d = m.dual();
        prop_assert_eq!(d.r(), m.n() - m.r());
        prop_assert!(d.dual().equivalent(&m));
        let ground = m.ground();
        for bits in 0..(1u64 << m.n()).min(256) {
            let s = set_in(&m, bits);
            let comp = ground.difference(&s);
            prop_assert_eq!(
                d.rank(&s).unwrap(),
                s.len() + m.rank(&comp).unwrap() - m.r()
            );
        }
    }

    #[test]
    fn minors_of_paving_are_paving(m in arb_matroid(), e in 1u32..=8) {
        let e = (e - 1) % m.n() as u32 + 1;
        let del = m.delete(e).unwrap();
        let con = m.contract(e).unwrap();
        prop_assert!(del.matroid.is_paving());
        prop_assert!(con.matroid.is_paving());
        prop_assert_eq!(con.matroid.r(), m.r() - 1);
        // rank in M/e of S is r(S + e) - 1
        for bits in 0..(1u64 << (m.n() - 1)) {
            let s = ElementSet::from_bits(m.n() - 1, bits).unwrap();
            let up = con.lift(&s, m.n()).with(e).unwrap();
            prop_assert_eq!(con.matroid.rank(&s).unwrap(), m.rank(&up).unwrap() - 1);
            let down = del.lift(&s, m.n());
            prop_assert_eq!(del.matroid.rank(&s).unwrap(), m.rank(&down).unwrap());
        }
    }

    #[test]
    fn file_format_round_trips(m in arb_matroid()) {
        let text = serialize_matroid(&m);
        let back = parse_matroid(&text).unwrap();
        prop_assert!(back.equivalent(&m));
        prop_assert_eq!(serialize_matroid(&back), text.clone());
        let file = parse(&text).unwrap();
        prop_assert_eq!(file.serialize(), text);
    }

    #[test]
    fn circuit_representation_round_trips(m in arb_matroid()) {
        let c = Matroid::from_circuits(m.n(), &m.circuits()).unwrap();
        prop_assert!(c.equivalent(&m));
        let back = parse_matroid(&serialize_matroid(&c)).unwrap();
        prop_assert!(back.equivalent(&m));
        let p = c.to_paving().unwrap();
        prop_assert!(p.equivalent(&m));
    }

    #[test]
    fn bareiss_matches_rational_elimination(
        rows in proptest::collection::vec(proptest::collection::vec(-4i64..=4, 4), 0..6)
    ) {
        let ints: Vec<Vec<BigInt>> = rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
        let rats: Vec<Vec<BigRational>> = rows.iter().map(|r| r.iter().map(|&x| q(x, 1)).collect()).collect();
        prop_assert_eq!(integer_rank(&ints), rational_rank(&rats));
    }

    #[test]
    fn from_points_is_affinely_invariant(
        pts in proptest::collection::vec(proptest::collection::vec(-2i64..=2, 2), 4..8),
        map in proptest::collection::vec(-3i64..=3, 4),
        shift in proptest::collection::vec(-5i64..=5, 2),
        den in 1i64..=4,
    ) {
        let det = map[0] * map[3] - map[1] * map[2];
        prop_assume!(det != 0);
        let base: Vec<&[i64]> = pts.iter().map(|p| p.as_slice()).collect();
        let cfg = PointConfiguration::from_integers(&base, Mode::Affine).unwrap();
        let moved: Vec<Vec<ExactRational>> = pts
            .iter()
            .map(|p| {
                vec![
                    ExactRational::new(map[0] * p[0] + map[1] * p[1] + shift[0], den),
                    ExactRational::new(map[2] * p[0] + map[3] * p[1] + shift[1], den),
                ]
            })
            .collect();
        let cfg2 = PointConfiguration::new(moved, Mode::Affine).unwrap();
        let (a, b) = (from_points(&cfg).unwrap(), from_points(&cfg2).unwrap());
        prop_assert!(a.equivalent(&b));
    }

    #[test]
    fn exact_rational_text_round_trips(p in -10_000i64..10_000, d in 1i64..500) {
        let x = ExactRational::new(p, d);
        let back: ExactRational = x.to_string().parse().unwrap();
        prop_assert_eq!(&back, &x);
        let json = serde_json::to_string(&x).unwrap();
        let back: ExactRational = serde_json::from_str(&json).unwrap();
        prop_assert_eq!(back, x);
    }
}

#[test]
fn moment_curve_is_in_general_position() {
    // any d + 1 points (1, t, .., t^d) are independent: Vandermonde
    for d in 2..=4usize {
        let pts: Vec<Vec<BigRational>> = (1..=9i64)
            .map(|t| (0..=d as u32).map(|k| q(t.pow(k), 1)).collect())
            .collect();
        for s in common::subsets_of_size(pts.len(), d + 1) {
            let sub: Vec<_> = (0..pts.len())
                .filter(|i| s & (1 << i) != 0)
                .map(|i| pts[i].clone())
                .collect();
            assert_eq!(rational_rank(&sub), d + 1);
        }
        assert!(!pts[0][0].is_zero());
    }
}
