use num_rational::BigRational;
use proptest::prelude::*;

use einsu::curvature::{ricci_components_symmetric, SymmetricMetric};
use einsu::einstein::{case2_metric, einstein_constant, system_f, x2_of_x12, SystemParams};
use einsu::exactpoly::{ratio, Ring};
use einsu::liealg::{bracket, build_decomposition, minus_killing, Partition};

fn params() -> impl Strategy<Value = SystemParams> {
    (2u32..8, 2u32..5, 3u32..6).prop_map(|(k1, k, p)| SystemParams::new(k1, k, p).unwrap())
}

fn positive_rational() -> impl Strategy<Value = BigRational> {
    (1i64..400, 1i64..100).prop_map(|(n, d)| ratio(n, d))
}

fn metric() -> impl Strategy<Value = SymmetricMetric<BigRational>> {
    prop::array::uniform5(positive_rational()).prop_map(|[y1, y2, x1, x2, x12]| SymmetricMetric {
        y1,
        y2,
        x1,
        x2,
        x12,
        x23: BigRational::one_elem(),
    })
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 64, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn x2_lies_in_unit_interval(p in params(), x in positive_rational()) {
        let x2 = x2_of_x12(&p, &x).unwrap();
        prop_assert!(x2 > ratio(0, 1) && x2 < ratio(1, 1));
    }

    #[test]
    fn case2_curve_kills_four_equations(p in params(), x in positive_rational()) {
        let m = case2_metric(&p, &x).unwrap();
        let f = system_f(&p, &m).unwrap();
        for i in [0, 1, 3, 4] {
            prop_assert_eq!(&f[i], &ratio(0, 1));
        }
    }

    #[test]
    fn einstein_constant_is_a_ricci_component(p in params(), x in positive_rational()) {
        let m = case2_metric(&p, &x).unwrap();
        prop_assume!(m.is_positive());
        let r = ricci_components_symmetric(p.k1, p.k, p.p, &m).unwrap();
        let l = einstein_constant(&p, &x).unwrap();
        prop_assert_eq!(&r.rr1, &l);
        prop_assert_eq!(&r.r12, &l);
    }

    #[test]
    fn ricci_scales_inversely(p in params(), m in metric(), c in positive_rational()) {
        let r = ricci_components_symmetric(p.k1, p.k, p.p, &m).unwrap();
        let scaled = m.map(|v| v * &c);
        let rs = ricci_components_symmetric(p.k1, p.k, p.p, &scaled).unwrap();
        for (a, b) in r.as_array().iter().zip(rs.as_array()) {
            prop_assert_eq!((*a).clone(), b * &c);
        }
    }

    #[test]
    fn bracket_antisymmetric_and_killing_invariant(
        parts in prop::sample::select(vec![vec![2usize, 2, 2], vec![3, 2, 1], vec![2, 1, 1, 1]]),
        i in 0usize..1000, j in 0usize..1000, l in 0usize..1000,
    ) {
        let dec = build_decomposition(&Partition::new(parts).unwrap());
        let basis = dec.flat_basis();
        let d = basis.len();
        let (x, y, z) = (&basis[i % d], &basis[j % d], &basis[l % d]);
        let xy = bracket(x, y).unwrap();
        let yx = bracket(y, x).unwrap();
        prop_assert!(xy.add(&yx).unwrap().max_abs() < 1e-13);
        // -B([X,Y],Z) = -B(X,[Y,Z])
        let lhs = minus_killing(&xy, z).unwrap();
        let rhs = minus_killing(x, &bracket(y, z).unwrap()).unwrap();
        prop_assert!((lhs - rhs).abs() < 1e-12);
    }
}
