use greg_core::fps::{factorial, propgen_series};
use greg_core::polyseq::{gen_f, gen_g, gen_h, Poly};
use greg_core::trees::{
    enumerate_cayley, enumerate_greg, enumerate_greg_with_u, imp_polynomial, max_unlabeled,
    propgen_census, restrict, unl_polynomial, Variant,
};
use num_bigint::BigInt;
use num_traits::ToPrimitive;

#[test]
fn unrooted_census_is_h() {
    let h = gen_h(6);
    for n in 1..=6 {
        assert_eq!(unl_polynomial(n, Variant::Unrooted), h[n - 1], "n={n}");
    }
    assert_eq!(enumerate_greg(4, Variant::Unrooted).len(), 32);
}

#[test]
fn rooted_census_is_g() {
    let g = gen_g(5);
    for n in 1..=5 {
        assert_eq!(unl_polynomial(n, Variant::Rooted), g[n - 1], "n={n}");
    }
}

#[test]
fn relaxed_and_birooted_censuses() {
    let g = gen_g(4);
    let f = gen_f(4);
    let one_plus_x = Poly::from_i64s(&[1, 1]);
    for n in 1..=4 {
        assert_eq!(
            unl_polynomial(n, Variant::RelaxedRooted),
            &one_plus_x * &g[n - 1]
        );
        assert_eq!(
            unl_polynomial(n, Variant::Birooted),
            &one_plus_x.pow(3) * &f[n - 1]
        );
    }
}

#[test]
fn improper_edges_are_shifted_g_and_h() {
    let m1 = BigInt::from(-1);
    let g = gen_g(7);
    let h = gen_h(7);
    for n in 1..=7 {
        assert_eq!(imp_polynomial(n, true), g[n - 1].shift(&m1), "rooted n={n}");
        assert_eq!(
            imp_polynomial(n, false),
            h[n - 1].shift(&m1),
            "unrooted n={n}"
        );
    }
}

#[test]
fn unlabeled_relabelings_act_freely() {
    for v in Variant::ALL {
        let n_max = if v == Variant::Unrooted { 5 } else { 4 };
        for n in 1..=n_max {
            for u in 0..=max_unlabeled(n, v) {
                let c = enumerate_greg_with_u(n, v, u);
                let fact = factorial(u).to_u64().unwrap();
                assert_eq!(
                    c.labeled_count,
                    fact * c.trees.len() as u64,
                    "{v} n={n} u={u}"
                );
            }
        }
    }
}

#[test]
fn restriction_is_total() {
    for m in 2..=6 {
        for rooted in [false, true] {
            let variant = if rooted {
                Variant::Rooted
            } else {
                Variant::Unrooted
            };
            for x in enumerate_cayley(m, rooted) {
                for n in 1..m {
                    let r = restrict(&x, n).unwrap();
                    r.validate(variant)
                        .unwrap_or_else(|e| panic!("{x:?} n={n}: {e}"));
                    assert!(r.u <= max_unlabeled(n, variant));
                }
            }
        }
    }
}

#[test]
fn propgen_matches_series() {
    for rooted in [false, true] {
        let variant = if rooted {
            Variant::Rooted
        } else {
            Variant::Unrooted
        };
        for n in 1..=3 {
            for t in enumerate_greg(n, variant) {
                let census = propgen_census(&t, n + 3);
                let s = propgen_series(n, t.u, rooted, 3);
                let expect: Vec<u64> = (0..=3)
                    .map(|j| {
                        let c = s.coeff(j) * num_rational::BigRational::from_integer(factorial(j));
                        c.to_integer().to_u64().unwrap()
                    })
                    .collect();
                assert_eq!(census, expect, "{variant} {t:?}");
            }
        }
    }
}
