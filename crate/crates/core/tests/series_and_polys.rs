use greg_core::fps::{check_def_identity, parse_rat, rat, series_t, zeroth_values, SeriesFamily};
use greg_core::polyseq::{double_factorial_odd, gen_f, gen_g, gen_h, gen_p, Poly};
use greg_core::RatSeries;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use proptest::prelude::*;

fn arb_series(max_order: usize) -> impl Strategy<Value = RatSeries> {
    (1..=max_order).prop_flat_map(|order| {
        prop::collection::vec((-20i64..20, 1i64..6), order + 1).prop_map(move |cs| {
            RatSeries::new(cs.into_iter().map(|(n, d)| rat(n, d)).collect(), order)
        })
    })
}

fn arb_poly() -> impl Strategy<Value = Poly> {
    prop::collection::vec(-50i64..50, 0..8).prop_map(|cs| Poly::from_i64s(&cs))
}

proptest! {
    #[test]
    fn integrate_undoes_derive(f in arb_series(12)) {
        let back = f.derive().unwrap().integrate();
        let mut expected = f.truncate(back.order()).coeffs().to_vec();
        expected[0] = BigRational::zero();
        prop_assert_eq!(back.coeffs(), &expected[..]);
    }

    #[test]
    fn reversion_round_trips(mut f in arb_series(10)) {
        let order = f.order();
        let mut c = f.coeffs().to_vec();
        c[0] = BigRational::zero();
        if c[1].is_zero() {
            c[1] = BigRational::one();
        }
        f = RatSeries::new(c, order);
        let g = f.reversion().unwrap();
        let z = RatSeries::var(order);
        prop_assert_eq!(f.compose(&g).unwrap(), z.clone());
        prop_assert_eq!(g.compose(&f).unwrap(), z);
    }

    #[test]
    fn exp_is_a_homomorphism(a in arb_series(8), b in arb_series(8)) {
        let zero_const = |s: &RatSeries| {
            let mut c = s.coeffs().to_vec();
            c[0] = BigRational::zero();
            RatSeries::new(c, s.order())
        };
        let (a, b) = (zero_const(&a), zero_const(&b));
        let lhs = (&a + &b).exp().unwrap();
        let rhs = &a.exp().unwrap() * &b.exp().unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn shifts_compose(p in arb_poly(), a in -5i64..5, b in -5i64..5) {
        let (a, b) = (BigInt::from(a), BigInt::from(b));
        prop_assert_eq!(p.shift(&a).shift(&b), p.shift(&(&a + &b)));
    }

    #[test]
    fn shift_agrees_with_evaluation(p in arb_poly(), a in -5i64..5, x in -7i64..7) {
        let (a, x) = (BigInt::from(a), BigInt::from(x));
        prop_assert_eq!(p.shift(&a).eval_int(&x), p.eval_int(&(&x + &a)));
    }
}

#[test]
fn degrees_and_leading_coefficients() {
    let (f, g, h) = (gen_f(40), gen_g(40), gen_h(40));
    for n in 1..=40 {
        let ni = n as i64;
        assert_eq!(f[n - 1].degree(), Some(n - 1));
        assert_eq!(f[n - 1].leading(), Some(&double_factorial_odd(ni)));
        assert_eq!(g[n - 1].degree(), Some(n - 1));
        assert_eq!(g[n - 1].leading(), Some(&double_factorial_odd(ni - 1)));
        assert_eq!(h[n - 1].degree(), Some(n.saturating_sub(2)));
        assert_eq!(
            h[n - 1].leading(),
            Some(&double_factorial_odd((ni - 2).max(0)))
        );
    }
}

#[test]
fn constant_terms_are_cayley_counts() {
    let (g, h) = (gen_g(7), gen_h(7));
    for n in 1..=7u32 {
        let i = n as usize - 1;
        assert_eq!(g[i].coeff(0), BigInt::from(n).pow(n - 1));
        if n >= 2 {
            assert_eq!(h[i].coeff(0), BigInt::from(n).pow(n - 2));
        }
    }
}

#[test]
fn p_table_start() {
    // (1+x)^2 G_3(-x/(1+x)) with G_3 = 3x^2+10x+9
    let p = gen_p(3);
    assert_eq!(p[2], Poly::from_i64s(&[9, 8, 2]));
}

#[test]
fn def_identity_examples() {
    assert!(check_def_identity(SeriesFamily::G, &gen_g(1), 1, 10).passed);
    let bad = check_def_identity(SeriesFamily::G, &gen_g(8), 8, 12);
    assert!(!bad.passed, "order below n_max + 5 must be rejected");
    let mut corrupted = gen_g(3);
    corrupted[2] = &corrupted[2] + &Poly::one();
    let r = check_def_identity(SeriesFamily::G, &corrupted, 3, 10);
    assert!(r.witness.unwrap().starts_with("n=3"));
}

#[test]
fn zeroth_terms() {
    let [f0, g0, h0] = zeroth_values(&parse_rat("1").unwrap()).unwrap();
    assert_eq!((f0, g0, h0), (rat(1, 2), rat(1, 2), rat(3, 4)));
    assert!(zeroth_values(&parse_rat("-1").unwrap()).is_err());
}

#[test]
fn tree_function_coefficients() {
    let t = series_t(1, 5);
    let expected = [rat(0, 1), rat(1, 1), rat(1, 1), rat(3, 2), rat(8, 3)];
    assert_eq!(&t.coeffs()[..5], &expected);
    assert_eq!(t.coeff(5), &rat(125, 24));
}
