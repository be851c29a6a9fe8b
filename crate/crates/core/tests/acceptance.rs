//! Acceptance criteria, run in sequence so each one is timed on its own.
//! Prints one PASS/FAIL line per criterion.

use std::time::{Duration, Instant};

use greg_core::fps::{
    check_basic_identities, check_beta_identity, check_def_identity, check_egf_theorem,
    check_gh_functional, check_reversion_lemma, factorial, parse_rat, propgen_series, SeriesFamily,
};
use greg_core::numeric::{
    check_bernstein, check_finite_differences, check_halfplane, check_residuals, residual_grid,
};
use greg_core::polyseq::{gen_f, gen_g, gen_h, gen_q, is_unimodal, p_from_gs, Poly};
use greg_core::trees::{
    enumerate_greg, enumerate_greg_with_u, imp_polynomial, max_unlabeled, propgen_census, Variant,
};
use greg_core::CheckReport;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Signed;

type Outcome = Result<(), String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn report_ok(r: &CheckReport) -> Outcome {
    ensure(r.passed && !r.skipped, || {
        format!("{}: {}", r.name, r.witness.clone().unwrap_or_default())
    })
}

fn desc(rows: &[&[i64]]) -> Vec<Poly> {
    rows.iter()
        .map(|r| Poly::from_i64s(&r.iter().rev().copied().collect::<Vec<_>>()))
        .collect()
}

fn shifted(t: &[Poly]) -> Vec<Poly> {
    t.iter().map(|p| p.shift(&BigInt::from(-1))).collect()
}

fn golden_tables() -> Outcome {
    let f = desc(&[
        &[1],
        &[3, 4],
        &[15, 40, 27],
        &[105, 420, 565, 256],
        &[945, 5040, 10150, 9156, 3125],
        &[10395, 69300, 185850, 250768, 170359, 46656],
    ]);
    let g = desc(&[
        &[1],
        &[1, 2],
        &[3, 10, 9],
        &[15, 70, 113, 64],
        &[105, 630, 1450, 1526, 625],
        &[945, 6930, 20650, 31346, 24337, 7776],
    ]);
    let h = desc(&[
        &[1],
        &[1],
        &[1, 3],
        &[3, 13, 16],
        &[15, 85, 171, 125],
        &[105, 735, 2005, 2551, 1296],
        &[945, 7875, 26950, 47586, 43653, 16807],
    ]);
    let f_shift = desc(&[
        &[1],
        &[3, 1],
        &[15, 10, 2],
        &[105, 105, 40, 6],
        &[945, 1260, 700, 196, 24],
        &[10395, 17325, 12600, 5068, 1148, 120],
    ]);
    let g_shift = desc(&[
        &[1],
        &[1, 1],
        &[3, 4, 2],
        &[15, 25, 18, 6],
        &[105, 210, 190, 96, 24],
        &[945, 2205, 2380, 1526, 600, 120],
    ]);
    let h_shift = desc(&[
        &[1],
        &[1],
        &[1, 2],
        &[3, 7, 6],
        &[15, 40, 46, 24],
        &[105, 315, 430, 326, 120],
        &[945, 3150, 4900, 4536, 2556, 720],
    ]);
    let cases = [
        ("F", gen_f(6), f),
        ("G", gen_g(6), g),
        ("H", gen_h(7), h),
        ("F(x-1)", shifted(&gen_f(6)), f_shift),
        ("G(x-1)", shifted(&gen_g(6)), g_shift),
        ("H(x-1)", shifted(&gen_h(7)), h_shift),
    ];
    for (name, got, want) in cases {
        ensure(got == want, || format!("{name} table differs"))?;
    }
    Ok(())
}

fn tree_counts() -> Outcome {
    let (f, g, h) = (gen_f(4), gen_g(5), gen_h(6));
    let census = |n: usize, v: Variant| -> (Poly, usize) {
        let mut counts = Vec::new();
        for u in 0..=max_unlabeled(n, v) {
            let c = enumerate_greg_with_u(n, v, u);
            assert_eq!(
                BigInt::from(c.labeled_count),
                factorial(u) * BigInt::from(c.trees.len())
            );
            counts.push(BigInt::from(c.trees.len()));
        }
        let total = counts.iter().map(|c| usize::try_from(c).unwrap()).sum();
        (Poly::new(counts), total)
    };
    for n in 1..=6 {
        let (p, total) = census(n, Variant::Unrooted);
        ensure(p == h[n - 1], || {
            format!("unrooted n={n}: {p} vs H_n = {}", h[n - 1])
        })?;
        if n == 3 {
            ensure(p.to_string() == "x+3" && total == 4, || {
                format!("unrooted n=3: {p}, {total} trees")
            })?;
        }
        if n == 4 {
            ensure(total == 32, || format!("unrooted n=4: {total} trees"))?;
        }
    }
    for n in 1..=5 {
        let (p, total) = census(n, Variant::Rooted);
        ensure(p == g[n - 1], || {
            format!("rooted n={n}: {p} vs G_n = {}", g[n - 1])
        })?;
        if n == 2 {
            ensure(total == 3, || format!("rooted n=2: {total} trees"))?;
        }
    }
    let one_plus_x = Poly::from_i64s(&[1, 1]);
    for n in 1..=4 {
        let (p, _) = census(n, Variant::RelaxedRooted);
        ensure(p == &one_plus_x * &g[n - 1], || {
            format!("relaxed n={n}: {p}")
        })?;
        let (p, _) = census(n, Variant::Birooted);
        ensure(p == &one_plus_x.pow(3) * &f[n - 1], || {
            format!("bi-rooted n={n}: {p}")
        })?;
    }
    Ok(())
}

fn improper_edges() -> Outcome {
    let (g, h) = (shifted(&gen_g(7)), shifted(&gen_h(7)));
    for n in 1..=7 {
        let r = imp_polynomial(n, true);
        ensure(r == g[n - 1], || {
            format!("rooted n={n}: {r} vs G_n(x-1) = {}", g[n - 1])
        })?;
        let u = imp_polynomial(n, false);
        ensure(u == h[n - 1], || {
            format!("unrooted n={n}: {u} vs H_n(x-1) = {}", h[n - 1])
        })?;
    }
    Ok(())
}

fn series_identities() -> Outcome {
    let g = gen_g(8);
    let tables = [
        (SeriesFamily::F, gen_f(8)),
        (SeriesFamily::G, g.clone()),
        (SeriesFamily::H, gen_h(8)),
        (SeriesFamily::P, p_from_gs(&g)),
    ];
    for (fam, t) in &tables {
        report_ok(&check_def_identity(*fam, t, 8, 25))?;
    }
    report_ok(&check_basic_identities(25))?;
    report_ok(&check_basic_identities(30))?;
    report_ok(&check_reversion_lemma(25))?;
    report_ok(&check_reversion_lemma(30))
}

fn egf_theorem() -> Outcome {
    let listed = ["0", "1", "-1/2", "2", "1/3", "5"];
    let extra = ["-1/3", "3"];
    let xs: Vec<BigRational> = listed
        .iter()
        .chain(&extra)
        .map(|s| parse_rat(s).unwrap())
        .collect();
    let (f, g, h) = (gen_f(10), gen_g(10), gen_h(10));
    let r = check_egf_theorem(&xs, [&f, &g, &h], 6);
    report_ok(&r)?;
    ensure(r.params["symbolic"] == true, || {
        "fewer than n_max + 2 distinct samples".into()
    })?;
    report_ok(&check_gh_functional(&xs, &g, &h, 10))
}

fn propgen() -> Outcome {
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
                for (j, &c) in census.iter().enumerate() {
                    let want = s.coeff(j) * BigRational::from_integer(factorial(j));
                    ensure(want == BigRational::from_integer(c.into()), || {
                        format!(
                            "{} {:?} m={}: {c} vs {want}",
                            variant.name(),
                            t.edges,
                            n + j
                        )
                    })?;
                }
            }
        }
    }
    Ok(())
}

fn beta_identity() -> Outcome {
    for rooted in [false, true] {
        let censuses: Vec<Poly> = (1..=6).map(|n| imp_polynomial(n, rooted)).collect();
        report_ok(&check_beta_identity(&censuses, rooted, 20))?;
    }
    Ok(())
}

fn positivity() -> Outcome {
    let (f, g, h) = (gen_f(50), gen_g(50), gen_h(50));
    for (name, t) in [("F", &f), ("G", &g), ("H", &h)] {
        for (i, p) in shifted(t).iter().enumerate() {
            ensure(!p.coeffs().iter().any(|c| c.is_negative()), || {
                format!("{name}_{}(x-1) = {p}", i + 1)
            })?;
        }
    }
    let p = p_from_gs(&g);
    for n in 1..=50 {
        let q = if n % 2 == 0 {
            -&p[n - 1]
        } else {
            p[n - 1].clone()
        };
        let ok = q.coeffs().len() == n
            && q.coeffs().iter().all(|c| c.is_positive())
            && is_unimodal(q.coeffs());
        ensure(ok, || format!("(-1)^(n-1) P_{n} = {q}"))?;
    }
    let minus_one = BigInt::from(-1);
    for n in 1..=30 {
        let mut rev = g[n - 1].shift(&minus_one).coeffs().to_vec();
        rev.resize(n, BigInt::from(0));
        rev.reverse();
        let pn = p[n - 1].shift(&minus_one);
        let signed = if n % 2 == 0 { -&pn } else { pn };
        ensure(Poly::new(rev) == signed, || format!("reciprocity n={n}"))?;
    }
    Ok(())
}

fn bernstein_numerics() -> Outcome {
    let (f, g, h) = (gen_f(15), gen_g(15), gen_h(15));
    let (r, rows) = check_bernstein(&[0.1, 1.0, 10.0], 15, [&g, &h, &f]);
    report_ok(&r)?;
    ensure(rows.len() == 135 && rows.iter().all(|r| r.sign_ok), || {
        "sign rows".into()
    })?;
    let grid = residual_grid();
    ensure(grid.len() == 100, || "grid size".into())?;
    report_ok(&check_residuals(&grid))?;
    report_ok(&check_finite_differences(
        &[0.5, 1.0, 2.0, std::f64::consts::E],
        4,
        &g,
        1e-5,
    ))?;
    let hp = check_halfplane(1000, 42);
    report_ok(&hp)?;
    ensure(hp.params["passed"] == "1000/1000", || {
        format!("half-plane {}", hp.params["passed"])
    })
}

fn q_triangle() -> Outcome {
    let q = gen_q(12);
    let (f, g, h) = (
        shifted(&gen_f(11)),
        shifted(&gen_g(12)),
        shifted(&gen_h(13)),
    );
    for n in 1..=12 {
        let at_minus_one = if n == 1 {
            Poly::one()
        } else {
            f[n - 2].mul_x_pow(1)
        };
        ensure(q.specialize(n, -1) == at_minus_one, || {
            format!("x=-1, n={n}")
        })?;
        ensure(q.specialize(n, 0) == g[n - 1], || format!("x=0, n={n}"))?;
        // H_n(x-1) has degree n-2, one short; the sum is H_{n+1}(x-1)
        ensure(q.specialize(n, 1) == h[n], || format!("x=1, n={n}"))?;
        if n >= 2 {
            ensure(q.specialize(n, 1) != h[n - 1], || {
                format!("x=1, n={n}: H_n index unexpectedly holds")
            })?;
        }
    }
    Ok(())
}

#[test]
fn acceptance() {
    type Criterion = (&'static str, Duration, fn() -> Outcome);
    let criteria: [Criterion; 10] = [
        ("1 golden tables", Duration::from_secs(1), golden_tables),
        (
            "2 tree-count reproduction",
            Duration::from_secs(300),
            tree_counts,
        ),
        (
            "3 improper-edge identities",
            Duration::from_secs(120),
            improper_edges,
        ),
        (
            "4 series identities",
            Duration::from_secs(30),
            series_identities,
        ),
        (
            "5 generating-function theorem",
            Duration::from_secs(30),
            egf_theorem,
        ),
        (
            "6 restriction census oracle",
            Duration::from_secs(60),
            propgen,
        ),
        (
            "7 improper-edge series identity",
            Duration::from_secs(60),
            beta_identity,
        ),
        (
            "8 positivity and structure",
            Duration::from_secs(10),
            positivity,
        ),
        (
            "9 Bernstein numerics",
            Duration::from_secs(10),
            bernstein_numerics,
        ),
        ("10 Q triangle", Duration::from_secs(1), q_triangle),
    ];
    let mut failures = Vec::new();
    for (name, limit, run) in criteria {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let verdict = match (&outcome, elapsed <= limit) {
            (Ok(()), true) => "PASS".to_string(),
            (Ok(()), false) => format!("FAIL (took {elapsed:.2?}, limit {limit:?})"),
            (Err(e), _) => format!("FAIL ({e})"),
        };
        println!("criterion {name}: {verdict} [{elapsed:.2?}]");
        if verdict != "PASS" {
            failures.push(name);
        }
    }
    assert!(failures.is_empty(), "failed: {failures:?}");
}
