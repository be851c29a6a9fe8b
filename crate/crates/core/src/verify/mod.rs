//! The named verification suite: symbolic, enumerative and numeric checks
//! run against one shared set of polynomial tables.

mod golden;

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fps::{self, factorial, fmt_rat, parse_rat, SeriesFamily};
use crate::numeric;
use crate::polyseq::{
    double_factorial_odd, generate, is_unimodal, p_from_gs, Family, Poly, PolyTriangle,
};
use crate::report::CheckReport;
use crate::trees::{
    enumerate_cayley, enumerate_greg, enumerate_greg_with_u, imp_polynomial, max_unlabeled,
    propgen_census, restrict, Variant, MAX_VERTICES,
};

/// Size limits for every check. A limit of zero skips the checks it governs.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Budget {
    /// Degrees, leading coefficients, constant terms, the shifted `G`
    /// recursion and the `G`/`H` interconversion.
    pub poly_n_max: usize,
    pub positivity_n_max: usize,
    pub reciprocity_n_max: usize,
    pub q_n_max: usize,
    pub series_order: usize,
    pub series_depth: usize,
    pub basic_order: usize,
    pub egf_n_max: usize,
    pub egf_samples: Vec<String>,
    pub gh_order: usize,
    pub unrooted_n_max: usize,
    pub rooted_n_max: usize,
    pub relaxed_n_max: usize,
    pub birooted_n_max: usize,
    pub imp_n_max: usize,
    pub restriction_m_max: usize,
    pub propgen_n_max: usize,
    /// Cayley trees of size up to `n + propgen_extra` are restricted.
    pub propgen_extra: usize,
    pub beta_n_max: usize,
    pub beta_order: usize,
    pub bernstein_points: Vec<f64>,
    pub bernstein_n_max: usize,
    pub fd_points: Vec<f64>,
    pub fd_n_max: usize,
    pub fd_rel_tol: f64,
    pub halfplane_samples: usize,
    pub seed: u64,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            poly_n_max: 40,
            positivity_n_max: 50,
            reciprocity_n_max: 30,
            q_n_max: 12,
            series_order: 25,
            series_depth: 8,
            basic_order: 30,
            egf_n_max: 6,
            egf_samples: ["0", "1", "-1/2", "2", "1/3", "5", "-1/3", "3"]
                .map(String::from)
                .to_vec(),
            gh_order: 10,
            unrooted_n_max: 6,
            rooted_n_max: 5,
            relaxed_n_max: 4,
            birooted_n_max: 4,
            imp_n_max: 7,
            restriction_m_max: 6,
            propgen_n_max: 3,
            propgen_extra: 3,
            beta_n_max: 6,
            beta_order: 20,
            bernstein_points: vec![0.1, 1.0, 10.0],
            bernstein_n_max: 15,
            fd_points: vec![0.5, 1.0, 2.0, std::f64::consts::E],
            fd_n_max: 4,
            fd_rel_tol: 1e-5,
            halfplane_samples: 1000,
            seed: 42,
        }
    }
}

impl Budget {
    /// Every size limit set to 1 and orders to the least they may be.
    pub fn minimal() -> Self {
        Budget {
            egf_samples: vec!["1".into(), "2".into(), "1/2".into()],
            bernstein_points: vec![1.0],
            fd_points: vec![1.0],
            halfplane_samples: 1,
            ..Budget::default()
        }
        .with_n_max(1)
    }

    /// Sets every size limit to `n`. Tree limits are clamped so no
    /// enumeration exceeds [`MAX_VERTICES`], and series orders are raised to
    /// keep `order >= depth + 5`.
    pub fn with_n_max(mut self, n: usize) -> Self {
        let cap = MAX_VERTICES;
        self.poly_n_max = n;
        self.positivity_n_max = n;
        self.reciprocity_n_max = n;
        self.q_n_max = n;
        self.series_depth = n;
        self.series_order = n + fps::ORDER_SLACK;
        self.basic_order = n + fps::ORDER_SLACK;
        self.egf_n_max = n;
        self.gh_order = n;
        self.unrooted_n_max = n.min(cap / 2 + 1);
        self.rooted_n_max = n.min(cap.div_ceil(2));
        self.relaxed_n_max = n.min(cap / 2);
        self.birooted_n_max = n.min((cap - 2) / 2);
        self.imp_n_max = n.min(cap);
        self.restriction_m_max = n.min(cap);
        self.propgen_n_max = n.min(cap - self.propgen_extra);
        self.beta_n_max = n.min(cap);
        self.beta_order = self.beta_order.max(n + fps::ORDER_SLACK);
        self.bernstein_n_max = n;
        self.fd_n_max = n.min(4);
        self
    }

    fn table_len(&self) -> usize {
        [
            self.poly_n_max + 1,
            self.positivity_n_max,
            self.reciprocity_n_max,
            self.q_n_max + 1,
            self.series_depth,
            self.egf_n_max,
            self.gh_order,
            self.unrooted_n_max,
            self.rooted_n_max,
            self.relaxed_n_max,
            self.birooted_n_max,
            self.imp_n_max,
            self.bernstein_n_max,
            self.fd_n_max,
            golden::H.len(),
        ]
        .into_iter()
        .max()
        .unwrap_or(0)
    }
}

/// Deliberate corruption of one table entry, for testing the suite itself:
/// adds 1 to the constant term of `family_n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Mutation {
    pub family: Family,
    pub n: usize,
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct Config {
    pub budget: Budget,
    /// Worker threads; 0 lets rayon decide.
    pub jobs: usize,
    /// Check names or groups to run; `None` runs everything.
    pub only: Option<Vec<String>>,
    pub mutation: Option<Mutation>,
}

/// The polynomial sequences every check reads from, index 0 being `n = 1`.
#[derive(Clone, Debug, PartialEq)]
pub struct Tables {
    pub f: Vec<Poly>,
    pub g: Vec<Poly>,
    pub h: Vec<Poly>,
    /// Derived from `g`.
    pub p: Vec<Poly>,
    pub f_shift: Vec<Poly>,
    pub g_shift: Vec<Poly>,
    pub h_shift: Vec<Poly>,
    pub q: PolyTriangle,
}

impl Tables {
    pub fn build(n_max: usize, q_n_max: usize, mutation: Option<Mutation>) -> Self {
        let mut f = generate(Family::F, n_max);
        let mut g = generate(Family::G, n_max);
        let mut h = generate(Family::H, n_max);
        if let Some(m) = mutation {
            let table = match m.family {
                Family::F => &mut f,
                Family::G => &mut g,
                Family::H => &mut h,
            };
            if let Some(p) = m.n.checked_sub(1).and_then(|i| table.get_mut(i)) {
                *p = &*p + &Poly::one();
            }
        }
        let minus_one = BigInt::from(-1);
        let shifted = |t: &[Poly]| t.iter().map(|p| p.shift(&minus_one)).collect::<Vec<_>>();
        Tables {
            p: p_from_gs(&g),
            f_shift: shifted(&f),
            g_shift: shifted(&g),
            h_shift: shifted(&h),
            q: crate::polyseq::gen_q(q_n_max),
            f,
            g,
            h,
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SuiteResult {
    pub reports: Vec<CheckReport>,
    pub summary: Summary,
    pub budget: Budget,
}

impl SuiteResult {
    pub fn all_passed(&self) -> bool {
        self.summary.failed == 0
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("suite result serializes")
    }

    /// One line per check, then a summary line.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for r in &self.reports {
            let status = match (r.skipped, r.passed) {
                (true, _) => "SKIP",
                (false, true) => "PASS",
                (false, false) => "FAIL",
            };
            out.push_str(&format!("{status} {}", r.name));
            if let Some(serde_json::Value::String(s)) = r.params.get("passed") {
                out.push_str(&format!(" {s}"));
            }
            if let Some(w) = &r.witness {
                out.push_str(&format!(": {w}"));
            }
            if let Some(serde_json::Value::String(s)) = r.params.get("skip_reason") {
                out.push_str(&format!(" ({s})"));
            }
            out.push('\n');
        }
        let s = &self.summary;
        out.push_str(&format!(
            "{} passed, {} failed, {} skipped\n",
            s.passed, s.failed, s.skipped
        ));
        out
    }
}

type CheckFn<'a> = Box<dyn Fn() -> CheckReport + Send + Sync + 'a>;

struct Check<'a> {
    name: &'static str,
    group: &'static str,
    run: CheckFn<'a>,
}

/// Every check name, in suite order, with its group.
pub const CHECKS: &[(&str, &str)] = &[
    ("golden_F", "golden"),
    ("golden_G", "golden"),
    ("golden_H", "golden"),
    ("golden_F_shift", "golden"),
    ("golden_G_shift", "golden"),
    ("golden_H_shift", "golden"),
    ("degrees_leading_constants", "structure"),
    ("shifted_positivity", "positivity"),
    ("shifted_recursion_G", "structure"),
    ("interconversion_GH", "interconversion"),
    ("reciprocity_PG", "reciprocity"),
    ("p_positive_unimodal", "positivity"),
    ("q_specializations", "q"),
    ("def_identity_F", "series"),
    ("def_identity_G", "series"),
    ("def_identity_H", "series"),
    ("def_identity_P", "series"),
    ("basic_t_identities", "series"),
    ("reversion_lemma", "series"),
    ("egf_theorem", "egf"),
    ("gh_functional", "gh"),
    ("census_unl_unrooted", "census"),
    ("census_unl_rooted", "census"),
    ("census_unl_relaxed", "census"),
    ("census_unl_birooted", "census"),
    ("census_imp_rooted", "imp"),
    ("census_imp_unrooted", "imp"),
    ("restriction_totality", "restriction"),
    ("propgen", "propgen"),
    ("beta_series", "beta"),
    ("beta_series_rooted", "beta"),
    ("bernstein_signs", "bernstein"),
    ("w_residual", "residual"),
    ("derivative_vs_finite_difference", "fd"),
    ("halfplane", "halfplane"),
];

/// Resolves selectors (`all`, a check name or a group) to check names.
pub fn select(selectors: &[String]) -> Result<BTreeSet<&'static str>> {
    let mut out = BTreeSet::new();
    for s in selectors {
        let hits: Vec<&'static str> = CHECKS
            .iter()
            .filter(|(name, group)| s == "all" || s == name || s == group)
            .map(|(name, _)| *name)
            .collect();
        if hits.is_empty() {
            return Err(Error::Unknown {
                kind: "check",
                name: s.clone(),
            });
        }
        out.extend(hits);
    }
    Ok(out)
}

/// Runs the selected checks, concurrently, and lists the reports in suite
/// order.
pub fn run_suite(config: &Config) -> Result<SuiteResult> {
    let selected = match &config.only {
        Some(sel) => Some(select(sel)?),
        None => None,
    };
    let budget = &config.budget;
    let tables = Tables::build(budget.table_len(), budget.q_n_max, config.mutation);
    let checks: Vec<Check> = declare(budget, &tables)
        .into_iter()
        .filter(|c| selected.as_ref().is_none_or(|s| s.contains(c.name)))
        .collect();
    debug_assert!(checks.iter().all(|c| CHECKS.contains(&(c.name, c.group))));

    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.jobs)
        .build()
        .map_err(|e| Error::ThreadPool(e.to_string()))?;
    let reports: Vec<CheckReport> = pool.install(|| checks.par_iter().map(|c| (c.run)()).collect());

    let mut summary = Summary::default();
    for r in &reports {
        match (r.skipped, r.passed) {
            (true, _) => summary.skipped += 1,
            (false, true) => summary.passed += 1,
            (false, false) => summary.failed += 1,
        }
    }
    Ok(SuiteResult {
        reports,
        summary,
        budget: budget.clone(),
    })
}

fn declare<'a>(b: &'a Budget, t: &'a Tables) -> Vec<Check<'a>> {
    let mut v: Vec<Check<'a>> = Vec::new();
    let mut add = |name: &'static str, run: CheckFn<'a>| {
        let group = CHECKS
            .iter()
            .find(|(n, _)| *n == name)
            .expect("declared check")
            .1;
        v.push(Check { name, group, run });
    };

    add(
        "golden_F",
        Box::new(|| golden_check("golden_F", &t.f, golden::F)),
    );
    add(
        "golden_G",
        Box::new(|| golden_check("golden_G", &t.g, golden::G)),
    );
    add(
        "golden_H",
        Box::new(|| golden_check("golden_H", &t.h, golden::H)),
    );
    add(
        "golden_F_shift",
        Box::new(|| golden_check("golden_F_shift", &t.f_shift, golden::F_SHIFT)),
    );
    add(
        "golden_G_shift",
        Box::new(|| golden_check("golden_G_shift", &t.g_shift, golden::G_SHIFT)),
    );
    add(
        "golden_H_shift",
        Box::new(|| golden_check("golden_H_shift", &t.h_shift, golden::H_SHIFT)),
    );
    add(
        "degrees_leading_constants",
        Box::new(|| structure_check(t, b.poly_n_max)),
    );
    add(
        "shifted_positivity",
        Box::new(|| positivity_check(t, b.positivity_n_max)),
    );
    add(
        "shifted_recursion_G",
        Box::new(|| shifted_recursion_check(t, b.poly_n_max)),
    );
    add(
        "interconversion_GH",
        Box::new(|| interconversion_check(t, b.poly_n_max)),
    );
    add(
        "reciprocity_PG",
        Box::new(|| reciprocity_check(t, b.reciprocity_n_max)),
    );
    add(
        "p_positive_unimodal",
        Box::new(|| p_unimodal_check(t, b.positivity_n_max)),
    );
    add("q_specializations", Box::new(|| q_check(t, b.q_n_max)));

    for (name, fam, table) in [
        ("def_identity_F", SeriesFamily::F, &t.f),
        ("def_identity_G", SeriesFamily::G, &t.g),
        ("def_identity_H", SeriesFamily::H, &t.h),
        ("def_identity_P", SeriesFamily::P, &t.p),
    ] {
        add(
            name,
            Box::new(move || {
                if b.series_depth == 0 {
                    return CheckReport::new(name).skip("series_depth is 0");
                }
                fps::check_def_identity(fam, table, b.series_depth, b.series_order)
            }),
        );
    }
    add(
        "basic_t_identities",
        Box::new(|| fps::check_basic_identities(b.basic_order)),
    );
    add(
        "reversion_lemma",
        Box::new(|| fps::check_reversion_lemma(b.series_order)),
    );
    add(
        "egf_theorem",
        Box::new(|| {
            let mut skeleton = CheckReport::new("egf_theorem");
            let Some(xs) = skeleton.absorb(parse_samples(&b.egf_samples)) else {
                return skeleton;
            };
            fps::check_egf_theorem(&xs, [&t.f, &t.g, &t.h], b.egf_n_max)
        }),
    );
    add(
        "gh_functional",
        Box::new(|| {
            let mut skeleton = CheckReport::new("gh_functional");
            let Some(xs) = skeleton.absorb(parse_samples(&b.egf_samples)) else {
                return skeleton;
            };
            fps::check_gh_functional(&xs, &t.g, &t.h, b.gh_order)
        }),
    );

    let one_plus_x = Poly::from_i64s(&[1, 1]);
    let relaxed: Vec<Poly> = t.g.iter().map(|g| &one_plus_x * g).collect();
    let birooted: Vec<Poly> = t.f.iter().map(|f| &one_plus_x.pow(3) * f).collect();
    for (name, variant, n_max, expected) in [
        (
            "census_unl_unrooted",
            Variant::Unrooted,
            b.unrooted_n_max,
            t.h.clone(),
        ),
        (
            "census_unl_rooted",
            Variant::Rooted,
            b.rooted_n_max,
            t.g.clone(),
        ),
        (
            "census_unl_relaxed",
            Variant::RelaxedRooted,
            b.relaxed_n_max,
            relaxed,
        ),
        (
            "census_unl_birooted",
            Variant::Birooted,
            b.birooted_n_max,
            birooted,
        ),
    ] {
        add(
            name,
            Box::new(move || unl_census_check(name, variant, n_max, &expected)),
        );
    }
    add(
        "census_imp_rooted",
        Box::new(|| imp_census_check("census_imp_rooted", true, b.imp_n_max, &t.g_shift)),
    );
    add(
        "census_imp_unrooted",
        Box::new(|| imp_census_check("census_imp_unrooted", false, b.imp_n_max, &t.h_shift)),
    );
    add(
        "restriction_totality",
        Box::new(|| restriction_check(b.restriction_m_max)),
    );
    add(
        "propgen",
        Box::new(|| propgen_check(b.propgen_n_max, b.propgen_extra)),
    );
    add(
        "beta_series",
        Box::new(|| beta_check("beta_series", false, b.beta_n_max, b.beta_order)),
    );
    add(
        "beta_series_rooted",
        Box::new(|| beta_check("beta_series_rooted", true, b.beta_n_max, b.beta_order)),
    );
    add(
        "bernstein_signs",
        Box::new(|| {
            if b.bernstein_n_max == 0 {
                return CheckReport::new("bernstein_signs").skip("bernstein_n_max is 0");
            }
            numeric::check_bernstein(&b.bernstein_points, b.bernstein_n_max, [&t.g, &t.h, &t.f]).0
        }),
    );
    add(
        "w_residual",
        Box::new(|| numeric::check_residuals(&numeric::residual_grid())),
    );
    add(
        "derivative_vs_finite_difference",
        Box::new(|| {
            if b.fd_n_max == 0 {
                return CheckReport::new("derivative_vs_finite_difference").skip("fd_n_max is 0");
            }
            numeric::check_finite_differences(&b.fd_points, b.fd_n_max, &t.g, b.fd_rel_tol)
        }),
    );
    add(
        "halfplane",
        Box::new(|| {
            if b.halfplane_samples == 0 {
                return CheckReport::new("halfplane").skip("halfplane_samples is 0");
            }
            numeric::check_halfplane(b.halfplane_samples, b.seed)
        }),
    );
    v
}

fn parse_samples(samples: &[String]) -> Result<Vec<BigRational>> {
    samples
        .iter()
        .map(|s| {
            parse_rat(s).ok_or_else(|| Error::Unknown {
                kind: "rational",
                name: s.clone(),
            })
        })
        .collect()
}

fn golden_check(name: &str, table: &[Poly], rows: &[&[i64]]) -> CheckReport {
    let mut report = CheckReport::new(name).param("rows", rows.len());
    for (i, row) in rows.iter().enumerate() {
        let ascending: Vec<i64> = row.iter().rev().copied().collect();
        let expected = Poly::from_i64s(&ascending);
        match table.get(i) {
            Some(p) if *p == expected => {}
            Some(p) => {
                report.fail(format!("n={}: computed {p}, published {expected}", i + 1));
                break;
            }
            None => {
                report.fail(format!("n={}: table too short", i + 1));
                break;
            }
        }
    }
    report
}

fn pow_int(base: usize, e: usize) -> BigInt {
    num_traits::pow(BigInt::from(base), e)
}

/// Degree `n - 1` (`n - 2` for `H`, `n >= 2`), leading coefficients
/// `(2n-1)!!`, `(2n-3)!!`, `(2n-5)!!`, and `G_n(0) = n^{n-1}`,
/// `H_n(0) = n^{n-2}`, `F_n(0) = n^n`.
fn structure_check(t: &Tables, n_max: usize) -> CheckReport {
    let mut report = CheckReport::new("degrees_leading_constants").param("n_max", n_max);
    if n_max == 0 {
        return report.skip("poly_n_max is 0");
    }
    for n in 1..=n_max {
        let ni = n as i64;
        let cases = [
            (
                "F",
                &t.f[n - 1],
                n - 1,
                double_factorial_odd(ni),
                pow_int(n, n),
            ),
            (
                "G",
                &t.g[n - 1],
                n - 1,
                double_factorial_odd(ni - 1),
                pow_int(n, n - 1),
            ),
            (
                "H",
                &t.h[n - 1],
                n.saturating_sub(2),
                double_factorial_odd((ni - 2).max(0)),
                if n >= 2 {
                    pow_int(n, n - 2)
                } else {
                    BigInt::one()
                },
            ),
        ];
        for (fam, p, deg, lead, c0) in cases {
            if p.degree() != Some(deg) {
                report.fail(format!(
                    "{fam}_{n} has degree {:?}, expected {deg}",
                    p.degree()
                ));
            } else if p.leading() != Some(&lead) {
                report.fail(format!(
                    "{fam}_{n} leading coefficient {:?}, expected {lead}",
                    p.leading()
                ));
            } else if p.coeff(0) != c0 {
                report.fail(format!("{fam}_{n}(0) = {}, expected {c0}", p.coeff(0)));
            }
        }
        if !report.passed {
            break;
        }
    }
    report
}

fn positivity_check(t: &Tables, n_max: usize) -> CheckReport {
    let mut report = CheckReport::new("shifted_positivity").param("n_max", n_max);
    if n_max == 0 {
        return report.skip("positivity_n_max is 0");
    }
    for (fam, table) in [("F", &t.f_shift), ("G", &t.g_shift), ("H", &t.h_shift)] {
        for (i, p) in table.iter().take(n_max).enumerate() {
            if let Some(k) = p.coeffs().iter().position(|c| c.is_negative()) {
                report.fail(format!(
                    "{fam}_{}(x-1) has coefficient {} at x^{k}",
                    i + 1,
                    p.coeff(k)
                ));
                return report;
            }
        }
    }
    report
}

/// `G~_{n+1} = n(1+x) G~_n + x^2 G~_n'` for `G~_n = G_n(x-1)`.
fn shifted_recursion_check(t: &Tables, n_max: usize) -> CheckReport {
    let mut report = CheckReport::new("shifted_recursion_G").param("n_max", n_max);
    if n_max == 0 {
        return report.skip("poly_n_max is 0");
    }
    let x_sq = Poly::from_i64s(&[0, 0, 1]);
    for n in 1..n_max {
        let gn = &t.g_shift[n - 1];
        let lin = Poly::from_i64s(&[n as i64, n as i64]);
        let rhs = &(&lin * gn) + &(&x_sq * &gn.derivative());
        if t.g_shift[n] != rhs {
            report.fail(format!(
                "n={}: G~_{} = {} but the recursion gives {rhs}",
                n,
                n + 1,
                t.g_shift[n]
            ));
            break;
        }
    }
    report
}

/// `G_n = (n + (n-1)x) H_n + (x + x^2) H_n'`.
fn interconversion_check(t: &Tables, n_max: usize) -> CheckReport {
    let mut report = CheckReport::new("interconversion_GH").param("n_max", n_max);
    if n_max == 0 {
        return report.skip("poly_n_max is 0");
    }
    let x_x2 = Poly::from_i64s(&[0, 1, 1]);
    for n in 1..=n_max {
        let h = &t.h[n - 1];
        let lin = Poly::from_i64s(&[n as i64, n as i64 - 1]);
        let rhs = &(&lin * h) + &(&x_x2 * &h.derivative());
        if t.g[n - 1] != rhs {
            report.fail(format!("n={n}: G_n = {} but H_n gives {rhs}", t.g[n - 1]));
            break;
        }
    }
    report
}

/// The coefficients of `G_n(x-1)` read backwards are those of
/// `(-1)^{n-1} P_n(x-1)`.
fn reciprocity_check(t: &Tables, n_max: usize) -> CheckReport {
    let mut report = CheckReport::new("reciprocity_PG").param("n_max", n_max);
    if n_max == 0 {
        return report.skip("reciprocity_n_max is 0");
    }
    let minus_one = BigInt::from(-1);
    for n in 1..=n_max {
        let pad = |p: &Poly| {
            let mut c = p.coeffs().to_vec();
            c.resize(n, BigInt::zero());
            c
        };
        let mut g = pad(&t.g_shift[n - 1]);
        g.reverse();
        let mut p = t.p[n - 1].shift(&minus_one);
        if n % 2 == 0 {
            p = -&p;
        }
        if g != pad(&p) || p.degree().is_some_and(|d| d >= n) {
            report.fail(format!(
                "n={n}: reversed G_n(x-1) is {} but (-1)^(n-1) P_n(x-1) is {p}",
                Poly::new(g)
            ));
            break;
        }
    }
    report
}

fn p_unimodal_check(t: &Tables, n_max: usize) -> CheckReport {
    let mut report = CheckReport::new("p_positive_unimodal").param("n_max", n_max);
    if n_max == 0 {
        return report.skip("positivity_n_max is 0");
    }
    for n in 1..=n_max {
        let p = if n % 2 == 0 {
            -&t.p[n - 1]
        } else {
            t.p[n - 1].clone()
        };
        let c = p.coeffs();
        if c.len() != n || !c.iter().all(|x| x.is_positive()) {
            report.fail(format!(
                "n={n}: (-1)^(n-1) P_n = {p} is not positive of degree n-1"
            ));
            break;
        }
        if !is_unimodal(c) {
            report.fail(format!(
                "n={n}: coefficients of (-1)^(n-1) P_n are not unimodal"
            ));
            break;
        }
    }
    report
}

/// `sum_k Q_{n,k}(x0) x^k` against `x F_{n-1}(x-1)`, `G_n(x-1)`,
/// `H_{n+1}(x-1)` for `x0 = -1, 0, 1`. At `n = 1` the first is
/// `x F_0(x-1) = 1`.
fn q_check(t: &Tables, n_max: usize) -> CheckReport {
    let mut report = CheckReport::new("q_specializations").param("n_max", n_max);
    if n_max == 0 {
        return report.skip("q_n_max is 0");
    }
    for n in 1..=n_max {
        let at_minus_one = if n == 1 {
            Poly::one()
        } else {
            t.f_shift[n - 2].mul_x_pow(1)
        };
        let cases = [
            (-1, at_minus_one),
            (0, t.g_shift[n - 1].clone()),
            (1, t.h_shift[n].clone()),
        ];
        for (x0, expected) in cases {
            let got = t.q.specialize(n, x0);
            if got != expected {
                report.fail(format!("n={n}, x={x0}: Q gives {got}, expected {expected}"));
                return report;
            }
        }
    }
    report
}

fn unl_census_check(name: &str, variant: Variant, n_max: usize, expected: &[Poly]) -> CheckReport {
    let mut report = CheckReport::new(name)
        .param("n_max", n_max)
        .param("variant", variant.name());
    if n_max == 0 {
        return report.skip("tree budget is 0");
    }
    let mut trees = 0usize;
    for n in 1..=n_max {
        let censuses: Vec<_> = (0..=max_unlabeled(n, variant))
            .into_par_iter()
            .map(|u| enumerate_greg_with_u(n, variant, u))
            .collect();
        let counts: Vec<BigInt> = censuses
            .iter()
            .map(|c| BigInt::from(c.trees.len()))
            .collect();
        let census = Poly::new(counts);
        trees += censuses.iter().map(|c| c.trees.len()).sum::<usize>();
        for c in &censuses {
            let orbit = factorial(c.u) * BigInt::from(c.trees.len());
            if BigInt::from(c.labeled_count) != orbit {
                report.fail(format!(
                    "n={n} u={}: {} labeled trees but {} canonical forms",
                    c.u,
                    c.labeled_count,
                    c.trees.len()
                ));
            }
        }
        if census != expected[n - 1] {
            report.fail(format!(
                "n={n}: census {census}, polynomial {}",
                expected[n - 1]
            ));
        }
        if !report.passed {
            break;
        }
    }
    report.set_param("trees", trees);
    report
}

fn imp_census_check(name: &str, rooted: bool, n_max: usize, expected: &[Poly]) -> CheckReport {
    let mut report = CheckReport::new(name).param("n_max", n_max);
    if n_max == 0 {
        return report.skip("imp_n_max is 0");
    }
    for n in 1..=n_max {
        let census = imp_polynomial(n, rooted);
        if census != expected[n - 1] {
            report.fail(format!(
                "n={n}: imp census {census}, shifted polynomial {}",
                expected[n - 1]
            ));
            break;
        }
    }
    report
}

/// Every Cayley tree of size `m` restricts to a valid Greg tree of each
/// smaller size, rooted or not.
fn restriction_check(m_max: usize) -> CheckReport {
    let mut report = CheckReport::new("restriction_totality").param("m_max", m_max);
    if m_max == 0 {
        return report.skip("restriction_m_max is 0");
    }
    for rooted in [false, true] {
        let variant = if rooted {
            Variant::Rooted
        } else {
            Variant::Unrooted
        };
        for m in 2..=m_max {
            for x in enumerate_cayley(m, rooted) {
                for n in 1..m {
                    let ok = restrict(&x, n).and_then(|r| r.validate(variant));
                    if let Err(e) = ok {
                        report.fail(format!("{x:?} restricted to {n}: {e}"));
                        return report;
                    }
                }
            }
        }
    }
    report
}

/// Brute-force restriction counts against the coefficients of
/// `e^{nT} (1-T)^{-k} (T/(1-T))^{unl}`.
fn propgen_check(n_max: usize, extra: usize) -> CheckReport {
    let mut report = CheckReport::new("propgen")
        .param("n_max", n_max)
        .param("extra", extra);
    if n_max == 0 {
        return report.skip("propgen_n_max is 0");
    }
    let mut trees = 0usize;
    for rooted in [false, true] {
        let variant = if rooted {
            Variant::Rooted
        } else {
            Variant::Unrooted
        };
        for n in 1..=n_max {
            for t in enumerate_greg(n, variant) {
                trees += 1;
                let census = propgen_census(&t, n + extra);
                let s = fps::propgen_series(n, t.u, rooted, extra);
                for (j, &count) in census.iter().enumerate() {
                    let expected = s.coeff(j) * BigRational::from_integer(factorial(j));
                    if expected != BigRational::from_integer(BigInt::from(count)) {
                        report.fail(format!(
                            "{} tree {:?} at m={}: {count} restrictions, series gives {}",
                            variant.name(),
                            t.edges,
                            n + j,
                            fmt_rat(&expected)
                        ));
                        return report;
                    }
                }
            }
        }
    }
    report.set_param("trees", trees);
    report
}

fn beta_check(name: &str, rooted: bool, n_max: usize, order: usize) -> CheckReport {
    if n_max == 0 {
        return CheckReport::new(name).skip("beta_n_max is 0");
    }
    let censuses: Vec<Poly> = (1..=n_max).map(|n| imp_polynomial(n, rooted)).collect();
    fps::check_beta_identity(&censuses, rooted, order)
}
