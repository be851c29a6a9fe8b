//! Principal branch of Lambert W in floating point, its derivatives through
//! the exact polynomial sequences, and the sign and half-plane checks.

use std::f64::consts::{E, PI};

use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::polyseq::Poly;
use crate::report::CheckReport;

const MAX_ITER: usize = 50;
const STEP_TOL: f64 = 1e-15;
/// Accepted `|w e^w - z| / max(1, |z|)`.
pub const RESIDUAL_TOL: f64 = 1e-13;
/// Magnitudes below this are reported as indeterminate rather than as sign failures.
pub const INDETERMINATE: f64 = 1e-300;

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct WEval {
    pub z: Complex64,
    pub w: Complex64,
    pub residual: f64,
    pub iterations: usize,
}

fn halley_seed(z: Complex64) -> Complex64 {
    if (z + 1.0 / E).norm() < 0.3 {
        // expansion about the branch point, p = sqrt(2(ez + 1))
        let p = (2.0 * (E * z + 1.0)).sqrt();
        return -1.0 + p - p * p / 3.0 + 11.0 / 72.0 * p * p * p;
    }
    if -1.0 < z.re && z.re < 1.5 && z.im.abs() < 1.0 && -2.5 * z.im.abs() - 0.2 < z.re {
        // (2,2) Padé approximant at the origin
        let num = 12.851_063_829_787_234 + z * (12.340_425_531_914_894 + z);
        let den = 32.531_914_893_617_02 + z * (14.340_425_531_914_894 + z);
        return z * num / den;
    }
    let l1 = z.ln();
    l1 - l1.ln()
}

/// Principal-branch `W(z)` for `z` off the cut `(-inf, -1/e]`.
pub fn eval_w(z: Complex64) -> Result<WEval> {
    if !z.re.is_finite() || !z.im.is_finite() {
        return Err(Error::NoConvergence {
            z: z.to_string(),
            residual: f64::NAN,
        });
    }
    if z.im == 0.0 && z.re <= -1.0 / E {
        return Err(Error::BranchCut(z.to_string()));
    }
    if z == Complex64::new(0.0, 0.0) {
        return Ok(WEval {
            z,
            w: z,
            residual: 0.0,
            iterations: 0,
        });
    }
    let mut w = halley_seed(z);
    let mut converged = false;
    let mut iterations = 0;
    while iterations < MAX_ITER {
        iterations += 1;
        let ew = w.exp();
        let f = w * ew - z;
        let wp1 = w + 1.0;
        let denom = ew * wp1 - (w + 2.0) * f / (2.0 * wp1);
        let step = f / denom;
        if !step.re.is_finite() || !step.im.is_finite() {
            break;
        }
        w -= step;
        if step.norm() <= STEP_TOL * w.norm() {
            converged = true;
            break;
        }
    }
    if z.im == 0.0 && z.re >= 0.0 {
        w.im = 0.0;
    }
    let residual = (w * w.exp() - z).norm();
    if !converged || residual > RESIDUAL_TOL * z.norm().max(1.0) {
        return Err(Error::NoConvergence {
            z: z.to_string(),
            residual,
        });
    }
    Ok(WEval {
        z,
        w,
        residual,
        iterations,
    })
}

pub fn eval_w_real(x: f64) -> Result<WEval> {
    eval_w(Complex64::new(x, 0.0))
}

/// Exact polynomial value at the binary rational closest to `x`.
pub fn eval_poly_exact(p: &Poly, x: f64) -> f64 {
    let q = BigRational::from_float(x).expect("finite");
    p.eval_rational(&q).to_f64().unwrap_or(f64::NAN)
}

/// The three Bernstein functions with derivative closed forms.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum BernsteinFn {
    /// `W(z)`, derivatives through `G_n`.
    W,
    /// `W^2/2 + W = -T_2(-z)`, derivatives through `H_n`.
    HalfSquarePlusW,
    /// `W/(1+W) = 1 - T_0(-z)`, derivatives through `F_n`.
    WOverOnePlusW,
}

impl BernsteinFn {
    pub const ALL: [BernsteinFn; 3] = [
        BernsteinFn::W,
        BernsteinFn::HalfSquarePlusW,
        BernsteinFn::WOverOnePlusW,
    ];

    pub fn name(self) -> &'static str {
        match self {
            BernsteinFn::W => "W",
            BernsteinFn::HalfSquarePlusW => "W^2/2+W",
            BernsteinFn::WOverOnePlusW => "W/(1+W)",
        }
    }

    pub fn value(self, z: f64) -> Result<f64> {
        let w = eval_w_real(z)?.w.re;
        Ok(match self {
            BernsteinFn::W => w,
            BernsteinFn::HalfSquarePlusW => 0.5 * w * w + w,
            BernsteinFn::WOverOnePlusW => w / (1.0 + w),
        })
    }

    /// Power of `1/(1+W)` in the closed form of the `n`-th derivative.
    fn denominator_power(self, n: usize) -> i32 {
        match self {
            BernsteinFn::W => n as i32,
            BernsteinFn::HalfSquarePlusW => n as i32 - 1,
            BernsteinFn::WOverOnePlusW => n as i32 + 2,
        }
    }

    /// `(-1)^{n-1} f^{(n)}(z) = e^{-nW} (1+W)^{-k} p_n(-W/(1+W))`, where
    /// `poly` is `G_n`, `H_n` or `F_n` according to the function.
    pub fn signed_derivative(self, z: f64, n: usize, poly: &Poly) -> Result<f64> {
        let w = eval_w_real(z)?.w.re;
        let x = -w / (1.0 + w);
        let scale = (-(n as f64) * w).exp() / (1.0 + w).powi(self.denominator_power(n));
        Ok(scale * eval_poly_exact(poly, x))
    }

    pub fn nth_derivative(self, z: f64, n: usize, poly: &Poly) -> Result<f64> {
        let s = self.signed_derivative(z, n, poly)?;
        Ok(if n % 2 == 1 { s } else { -s })
    }
}

/// `W^{(n)}(z)` for `z > 0`, given `G_n`.
pub fn nth_derivative_w(z: f64, n: usize, g_n: &Poly) -> Result<f64> {
    BernsteinFn::W.nth_derivative(z, n, g_n)
}

/// One row of the optional CSV output.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SignRow {
    pub function: &'static str,
    pub z: f64,
    pub n: usize,
    pub derivative: f64,
    pub sign_ok: bool,
}

/// Strict alternation `(-1)^{n-1} f^{(n)}(z) > 0` for the three functions.
/// `tables` holds `[G, H, F]`, index 0 being `n = 1`.
pub fn check_bernstein(
    points: &[f64],
    n_max: usize,
    tables: [&[Poly]; 3],
) -> (CheckReport, Vec<SignRow>) {
    let mut report = CheckReport::new("bernstein_signs")
        .param("points", points.to_vec())
        .param("n_max", n_max);
    let mut rows = Vec::new();
    let mut indeterminate = 0usize;
    for (f, table) in BernsteinFn::ALL.into_iter().zip(tables) {
        if table.len() < n_max {
            report.fail(format!(
                "{}: only {} polynomials for n_max = {n_max}",
                f.name(),
                table.len()
            ));
            continue;
        }
        for &z in points {
            if !(z > 0.0) {
                report.fail(format!("point {z} is not positive"));
                continue;
            }
            for n in 1..=n_max {
                let Some(s) = report.absorb(f.signed_derivative(z, n, &table[n - 1])) else {
                    continue;
                };
                if s.abs() < INDETERMINATE {
                    indeterminate += 1;
                    continue;
                }
                let ok = s > 0.0;
                if !ok {
                    report.fail(format!(
                        "{}: (-1)^{} f^({n})({z}) = {s:e} is not positive",
                        f.name(),
                        n - 1
                    ));
                }
                rows.push(SignRow {
                    function: f.name(),
                    z,
                    n,
                    derivative: if n % 2 == 1 { s } else { -s },
                    sign_ok: ok,
                });
            }
        }
    }
    report.set_param("indeterminate", indeterminate);
    (report, rows)
}

/// Order-4 central difference stencil for derivative `n` (1 to 4), as
/// `(offset, weight)` pairs in units of `h`, and the divisor `d` so that
/// `f^{(n)} ~ sum w f(z + o h) / (d h^n)`.
fn stencil(n: usize) -> (&'static [(i32, f64)], f64) {
    match n {
        1 => (&[(-2, 1.0), (-1, -8.0), (1, 8.0), (2, -1.0)], 12.0),
        2 => (
            &[(-2, -1.0), (-1, 16.0), (0, -30.0), (1, 16.0), (2, -1.0)],
            12.0,
        ),
        3 => (
            &[
                (-3, 1.0),
                (-2, -8.0),
                (-1, 13.0),
                (1, -13.0),
                (2, 8.0),
                (3, -1.0),
            ],
            8.0,
        ),
        4 => (
            &[
                (-3, -1.0),
                (-2, 12.0),
                (-1, -39.0),
                (0, 56.0),
                (1, -39.0),
                (2, 12.0),
                (3, -1.0),
            ],
            6.0,
        ),
        _ => panic!("no stencil for derivative order {n}"),
    }
}

/// Step used for derivative order `n` at `z`.
pub fn fd_step(n: usize, z: f64) -> f64 {
    let base = match n {
        1 | 2 => 1e-3,
        3 => 4e-3,
        _ => 1e-2,
    };
    base * z.min(1.0)
}

/// `f^{(n)}(z)` from values of `f` alone, `1 <= n <= 4`.
pub fn finite_difference(f: impl Fn(f64) -> Result<f64>, z: f64, n: usize, h: f64) -> Result<f64> {
    let (taps, div) = stencil(n);
    let mut acc = 0.0;
    for &(o, w) in taps {
        acc += w * f(z + o as f64 * h)?;
    }
    Ok(acc / (div * h.powi(n as i32)))
}

/// Closed-form derivatives of `W` against finite differences of [`eval_w`].
pub fn check_finite_differences(
    points: &[f64],
    n_max: usize,
    g: &[Poly],
    rel_tol: f64,
) -> CheckReport {
    let mut report = CheckReport::new("derivative_vs_finite_difference")
        .param("points", points.to_vec())
        .param("n_max", n_max)
        .param("rel_tol", rel_tol);
    let n_max = n_max.min(4);
    let mut worst = 0.0f64;
    for &z in points {
        for n in 1..=n_max {
            let Some(closed) = report.absorb(nth_derivative_w(z, n, &g[n - 1])) else {
                continue;
            };
            let Some(fd) = report.absorb(finite_difference(
                |t| Ok(eval_w_real(t)?.w.re),
                z,
                n,
                fd_step(n, z),
            )) else {
                continue;
            };
            let rel = ((closed - fd) / closed).abs();
            worst = worst.max(rel);
            if !(rel <= rel_tol) {
                report.fail(format!(
                    "z={z} n={n}: closed form {closed:e} vs difference {fd:e} (rel {rel:e})"
                ));
            }
        }
    }
    report.set_param("worst_rel_err", worst);
    report
}

/// Deterministic evaluation grid: 50 log-spaced reals in `[1e-3, 1e3]` and
/// 50 points of the upper half-plane.
pub fn residual_grid() -> Vec<Complex64> {
    let mut pts: Vec<Complex64> = (0..50)
        .map(|i| Complex64::new(10f64.powf(-3.0 + 6.0 * i as f64 / 49.0), 0.0))
        .collect();
    for i in 0..5 {
        let r = 10f64.powf(-3.0 + 1.5 * i as f64);
        for j in 0..10 {
            let theta = PI * (j as f64 + 0.5) / 10.0;
            pts.push(Complex64::from_polar(r, theta));
        }
    }
    pts
}

pub fn check_residuals(points: &[Complex64]) -> CheckReport {
    let mut report = CheckReport::new("w_residual").param("points", points.len());
    let mut worst = 0.0f64;
    for &z in points {
        match eval_w(z) {
            Ok(e) => {
                let scaled = e.residual / z.norm().max(1.0);
                worst = worst.max(scaled);
                if z.im == 0.0 && z.re >= 0.0 && !(e.w.im == 0.0 && e.w.re >= 0.0) {
                    report.fail(format!("W({z}) = {} is not a nonnegative real", e.w));
                }
            }
            Err(err) => report.fail(err.to_string()),
        }
    }
    report.set_param("worst_scaled_residual", worst);
    report
}

/// The `i`-th half-plane sample for a seed: modulus log-uniform in
/// `[1e-3, 1e3]`, argument uniform in `(0, pi)`. Each index draws from its
/// own ChaCha stream, so samples do not depend on evaluation order.
pub fn halfplane_sample(seed: u64, i: u64) -> Complex64 {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(i);
    let log_r: f64 = rng.gen_range(-3.0..=3.0);
    let mut u: f64 = rng.gen();
    while u == 0.0 {
        u = rng.gen();
    }
    Complex64::from_polar(10f64.powf(log_r), PI * u)
}

/// Minimum imaginary part accepted for `W(z)` with `Im z > 0`.
pub const HALFPLANE_MIN_IM: f64 = 1e-12;

pub fn check_halfplane(sample_count: usize, seed: u64) -> CheckReport {
    let mut report = CheckReport::new("halfplane")
        .param("samples", sample_count)
        .param("seed", seed);
    let mut ok = 0usize;
    let mut eval_failures = 0usize;
    for i in 0..sample_count {
        let z = halfplane_sample(seed, i as u64);
        match eval_w(z) {
            Ok(e) if e.w.im > HALFPLANE_MIN_IM => ok += 1,
            Ok(e) => report.fail(format!("Im W({z}) = {:e}", e.w.im)),
            Err(_) => eval_failures += 1,
        }
    }
    report.set_param("passed", format!("{ok}/{}", sample_count - eval_failures));
    report.set_param("eval_failures", eval_failures);
    report
}
