//! Truncated power series over exact rationals.
//!
//! A [`RatSeries`] of order `N` stores the coefficients of `z^0 .. z^N`; every
//! operation returns the smallest order it can guarantee. On top of the
//! algebra this module builds the tree-function family `T_0, T_1, T_2, W` and
//! the exact series checks for the derivative identities.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::polyseq::{Family, Poly};
use crate::report::CheckReport;

pub fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

pub fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

/// Formats a rational as `p/q`, or `p` when the denominator is one.
pub fn fmt_rat(q: &BigRational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

pub fn parse_rat(s: &str) -> Option<BigRational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let d: BigInt = d.trim().parse().ok()?;
            if d.is_zero() {
                return None;
            }
            Some(BigRational::new(n.trim().parse().ok()?, d))
        }
        None => Some(BigRational::from_integer(s.parse().ok()?)),
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct RatSeries {
    coeffs: Vec<BigRational>,
}

impl RatSeries {
    /// Pads with zeros or truncates so that exactly `order + 1` coefficients remain.
    pub fn new(mut coeffs: Vec<BigRational>, order: usize) -> Self {
        coeffs.resize(order + 1, BigRational::zero());
        RatSeries { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        RatSeries::new(Vec::new(), order)
    }

    pub fn constant(c: BigRational, order: usize) -> Self {
        RatSeries::new(vec![c], order)
    }

    pub fn one(order: usize) -> Self {
        RatSeries::constant(BigRational::one(), order)
    }

    /// The series `z`.
    pub fn var(order: usize) -> Self {
        RatSeries::new(vec![BigRational::zero(), BigRational::one()], order)
    }

    pub fn from_poly(p: &Poly, order: usize) -> Self {
        RatSeries::new(
            p.coeffs()
                .iter()
                .take(order + 1)
                .map(|c| BigRational::from_integer(c.clone()))
                .collect(),
            order,
        )
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> &BigRational {
        &self.coeffs[i]
    }

    pub fn truncate(&self, order: usize) -> RatSeries {
        assert!(
            order <= self.order(),
            "cannot raise the order of a truncated series"
        );
        RatSeries::new(self.coeffs[..=order].to_vec(), order)
    }

    pub fn scale(&self, c: &BigRational) -> RatSeries {
        RatSeries {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// `f(-z)`
    pub fn negate_arg(&self) -> RatSeries {
        RatSeries {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| if i % 2 == 1 { -c } else { c.clone() })
                .collect(),
        }
    }

    /// `f(c z)`
    pub fn scale_arg(&self, c: &BigRational) -> RatSeries {
        let mut pw = BigRational::one();
        let mut out = Vec::with_capacity(self.coeffs.len());
        for a in &self.coeffs {
            out.push(a * &pw);
            pw *= c;
        }
        RatSeries { coeffs: out }
    }

    /// `f'`, one order lower.
    pub fn derive(&self) -> Result<RatSeries> {
        self.nth_derivative(1)
    }

    /// The `n`-th derivative, of order `order - n`.
    pub fn nth_derivative(&self, n: usize) -> Result<RatSeries> {
        let order = self.order();
        if n > order {
            return Err(Error::DerivativeTooDeep { n, order });
        }
        let coeffs = (n..=order)
            .map(|k| {
                // k (k-1) ... (k-n+1)
                let falling: BigInt = ((k - n + 1)..=k).fold(BigInt::one(), |acc, j| acc * j);
                &self.coeffs[k] * BigRational::from_integer(falling)
            })
            .collect();
        Ok(RatSeries { coeffs })
    }

    /// Antiderivative with zero constant term, one order higher.
    pub fn integrate(&self) -> RatSeries {
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(BigRational::zero());
        for (k, c) in self.coeffs.iter().enumerate() {
            coeffs.push(c / int(k as i64 + 1));
        }
        RatSeries { coeffs }
    }

    /// `f / z` for `f` with zero constant term, one order lower.
    pub fn div_z(&self) -> Result<RatSeries> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::NonzeroConstant("div_z"));
        }
        if self.order() == 0 {
            return Err(Error::DerivativeTooDeep { n: 1, order: 0 });
        }
        Ok(RatSeries {
            coeffs: self.coeffs[1..].to_vec(),
        })
    }

    /// `exp(f)` for `f(0) = 0`, via `e' = f' e`.
    pub fn exp(&self) -> Result<RatSeries> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::NonzeroConstant("exp"));
        }
        let n = self.order();
        let mut e = vec![BigRational::zero(); n + 1];
        e[0] = BigRational::one();
        for k in 1..=n {
            let mut acc = BigRational::zero();
            for j in 1..=k {
                if !self.coeffs[j].is_zero() {
                    acc += &self.coeffs[j] * &e[k - j] * int(j as i64);
                }
            }
            e[k] = acc / int(k as i64);
        }
        Ok(RatSeries { coeffs: e })
    }

    /// `1 / (1 - f)` for `f(0) = 0`.
    pub fn inverse_geom(&self) -> Result<RatSeries> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::NonzeroConstant("inverse_geom"));
        }
        let n = self.order();
        let mut g = vec![BigRational::zero(); n + 1];
        g[0] = BigRational::one();
        for k in 1..=n {
            let mut acc = BigRational::zero();
            for j in 1..=k {
                if !self.coeffs[j].is_zero() {
                    acc += &self.coeffs[j] * &g[k - j];
                }
            }
            g[k] = acc;
        }
        Ok(RatSeries { coeffs: g })
    }

    /// `1 / f` for `f(0) != 0`.
    pub fn recip(&self) -> Result<RatSeries> {
        let c0 = &self.coeffs[0];
        if c0.is_zero() {
            return Err(Error::ZeroConstant);
        }
        let n = self.order();
        let inv0 = c0.recip();
        let mut g = vec![BigRational::zero(); n + 1];
        g[0] = inv0.clone();
        for k in 1..=n {
            let mut acc = BigRational::zero();
            for j in 1..=k {
                if !self.coeffs[j].is_zero() {
                    acc += &self.coeffs[j] * &g[k - j];
                }
            }
            g[k] = -acc * &inv0;
        }
        Ok(RatSeries { coeffs: g })
    }

    pub fn pow(&self, e: usize) -> RatSeries {
        let mut acc = RatSeries::one(self.order());
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// `self ∘ inner`; `inner` must have zero constant term. Horner from the top.
    pub fn compose(&self, inner: &RatSeries) -> Result<RatSeries> {
        if !inner.coeffs[0].is_zero() {
            return Err(Error::NonzeroConstant("compose"));
        }
        let order = self.order().min(inner.order());
        let inner = inner.truncate(order);
        let mut acc = RatSeries::constant(self.coeffs[order].clone(), order);
        for c in self.coeffs[..order].iter().rev() {
            acc = &acc * &inner;
            acc.coeffs[0] += c;
        }
        Ok(acc)
    }

    /// Compositional inverse `g` with `f(g(z)) = z` to the order of `f`, by
    /// Lagrange inversion: `[z^k] g = (1/k) [w^{k-1}] (w / f(w))^k`.
    pub fn reversion(&self) -> Result<RatSeries> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::NonzeroConstant("reversion"));
        }
        let order = self.order();
        if order == 0 {
            return Ok(RatSeries::zero(0));
        }
        if self.coeffs[1].is_zero() {
            return Err(Error::ZeroLinearTerm);
        }
        let q = self.div_z()?.recip()?;
        let mut power = RatSeries::one(order - 1);
        let mut g = RatSeries::zero(order);
        for k in 1..=order {
            power = &power * &q;
            g.coeffs[k] = &power.coeffs[k - 1] / int(k as i64);
        }
        Ok(g)
    }

    /// `p(f)` by Horner; `f` may have a nonzero constant term since `p` is finite.
    pub fn eval_poly(p: &Poly, f: &RatSeries) -> RatSeries {
        let order = f.order();
        let mut acc = RatSeries::zero(order);
        for c in p.coeffs().iter().rev() {
            acc = &acc * f;
            acc.coeffs[0] += BigRational::from_integer(c.clone());
        }
        acc
    }

    /// Index of the first coefficient where the two series differ, compared
    /// up to the smaller order.
    pub fn first_difference(&self, other: &RatSeries) -> Option<usize> {
        let order = self.order().min(other.order());
        (0..=order).find(|&i| self.coeffs[i] != other.coeffs[i])
    }

    fn zip_with(
        &self,
        rhs: &RatSeries,
        f: impl Fn(&BigRational, &BigRational) -> BigRational,
    ) -> RatSeries {
        let order = self.order().min(rhs.order());
        RatSeries {
            coeffs: (0..=order)
                .map(|i| f(&self.coeffs[i], &rhs.coeffs[i]))
                .collect(),
        }
    }
}

impl fmt::Debug for RatSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coeffs.iter().map(fmt_rat).collect();
        write!(
            f,
            "RatSeries[{}; O(z^{})]",
            parts.join(", "),
            self.order() + 1
        )
    }
}

impl Add for &RatSeries {
    type Output = RatSeries;
    fn add(self, rhs: &RatSeries) -> RatSeries {
        self.zip_with(rhs, |a, b| a + b)
    }
}

impl Sub for &RatSeries {
    type Output = RatSeries;
    fn sub(self, rhs: &RatSeries) -> RatSeries {
        self.zip_with(rhs, |a, b| a - b)
    }
}

impl Mul for &RatSeries {
    type Output = RatSeries;
    fn mul(self, rhs: &RatSeries) -> RatSeries {
        let order = self.order().min(rhs.order());
        let mut out = vec![BigRational::zero(); order + 1];
        for (i, a) in self.coeffs[..=order].iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs[..=order - i].iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        RatSeries { coeffs: out }
    }
}

impl Neg for &RatSeries {
    type Output = RatSeries;
    fn neg(self) -> RatSeries {
        RatSeries {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Serialize for RatSeries {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.coeffs.iter().map(fmt_rat))
    }
}

impl<'de> Deserialize<'de> for RatSeries {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = Vec::<String>::deserialize(d)?;
        if raw.is_empty() {
            return Err(D::Error::custom("a series needs at least one coefficient"));
        }
        let coeffs = raw
            .iter()
            .map(|s| parse_rat(s).ok_or_else(|| D::Error::custom(format!("bad rational `{s}`"))))
            .collect::<std::result::Result<Vec<_>, _>>()?;
        Ok(RatSeries { coeffs })
    }
}

/// `T_alpha(z) = sum_{n>=1} n^{n-alpha} z^n / n!`.
pub fn series_t(alpha: u32, order: usize) -> RatSeries {
    let mut coeffs = vec![BigRational::zero(); order + 1];
    let mut fact = BigInt::one();
    for n in 1..=order {
        fact *= n;
        let e = n as i64 - alpha as i64;
        let base = BigInt::from(n);
        let p = if e >= 0 {
            BigRational::from_integer(base.pow(e as u32))
        } else {
            BigRational::new(BigInt::one(), base.pow((-e) as u32))
        };
        coeffs[n] = p / BigRational::from_integer(fact.clone());
    }
    RatSeries { coeffs }
}

/// `W(z) = sum_{n>=1} (-n)^{n-1} z^n / n!`.
pub fn series_w(order: usize) -> RatSeries {
    let mut coeffs = vec![BigRational::zero(); order + 1];
    let mut fact = BigInt::one();
    for n in 1..=order {
        fact *= n;
        let p = BigInt::from(-(n as i64)).pow(n as u32 - 1);
        coeffs[n] = BigRational::new(p, fact.clone());
    }
    RatSeries { coeffs }
}

/// Which derivative family a right-hand side belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SeriesFamily {
    F,
    G,
    H,
    P,
}

impl SeriesFamily {
    pub const ALL: [SeriesFamily; 4] = [
        SeriesFamily::F,
        SeriesFamily::G,
        SeriesFamily::H,
        SeriesFamily::P,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SeriesFamily::F => "F",
            SeriesFamily::G => "G",
            SeriesFamily::H => "H",
            SeriesFamily::P => "P",
        }
    }

    /// The series whose derivatives the family describes.
    pub fn base_series(self, order: usize) -> RatSeries {
        match self {
            SeriesFamily::F => series_t(0, order),
            SeriesFamily::G => series_t(1, order),
            SeriesFamily::H => series_t(2, order),
            SeriesFamily::P => series_w(order),
        }
    }
}

impl From<Family> for SeriesFamily {
    fn from(f: Family) -> Self {
        match f {
            Family::F => SeriesFamily::F,
            Family::G => SeriesFamily::G,
            Family::H => SeriesFamily::H,
        }
    }
}

/// Right-hand side of the derivative formula for index `n` and polynomial `poly`:
///
/// * F: `e^{nT} (1-T)^{-(n+2)} F_n(T/(1-T))`
/// * G: `e^{nT} (1-T)^{-n} G_n(T/(1-T))`
/// * H: `e^{nT} (1-T)^{-(n-1)} H_n(T/(1-T))`
/// * P: `e^{-nW} (1+W)^{-(2n-1)} P_n(W)`
pub fn rhs_series(family: SeriesFamily, n: usize, poly: &Poly, order: usize) -> RatSeries {
    assert!(n >= 1, "derivative formulas start at n = 1");
    let n_r = int(n as i64);
    if family == SeriesFamily::P {
        let w = series_w(order);
        let e = w.scale(&-n_r).exp().expect("W(0) = 0");
        let inv = (-&w).inverse_geom().expect("W(0) = 0");
        return &(&e * &inv.pow(2 * n - 1)) * &RatSeries::eval_poly(poly, &w);
    }
    let t = series_t(1, order);
    let e = t.scale(&n_r).exp().expect("T(0) = 0");
    let inv = t.inverse_geom().expect("T(0) = 0");
    let x = &t * &inv;
    let k = match family {
        SeriesFamily::F => n + 2,
        SeriesFamily::G => n,
        SeriesFamily::H => n - 1,
        SeriesFamily::P => unreachable!(),
    };
    &(&e * &inv.pow(k)) * &RatSeries::eval_poly(poly, &x)
}

/// Minimum number of meaningful coefficients left after differentiating.
pub const ORDER_SLACK: usize = 5;

/// Compares the `n`-th derivative of the base series with [`rhs_series`] for
/// each `1 <= n <= n_max`, coefficientwise and exactly. `polys[0]` is index 1.
pub fn check_def_identity(
    family: SeriesFamily,
    polys: &[Poly],
    n_max: usize,
    order: usize,
) -> CheckReport {
    let mut report = CheckReport::new(format!("def_identity_{}", family.name()))
        .param("n_max", n_max)
        .param("order", order);
    if order < n_max + ORDER_SLACK {
        report.fail(format!("order {order} is below n_max + {ORDER_SLACK}"));
        return report;
    }
    if polys.len() < n_max {
        report.fail(format!(
            "only {} polynomials supplied for n_max = {n_max}",
            polys.len()
        ));
        return report;
    }
    let base = family.base_series(order + n_max);
    for n in 1..=n_max {
        let lhs = match report.absorb(base.nth_derivative(n)) {
            Some(s) => s.truncate(order),
            None => return report,
        };
        let rhs = rhs_series(family, n, &polys[n - 1], order);
        if let Some(i) = lhs.first_difference(&rhs) {
            report.fail(format!(
                "n={n}: coefficient of z^{i} differs: derivative {} vs formula {}",
                fmt_rat(lhs.coeff(i)),
                fmt_rat(rhs.coeff(i))
            ));
            return report;
        }
    }
    report
}

fn compare(report: &mut CheckReport, label: &str, lhs: &RatSeries, rhs: &RatSeries) {
    if let Some(i) = lhs.first_difference(rhs) {
        report.fail(format!(
            "{label}: coefficient of z^{i}: {} vs {}",
            fmt_rat(lhs.coeff(i)),
            fmt_rat(rhs.coeff(i))
        ));
    }
}

/// `1 + T_0 = 1/(1-T)`, `T_2' = T/z`, `T_2 = T - T^2/2`, `T_1(z) = -W(-z)` and
/// `T' = e^T/(1-T)`.
pub fn check_basic_identities(order: usize) -> CheckReport {
    let mut report = CheckReport::new("basic_t_identities").param("order", order);
    if order < 2 {
        report.fail("order must be at least 2");
        return report;
    }
    let t = series_t(1, order);
    let t0 = series_t(0, order);
    let t2 = series_t(2, order);
    let inv = t.inverse_geom().expect("T(0) = 0");
    // the sum defining T_0 starts at n = 1, so it misses the constant 1
    let t0_full = &t0 + &RatSeries::one(order);
    compare(&mut report, "1 + T_0 = 1/(1-T)", &t0_full, &inv);

    let lhs = t2.derive().expect("order >= 1");
    let rhs = t.div_z().expect("T(0) = 0");
    compare(&mut report, "T_2' = T/z", &lhs, &rhs);

    let half = rat(1, 2);
    let rhs = &t - &(&t * &t).scale(&half);
    compare(&mut report, "T_2 = T - T^2/2", &t2, &rhs);

    let rhs = -&series_w(order).negate_arg();
    compare(&mut report, "T(z) = -W(-z)", &t, &rhs);

    let lhs = t.derive().expect("order >= 1");
    let rhs = &t.exp().expect("T(0) = 0") * &inv;
    compare(&mut report, "T' = e^T/(1-T)", &lhs, &rhs);
    report
}

/// `(z/(1+z)) exp(-z/(1+z))`
pub fn lemma_inverse_series(order: usize) -> RatSeries {
    let z = RatSeries::var(order);
    let m = &z * &(-&z).inverse_geom().expect("z(0) = 0");
    &m * &(-&m).exp().expect("m(0) = 0")
}

/// The compositional inverse of `T/(1-T)` and the inverse of `z e^{-z}`,
/// with both round trips.
pub fn check_reversion_lemma(order: usize) -> CheckReport {
    let mut report = CheckReport::new("reversion_lemma").param("order", order);
    if order < 1 {
        report.fail("order must be at least 1");
        return report;
    }
    let t = series_t(1, order);
    let f = &t * &t.inverse_geom().expect("T(0) = 0");
    let Some(g) = report.absorb(f.reversion()) else {
        return report;
    };
    compare(
        &mut report,
        "reversion(T/(1-T))",
        &g,
        &lemma_inverse_series(order),
    );
    let z = RatSeries::var(order);
    if let Some(fg) = report.absorb(f.compose(&g)) {
        compare(&mut report, "f(g(z)) = z", &fg, &z);
    }
    if let Some(gf) = report.absorb(g.compose(&f)) {
        compare(&mut report, "g(f(z)) = z", &gf, &z);
    }
    let zexp = &z * &(-&z).exp().expect("z(0) = 0");
    if let Some(r) = report.absorb(zexp.reversion()) {
        compare(&mut report, "reversion(z e^-z) = T", &r, &t);
    }
    report
}

/// Series in `u` of `T((u+x)/(1+x) e^{-x/(1+x)})` at a rational `x != -1`.
///
/// With `t = x/(1+x)` the inner point has `T = t`, and writing
/// `T = t + S` the functional equation `T = z e^T` becomes
/// `t + S = (t + v) e^S` with `v = u/(1+x)`. `S(v)` is the compositional
/// inverse of `(t + S) e^{-S} - t`, which has rational coefficients.
pub fn tree_function_at_shifted_point(x: &BigRational, order: usize) -> Result<RatSeries> {
    let one = BigRational::one();
    let one_plus_x = &one + x;
    if one_plus_x.is_zero() {
        return Err(Error::PoleSample);
    }
    let t = x / &one_plus_x;
    let s = RatSeries::var(order);
    let e = (-&s).exp()?;
    let phi = &(&(&s + &RatSeries::constant(t.clone(), order)) * &e)
        - &RatSeries::constant(t.clone(), order);
    let sv = phi.reversion()?;
    let su = sv.scale_arg(&one_plus_x.recip());
    Ok(&su + &RatSeries::constant(t, order))
}

/// `F_0`, `G_0`, `H_0` as rationals at `x`.
pub fn zeroth_values(x: &BigRational) -> Result<[BigRational; 3]> {
    let one = BigRational::one();
    let xp1 = &one + x;
    if xp1.is_zero() {
        return Err(Error::PoleSample);
    }
    let f0 = xp1.recip();
    let g0 = x / &xp1;
    let h0 = x * (x + int(2)) / (int(2) * &xp1);
    Ok([f0, g0, h0])
}

/// Generating functions in `u` at a fixed `x`, built without the polynomials:
/// `[F, G, H]` with `F = T_0(A)/(1+x)^2`, `G = T(A)`, `H = (1+x) T_2(A)`.
pub fn egf_series_at(x: &BigRational, order: usize) -> Result<[RatSeries; 3]> {
    let g = tree_function_at_shifted_point(x, order)?;
    let one = BigRational::one();
    let xp1 = &one + x;
    let one_minus_g = &RatSeries::one(order) - &g;
    let f = one_minus_g.recip()?.scale(&(&xp1 * &xp1).recip());
    let h = (&g - &(&g * &g).scale(&rat(1, 2))).scale(&xp1);
    Ok([f, g, h])
}

/// Checks the closed generating functions of `F_n(x)`, `G_n(x)`, `H_n(x)` at
/// each sampled `x`: `n! [u^n]` must equal the polynomial value for
/// `1 <= n <= n_max` and `[u^0]` the rational `n = 0` value.
///
/// Each coefficient is a rational function of `x` of bounded degree, so with
/// at least `n_max + 2` distinct samples exact agreement at the samples is a
/// symbolic identity; the report records whether that many were supplied.
pub fn check_egf_theorem(
    x_samples: &[BigRational],
    tables: [&[Poly]; 3],
    n_max: usize,
) -> CheckReport {
    let mut report = CheckReport::new("egf_theorem")
        .param("n_max", n_max)
        .param("samples", x_samples.iter().map(fmt_rat).collect::<Vec<_>>());
    let distinct: std::collections::BTreeSet<_> = x_samples.iter().collect();
    report.set_param("symbolic", distinct.len() >= n_max + 2);
    for t in tables {
        if t.len() < n_max {
            report.fail(format!(
                "only {} polynomials supplied for n_max = {n_max}",
                t.len()
            ));
            return report;
        }
    }
    let names = ["F", "G", "H"];
    for x in x_samples {
        let Some(series) = report.absorb(egf_series_at(x, n_max)) else {
            return report;
        };
        let Some(zeroth) = report.absorb(zeroth_values(x)) else {
            return report;
        };
        for (fam, s) in series.iter().enumerate() {
            if s.coeff(0) != &zeroth[fam] {
                report.fail(format!(
                    "x={}: {}_0 is {} but the generating function gives {}",
                    fmt_rat(x),
                    names[fam],
                    fmt_rat(&zeroth[fam]),
                    fmt_rat(s.coeff(0))
                ));
                return report;
            }
            for n in 1..=n_max {
                let from_gf = s.coeff(n) * BigRational::from_integer(factorial(n));
                let from_poly = tables[fam][n - 1].eval_rational(x);
                if from_gf != from_poly {
                    report.fail(format!(
                        "x={}: {}_{n}(x) = {} but n! [u^{n}] = {}",
                        fmt_rat(x),
                        names[fam],
                        fmt_rat(&from_poly),
                        fmt_rat(&from_gf)
                    ));
                    return report;
                }
            }
        }
    }
    report
}

/// `sum_{n>=0} p_n(x) u^n / n!` with the given zeroth term.
pub fn egf_from_polys(
    zeroth: BigRational,
    polys: &[Poly],
    x: &BigRational,
    order: usize,
) -> RatSeries {
    let mut coeffs = Vec::with_capacity(order + 1);
    coeffs.push(zeroth);
    let mut fact = BigInt::one();
    for n in 1..=order {
        fact *= n;
        coeffs.push(polys[n - 1].eval_rational(x) / BigRational::from_integer(fact.clone()));
    }
    RatSeries::new(coeffs, order)
}

/// `H(x,u) = (1+x) (G(x,u) - G(x,u)^2 / 2)` at each sampled `x`.
pub fn check_gh_functional(
    x_samples: &[BigRational],
    g: &[Poly],
    h: &[Poly],
    order: usize,
) -> CheckReport {
    let mut report = CheckReport::new("gh_functional")
        .param("order", order)
        .param("samples", x_samples.iter().map(fmt_rat).collect::<Vec<_>>());
    if g.len() < order || h.len() < order {
        report.fail(format!("tables shorter than order {order}"));
        return report;
    }
    for x in x_samples {
        let Some([_, g0, h0]) = report.absorb(zeroth_values(x)) else {
            return report;
        };
        let gs = egf_from_polys(g0, g, x, order);
        let hs = egf_from_polys(h0, h, x, order);
        let xp1 = BigRational::one() + x;
        let rhs = (&gs - &(&gs * &gs).scale(&rat(1, 2))).scale(&xp1);
        compare(&mut report, &format!("x={}", fmt_rat(x)), &hs, &rhs);
        if !report.passed {
            return report;
        }
    }
    report
}

/// `e^{nT} (1-T)^{-(n-1)} (T/(1-T))^unl`, or with exponent `n` when rooted.
pub fn propgen_series(n: usize, unl: usize, rooted: bool, order: usize) -> RatSeries {
    let t = series_t(1, order);
    let e = t.scale(&int(n as i64)).exp().expect("T(0) = 0");
    let inv = t.inverse_geom().expect("T(0) = 0");
    let k = if rooted { n } else { n - 1 };
    let x = &t * &inv;
    &(&e * &inv.pow(k)) * &x.pow(unl)
}

/// `e^{nT} (1-T)^{-(n-1)} sum_U (1-T)^{-imp(U)}` for the unrooted census
/// (exponent `n` for the rooted one), where `census = sum_U x^{imp(U)}`.
pub fn improper_census_series(n: usize, census: &Poly, rooted: bool, order: usize) -> RatSeries {
    let t = series_t(1, order);
    let e = t.scale(&int(n as i64)).exp().expect("T(0) = 0");
    let inv = t.inverse_geom().expect("T(0) = 0");
    let k = if rooted { n } else { n - 1 };
    &(&e * &inv.pow(k)) * &RatSeries::eval_poly(census, &inv)
}

/// Checks the improper-edge expansion of the `n`-th derivative: the unrooted
/// census reproduces the derivatives of `T_2`, the rooted one those of `T_1`.
/// `censuses[0]` is size 1.
pub fn check_beta_identity(censuses: &[Poly], rooted: bool, order: usize) -> CheckReport {
    let name = if rooted {
        "beta_series_rooted"
    } else {
        "beta_series"
    };
    let mut report = CheckReport::new(name)
        .param("n_max", censuses.len())
        .param("order", order);
    let n_max = censuses.len();
    let base = series_t(if rooted { 1 } else { 2 }, order + n_max);
    for (i, census) in censuses.iter().enumerate() {
        let n = i + 1;
        let Some(lhs) = report.absorb(base.nth_derivative(n)) else {
            return report;
        };
        let lhs = lhs.truncate(order);
        let rhs = improper_census_series(n, census, rooted, order);
        compare(&mut report, &format!("n={n}"), &lhs, &rhs);
        if !report.passed {
            break;
        }
    }
    report
}

impl RatSeries {
    /// True when every coefficient is an integer multiple of `1/n!`; used by tests.
    pub fn is_egf_integral(&self) -> bool {
        self.coeffs.iter().enumerate().all(|(n, c)| {
            let scaled = c * BigRational::from_integer(factorial(n));
            scaled.is_integer() && !scaled.is_negative()
        })
    }
}
