//! Dense integer polynomials and the polynomial sequences attached to the
//! successive derivatives of the tree function.
//!
//! `F_n`, `G_n` and `H_n` come from the derivative recursions of `T_0`, `T_1`
//! and `T_2`, `P_n` from the derivatives of `W`, and `Q_{n,k}` is the two-index
//! family that specializes to all three shifted sequences.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// Univariate polynomial with arbitrary-precision integer coefficients,
/// lowest degree first. Trailing zeros are never stored.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    coeffs: Vec<BigInt>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Poly::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Poly::new(vec![c])
    }

    /// `c + d x`
    pub fn linear(c: BigInt, d: BigInt) -> Self {
        Poly::new(vec![c, d])
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    /// Coefficient of `x^i`, zero beyond the degree.
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn scale(&self, c: &BigInt) -> Poly {
        Poly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn derivative(&self) -> Poly {
        Poly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    /// `x^k p(x)`
    pub fn mul_x_pow(&self, k: usize) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Poly { coeffs }
    }

    /// `p(x + a)`, by repeated synthetic division (Taylor shift).
    pub fn shift(&self, a: &BigInt) -> Poly {
        let mut c = self.coeffs.clone();
        let n = c.len();
        if a.is_zero() || n < 2 {
            return self.clone();
        }
        for i in 0..n - 1 {
            for j in (i..n - 1).rev() {
                let t = &c[j + 1] * a;
                c[j] += t;
            }
        }
        Poly::new(c)
    }

    /// Exact Horner evaluation.
    pub fn eval_rational(&self, q: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * q + BigRational::from_integer(c.clone());
        }
        acc
    }

    pub fn eval_int(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Coefficients read backwards, as a polynomial of the same length.
    /// `x^d p(1/x)` when the constant term is nonzero.
    pub fn reversed(&self) -> Poly {
        let mut c = self.coeffs.clone();
        c.reverse();
        Poly::new(c)
    }

    pub fn pow(&self, e: usize) -> Poly {
        let mut acc = Poly::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}

/// Descending powers, as in `3x^2+10x+9`.
impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if c.is_negative() {
                write!(f, "-")?;
            } else if !first {
                write!(f, "+")?;
            }
            first = false;
            if i == 0 || !mag.is_one() {
                write!(f, "{mag}")?;
            }
            match i {
                0 => {}
                1 => write!(f, "x")?,
                _ => write!(f, "x^{i}")?,
            }
        }
        Ok(())
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::new(out)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for Poly {
            type Output = Poly;
            fn $m(self, rhs: Poly) -> Poly {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Serialize for Poly {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(self.coeffs.iter().map(|c| c.to_string()))
    }
}

impl<'de> Deserialize<'de> for Poly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let raw = Vec::<String>::deserialize(d)?;
        let coeffs = raw
            .iter()
            .map(|s| s.parse::<BigInt>().map_err(D::Error::custom))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Poly::new(coeffs))
    }
}

/// The three derivative families of `T_0`, `T_1` and `T_2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Family {
    F,
    G,
    H,
}

impl Family {
    /// `(a, b)` such that `p_{n+1} = (a + b x) p_n + (1+x)^2 p_n'`.
    fn step(self, n: i64) -> (i64, i64) {
        match self {
            Family::F => (2 * n + 2, n + 2),
            Family::G => (2 * n, n),
            Family::H => (2 * n - 1, n - 1),
        }
    }
}

/// One step `(a + b x) p + (1+x)^2 p'`.
fn recursion_step(p: &Poly, a: i64, b: i64) -> Poly {
    let one_plus_x_sq = Poly::from_i64s(&[1, 2, 1]);
    let lin = Poly::from_i64s(&[a, b]);
    &(&lin * p) + &(&one_plus_x_sq * &p.derivative())
}

/// `p_1 .. p_{n_max}` of the given family, starting from `p_1 = 1`.
pub fn generate(family: Family, n_max: usize) -> Vec<Poly> {
    let mut out = Vec::with_capacity(n_max);
    if n_max == 0 {
        return out;
    }
    out.push(Poly::one());
    for n in 1..n_max {
        let (a, b) = family.step(n as i64);
        let next = recursion_step(&out[n - 1], a, b);
        out.push(next);
    }
    out
}

pub fn gen_f(n_max: usize) -> Vec<Poly> {
    generate(Family::F, n_max)
}

pub fn gen_g(n_max: usize) -> Vec<Poly> {
    generate(Family::G, n_max)
}

pub fn gen_h(n_max: usize) -> Vec<Poly> {
    generate(Family::H, n_max)
}

/// `q(x) = p(x + a)`.
pub fn shift(p: &Poly, a: &BigInt) -> Poly {
    p.shift(a)
}

/// `P_n(x) = (-1-x)^{n-1} G_n(-x/(1+x))`, expanded by homogenizing `G_n`.
pub fn p_from_g(n: usize, g: &Poly) -> Poly {
    assert!(n >= 1);
    let d = n - 1;
    let one_plus_x = Poly::from_i64s(&[1, 1]);
    let minus_x = Poly::from_i64s(&[0, -1]);
    let mut acc = Poly::zero();
    for (k, gk) in g.coeffs().iter().enumerate() {
        if gk.is_zero() {
            continue;
        }
        let term = &minus_x.pow(k) * &one_plus_x.pow(d - k);
        acc = &acc + &term.scale(gk);
    }
    if d % 2 == 1 {
        -&acc
    } else {
        acc
    }
}

/// `P_1 .. P_{n_max}`, derived from the `G` sequence.
pub fn gen_p(n_max: usize) -> Vec<Poly> {
    p_from_gs(&gen_g(n_max))
}

/// `P_n` for each entry of a `G` table (index 0 holds `G_1`).
pub fn p_from_gs(gs: &[Poly]) -> Vec<Poly> {
    gs.iter()
        .enumerate()
        .map(|(i, g)| p_from_g(i + 1, g))
        .collect()
}

/// Rows of a triangle, row `i` holding index `n = i + 1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyTriangle {
    pub rows: Vec<Vec<Poly>>,
}

impl PolyTriangle {
    /// `Q_{n,k}`, or `None` outside `1 <= n <= rows`, `0 <= k < n`.
    pub fn get(&self, n: usize, k: usize) -> Option<&Poly> {
        self.rows.get(n.checked_sub(1)?)?.get(k)
    }

    /// `sum_k Q_{n,k}(x0) x^k` for integer `x0`.
    pub fn specialize(&self, n: usize, x0: i64) -> Poly {
        let x0 = BigInt::from(x0);
        Poly::new(self.rows[n - 1].iter().map(|q| q.eval_int(&x0)).collect())
    }
}

/// `Q_{n,k}(x) = (x + n - 1) Q_{n-1,k} + (n + k - 2) Q_{n-1,k-1}`, `Q_{1,0} = 1`.
pub fn gen_q(n_max: usize) -> PolyTriangle {
    let mut rows: Vec<Vec<Poly>> = Vec::with_capacity(n_max);
    if n_max == 0 {
        return PolyTriangle { rows };
    }
    rows.push(vec![Poly::one()]);
    for n in 2..=n_max {
        let prev = &rows[n - 2];
        let lin = Poly::linear(BigInt::from(n - 1), BigInt::one());
        let row = (0..n)
            .map(|k| {
                let mut q = match prev.get(k) {
                    Some(p) => &lin * p,
                    None => Poly::zero(),
                };
                if k >= 1 {
                    let w = BigInt::from(n + k - 2);
                    q = &q + &prev[k - 1].scale(&w);
                }
                q
            })
            .collect();
        rows.push(row);
    }
    PolyTriangle { rows }
}

/// Weakly increasing then weakly decreasing.
pub fn is_unimodal(seq: &[BigInt]) -> bool {
    let mut i = 1;
    while i < seq.len() && seq[i] >= seq[i - 1] {
        i += 1;
    }
    while i < seq.len() && seq[i] <= seq[i - 1] {
        i += 1;
    }
    i >= seq.len()
}

/// `(2m - 1)!!` with `(-1)!! = 1`.
pub fn double_factorial_odd(m: i64) -> BigInt {
    let mut acc = BigInt::one();
    let mut k = 2 * m - 1;
    while k > 1 {
        acc *= k;
        k -= 2;
    }
    acc
}
