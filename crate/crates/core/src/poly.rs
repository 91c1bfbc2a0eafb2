//! Exact Laurent polynomials with arbitrary-precision integer coefficients.
//!
//! [`LaurentPoly1`] is univariate in `t` (Burau matrix entries, Alexander
//! polynomials). [`LaurentPoly2`] is bivariate in `t` and `x` (characteristic
//! polynomials of Burau matrices).

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

/// `Σ c_k t^k` stored densely from the lowest nonzero exponent.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly1 {
    low: i64,
    coeffs: Vec<BigInt>,
}

impl LaurentPoly1 {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: i64) -> Self {
        Self::monomial(c, 0)
    }

    /// `c · t^exp`.
    pub fn monomial(c: impl Into<BigInt>, exp: i64) -> Self {
        Self::from_coeffs(exp, vec![c.into()])
    }

    /// The polynomial with coefficient `coeffs[k]` on `t^(low + k)`.
    pub fn from_coeffs(low: i64, coeffs: Vec<BigInt>) -> Self {
        let mut p = Self { low, coeffs };
        p.trim();
        p
    }

    pub fn from_i64s(low: i64, coeffs: &[i64]) -> Self {
        Self::from_coeffs(low, coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
        let lead = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead == self.coeffs.len() {
            self.coeffs.clear();
            self.low = 0;
        } else if lead > 0 {
            self.coeffs.drain(..lead);
            self.low += lead as i64;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.low == 0 && self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Lowest exponent with a nonzero coefficient (0 for the zero polynomial).
    pub fn low_exp(&self) -> i64 {
        self.low
    }

    pub fn high_exp(&self) -> i64 {
        self.low + self.coeffs.len() as i64 - 1
    }

    pub fn coeff(&self, exp: i64) -> BigInt {
        let k = exp - self.low;
        if k < 0 || k >= self.coeffs.len() as i64 {
            BigInt::zero()
        } else {
            self.coeffs[k as usize].clone()
        }
    }

    /// Nonzero terms `(exponent, coefficient)` in increasing exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, &BigInt)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(k, c)| (self.low + k as i64, c))
    }

    /// Multiplies by `t^k`.
    pub fn shift(&self, k: i64) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        Self {
            low: self.low + k,
            coeffs: self.coeffs.clone(),
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::from_coeffs(self.low, self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Value at `t = 1`.
    pub fn eval_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    /// Substitutes `t ↦ t^{-1}`.
    pub fn reflect(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = self.coeffs.clone();
        coeffs.reverse();
        Self {
            low: -self.high_exp(),
            coeffs,
        }
    }

    /// Exact quotient `self / divisor`, or `None` if the division leaves a
    /// remainder or `divisor` is zero.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        if divisor.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        let dlen = divisor.coeffs.len();
        let lead = divisor.coeffs.last().unwrap();
        let mut rem = self.coeffs.clone();
        if rem.len() < dlen {
            return None;
        }
        let qlen = rem.len() - dlen + 1;
        let mut quot = vec![BigInt::zero(); qlen];
        for k in (0..qlen).rev() {
            let top = &rem[k + dlen - 1];
            if top.is_zero() {
                continue;
            }
            let (q, r) = top.div_rem(lead);
            if !r.is_zero() {
                return None;
            }
            for (j, d) in divisor.coeffs.iter().enumerate() {
                rem[k + j] -= &q * d;
            }
            quot[k] = q;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(Self::from_coeffs(self.low - divisor.low, quot))
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(), |acc, _| &acc * self)
    }
}

impl fmt::Display for LaurentPoly1 {
    /// Terms in decreasing exponent order, e.g. `t^2 - t + 1 - t^-1 + t^-2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (e, c) in self.terms().rev() {
            let monomial = match e {
                0 => String::new(),
                1 => "t".into(),
                e => format!("t^{e}"),
            };
            write_term(f, &mut first, c, &monomial)?;
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly1 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly1({self})")
    }
}

fn write_term(
    f: &mut fmt::Formatter<'_>,
    first: &mut bool,
    c: &BigInt,
    monomial: &str,
) -> fmt::Result {
    let negative = c.is_negative();
    let magnitude = c.abs();
    match (*first, negative) {
        (true, true) => f.write_str("-")?,
        (true, false) => {}
        (false, true) => f.write_str(" - ")?,
        (false, false) => f.write_str(" + ")?,
    }
    *first = false;
    if monomial.is_empty() {
        write!(f, "{magnitude}")
    } else if magnitude.is_one() {
        f.write_str(monomial)
    } else {
        write!(f, "{magnitude}*{monomial}")
    }
}

impl Add for &LaurentPoly1 {
    type Output = LaurentPoly1;

    fn add(self, rhs: &LaurentPoly1) -> LaurentPoly1 {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let low = self.low.min(rhs.low);
        let high = self.high_exp().max(rhs.high_exp());
        let mut coeffs = vec![BigInt::zero(); (high - low + 1) as usize];
        for (e, c) in self.terms().chain(rhs.terms()) {
            coeffs[(e - low) as usize] += c;
        }
        LaurentPoly1::from_coeffs(low, coeffs)
    }
}

impl Neg for &LaurentPoly1 {
    type Output = LaurentPoly1;

    fn neg(self) -> LaurentPoly1 {
        LaurentPoly1 {
            low: self.low,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Sub for &LaurentPoly1 {
    type Output = LaurentPoly1;

    fn sub(self, rhs: &LaurentPoly1) -> LaurentPoly1 {
        self + &(-rhs)
    }
}

impl Mul for &LaurentPoly1 {
    type Output = LaurentPoly1;

    fn mul(self, rhs: &LaurentPoly1) -> LaurentPoly1 {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPoly1::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        LaurentPoly1::from_coeffs(self.low + rhs.low, coeffs)
    }
}

macro_rules! forward_owned {
    ($($op:ident $method:ident),*) => {$(
        impl $op for LaurentPoly1 {
            type Output = LaurentPoly1;
            fn $method(self, rhs: LaurentPoly1) -> LaurentPoly1 {
                (&self).$method(&rhs)
            }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for LaurentPoly1 {
    type Output = LaurentPoly1;

    fn neg(self) -> LaurentPoly1 {
        -&self
    }
}

/// A coefficient in JSON: a number when it fits in `i64`, a decimal string
/// otherwise.
#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum JsonCoeff {
    Small(i64),
    Big(String),
}

impl From<&BigInt> for JsonCoeff {
    fn from(c: &BigInt) -> Self {
        c.to_i64()
            .map(JsonCoeff::Small)
            .unwrap_or_else(|| JsonCoeff::Big(c.to_string()))
    }
}

impl TryFrom<JsonCoeff> for BigInt {
    type Error = String;

    fn try_from(c: JsonCoeff) -> Result<Self, String> {
        match c {
            JsonCoeff::Small(v) => Ok(v.into()),
            JsonCoeff::Big(s) => s.parse().map_err(|_| format!("bad coefficient {s:?}")),
        }
    }
}

impl Serialize for LaurentPoly1 {
    /// `[[coeff, t_exp], ...]` in decreasing exponent order.
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let terms: Vec<(JsonCoeff, i64)> = self.terms().rev().map(|(e, c)| (c.into(), e)).collect();
        terms.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for LaurentPoly1 {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let terms = Vec::<(JsonCoeff, i64)>::deserialize(deserializer)?;
        let mut out = LaurentPoly1::zero();
        for (c, e) in terms {
            let c = BigInt::try_from(c).map_err(serde::de::Error::custom)?;
            out = &out + &LaurentPoly1::monomial(c, e);
        }
        Ok(out)
    }
}

/// `Σ c_{a,b} t^a x^b`, stored sparsely.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly2 {
    // keyed by (x exponent, t exponent)
    terms: BTreeMap<(i64, i64), BigInt>,
}

impl LaurentPoly2 {
    pub fn zero() -> Self {
        Self::default()
    }

    /// `Σ_k coeffs[k](t) · x^k`.
    pub fn from_x_coefficients(coeffs: &[LaurentPoly1]) -> Self {
        let mut terms = BTreeMap::new();
        for (k, p) in coeffs.iter().enumerate() {
            for (e, c) in p.terms() {
                terms.insert((k as i64, e), c.clone());
            }
        }
        Self { terms }
    }

    pub fn monomial(c: impl Into<BigInt>, t_exp: i64, x_exp: i64) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((x_exp, t_exp), c);
        }
        Self { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, t_exp: i64, x_exp: i64) -> BigInt {
        self.terms
            .get(&(x_exp, t_exp))
            .cloned()
            .unwrap_or_else(BigInt::zero)
    }

    /// The coefficient of `x^k` as a polynomial in `t`.
    pub fn x_coefficient(&self, k: i64) -> LaurentPoly1 {
        self.terms
            .range((k, i64::MIN)..=(k, i64::MAX))
            .fold(LaurentPoly1::zero(), |acc, (&(_, e), c)| {
                &acc + &LaurentPoly1::monomial(c.clone(), e)
            })
    }

    /// Terms `(coeff, t_exp, x_exp)` ordered by decreasing `x` exponent, then
    /// increasing `t` exponent.
    pub fn terms(&self) -> Vec<(&BigInt, i64, i64)> {
        let mut out: Vec<_> = self.terms.iter().map(|(&(x, t), c)| (c, t, x)).collect();
        out.sort_by(|a, b| b.2.cmp(&a.2).then(a.1.cmp(&b.1)));
        out
    }

    pub fn max_x_exp(&self) -> Option<i64> {
        self.terms.keys().map(|&(x, _)| x).max()
    }

    /// Representative of `self` up to units `±t^a x^b`: the lowest `x` and `t`
    /// exponents are 0 and the term with the highest `x` exponent (then highest
    /// `t` exponent) is positive.
    pub fn normalized(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let min_x = self.terms.keys().map(|&(x, _)| x).min().unwrap();
        let min_t = self.terms.keys().map(|&(_, t)| t).min().unwrap();
        let (_, top) = self.terms.iter().next_back().unwrap();
        let sign = if top.is_negative() { -1 } else { 1 };
        Self {
            terms: self
                .terms
                .iter()
                .map(|(&(x, t), c)| ((x - min_x, t - min_t), c * sign))
                .collect(),
        }
    }
}

impl Add for &LaurentPoly2 {
    type Output = LaurentPoly2;

    fn add(self, rhs: &LaurentPoly2) -> LaurentPoly2 {
        let mut terms = self.terms.clone();
        for (k, c) in &rhs.terms {
            let entry = terms.entry(*k).or_insert_with(BigInt::zero);
            *entry += c;
            if entry.is_zero() {
                terms.remove(k);
            }
        }
        LaurentPoly2 { terms }
    }
}

impl fmt::Display for LaurentPoly2 {
    /// `t^9*x^5 + t^7*x^4 + ... + 1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (c, t, x) in self.terms() {
            let mut parts = Vec::new();
            match t {
                0 => {}
                1 => parts.push("t".to_string()),
                t => parts.push(format!("t^{t}")),
            }
            match x {
                0 => {}
                1 => parts.push("x".to_string()),
                x => parts.push(format!("x^{x}")),
            }
            write_term(f, &mut first, c, &parts.join("*"))?;
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly2({self})")
    }
}

impl Serialize for LaurentPoly2 {
    /// `[[coeff, t_exp, x_exp], ...]` in text order.
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let terms: Vec<(JsonCoeff, i64, i64)> = self
            .terms()
            .into_iter()
            .map(|(c, t, x)| (c.into(), t, x))
            .collect();
        terms.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for LaurentPoly2 {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw = Vec::<(JsonCoeff, i64, i64)>::deserialize(deserializer)?;
        let mut out = LaurentPoly2::zero();
        for (c, t, x) in raw {
            let c = BigInt::try_from(c).map_err(serde::de::Error::custom)?;
            out = &out + &LaurentPoly2::monomial(c, t, x);
        }
        Ok(out)
    }
}
