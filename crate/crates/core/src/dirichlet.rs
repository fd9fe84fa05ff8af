//! Finite Dirichlet series `Σ a_n n^{-s}` with exact rational coefficients.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};

use crate::arith::factorize;
use crate::error::{Error, Result};

/// Default bound on quotient indices in [`DirichletPoly::try_divide`].
pub const DEFAULT_INDEX_CAP: u64 = 1_000_000;

/// Only nonzero coefficients are stored; indices are at least 1.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct DirichletPoly {
    coeffs: BTreeMap<u64, BigRational>,
}

fn index_product(a: u64, b: u64) -> u64 {
    a.checked_mul(b).expect("Dirichlet index overflows u64")
}

impl DirichletPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::term(1, BigRational::one())
    }

    /// `c · n^{-s}`.
    pub fn term(n: u64, c: BigRational) -> Self {
        let mut p = Self::zero();
        p.add_term(n, c);
        p
    }

    /// Sums the given terms; repeated indices accumulate.
    pub fn from_terms<I: IntoIterator<Item = (u64, BigRational)>>(terms: I) -> Self {
        let mut p = Self::zero();
        for (n, c) in terms {
            p.add_term(n, c);
        }
        p
    }

    /// Integer coefficients, e.g. `from_ints(&[(1, 1), (2, -1)])` is `1 - 2^{-s}`.
    pub fn from_ints(terms: &[(u64, i64)]) -> Self {
        Self::from_terms(
            terms
                .iter()
                .map(|&(n, c)| (n, BigRational::from_integer(BigInt::from(c)))),
        )
    }

    /// `1 - c · n^{-s}`.
    pub fn one_minus(c: BigRational, n: u64) -> Self {
        let mut p = Self::one();
        p.add_term(n, -c);
        p
    }

    pub fn add_term(&mut self, n: u64, c: BigRational) {
        assert!(n >= 1, "Dirichlet indices start at 1");
        if c.is_zero() {
            return;
        }
        let slot = self.coeffs.entry(n).or_insert_with(BigRational::zero);
        *slot += c;
        if slot.is_zero() {
            self.coeffs.remove(&n);
        }
    }

    pub fn coeff(&self, n: u64) -> BigRational {
        self.coeffs
            .get(&n)
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (u64, &BigRational)> + '_ {
        self.coeffs.iter().map(|(&n, c)| (n, c))
    }

    pub fn indices(&self) -> impl Iterator<Item = u64> + '_ {
        self.coeffs.keys().copied()
    }

    pub fn num_terms(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        *self == Self::one()
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        DirichletPoly {
            coeffs: self.coeffs.iter().map(|(&n, a)| (n, a * c)).collect(),
        }
    }

    /// Keeps the terms whose index is coprime to every prime in `pi`.
    pub fn pi_part(&self, pi: &BTreeSet<u64>) -> Self {
        self.filter_indices(|n| pi.iter().all(|&p| n % p != 0))
    }

    pub fn filter_indices(&self, mut keep: impl FnMut(u64) -> bool) -> Self {
        DirichletPoly {
            coeffs: self
                .coeffs
                .iter()
                .filter(|(&n, _)| keep(n))
                .map(|(&n, c)| (n, c.clone()))
                .collect(),
        }
    }

    /// The substitution `s ↦ rs - r + 1`: `a_m m^{-s}` becomes
    /// `a_m m^{r-1} (m^r)^{-s}`.
    pub fn shift_transform(&self, r: u32) -> Result<Self> {
        if r == 0 {
            return Err(Error::InvalidParameter("shift needs r ≥ 1".into()));
        }
        let mut out = BTreeMap::new();
        for (&m, a) in &self.coeffs {
            let index = m
                .checked_pow(r)
                .ok_or_else(|| Error::InvalidParameter(format!("{m}^{r} overflows")))?;
            let factor = BigInt::from(m).pow(r - 1);
            out.insert(index, a * BigRational::from_integer(factor));
        }
        Ok(DirichletPoly { coeffs: out })
    }

    /// `Σ a_n / n^t`, exactly.
    pub fn evaluate(&self, t: u32) -> BigRational {
        self.coeffs
            .iter()
            .map(|(&n, a)| a / BigRational::from_integer(BigInt::from(n).pow(t)))
            .fold(BigRational::zero(), |acc, x| acc + x)
    }

    /// Long division by smallest index. Fails if `divisor` has no index-1
    /// term, or if the remainder still has a term at an index above
    /// `index_cap`.
    pub fn try_divide(&self, divisor: &Self, index_cap: u64) -> Result<Self> {
        let lead = divisor
            .coeffs
            .get(&1)
            .ok_or(Error::DivisionUndefined)?
            .clone();
        let mut remainder = self.clone();
        let mut quotient = Self::zero();
        while let Some((&n, c)) = remainder.coeffs.iter().next() {
            if n > index_cap {
                return Err(Error::NoFiniteQuotient { cap: index_cap });
            }
            let q = c / &lead;
            for (&m, b) in &divisor.coeffs {
                remainder.add_term(index_product(n, m), -(&q * b));
            }
            quotient.add_term(n, q);
        }
        Ok(quotient)
    }

    /// Primes dividing at least one index with a nonzero coefficient.
    pub fn prime_support(&self) -> BTreeSet<u64> {
        self.coeffs
            .keys()
            .flat_map(|&n| factorize(n).into_iter().map(|(p, _)| p))
            .collect()
    }

    /// `[[n, "num", "den"], …]`, sorted by `n`.
    pub fn to_json(&self) -> Value {
        Value::Array(
            self.coeffs
                .iter()
                .map(|(n, c)| json!([n, c.numer().to_string(), c.denom().to_string()]))
                .collect(),
        )
    }

    pub fn from_json(value: &Value) -> Result<Self> {
        let bad = |msg: &str| Error::Data(format!("Dirichlet JSON: {msg}"));
        let items = value.as_array().ok_or_else(|| bad("expected a list"))?;
        let mut p = Self::zero();
        for item in items {
            let triple = item
                .as_array()
                .filter(|t| t.len() == 3)
                .ok_or_else(|| bad("expected [n, num, den]"))?;
            let n = triple[0]
                .as_u64()
                .filter(|&n| n >= 1)
                .ok_or_else(|| bad("index must be a positive integer"))?;
            let part = |v: &Value| -> Result<BigInt> {
                v.as_str()
                    .ok_or_else(|| bad("numerator and denominator must be strings"))?
                    .parse()
                    .map_err(|_| bad("bad integer"))
            };
            let (num, den) = (part(&triple[1])?, part(&triple[2])?);
            if den.is_zero() {
                return Err(bad("zero denominator"));
            }
            p.add_term(n, BigRational::new(num, den));
        }
        Ok(p)
    }

    pub fn to_latex(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, (&n, c)) in self.coeffs.iter().enumerate() {
            let sign = if c.is_negative() { "-" } else { "+" };
            if i == 0 {
                if c.is_negative() {
                    out.push('-');
                }
            } else {
                out.push_str(&format!(" {sign} "));
            }
            let a = c.abs();
            let body = match (n, a.is_integer()) {
                (1, true) => a.numer().to_string(),
                (1, false) => format!("\\frac{{{}}}{{{}}}", a.numer(), a.denom()),
                (_, _) if a.is_one() => format!("\\frac{{1}}{{{n}^s}}"),
                (_, true) => format!("\\frac{{{}}}{{{n}^s}}", a.numer()),
                (_, false) => format!("\\frac{{{}}}{{{} \\cdot {n}^s}}", a.numer(), a.denom()),
            };
            out.push_str(&body);
        }
        out
    }

    /// Largest index with a nonzero coefficient.
    pub fn degree(&self) -> Option<u64> {
        self.coeffs.keys().next_back().copied()
    }
}

/// `"num/den"`, or `"num"` when the denominator is 1.
pub fn format_rational(q: &BigRational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Parses `"a"` or `"a/b"`.
pub fn parse_rational(text: &str) -> Result<BigRational> {
    let text = text.trim();
    let bad = || Error::parse(0, format!("expected a rational 'a' or 'a/b', got {text:?}"));
    let (num, den) = match text.split_once('/') {
        Some((a, b)) => (
            a.trim().parse::<BigInt>().map_err(|_| bad())?,
            b.trim().parse::<BigInt>().map_err(|_| bad())?,
        ),
        None => (text.parse::<BigInt>().map_err(|_| bad())?, BigInt::one()),
    };
    if den.is_zero() {
        return Err(bad());
    }
    Ok(BigRational::new(num, den))
}

pub fn rational_from_big(n: &BigUint) -> BigRational {
    BigRational::from_integer(BigInt::from(n.clone()))
}

impl fmt::Display for DirichletPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (&n, c)) in self.coeffs.iter().enumerate() {
            match (i, c.is_negative()) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let a = c.abs();
            match (n, a.is_one()) {
                (1, _) => write!(f, "{}", format_rational(&a))?,
                (_, true) => write!(f, "{n}^-s")?,
                (_, false) if a.is_integer() => write!(f, "{}*{n}^-s", format_rational(&a))?,
                (_, false) => write!(f, "({})*{n}^-s", format_rational(&a))?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for DirichletPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "DirichletPoly({self})")
    }
}

impl Add for &DirichletPoly {
    type Output = DirichletPoly;
    fn add(self, rhs: &DirichletPoly) -> DirichletPoly {
        let mut out = self.clone();
        for (&n, c) in &rhs.coeffs {
            out.add_term(n, c.clone());
        }
        out
    }
}

impl Neg for &DirichletPoly {
    type Output = DirichletPoly;
    fn neg(self) -> DirichletPoly {
        DirichletPoly {
            coeffs: self.coeffs.iter().map(|(&n, c)| (n, -c)).collect(),
        }
    }
}

impl Sub for &DirichletPoly {
    type Output = DirichletPoly;
    fn sub(self, rhs: &DirichletPoly) -> DirichletPoly {
        self + &(-rhs)
    }
}

impl Mul for &DirichletPoly {
    type Output = DirichletPoly;
    fn mul(self, rhs: &DirichletPoly) -> DirichletPoly {
        let mut out = DirichletPoly::zero();
        for (&a, x) in &self.coeffs {
            for (&b, y) in &rhs.coeffs {
                out.add_term(index_product(a, b), x * y);
            }
        }
        out
    }
}

impl std::iter::Product for DirichletPoly {
    fn product<I: Iterator<Item = DirichletPoly>>(iter: I) -> Self {
        iter.fold(DirichletPoly::one(), |acc, p| &acc * &p)
    }
}
