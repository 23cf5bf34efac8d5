//! Sparse bivariate polynomials in `X`, `Y` with exponents in `(1/12)·Z`.
//!
//! Every fractional power that shows up in the Hodge generating functions
//! (sixth, fourth, cube and square roots of `XY`) has a denominator dividing
//! 12, so exponents are stored as numerators over the fixed denominator
//! [`EXP_DENOM`]. Coefficients are arbitrary precision integers.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::FracPolyError;

/// Common denominator of every exponent.
pub const EXP_DENOM: i64 = 12;

/// An exponent `numerator / 12`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FracExp(pub i64);

impl FracExp {
    pub const ZERO: FracExp = FracExp(0);

    /// The exponent `num / den`; `den` must divide 12.
    pub fn from_ratio(num: i64, den: i64) -> Option<FracExp> {
        if den == 0 || EXP_DENOM % den != 0 {
            return None;
        }
        Some(FracExp(num * (EXP_DENOM / den)))
    }

    pub fn from_integer(k: i64) -> FracExp {
        FracExp(k * EXP_DENOM)
    }

    pub fn numerator(self) -> i64 {
        self.0
    }

    pub fn is_integer(self) -> bool {
        self.0 % EXP_DENOM == 0
    }

    /// The integer value, if the exponent is integral.
    pub fn to_integer(self) -> Option<i64> {
        self.is_integer().then_some(self.0 / EXP_DENOM)
    }
}

impl Add for FracExp {
    type Output = FracExp;

    fn add(self, rhs: FracExp) -> FracExp {
        FracExp(self.0 + rhs.0)
    }
}

impl fmt::Display for FracExp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let g = num_integer::gcd(self.0, EXP_DENOM);
        let (n, d) = (self.0 / g, EXP_DENOM / g);
        if d == 1 {
            write!(f, "{n}")
        } else {
            write!(f, "{n}/{d}")
        }
    }
}

/// A finite sum `Σ c · X^a Y^b` with `a, b ∈ (1/12)·Z`.
///
/// Terms live in a `BTreeMap` keyed by `(x_exp, y_exp)`, so iteration and
/// serialization order is lexicographic and reproducible. No stored
/// coefficient is zero.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct FracPoly {
    terms: BTreeMap<(FracExp, FracExp), BigInt>,
}

impl FracPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(FracExp::ZERO, FracExp::ZERO, BigInt::one())
    }

    pub fn monomial(x: FracExp, y: FracExp, coeff: impl Into<BigInt>) -> Self {
        let mut p = Self::zero();
        p.add_term(x, y, coeff.into());
        p
    }

    pub fn x() -> Self {
        Self::monomial(FracExp::from_integer(1), FracExp::ZERO, 1)
    }

    pub fn y() -> Self {
        Self::monomial(FracExp::ZERO, FracExp::from_integer(1), 1)
    }

    /// `coeff · (XY)^(num/12)`.
    pub fn xy_power(num: i64, coeff: impl Into<BigInt>) -> Self {
        Self::monomial(FracExp(num), FracExp(num), coeff)
    }

    /// Builds a polynomial from `(x_num, y_num, coeff)` triples, merging
    /// repeated exponents.
    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, i64, C)>,
        C: Into<BigInt>,
    {
        let mut p = Self::zero();
        for (x, y, c) in terms {
            p.add_term(FracExp(x), FracExp(y), c.into());
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (FracExp, FracExp, &BigInt)> {
        self.terms.iter().map(|(&(x, y), c)| (x, y, c))
    }

    /// Adds `coeff · X^x Y^y` in place, dropping the slot if it cancels.
    pub fn add_term(&mut self, x: FracExp, y: FracExp, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        let key = (x, y);
        let cancelled = match self.terms.get_mut(&key) {
            Some(c) => {
                *c += coeff;
                c.is_zero()
            }
            None => {
                self.terms.insert(key, coeff);
                false
            }
        };
        if cancelled {
            self.terms.remove(&key);
        }
    }

    pub fn add_assign_ref(&mut self, other: &FracPoly) {
        for (&(x, y), c) in &other.terms {
            self.add_term(x, y, c.clone());
        }
    }

    pub fn add(&self, other: &FracPoly) -> FracPoly {
        let mut out = self.clone();
        out.add_assign_ref(other);
        out
    }

    pub fn mul(&self, other: &FracPoly) -> FracPoly {
        let mut out = FracPoly::zero();
        for (&(x1, y1), c1) in &self.terms {
            for (&(x2, y2), c2) in &other.terms {
                out.add_term(x1 + x2, y1 + y2, c1 * c2);
            }
        }
        out
    }

    /// Multiplies every exponent pair by `X^x Y^y`.
    pub fn shift(&self, x: FracExp, y: FracExp) -> FracPoly {
        FracPoly { terms: self.terms.iter().map(|(&(a, b), c)| ((a + x, b + y), c.clone())).collect() }
    }

    pub fn scale(&self, k: &BigInt) -> FracPoly {
        if k.is_zero() {
            return FracPoly::zero();
        }
        FracPoly { terms: self.terms.iter().map(|(&e, c)| (e, c * k)).collect() }
    }

    /// `self^n` by binary exponentiation; `pow(0)` is `1`.
    pub fn pow(&self, mut n: u32) -> FracPoly {
        let mut result = FracPoly::one();
        let mut base = self.clone();
        while n > 0 {
            if n & 1 == 1 {
                result = result.mul(&base);
            }
            n >>= 1;
            if n > 0 {
                base = base.mul(&base);
            }
        }
        result
    }

    /// The coefficient of `X^p Y^q` for integers `p, q`.
    pub fn coefficient(&self, p: i64, q: i64) -> BigInt {
        self.terms.get(&(FracExp::from_integer(p), FracExp::from_integer(q))).cloned().unwrap_or_default()
    }

    /// Keeps only the terms whose exponents are both integers.
    pub fn integer_part(&self) -> FracPoly {
        FracPoly {
            terms: self
                .terms
                .iter()
                .filter(|((x, y), _)| x.is_integer() && y.is_integer())
                .map(|(&e, c)| (e, c.clone()))
                .collect(),
        }
    }

    pub fn has_only_integer_exponents(&self) -> bool {
        self.terms.keys().all(|(x, y)| x.is_integer() && y.is_integer())
    }

    pub fn has_negative_exponent(&self) -> bool {
        self.terms.keys().any(|(x, y)| x.0 < 0 || y.0 < 0)
    }

    /// Evaluates at `X = Y = -1`, i.e. `Σ (-1)^(p+q) · h^{p,q}`.
    ///
    /// Fails if any term has a fractional exponent, because such a
    /// polynomial is not a Hodge generating function.
    pub fn integer_part_euler(&self) -> Result<BigInt, FracPolyError> {
        let mut total = BigInt::zero();
        for (&(x, y), c) in &self.terms {
            match (x.to_integer(), y.to_integer()) {
                (Some(p), Some(q)) => {
                    if (p + q).rem_euclid(2) == 0 {
                        total += c;
                    } else {
                        total -= c;
                    }
                }
                _ => return Err(FracPolyError::FractionalExponent { x_num: x.0, y_num: y.0 }),
            }
        }
        Ok(total)
    }

    /// Largest integer exponent of `X` or `Y` among integral terms.
    pub fn max_integer_degree(&self) -> Option<i64> {
        self.terms.keys().filter_map(|(x, y)| Some(x.to_integer()?.max(y.to_integer()?))).max()
    }
}

impl Add for &FracPoly {
    type Output = FracPoly;

    fn add(self, rhs: &FracPoly) -> FracPoly {
        FracPoly::add(self, rhs)
    }
}

impl Mul for &FracPoly {
    type Output = FracPoly;

    fn mul(self, rhs: &FracPoly) -> FracPoly {
        FracPoly::mul(self, rhs)
    }
}

impl std::iter::Sum for FracPoly {
    fn sum<I: Iterator<Item = FracPoly>>(iter: I) -> FracPoly {
        iter.fold(FracPoly::zero(), |mut acc, p| {
            acc.add_assign_ref(&p);
            acc
        })
    }
}

impl fmt::Display for FracPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (&(x, y), c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            let has_var = x != FracExp::ZERO || y != FracExp::ZERO;
            if !mag.is_one() || !has_var {
                write!(f, "{mag}")?;
            }
            for (name, e) in [("X", x), ("Y", y)] {
                match e {
                    FracExp::ZERO => {}
                    e if e == FracExp::from_integer(1) => write!(f, "{name}")?,
                    e => write!(f, "{name}^({e})")?,
                }
            }
        }
        Ok(())
    }
}

/// One serialized term: exponent numerators over 12 and a decimal
/// coefficient.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermRecord {
    pub xnum: i64,
    pub ynum: i64,
    pub coeff: String,
}

impl FracPoly {
    pub fn to_records(&self) -> Vec<TermRecord> {
        self.terms.iter().map(|(&(x, y), c)| TermRecord { xnum: x.0, ynum: y.0, coeff: c.to_string() }).collect()
    }

    pub fn from_records(records: &[TermRecord]) -> Result<FracPoly, FracPolyError> {
        let mut p = FracPoly::zero();
        for r in records {
            let c: BigInt = r.coeff.parse().map_err(|_| FracPolyError::BadCoefficient(r.coeff.clone()))?;
            p.add_term(FracExp(r.xnum), FracExp(r.ynum), c);
        }
        Ok(p)
    }
}

impl Serialize for FracPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.to_records().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for FracPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let records = Vec::<TermRecord>::deserialize(deserializer)?;
        FracPoly::from_records(&records).map_err(serde::de::Error::custom)
    }
}
