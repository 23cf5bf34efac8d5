use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::closed::closed_form_poincare;
use super::cohomology::{chen_ruan_poincare, Budget, Parallelism};
use super::group::Modulus;
use crate::error::{DiamondError, OrbifoldError};
use crate::fracpoly::FracPoly;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    /// Orbifold formula by enumeration.
    Brute,
    /// Closed-form generating polynomial.
    Closed,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Brute => "brute",
            Method::Closed => "closed",
        })
    }
}

/// The `(n+1) × (n+1)` grid `h^{p,q}`, row `p`, column `q`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HodgeDiamond {
    pub d: Modulus,
    pub n: usize,
    pub method: Method,
    entries: Vec<Vec<BigInt>>,
}

impl HodgeDiamond {
    /// Reads the integer-exponent coefficients of a Poincaré polynomial.
    /// Fractional terms are ignored when `allow_fractional` is set
    /// (closed forms carry them) and rejected otherwise.
    pub fn from_poincare(
        d: Modulus,
        n: usize,
        method: Method,
        poly: &FracPoly,
        allow_fractional: bool,
    ) -> Result<Self, DiamondError> {
        let mut entries = vec![vec![BigInt::zero(); n + 1]; n + 1];
        for (x, y, c) in poly.terms() {
            match (x.to_integer(), y.to_integer()) {
                (Some(p), Some(q)) => {
                    if p < 0 || q < 0 || p > n as i64 || q > n as i64 {
                        return Err(DiamondError::OutOfRange { x_num: x.0, y_num: y.0 });
                    }
                    entries[p as usize][q as usize] = c.clone();
                }
                _ if allow_fractional => {}
                _ => return Err(DiamondError::Fractional { x_num: x.0, y_num: y.0 }),
            }
        }
        Ok(HodgeDiamond { d, n, method, entries })
    }

    pub fn get(&self, p: usize, q: usize) -> &BigInt {
        &self.entries[p][q]
    }

    pub fn entries(&self) -> &[Vec<BigInt>] {
        &self.entries
    }

    pub fn euler(&self) -> BigInt {
        let mut e = BigInt::zero();
        for (p, row) in self.entries.iter().enumerate() {
            for (q, h) in row.iter().enumerate() {
                if (p + q) % 2 == 0 {
                    e += h;
                } else {
                    e -= h;
                }
            }
        }
        e
    }

    /// Checks nonnegativity, `h^{p,q} = h^{q,p}`, `h^{p,q} = h^{n-p,n-q}` and
    /// the Calabi–Yau boundary `h^{0,0} = h^{n,0} = 1`, `h^{j,0} = 0` for
    /// `0 < j < n`.
    pub fn validate(&self) -> Result<(), DiamondError> {
        let n = self.n;
        let s = |v: &BigInt| v.to_string();
        for p in 0..=n {
            for q in 0..=n {
                let h = &self.entries[p][q];
                if h.is_negative() {
                    return Err(DiamondError::Negative { p, q, value: s(h) });
                }
                if *h != self.entries[q][p] {
                    return Err(DiamondError::Symmetry { p, q, a: s(h), b: s(&self.entries[q][p]) });
                }
                let dual = &self.entries[n - p][n - q];
                if h != dual {
                    return Err(DiamondError::Duality { p, q, a: s(h), b: s(dual) });
                }
            }
        }
        for j in 0..=n {
            let expected = u32::from(j == 0 || j == n);
            let h = &self.entries[j][0];
            if *h != BigInt::from(expected) {
                return Err(DiamondError::CalabiYau { p: j, q: 0, value: s(h), expected });
            }
        }
        if !self.entries[n][n].is_one() {
            return Err(DiamondError::CalabiYau { p: n, q: n, value: s(&self.entries[n][n]), expected: 1 });
        }
        Ok(())
    }

    /// Entries where `self` and `other` differ, as `(p, q, self, other)`.
    pub fn diff(&self, other: &HodgeDiamond) -> Vec<(usize, usize, BigInt, BigInt)> {
        let mut out = Vec::new();
        for p in 0..=self.n.max(other.n) {
            for q in 0..=self.n.max(other.n) {
                let a = self.entries.get(p).and_then(|r| r.get(q)).cloned().unwrap_or_default();
                let b = other.entries.get(p).and_then(|r| r.get(q)).cloned().unwrap_or_default();
                if a != b {
                    out.push((p, q, a, b));
                }
            }
        }
        out
    }

    /// The usual diamond picture: row `k` holds `h^{k,0}, h^{k-1,1}, …, h^{0,k}`
    /// for `k = 0..2n`, centered.
    pub fn render(&self) -> String {
        let n = self.n;
        let rows: Vec<Vec<String>> = (0..=2 * n)
            .map(|k| {
                let lo = k.saturating_sub(n);
                let hi = k.min(n);
                (lo..=hi).rev().map(|p| self.entries[p][k - p].to_string()).collect()
            })
            .collect();
        let cell = rows.iter().flatten().map(String::len).max().unwrap_or(1) + 2;
        let width = cell * (n + 1);
        let mut out = String::new();
        for row in rows {
            let body: String = row.iter().map(|v| format!("{v:^cell$}")).collect();
            let pad = (width - body.len()) / 2;
            out.push_str(&" ".repeat(pad));
            out.push_str(body.trim_end());
            out.push('\n');
        }
        out
    }

    pub fn to_json(&self) -> DiamondJson {
        DiamondJson {
            d: self.d.get() as u32,
            n: self.n,
            method: self.method,
            entries: self.entries.iter().map(|row| row.iter().map(BigInt::to_string).collect()).collect(),
            euler: self.euler().to_string(),
        }
    }
}

/// Wire form of a diamond; entries are decimal strings, row `p`, column `q`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiamondJson {
    pub d: u32,
    pub n: usize,
    pub method: Method,
    pub entries: Vec<Vec<String>>,
    pub euler: String,
}

impl Serialize for HodgeDiamond {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.to_json().serialize(serializer)
    }
}

/// Computes and validates the diamond of `X_{d,n}`.
pub fn hodge_diamond(
    d: Modulus,
    n: usize,
    method: Method,
    budget: Budget,
    parallelism: Parallelism,
) -> Result<HodgeDiamond, OrbifoldError> {
    if n == 0 {
        return Err(OrbifoldError::ZeroDimension);
    }
    let diamond = match method {
        Method::Brute => {
            let poly = chen_ruan_poincare(d, n, budget, parallelism)?;
            HodgeDiamond::from_poincare(d, n, method, &poly, false)?
        }
        Method::Closed => {
            let poly = closed_form_poincare(d, n as u32);
            HodgeDiamond::from_poincare(d, n, method, &poly, true)?
        }
    };
    diamond.validate()?;
    Ok(diamond)
}
