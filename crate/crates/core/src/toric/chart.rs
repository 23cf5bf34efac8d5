//! Affine charts of toric resolutions given as monomial maps.
//!
//! A chart with rows `M_1, ..., M_k` has coordinates `u_i = x^{M_i}`
//! (Laurent monomials in the ambient coordinates). Then
//! `du_1 ∧ ... ∧ du_k = det(M) · x^{colsum(M) - 1} dx_1 ∧ ... ∧ dx_k`, so
//! the chart is crepant when every column sums to 1; it covers the quotient
//! once when `|det M| = r`. Dually, the columns of `M^{-1}` are the rays of
//! the corresponding cone of the fan.

use std::fmt;

use num_rational::Rational64;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::linalg;
use super::quotient::CyclicQuotient;
use crate::error::ToricError;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Chart {
    pub label: String,
    pub rows: Vec<Vec<i64>>,
}

impl Chart {
    /// Builds a chart, checking that it is square and nonsingular.
    pub fn new(label: impl Into<String>, rows: Vec<Vec<i64>>) -> Result<Self, ToricError> {
        let chart = Chart { label: label.into(), rows };
        chart.check_shape()?;
        Ok(chart)
    }

    pub fn check_shape(&self) -> Result<(), ToricError> {
        let k = self.rows.len();
        for (row, r) in self.rows.iter().enumerate() {
            if r.len() != k {
                return Err(ToricError::NotSquare { label: self.label.clone(), row, len: r.len(), expected: k });
            }
        }
        if k == 0 || self.det() == 0 {
            return Err(ToricError::Singular { label: self.label.clone() });
        }
        Ok(())
    }

    pub fn dimension(&self) -> usize {
        self.rows.len()
    }

    pub fn det(&self) -> i64 {
        linalg::det(&self.rows)
    }

    pub fn column_sums(&self) -> Vec<i64> {
        let k = self.dimension();
        (0..k).map(|j| self.rows.iter().map(|r| r[j]).sum()).collect()
    }

    fn check_dimension(&self, q: &CyclicQuotient) -> Result<(), ToricError> {
        self.check_shape()?;
        if self.dimension() != q.dimension() {
            return Err(ToricError::DimensionMismatch {
                label: self.label.clone(),
                chart: self.dimension(),
                quotient: q.dimension(),
            });
        }
        Ok(())
    }
}

/// A point of `(1/r)·Z^k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Ray(pub Vec<Rational64>);

impl Ray {
    pub fn coords(&self) -> &[Rational64] {
        &self.0
    }

    pub fn coordinate_sum(&self) -> Rational64 {
        self.0.iter().copied().sum()
    }

    pub fn is_basis_vector(&self) -> bool {
        self.0.iter().filter(|c| c.is_one()).count() == 1
            && self.0.iter().filter(|c| c.is_zero()).count() == self.0.len() - 1
    }

    /// Membership in `Z^k + Z·(1/r)(a_1, ..., a_k)`.
    pub fn in_lattice(&self, q: &CyclicQuotient) -> bool {
        self.0.len() == q.dimension()
            && (0..q.r).any(|m| {
                q.element(m).iter().zip(&self.0).all(|(&e, c)| (c - Rational64::new(e as i64, q.r as i64)).is_integer())
            })
    }

    /// `r · self`, requiring integral entries.
    pub fn scaled(&self, r: u32) -> Option<Vec<i64>> {
        self.0
            .iter()
            .map(|c| {
                let s = c * Rational64::from_integer(r as i64);
                s.is_integer().then(|| s.to_integer())
            })
            .collect()
    }

    /// `[num, den]` pairs for the JSON schema.
    pub fn to_pairs(&self) -> Vec<[i64; 2]> {
        self.0.iter().map(|c| [*c.numer(), *c.denom()]).collect()
    }

    pub fn from_pairs(pairs: &[[i64; 2]]) -> Option<Ray> {
        pairs.iter().map(|&[n, d]| (d != 0).then(|| Rational64::new(n, d))).collect::<Option<Vec<_>>>().map(Ray)
    }
}

impl fmt::Display for Ray {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|c| c.to_string()).collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// Every chart coordinate must be a `ζ_r`-invariant monomial.
pub fn verify_chart_invariance(chart: &Chart, q: &CyclicQuotient) -> Result<(), ToricError> {
    chart.check_dimension(q)?;
    let r = q.r as i64;
    for (row, exps) in chart.rows.iter().enumerate() {
        let character: i64 = exps.iter().zip(&q.weights).map(|(&e, &a)| e * a as i64).sum();
        if character.rem_euclid(r) != 0 {
            return Err(ToricError::NotInvariant {
                label: chart.label.clone(),
                row,
                exponents: exps.clone(),
                character: character.rem_euclid(r),
                r: q.r,
            });
        }
    }
    Ok(())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrepancyReport {
    pub column_sums: Vec<i64>,
    pub det: i64,
}

/// Passes when every column sums to 1 and `|det| = r`.
pub fn verify_chart_crepancy(chart: &Chart, q: &CyclicQuotient) -> Result<CrepancyReport, ToricError> {
    chart.check_dimension(q)?;
    let column_sums = chart.column_sums();
    if let Some((column, &sum)) = column_sums.iter().enumerate().find(|(_, &s)| s != 1) {
        return Err(ToricError::ColumnSum { label: chart.label.clone(), column, sum });
    }
    let det = chart.det();
    if det.unsigned_abs() != q.r as u64 {
        return Err(ToricError::Determinant { label: chart.label.clone(), det: det.abs(), r: q.r });
    }
    Ok(CrepancyReport { column_sums, det })
}

/// Characters of the chart coordinates under a diagonal action with the
/// given ambient characters: `(M · chars) mod r`.
pub fn lift_action(chart: &Chart, ambient_chars: &[u32], r: u32) -> Vec<u32> {
    chart
        .rows
        .iter()
        .map(|row| {
            let s: i64 = row.iter().zip(ambient_chars).map(|(&e, &c)| e * c as i64).sum();
            s.rem_euclid(r as i64) as u32
        })
        .collect()
}

/// The rays of the cone dual to the chart: the columns of `M^{-1}`.
pub fn cone_from_chart(chart: &Chart, q: &CyclicQuotient) -> Result<Vec<Ray>, ToricError> {
    chart.check_dimension(q)?;
    let inv = linalg::inverse(&linalg::to_rational(&chart.rows))
        .ok_or_else(|| ToricError::Singular { label: chart.label.clone() })?;
    let k = chart.dimension();
    let rays: Vec<Ray> = (0..k).map(|j| Ray((0..k).map(|i| inv[i][j]).collect())).collect();
    for (i, ray) in rays.iter().enumerate() {
        if !ray.in_lattice(q) {
            return Err(ToricError::NotLatticePoint { label: chart.label.clone(), ray: i, point: ray.to_string() });
        }
    }
    Ok(rays)
}

/// Inverse of [`cone_from_chart`]: the chart whose rows are the dual basis of
/// the rays. Fails unless the rows come out integral.
pub fn chart_from_cone(label: impl Into<String>, rays: &[Ray]) -> Result<Chart, ToricError> {
    let label = label.into();
    let k = rays.len();
    let m: Vec<Vec<Rational64>> = (0..k).map(|i| rays.iter().map(|r| r.0[i]).collect()).collect();
    let inv = linalg::inverse(&m).ok_or_else(|| ToricError::Singular { label: label.clone() })?;
    let mut rows = Vec::with_capacity(k);
    for (i, row) in inv.iter().enumerate() {
        if let Some(c) = row.iter().find(|c| !c.is_integer()) {
            return Err(ToricError::NotLatticePoint { label, ray: i, point: c.to_string() });
        }
        rows.push(row.iter().map(|c| c.to_integer()).collect());
    }
    Chart::new(label, rows)
}
