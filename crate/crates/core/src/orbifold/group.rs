//! The groups `G_{d,n} = {(m_1, ..., m_n) ∈ Z_d^n : Σ m_i = 0}`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::OrbifoldError;
use crate::fracpoly::{FracExp, EXP_DENOM};

/// Order of the curve automorphism, one of 2, 3, 4, 6.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "u32", into = "u32")]
pub struct Modulus(u8);

impl Modulus {
    pub const ALL: [Modulus; 4] = [Modulus(2), Modulus(3), Modulus(4), Modulus(6)];

    pub fn new(d: u32) -> Result<Self, OrbifoldError> {
        match d {
            2 | 3 | 4 | 6 => Ok(Modulus(d as u8)),
            _ => Err(OrbifoldError::UnsupportedModulus(d)),
        }
    }

    pub fn get(self) -> u8 {
        self.0
    }

    pub fn as_usize(self) -> usize {
        self.0 as usize
    }
}

impl TryFrom<u32> for Modulus {
    type Error = OrbifoldError;

    fn try_from(d: u32) -> Result<Self, Self::Error> {
        Modulus::new(d)
    }
}

impl From<Modulus> for u32 {
    fn from(d: Modulus) -> u32 {
        d.0 as u32
    }
}

impl fmt::Display for Modulus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// An element of `G_{d,n}`: residues in `[0, d)` summing to `0 mod d`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupElement {
    d: Modulus,
    residues: Vec<u8>,
}

impl GroupElement {
    pub fn new(d: Modulus, residues: Vec<u8>) -> Result<Self, OrbifoldError> {
        let m = d.get();
        let residues: Vec<u8> = residues.into_iter().map(|r| r % m).collect();
        let sum: u32 = residues.iter().map(|&r| r as u32).sum();
        if !sum.is_multiple_of(m as u32) {
            return Err(OrbifoldError::NotInGroup { d: m, residues });
        }
        Ok(GroupElement { d, residues })
    }

    pub fn identity(d: Modulus, n: usize) -> Self {
        GroupElement { d, residues: vec![0; n] }
    }

    pub fn modulus(&self) -> Modulus {
        self.d
    }

    pub fn residues(&self) -> &[u8] {
        &self.residues
    }

    pub fn dimension(&self) -> usize {
        self.residues.len()
    }

    pub fn is_identity(&self) -> bool {
        self.residues.iter().all(|&r| r == 0)
    }

    /// Indices with nonzero residue.
    pub fn support(&self) -> Vec<usize> {
        (0..self.residues.len()).filter(|&i| self.residues[i] != 0).collect()
    }

    /// Indices with zero residue, the coordinates left free by `g`.
    pub fn free_coordinates(&self) -> Vec<usize> {
        (0..self.residues.len()).filter(|&i| self.residues[i] == 0).collect()
    }

    pub fn compose(&self, other: &GroupElement) -> GroupElement {
        let m = self.d.get();
        GroupElement {
            d: self.d,
            residues: self.residues.iter().zip(&other.residues).map(|(a, b)| (a + b) % m).collect(),
        }
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, r) in self.residues.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{r}")?;
        }
        write!(f, ")")
    }
}

/// All `d^(n-1)` elements of `G_{d,n}`, the first `n-1` residues running
/// through `Z_d^(n-1)` in lexicographic order.
pub fn enumerate_group(d: Modulus, n: usize) -> Result<Vec<GroupElement>, OrbifoldError> {
    if n == 0 {
        return Err(OrbifoldError::ZeroDimension);
    }
    let m = d.get();
    let count = (m as usize).pow(n as u32 - 1);
    let mut out = Vec::with_capacity(count);
    let mut head = vec![0u8; n - 1];
    for _ in 0..count {
        let s: u32 = head.iter().map(|&r| r as u32).sum();
        let last = ((m as u32 - s % m as u32) % m as u32) as u8;
        let mut residues = head.clone();
        residues.push(last);
        out.push(GroupElement { d, residues });
        for slot in head.iter_mut().rev() {
            *slot += 1;
            if *slot < m {
                break;
            }
            *slot = 0;
        }
    }
    Ok(out)
}

/// The generators `e_i - e_n`, `1 <= i < n`.
pub fn group_generators(d: Modulus, n: usize) -> Vec<GroupElement> {
    let m = d.get();
    (0..n.saturating_sub(1))
        .map(|i| {
            let mut residues = vec![0u8; n];
            residues[i] = 1;
            residues[n - 1] = m - 1;
            GroupElement { d, residues }
        })
        .collect()
}

/// `age(g) = (1/d) Σ g_i`, the age of the diagonal linearisation
/// `(ζ^{g_1}, ..., ζ^{g_n})`.
pub fn age(g: &GroupElement) -> FracExp {
    let sum: i64 = g.residues.iter().map(|&r| r as i64).sum();
    FracExp(sum * (EXP_DENOM / g.d.get() as i64))
}
