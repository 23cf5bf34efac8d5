//! Brute-force Chen–Ruan cohomology of `E_d^n / G_{d,n}`.
//!
//! For every `g ∈ G_{d,n}` the fixed locus splits into components
//! `{x} × E^ℓ`, `x ∈ F(g)`. The group permutes the labels; for one
//! representative per orbit the stabilizer is projected onto the `ℓ` free
//! coordinates and the invariant part of `H^{*,*}(E^ℓ)` under that
//! projection is counted. Each orbit then contributes
//! `(XY)^{age(g)} Σ dims[i][j] X^i Y^j`.

use std::collections::{BTreeSet, HashMap, HashSet};

use rayon::prelude::*;

use super::fixed::{fixed_locus, FixedLocus, FixedPointTable};
use super::group::{age, enumerate_group, group_generators, GroupElement, Modulus};
use crate::error::OrbifoldError;
use crate::fracpoly::{FracExp, FracPoly};

/// Largest `n` for which the group and label sets are enumerated.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Budget {
    max_dimension: Option<usize>,
}

impl Budget {
    /// Default limits: `n <= 6` for `d <= 4`, `n <= 5` for `d = 6`.
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_max_dimension(n: usize) -> Self {
        Budget { max_dimension: Some(n) }
    }

    pub fn max_dimension(&self, d: Modulus) -> usize {
        self.max_dimension
            .unwrap_or(if d.get() == 6 { 5 } else { 6 })
            // labels are packed three bits per coordinate into a u64
            .min(21)
    }

    pub fn check(&self, d: Modulus, n: usize) -> Result<(), OrbifoldError> {
        let max_n = self.max_dimension(d);
        if n > max_n {
            return Err(OrbifoldError::BudgetExceeded { d: d.get(), n, max_n });
        }
        Ok(())
    }
}

/// How the sum over group elements is scheduled.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Parallelism {
    Sequential,
    /// Rayon's global pool.
    #[default]
    Global,
    /// A dedicated pool with this many threads.
    Threads(usize),
}

/// One orbit of `G_{d,n}` on `F(g)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitInfo {
    pub representative: Vec<u8>,
    pub size: usize,
    pub stabilizer_order: usize,
    /// Distinct restrictions of stabilizer elements to the free coordinates,
    /// sorted.
    pub stabilizer_projection: Vec<Vec<u8>>,
}

/// `dims[i][j]` = number of pairs `(S, T)` of subsets of `{0..ℓ}` with
/// `|S| = i`, `|T| = j` such that `Σ_S h − Σ_T h ≡ 0 mod d` for every
/// character vector `h`. This is the dimension of the invariant part of
/// `H^{i,j}(E^ℓ)`, spanned by `dz_S ∧ dz̄_T`.
pub fn invariant_cohomology_dims(chars: &[Vec<u8>], ell: usize, d: u8) -> Vec<Vec<u64>> {
    let masks = 1usize << ell;
    let m = d as u32;
    // sums[c][mask] = Σ_{s ∈ mask} chars[c][s] mod d
    let sums: Vec<Vec<u32>> = chars
        .iter()
        .map(|h| {
            let mut s = vec![0u32; masks];
            for mask in 1..masks {
                let low = mask.trailing_zeros() as usize;
                s[mask] = (s[mask & (mask - 1)] + h[low] as u32) % m;
            }
            s
        })
        .collect();
    let mut dims = vec![vec![0u64; ell + 1]; ell + 1];
    for s_mask in 0..masks {
        for t_mask in 0..masks {
            if sums.iter().all(|s| s[s_mask] == s[t_mask]) {
                dims[s_mask.count_ones() as usize][t_mask.count_ones() as usize] += 1;
            }
        }
    }
    dims
}

/// A generating set of the subgroup of `Z_d^ℓ` spanned by `elements`,
/// chosen greedily in input order.
pub fn span_generators(elements: &[Vec<u8>], d: u8) -> Vec<Vec<u8>> {
    let Some(first) = elements.first() else {
        return Vec::new();
    };
    let ell = first.len();
    let mut span: HashSet<Vec<u8>> = HashSet::from([vec![0u8; ell]]);
    let mut gens = Vec::new();
    for e in elements {
        if span.contains(e) {
            continue;
        }
        gens.push(e.clone());
        let mut next = HashSet::with_capacity(span.len() * d as usize);
        for s in &span {
            let mut cur = s.clone();
            for _ in 0..d {
                for (c, x) in cur.iter_mut().zip(e) {
                    *c = (*c + x) % d;
                }
                next.insert(cur.clone());
            }
        }
        span = next;
    }
    gens
}

/// Enumeration context for one pair `(d, n)`.
#[derive(Clone, Debug)]
pub struct OrbifoldModel {
    d: Modulus,
    n: usize,
    table: FixedPointTable,
    group: Vec<GroupElement>,
    generators: Vec<GroupElement>,
}

impl OrbifoldModel {
    pub fn new(d: Modulus, n: usize, budget: Budget) -> Result<Self, OrbifoldError> {
        if n == 0 {
            return Err(OrbifoldError::ZeroDimension);
        }
        budget.check(d, n)?;
        Ok(OrbifoldModel {
            d,
            n,
            table: FixedPointTable::for_modulus(d),
            group: enumerate_group(d, n)?,
            generators: group_generators(d, n),
        })
    }

    pub fn modulus(&self) -> Modulus {
        self.d
    }

    pub fn dimension(&self) -> usize {
        self.n
    }

    pub fn table(&self) -> &FixedPointTable {
        &self.table
    }

    pub fn group(&self) -> &[GroupElement] {
        &self.group
    }

    pub fn fixed_locus(&self, g: &GroupElement) -> FixedLocus {
        fixed_locus(g, &self.table)
    }

    fn pack(label: &[u8]) -> u64 {
        label.iter().fold(0u64, |acc, &p| (acc << 3) | p as u64)
    }

    fn act(&self, h: &GroupElement, support: &[usize], label: &[u8]) -> Vec<u8> {
        support.iter().zip(label).map(|(&i, &p)| self.table.phi_power(h.residues()[i], p)).collect()
    }

    /// Orbits of `G_{d,n}` on `F(g)` in order of their smallest label, with
    /// the stabilizer of each smallest label projected onto the free
    /// coordinates.
    pub fn orbits_and_stabilizers(&self, g: &GroupElement) -> Vec<OrbitInfo> {
        let locus = self.fixed_locus(g);
        let support = &locus.support;
        let mut visited: HashSet<u64> = HashSet::with_capacity(locus.labels.len());
        let mut orbits = Vec::new();
        for label in &locus.labels {
            if !visited.insert(Self::pack(label)) {
                continue;
            }
            let mut queue = vec![label.clone()];
            let mut size = 0;
            while let Some(x) = queue.pop() {
                size += 1;
                for h in &self.generators {
                    let y = self.act(h, support, &x);
                    if visited.insert(Self::pack(&y)) {
                        queue.push(y);
                    }
                }
            }
            let mut projection = BTreeSet::new();
            let mut stabilizer_order = 0;
            for h in &self.group {
                if self.act(h, support, label) == *label {
                    stabilizer_order += 1;
                    projection.insert(locus.free.iter().map(|&i| h.residues()[i]).collect::<Vec<u8>>());
                }
            }
            debug_assert_eq!(size * stabilizer_order, self.group.len());
            orbits.push(OrbitInfo {
                representative: label.clone(),
                size,
                stabilizer_order,
                stabilizer_projection: projection.into_iter().collect(),
            });
        }
        orbits
    }

    /// The summand of `g` in the orbifold formula.
    pub fn contribution(&self, g: &GroupElement) -> FracPoly {
        let shift = age(g);
        let ell = self.n - g.support().len();
        let mut cache: HashMap<Vec<Vec<u8>>, Vec<Vec<u64>>> = HashMap::new();
        let mut out = FracPoly::zero();
        for orbit in self.orbits_and_stabilizers(g) {
            let dims = cache.entry(orbit.stabilizer_projection.clone()).or_insert_with(|| {
                let gens = span_generators(&orbit.stabilizer_projection, self.d.get());
                invariant_cohomology_dims(&gens, ell, self.d.get())
            });
            for (i, row) in dims.iter().enumerate() {
                for (j, &c) in row.iter().enumerate() {
                    if c > 0 {
                        out.add_term(
                            FracExp::from_integer(i as i64) + shift,
                            FracExp::from_integer(j as i64) + shift,
                            c.into(),
                        );
                    }
                }
            }
        }
        out
    }

    /// The Chen–Ruan Poincaré polynomial `Σ_g contribution(g)`.
    pub fn chen_ruan_poincare(&self, parallelism: Parallelism) -> Result<FracPoly, OrbifoldError> {
        let parts: Vec<FracPoly> = match parallelism {
            Parallelism::Sequential => self.group.iter().map(|g| self.contribution(g)).collect(),
            Parallelism::Global => self.group.par_iter().map(|g| self.contribution(g)).collect(),
            Parallelism::Threads(k) => {
                let pool =
                    rayon::ThreadPoolBuilder::new().num_threads(k.max(1)).build().expect("failed to build thread pool");
                pool.install(|| self.group.par_iter().map(|g| self.contribution(g)).collect())
            }
        };
        Ok(parts.into_iter().sum())
    }
}

pub fn orbits_and_stabilizers(g: &GroupElement, budget: Budget) -> Result<Vec<OrbitInfo>, OrbifoldError> {
    let model = OrbifoldModel::new(g.modulus(), g.dimension(), budget)?;
    Ok(model.orbits_and_stabilizers(g))
}

pub fn chen_ruan_poincare(
    d: Modulus,
    n: usize,
    budget: Budget,
    parallelism: Parallelism,
) -> Result<FracPoly, OrbifoldError> {
    OrbifoldModel::new(d, n, budget)?.chen_ruan_poincare(parallelism)
}
