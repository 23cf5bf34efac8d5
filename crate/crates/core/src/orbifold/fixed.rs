//! Fixed points of the powers `φ_d^k` on `E_d` and the fixed loci of
//! group elements acting on `E_d^n`.
//!
//! Points are symbolic labels; only the permutation that `φ_d` induces on
//! them matters for the orbit computations. Point `a` is the point at
//! infinity in every table and is fixed by every power.
//!
//! | d | curve           | `Fix(φ^k)`                                   | `φ` on fixed points |
//! |---|-----------------|----------------------------------------------|---------------------|
//! | 2 | any             | `a b c d` (2-torsion), k = 1                 | identity            |
//! | 3 | `y² = x³ + 1`   | `a`, `b = (0,1)`, `c = (0,-1)`, k = 1, 2     | identity            |
//! | 4 | `y² = x³ + x`   | k odd: `a`, `b = (0,0)`; k = 2: also `c = (i,0)`, `d = (-i,0)` | swaps `c d` |
//! | 6 | `y² = x³ + 1`   | k = 1, 5: `a`; k = 2, 4: `a b c`; k = 3: `a d e f` | `(b c)(d e f)` |

use super::group::{GroupElement, Modulus};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FixedPointTable {
    d: Modulus,
    names: Vec<&'static str>,
    /// `phi[p]` is the image of point `p` under `φ_d`.
    phi: Vec<u8>,
    /// `fixed[k]` lists `Fix(φ_d^k)` for `1 <= k < d`; `fixed[0]` is empty.
    fixed: Vec<Vec<u8>>,
}

impl FixedPointTable {
    pub fn for_modulus(d: Modulus) -> Self {
        let (names, phi, fixed): (Vec<&'static str>, Vec<u8>, Vec<Vec<u8>>) = match d.get() {
            2 => (vec!["a", "b", "c", "d"], vec![0, 1, 2, 3], vec![vec![], vec![0, 1, 2, 3]]),
            3 => (vec!["a", "b", "c"], vec![0, 1, 2], vec![vec![], vec![0, 1, 2], vec![0, 1, 2]]),
            4 => (vec!["a", "b", "c", "d"], vec![0, 1, 3, 2], vec![vec![], vec![0, 1], vec![0, 1, 2, 3], vec![0, 1]]),
            6 => (
                vec!["a", "b", "c", "d", "e", "f"],
                vec![0, 2, 1, 4, 5, 3],
                vec![vec![], vec![0], vec![0, 1, 2], vec![0, 3, 4, 5], vec![0, 1, 2], vec![0]],
            ),
            _ => unreachable!("Modulus only admits 2, 3, 4, 6"),
        };
        FixedPointTable { d, names, phi, fixed }
    }

    pub fn modulus(&self) -> Modulus {
        self.d
    }

    pub fn point_count(&self) -> usize {
        self.names.len()
    }

    pub fn name(&self, point: u8) -> &'static str {
        self.names[point as usize]
    }

    pub fn point_by_name(&self, name: &str) -> Option<u8> {
        self.names.iter().position(|&n| n == name).map(|p| p as u8)
    }

    /// `Fix(φ^k)`; for `k ≡ 0 mod d` this is the whole curve and the list is
    /// empty.
    pub fn fixed_points(&self, k: u8) -> &[u8] {
        &self.fixed[(k % self.d.get()) as usize]
    }

    /// `φ^k(point)`.
    pub fn phi_power(&self, k: u8, point: u8) -> u8 {
        let mut p = point;
        for _ in 0..(k % self.d.get()) {
            p = self.phi[p as usize];
        }
        p
    }

    pub fn phi(&self) -> &[u8] {
        &self.phi
    }
}

/// The fixed locus of `g` on `E^n`: one component `{x} × E^ℓ` per label
/// `x ∈ F(g) = Π_{i ∈ supp g} Fix(φ^{g_i})`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FixedLocus {
    pub g: GroupElement,
    pub support: Vec<usize>,
    pub free: Vec<usize>,
    /// Labels in lexicographic order; the identity has the single empty label.
    pub labels: Vec<Vec<u8>>,
}

impl FixedLocus {
    pub fn free_count(&self) -> usize {
        self.free.len()
    }
}

pub fn fixed_locus(g: &GroupElement, table: &FixedPointTable) -> FixedLocus {
    let support = g.support();
    let free = g.free_coordinates();
    let mut labels: Vec<Vec<u8>> = vec![Vec::new()];
    for &i in &support {
        let pts = table.fixed_points(g.residues()[i]);
        labels = labels
            .into_iter()
            .flat_map(|prefix| {
                pts.iter().map(move |&p| {
                    let mut l = prefix.clone();
                    l.push(p);
                    l
                })
            })
            .collect();
    }
    FixedLocus { g: g.clone(), support, free, labels }
}

/// Image of `label ∈ F(g)` under `h`: coordinate `i` of the support is moved
/// by `φ^{h_i}`.
pub fn act_on_labels(h: &GroupElement, g: &GroupElement, label: &[u8], table: &FixedPointTable) -> Vec<u8> {
    g.support().iter().zip(label).map(|(&i, &p)| table.phi_power(h.residues()[i], p)).collect()
}
