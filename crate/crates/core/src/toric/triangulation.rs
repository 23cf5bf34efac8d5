//! Simplicial fans subdividing the positive orthant, checked against the
//! quotient lattice `N = Z^k + Z·(1/r)(a_1, ..., a_k)`.

use num_integer::Integer;
use num_rational::Rational64;
use num_traits::Signed;

use super::chart::{cone_from_chart, Chart, Ray};
use super::linalg;
use super::quotient::CyclicQuotient;
use crate::error::ToricError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Triangulation {
    pub quotient: CyclicQuotient,
    pub cones: Vec<Vec<Ray>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TriangulationReport {
    pub cones: usize,
    /// Distinct rays, sorted.
    pub rays: Vec<Ray>,
    /// Sum of normalized volumes; equals `lattice_index` on success.
    pub total_volume: i64,
    /// `[N : Z^k]`, which is `r` whenever the weights generate `Z/r`.
    pub lattice_index: u32,
}

impl Triangulation {
    pub fn new(quotient: CyclicQuotient, cones: Vec<Vec<Ray>>) -> Self {
        Triangulation { quotient, cones }
    }

    /// The fan whose maximal cones are dual to the given charts.
    pub fn from_charts(quotient: CyclicQuotient, charts: &[Chart]) -> Result<Self, ToricError> {
        let cones = charts.iter().map(|c| cone_from_chart(c, &quotient)).collect::<Result<Vec<_>, _>>()?;
        Ok(Triangulation { quotient, cones })
    }

    /// The same fan with one maximal cone removed.
    pub fn without_cone(&self, index: usize) -> Self {
        let mut t = self.clone();
        t.cones.remove(index);
        t
    }
}

/// `[N : Z^k]`: the order of `(1/r)(a_1, ..., a_k)` modulo `Z^k`.
pub fn lattice_index(q: &CyclicQuotient) -> u32 {
    let g = q.weights.iter().fold(q.r, |g, &a| g.gcd(&a));
    q.r / g
}

/// Checks, in order: arity and lattice membership of every ray; junior
/// position (nonnegative, coordinate sum 1, unless a basis vector);
/// unimodularity; total normalized volume; pairwise disjoint interiors.
pub fn verify_triangulation(t: &Triangulation) -> Result<TriangulationReport, ToricError> {
    let q = &t.quotient;
    let k = q.dimension();
    if t.cones.is_empty() {
        return Err(ToricError::EmptyTriangulation);
    }
    let index = lattice_index(q);
    let mut scaled_cones: Vec<Vec<Vec<i64>>> = Vec::with_capacity(t.cones.len());
    let mut total = 0i64;
    for (ci, cone) in t.cones.iter().enumerate() {
        if cone.len() != k {
            return Err(ToricError::ConeArity { cone: ci, got: cone.len(), expected: k });
        }
        let mut scaled = Vec::with_capacity(k);
        for (ri, ray) in cone.iter().enumerate() {
            let Some(v) = ray.scaled(q.r).filter(|_| ray.in_lattice(q)) else {
                return Err(ToricError::RayNotInLattice { cone: ci, ray: ri, point: ray.to_string() });
            };
            let sum = ray.coordinate_sum();
            let nonneg = ray.coords().iter().all(|c| !c.is_negative());
            if !ray.is_basis_vector() && (!nonneg || sum != Rational64::from_integer(1)) {
                return Err(ToricError::NotJunior { cone: ci, ray: ri, point: ray.to_string(), sum: sum.to_string() });
            }
            scaled.push(v);
        }
        // det of the scaled rays is r^k det(rays); the normalized volume is
        // index · |det(rays)|.
        let volume = Rational64::new(linalg::det(&scaled).abs(), (q.r as i64).pow(k as u32))
            * Rational64::from_integer(index as i64);
        if volume != Rational64::from_integer(1) {
            return Err(ToricError::NotUnimodular { cone: ci, det: volume.to_string() });
        }
        total += 1;
        scaled_cones.push(scaled);
    }
    if total != index as i64 {
        return Err(ToricError::Coverage { total: total.to_string(), r: index });
    }
    for i in 0..scaled_cones.len() {
        for j in i + 1..scaled_cones.len() {
            if !separated(&scaled_cones[i], &scaled_cones[j]) {
                return Err(ToricError::Overlap { first: i, second: j });
            }
        }
    }
    let mut rays: Vec<Ray> = t.cones.iter().flatten().cloned().collect();
    rays.sort();
    rays.dedup();
    Ok(TriangulationReport { cones: t.cones.len(), rays, total_volume: total, lattice_index: index })
}

/// Whether two full-dimensional simplicial cones have disjoint interiors.
///
/// The functionals `w` with `w ≥ 0` on `a` and `w ≤ 0` on `b` form a pointed
/// polyhedral cone, so if it is nonzero it has an extreme ray orthogonal to
/// `k - 1` independent generators. Trying every such normal is an exact
/// test.
fn separated(a: &[Vec<i64>], b: &[Vec<i64>]) -> bool {
    let k = a.len();
    let all: Vec<&[i64]> = a.iter().chain(b).map(Vec::as_slice).collect();
    let dot = |w: &[i64], v: &[i64]| w.iter().zip(v).map(|(x, y)| (*x as i128) * (*y as i128)).sum::<i128>();
    let mut subset: Vec<usize> = (0..k - 1).collect();
    loop {
        let picked: Vec<&[i64]> = subset.iter().map(|&i| all[i]).collect();
        if let Some(w) = linalg::normal_vector(&picked) {
            for sign in [1i64, -1] {
                let w: Vec<i64> = w.iter().map(|x| x * sign).collect();
                if a.iter().all(|v| dot(&w, v) >= 0) && b.iter().all(|v| dot(&w, v) <= 0) {
                    return true;
                }
            }
        }
        if !next_combination(&mut subset, all.len()) {
            return false;
        }
    }
}

fn next_combination(c: &mut [usize], n: usize) -> bool {
    let k = c.len();
    if k == 0 {
        return false;
    }
    let mut i = k;
    while i > 0 {
        i -= 1;
        if c[i] != i + n - k {
            c[i] += 1;
            for j in i + 1..k {
                c[j] = c[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// True if every ray of `t` is either a basis vector or a junior element
/// representative; [`verify_triangulation`] assumes nothing about this.
pub fn rays_are_group_points(t: &Triangulation) -> bool {
    let q = &t.quotient;
    t.cones.iter().flatten().all(|ray| {
        ray.is_basis_vector()
            || (1..q.r).any(|m| {
                q.element(m).iter().zip(ray.coords()).all(|(&e, c)| *c == Rational64::new(e as i64, q.r as i64))
            })
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64, d: i64) -> Rational64 {
        Rational64::new(n, d)
    }

    fn ray(v: &[(i64, i64)]) -> Ray {
        Ray(v.iter().map(|&(n, d)| rat(n, d)).collect())
    }

    /// `1/3(1,2)`: rays e2, (1/3,2/3), (2/3,1/3), e1.
    fn a2() -> Triangulation {
        let q = CyclicQuotient::new(3, vec![1, 2]).unwrap();
        let e1 = ray(&[(1, 1), (0, 1)]);
        let e2 = ray(&[(0, 1), (1, 1)]);
        let p = ray(&[(1, 3), (2, 3)]);
        let s = ray(&[(2, 3), (1, 3)]);
        Triangulation::new(q, vec![vec![e2, p.clone()], vec![p, s.clone()], vec![s, e1]])
    }

    #[test]
    fn surface_fan_passes() {
        let rep = verify_triangulation(&a2()).unwrap();
        assert_eq!(rep.cones, 3);
        assert_eq!(rep.rays.len(), 4);
        assert_eq!(rep.total_volume, 3);
        assert!(rays_are_group_points(&a2()));
    }

    #[test]
    fn missing_cone_fails_coverage() {
        let t = a2().without_cone(1);
        assert_eq!(verify_triangulation(&t), Err(ToricError::Coverage { total: "2".into(), r: 3 }));
    }

    #[test]
    fn overlapping_cones_are_reported() {
        let mut t = a2();
        let extra = t.cones[0].clone();
        t.cones[2] = extra;
        assert_eq!(verify_triangulation(&t), Err(ToricError::Overlap { first: 0, second: 2 }));
    }

    #[test]
    fn non_unimodular_cone_is_reported() {
        let q = CyclicQuotient::new(3, vec![1, 2]).unwrap();
        let t = Triangulation::new(q, vec![vec![ray(&[(1, 1), (0, 1)]), ray(&[(0, 1), (1, 1)])]]);
        assert!(matches!(verify_triangulation(&t), Err(ToricError::NotUnimodular { cone: 0, .. })));
    }

    #[test]
    fn ray_errors() {
        let q = CyclicQuotient::new(3, vec![1, 2]).unwrap();
        let t = Triangulation::new(q.clone(), vec![vec![ray(&[(1, 2), (1, 2)]), ray(&[(0, 1), (1, 1)])]]);
        assert!(matches!(verify_triangulation(&t), Err(ToricError::RayNotInLattice { cone: 0, ray: 0, .. })));
        let t = Triangulation::new(q.clone(), vec![vec![ray(&[(4, 3), (2, 3)]), ray(&[(0, 1), (1, 1)])]]);
        assert!(matches!(verify_triangulation(&t), Err(ToricError::NotJunior { cone: 0, ray: 0, .. })));
        let t = Triangulation::new(q.clone(), vec![vec![ray(&[(0, 1), (1, 1)])]]);
        assert!(matches!(verify_triangulation(&t), Err(ToricError::ConeArity { got: 1, expected: 2, .. })));
        assert_eq!(verify_triangulation(&Triangulation::new(q, vec![])), Err(ToricError::EmptyTriangulation));
    }

    #[test]
    fn combinations() {
        let mut c = vec![0, 1];
        let mut seen = 1;
        while next_combination(&mut c, 4) {
            seen += 1;
        }
        assert_eq!(seen, 6);
    }

    #[test]
    fn index() {
        assert_eq!(lattice_index(&CyclicQuotient::new(6, vec![1, 1, 4]).unwrap()), 6);
        assert_eq!(lattice_index(&CyclicQuotient::new(6, vec![2, 2, 2]).unwrap()), 3);
    }
}
