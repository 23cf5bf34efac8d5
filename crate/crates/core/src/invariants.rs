//! Invariant monomials of diagonal abelian group actions.
//!
//! An action is given by its generators, each a vector of characters: the
//! generator `g` multiplies variable `j` by `ζ_d^{g_j}`. A monomial is then
//! invariant exactly when its exponent vector pairs to zero mod `d` with
//! every generator.
//!
//! The curves `y² + y = x³` (order 3, `ζ` acting on `x` only) and
//! `y² = x³ - x` (order 4, `(x, y) ↦ (-x, iy)`) give the two families of
//! actions used throughout. Variables are ordered `x_1, ..., x_n, y_1, ...,
//! y_n`.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::InvariantsError;

/// Default cap on the number of monomials an enumeration may visit.
pub const DEFAULT_MONOMIAL_CAP: u128 = 20_000_000;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiagonalAction {
    pub d: u32,
    pub vars: usize,
    pub generators: Vec<Vec<u32>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub names: Option<Vec<String>>,
}

impl DiagonalAction {
    pub fn new(d: u32, vars: usize, generators: Vec<Vec<u32>>) -> Result<Self, InvariantsError> {
        let a = DiagonalAction { d, vars, generators, names: None };
        a.validate()?;
        Ok(a.reduced())
    }

    pub fn with_names(mut self, names: Vec<String>) -> Self {
        assert_eq!(names.len(), self.vars, "one name per variable");
        self.names = Some(names);
        self
    }

    /// Re-checks the invariants; needed after deserializing.
    pub fn validate(&self) -> Result<(), InvariantsError> {
        if self.d == 0 {
            return Err(InvariantsError::ZeroModulus);
        }
        if self.generators.is_empty() {
            return Err(InvariantsError::NoGenerators);
        }
        for (index, g) in self.generators.iter().enumerate() {
            if g.len() != self.vars {
                return Err(InvariantsError::GeneratorLength { index, len: g.len(), vars: self.vars });
            }
        }
        if let Some(names) = &self.names {
            if names.len() != self.vars {
                return Err(InvariantsError::MonomialLength { got: names.len(), vars: self.vars });
            }
        }
        Ok(())
    }

    fn reduced(mut self) -> Self {
        let d = self.d;
        for g in &mut self.generators {
            for c in g.iter_mut() {
                *c %= d;
            }
        }
        self
    }

    /// `G_i` on `(x_1..x_n, y_1..y_n)`: generator `k < n` has weight 1 on
    /// `x_k` and `i` on `x_n`; the `y` variables are fixed.
    pub fn g_family(n: usize, i: u32) -> Self {
        let gens = (0..n.saturating_sub(1))
            .map(|k| {
                let mut g = vec![0; 2 * n];
                g[k] = 1;
                g[n - 1] = (g[n - 1] + i) % 3;
                g
            })
            .collect();
        DiagonalAction { d: 3, vars: 2 * n, generators: gens, names: None }.with_names(xy_names(n))
    }

    /// `G_i` restricted to `x_1, ..., x_n`.
    pub fn g_family_x_only(n: usize, i: u32) -> Self {
        let gens = (0..n.saturating_sub(1))
            .map(|k| {
                let mut g = vec![0; n];
                g[k] = 1;
                g[n - 1] = (g[n - 1] + i) % 3;
                g
            })
            .collect();
        DiagonalAction { d: 3, vars: n, generators: gens, names: None }.with_names(x_names(n))
    }

    /// `H_i` on `(x_1..x_n, y_1..y_n)`: `τ` has character 2 on `x` and 1 on
    /// `y`; generator `k < n` is `τ` on factor `k` and `τ^i` on factor `n`.
    pub fn h_family(n: usize, i: u32) -> Self {
        let gens = (0..n.saturating_sub(1))
            .map(|k| {
                let mut g = vec![0; 2 * n];
                g[k] = 2;
                g[n + k] = 1;
                g[n - 1] = (g[n - 1] + 2 * i) % 4;
                g[2 * n - 1] = (g[2 * n - 1] + i) % 4;
                g
            })
            .collect();
        DiagonalAction { d: 4, vars: 2 * n, generators: gens, names: None }.with_names(xy_names(n))
    }

    /// The trivial action of the trivial group.
    pub fn trivial(vars: usize) -> Self {
        DiagonalAction { d: 1, vars, generators: vec![vec![0; vars]], names: None }
    }

    pub fn name(&self, j: usize) -> String {
        match &self.names {
            Some(names) => names[j].clone(),
            None => format!("v{}", j + 1),
        }
    }

    pub fn variable_index(&self, name: &str) -> Option<usize> {
        (0..self.vars).find(|&j| self.name(j) == name)
    }

    /// `Σ_j m_j g_j mod d` for every generator `g`.
    pub fn characters(&self, m: &Monomial) -> Vec<u32> {
        let d = self.d as i64;
        self.generators
            .iter()
            .map(|g| {
                let s: i64 = g.iter().zip(&m.0).map(|(&c, &e)| c as i64 * e).sum();
                s.mod_floor(&d) as u32
            })
            .collect()
    }

    pub fn check_length(&self, m: &Monomial) -> Result<(), InvariantsError> {
        if m.0.len() != self.vars {
            return Err(InvariantsError::MonomialLength { got: m.0.len(), vars: self.vars });
        }
        Ok(())
    }

    pub fn render(&self, m: &Monomial) -> String {
        m.render(|j| self.name(j))
    }
}

fn x_names(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("x{i}")).collect()
}

fn xy_names(n: usize) -> Vec<String> {
    let mut v = x_names(n);
    v.extend((1..=n).map(|i| format!("y{i}")));
    v
}

/// Exponent vector of a (Laurent) monomial.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Monomial(pub Vec<i64>);

impl Monomial {
    pub fn one(vars: usize) -> Self {
        Monomial(vec![0; vars])
    }

    pub fn var(vars: usize, j: usize) -> Self {
        let mut m = Self::one(vars);
        m.0[j] = 1;
        m
    }

    pub fn exponents(&self) -> &[i64] {
        &self.0
    }

    pub fn degree(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn is_polynomial(&self) -> bool {
        self.0.iter().all(|&e| e >= 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn pow(&self, k: i64) -> Monomial {
        Monomial(self.0.iter().map(|a| a * k).collect())
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn div(&self, other: &Monomial) -> Monomial {
        self.mul(&other.pow(-1))
    }

    /// `x1*x2^2/x3`-style rendering; `1` for the constant.
    pub fn render(&self, name: impl Fn(usize) -> String) -> String {
        let part = |neg: bool| -> Vec<String> {
            self.0
                .iter()
                .enumerate()
                .filter(|(_, &e)| if neg { e < 0 } else { e > 0 })
                .map(|(j, &e)| match e.abs() {
                    1 => name(j),
                    k => format!("{}^{k}", name(j)),
                })
                .collect()
        };
        let (num, den) = (part(false), part(true));
        let num = if num.is_empty() { "1".to_string() } else { num.join("*") };
        match den.len() {
            0 => num,
            1 => format!("{num}/{}", den[0]),
            _ => format!("{num}/({})", den.join("*")),
        }
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(|j| format!("v{}", j + 1)))
    }
}

/// # Panics
/// If the monomial length differs from the number of variables.
pub fn is_invariant(m: &Monomial, a: &DiagonalAction) -> bool {
    assert_eq!(m.0.len(), a.vars, "monomial length must match the action");
    a.characters(m).iter().all(|&c| c == 0)
}

/// `C(max_degree + vars, vars)`, the number of monomials of degree at most
/// `max_degree`.
pub fn monomial_count(vars: usize, max_degree: u32) -> u128 {
    let mut c: u128 = 1;
    for i in 1..=vars as u128 {
        c = c.saturating_mul(max_degree as u128 + i) / i;
    }
    c
}

fn check_budget(vars: usize, max_degree: u32, cap: u128) -> Result<(), InvariantsError> {
    let count = monomial_count(vars, max_degree);
    if count > cap {
        return Err(InvariantsError::BudgetExceeded { count, cap });
    }
    Ok(())
}

/// All exponent vectors of total degree `deg` in `vars` variables, with
/// `x_1`-heavy vectors first.
fn monomials_of_degree(vars: usize, deg: u32) -> Vec<Monomial> {
    fn rec(out: &mut Vec<Monomial>, cur: &mut Vec<i64>, left: i64, vars: usize) {
        if cur.len() + 1 == vars {
            cur.push(left);
            out.push(Monomial(cur.clone()));
            cur.pop();
            return;
        }
        for e in (0..=left).rev() {
            cur.push(e);
            rec(out, cur, left - e, vars);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if vars == 0 {
        if deg == 0 {
            out.push(Monomial(vec![]));
        }
        return out;
    }
    rec(&mut out, &mut Vec::with_capacity(vars), deg as i64, vars);
    out
}

/// Invariant monomials of degree `1..=max_degree`, ordered by degree.
fn invariant_monomials(a: &DiagonalAction, max_degree: u32) -> impl Iterator<Item = Monomial> + '_ {
    (1..=max_degree).flat_map(move |deg| monomials_of_degree(a.vars, deg).into_iter().filter(|m| is_invariant(m, a)))
}

/// Minimal generators of the invariant semigroup among monomials of degree
/// at most `max_degree`, ordered by degree.
pub fn generators_up_to_degree(
    a: &DiagonalAction,
    max_degree: u32,
    cap: Option<u128>,
) -> Result<Vec<Monomial>, InvariantsError> {
    a.validate()?;
    check_budget(a.vars, max_degree, cap.unwrap_or(DEFAULT_MONOMIAL_CAP))?;
    let mut gens: Vec<Monomial> = Vec::new();
    for m in invariant_monomials(a, max_degree) {
        if !gens.iter().any(|g| g.divides(&m)) {
            gens.push(m);
        }
    }
    Ok(gens)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GeneratorCheck {
    /// Invariant monomials of degree `1..=max_degree` examined.
    pub checked: usize,
    pub max_degree: u32,
}

/// Membership of invariant monomials in the semigroup generated by `claimed`,
/// decided degree by degree: `m` is generated iff some claimed `c` divides it
/// with `m / c` generated.
struct Membership<'a> {
    claimed: Vec<&'a Monomial>,
    known: HashMap<Monomial, bool>,
}

impl<'a> Membership<'a> {
    fn new(claimed: &'a [Monomial]) -> Self {
        Membership { claimed: claimed.iter().filter(|c| !c.is_one()).collect(), known: HashMap::new() }
    }

    /// Requires every invariant proper divisor of `m` to have been decided.
    fn decide(&mut self, m: &Monomial) -> bool {
        let generated = self.claimed.iter().any(|c| {
            if !c.divides(m) {
                return false;
            }
            let rest = m.div(c);
            rest.is_one() || self.known.get(&rest).copied().unwrap_or(false)
        });
        self.known.insert(m.clone(), generated);
        generated
    }
}

/// Passes iff every claimed monomial is invariant and every invariant
/// monomial of degree at most `max_degree` is a product of claimed ones.
/// The first failure is returned as the witness.
pub fn verify_generator_list(
    a: &DiagonalAction,
    claimed: &[Monomial],
    max_degree: u32,
    cap: Option<u128>,
) -> Result<GeneratorCheck, InvariantsError> {
    a.validate()?;
    for c in claimed {
        a.check_length(c)?;
        if !c.is_polynomial() || !is_invariant(c, a) {
            return Err(InvariantsError::ClaimedNotInvariant { monomial: a.render(c) });
        }
    }
    check_budget(a.vars, max_degree, cap.unwrap_or(DEFAULT_MONOMIAL_CAP))?;
    let mut membership = Membership::new(claimed);
    let mut checked = 0;
    for m in invariant_monomials(a, max_degree) {
        checked += 1;
        if !membership.decide(&m) {
            return Err(InvariantsError::NotGenerated { monomial: a.render(&m) });
        }
    }
    Ok(GeneratorCheck { checked, max_degree })
}

/// The minimal generators (up to `max_degree`) that the claimed list fails
/// to produce. Empty iff [`verify_generator_list`] would pass, given the
/// claimed monomials are invariant.
pub fn missing_generators(
    a: &DiagonalAction,
    claimed: &[Monomial],
    max_degree: u32,
    cap: Option<u128>,
) -> Result<Vec<Monomial>, InvariantsError> {
    let gens = generators_up_to_degree(a, max_degree, cap)?;
    let mut membership = Membership::new(claimed);
    let mut missing = Vec::new();
    let gen_set: HashSet<&Monomial> = gens.iter().collect();
    for m in invariant_monomials(a, max_degree) {
        if !membership.decide(&m) && gen_set.contains(&m) {
            missing.push(m);
        }
    }
    Ok(missing)
}

// Named generator lists.

fn prod(vars: usize, factors: &[(usize, i64)]) -> Monomial {
    let mut m = Monomial::one(vars);
    for &(j, e) in factors {
        m.0[j] += e;
    }
    m
}

/// Indices of `x_1..x_{n-1}` and `y_1..y_{n-1}` with exponent `e`.
fn xs(n: usize, e: i64) -> Vec<(usize, i64)> {
    (0..n - 1).map(|k| (k, e)).collect()
}

fn ys(n: usize, e: i64) -> Vec<(usize, i64)> {
    (0..n - 1).map(|k| (n + k, e)).collect()
}

fn concat(parts: &[Vec<(usize, i64)>]) -> Vec<(usize, i64)> {
    parts.concat()
}

/// `y_1, ..., y_n, x_1⋯x_{n-1}x_n², x_1²⋯x_{n-1}²x_n`, the generators of the
/// `G_1`-invariant coordinate ring once the curve equation has eliminated
/// the cubes `x_i³ = y_i² + y_i`.
pub fn g1_displayed_generators(n: usize) -> Vec<Monomial> {
    let v = 2 * n;
    let xn = n - 1;
    let mut out: Vec<Monomial> = (0..n).map(|k| Monomial::var(v, n + k)).collect();
    out.push(prod(v, &concat(&[xs(n, 1), vec![(xn, 2)]])));
    out.push(prod(v, &concat(&[xs(n, 2), vec![(xn, 1)]])));
    out
}

/// [`g1_displayed_generators`] together with the pure cubes `x_i³`; this is
/// the generating set of the free invariant semigroup.
pub fn g1_generators_with_cubes(n: usize) -> Vec<Monomial> {
    let v = 2 * n;
    let mut out = g1_displayed_generators(n);
    out.extend((0..n).map(|k| prod(v, &[(k, 3)])));
    out
}

/// The `H_1`-invariants with every `a_i + a_n` even:
/// `y_i⁴, y_1⋯y_{n-1}y_n³, y_1³⋯y_{n-1}³y_n, x_i², x_1⋯x_n`.
pub fn h1_even_generators(n: usize) -> Vec<Monomial> {
    let v = 2 * n;
    let (xn, yn) = (n - 1, 2 * n - 1);
    let mut out: Vec<Monomial> = (0..n).map(|k| prod(v, &[(n + k, 4)])).collect();
    out.push(prod(v, &concat(&[ys(n, 1), vec![(yn, 3)]])));
    out.push(prod(v, &concat(&[ys(n, 3), vec![(yn, 1)]])));
    out.extend((0..n).map(|k| prod(v, &[(k, 2)])));
    out.push(prod(v, &concat(&[xs(n, 1), vec![(xn, 1)]])));
    out
}

/// The ten listed `H_1`-invariants with every `a_i + a_n` odd.
pub fn h1_odd_generators(n: usize) -> Vec<Monomial> {
    let v = 2 * n;
    let (xn, yn) = (vec![(n - 1, 1)], vec![(2 * n - 1, 1)]);
    let x_head = xs(n, 1);
    let yn_e = |e: i64| vec![(2 * n - 1, e)];
    [
        concat(&[ys(n, 2), x_head.clone()]),
        concat(&[ys(n, 2), xn.clone()]),
        concat(&[ys(n, 1), yn.clone(), x_head.clone()]),
        concat(&[ys(n, 1), yn.clone(), xn.clone()]),
        concat(&[yn_e(2), x_head.clone()]),
        concat(&[yn_e(2), xn.clone()]),
        concat(&[ys(n, 3), yn_e(3), x_head.clone()]),
        concat(&[ys(n, 3), yn_e(3), xn.clone()]),
        concat(&[ys(n, 2), yn_e(4), xn.clone()]),
        concat(&[ys(n, 2), yn_e(4), x_head]),
    ]
    .iter()
    .map(|f| prod(v, f))
    .collect()
}

/// Both `H_1` lists.
pub fn h1_listed_generators(n: usize) -> Vec<Monomial> {
    let mut out = h1_even_generators(n);
    out.extend(h1_odd_generators(n));
    out
}

// Divisibility criteria.

/// `3 | i_n + i_k` for every `k < n`, on the `x`-exponents.
pub fn g1_criterion(x_exponents: &[i64]) -> bool {
    let n = x_exponents.len();
    let last = x_exponents[n - 1];
    x_exponents[..n - 1].iter().all(|&i| (i + last) % 3 == 0)
}

/// For every `i < n`: either `a_i + a_n` is even and `4 | b_i + b_n`, or it
/// is odd and `b_i + b_n ≡ 2 mod 4`. The alternative is chosen per index.
pub fn h1_criterion(a: &[i64], b: &[i64]) -> bool {
    let n = a.len();
    (0..n - 1).all(|i| {
        let s = a[i] + a[n - 1];
        let t = (b[i] + b[n - 1]).rem_euclid(4);
        if s.rem_euclid(2) == 0 {
            t == 0
        } else {
            t == 2
        }
    })
}

/// The same alternative for all indices at once. Strictly stronger than
/// [`h1_criterion`] once `n ≥ 3`.
pub fn h1_criterion_uniform(a: &[i64], b: &[i64]) -> bool {
    let n = a.len();
    let case = |odd: bool| {
        (0..n - 1).all(|i| {
            let s = (a[i] + a[n - 1]).rem_euclid(2) == 1;
            let t = (b[i] + b[n - 1]).rem_euclid(4);
            s == odd && t == if odd { 2 } else { 0 }
        })
    };
    case(false) || case(true)
}

// Formal identities.

/// Named monomials, resolved in [`check_monomial_identity`].
pub type Substitutions = BTreeMap<String, Monomial>;

/// `x_i`, `y_i`, `t_i := x_i²`, `z1 := x_1⋯x_{n-1}/x_n`,
/// `z2 := y_1⋯y_{n-1}/y_n` on `2n` variables.
pub fn standard_substitutions(n: usize) -> Substitutions {
    let v = 2 * n;
    let mut s = Substitutions::new();
    for k in 0..n {
        s.insert(format!("x{}", k + 1), Monomial::var(v, k));
        s.insert(format!("y{}", k + 1), Monomial::var(v, n + k));
        s.insert(format!("t{}", k + 1), prod(v, &[(k, 2)]));
    }
    s.insert("xn".into(), Monomial::var(v, n - 1));
    s.insert("yn".into(), Monomial::var(v, 2 * n - 1));
    s.insert("tn".into(), prod(v, &[(n - 1, 2)]));
    s.insert("z1".into(), prod(v, &concat(&[xs(n, 1), vec![(n - 1, -1)]])));
    s.insert("z2".into(), prod(v, &concat(&[ys(n, 1), vec![(2 * n - 1, -1)]])));
    s
}

/// Passes iff `lhs` equals `Π name^mult` after substitution, as Laurent
/// monomials.
pub fn check_monomial_identity(
    lhs: &Monomial,
    rhs: &[(String, i64)],
    subs: &Substitutions,
) -> Result<(), InvariantsError> {
    let mut acc = Monomial::one(lhs.0.len());
    for (name, mult) in rhs {
        let m = subs.get(name).ok_or_else(|| InvariantsError::UnknownName(name.clone()))?;
        if m.0.len() != acc.0.len() {
            return Err(InvariantsError::MonomialLength { got: m.0.len(), vars: acc.0.len() });
        }
        acc = acc.mul(&m.pow(*mult));
    }
    if &acc != lhs {
        return Err(InvariantsError::IdentityMismatch { difference: lhs.div(&acc).0 });
    }
    Ok(())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Identity {
    pub label: String,
    pub lhs: Monomial,
    pub rhs: Vec<(String, i64)>,
}

fn rhs(parts: &[(&str, i64)]) -> Vec<(String, i64)> {
    parts.iter().map(|&(s, e)| (s.to_string(), e)).collect()
}

/// The monomial identities behind `C(Z_n) = C(t_1, ..., t_n, z_2)` that hold
/// formally. Those that need the curve equation (`y_i⁴` as a cubic in
/// `t_i`, `y_n² x_n = t_n(t_n - 1)` and the expression of `z_1` through
/// `z_2` and the `t_i`) are not monomial identities and are left out. The
/// factor `y_n² x_n` is written out as `yn^2 xn`.
pub fn h1_identity_catalog(n: usize) -> Vec<Identity> {
    let v = 2 * n;
    let (xn, yn) = (n - 1, 2 * n - 1);
    let id = |label: &str, lhs: Vec<(usize, i64)>, r: &[(&str, i64)]| Identity {
        label: label.to_string(),
        lhs: prod(v, &lhs),
        rhs: rhs(r),
    };
    vec![
        id("y1..y(n-1) yn^3 = z2 yn^4", concat(&[ys(n, 1), vec![(yn, 3)]]), &[("z2", 1), ("yn", 4)]),
        id("y1^3..y(n-1)^3 yn = z2^3 yn^4", concat(&[ys(n, 3), vec![(yn, 1)]]), &[("z2", 3), ("yn", 4)]),
        id("x1..xn = z1 tn", concat(&[xs(n, 1), vec![(xn, 1)]]), &[("z1", 1), ("tn", 1)]),
        id(
            "y1^2..y(n-1)^2 x1..x(n-1) = z1 z2^2 (yn^2 xn)",
            concat(&[ys(n, 2), xs(n, 1)]),
            &[("z1", 1), ("z2", 2), ("yn", 2), ("xn", 1)],
        ),
        id(
            "y1^2..y(n-1)^2 xn = z2^2 (yn^2 xn)",
            concat(&[ys(n, 2), vec![(xn, 1)]]),
            &[("z2", 2), ("yn", 2), ("xn", 1)],
        ),
        id(
            "y1..yn x1..x(n-1) = z2 (yn^2 xn) z1",
            concat(&[ys(n, 1), vec![(yn, 1)], xs(n, 1)]),
            &[("z2", 1), ("yn", 2), ("xn", 1), ("z1", 1)],
        ),
        id("y1..yn xn = z2 (yn^2 xn)", concat(&[ys(n, 1), vec![(yn, 1), (xn, 1)]]), &[("z2", 1), ("yn", 2), ("xn", 1)]),
        id("yn^2 x1..x(n-1) = (yn^2 xn) z1", concat(&[vec![(yn, 2)], xs(n, 1)]), &[("yn", 2), ("xn", 1), ("z1", 1)]),
        id(
            "y1^3..yn^3 xn = z2^3 yn^4 (yn^2 xn)",
            concat(&[ys(n, 3), vec![(yn, 3), (xn, 1)]]),
            &[("z2", 3), ("yn", 4), ("yn", 2), ("xn", 1)],
        ),
        id(
            "y1^3..yn^3 x1..x(n-1) = z2^3 (yn^2 xn) yn^4 z1",
            concat(&[ys(n, 3), vec![(yn, 3)], xs(n, 1)]),
            &[("z2", 3), ("yn", 2), ("xn", 1), ("yn", 4), ("z1", 1)],
        ),
        id(
            "y1^2..y(n-1)^2 yn^4 xn = z2^2 (yn^2 xn) yn^4",
            concat(&[ys(n, 2), vec![(yn, 4), (xn, 1)]]),
            &[("z2", 2), ("yn", 2), ("xn", 1), ("yn", 4)],
        ),
        id(
            "y1^2..y(n-1)^2 yn^4 x1..x(n-1) = z2^2 (yn^2 xn) yn^4 z1",
            concat(&[ys(n, 2), vec![(yn, 4)], xs(n, 1)]),
            &[("z2", 2), ("yn", 2), ("xn", 1), ("yn", 4), ("z1", 1)],
        ),
    ]
}

/// Checks every identity of [`h1_identity_catalog`] for the given `n`,
/// returning the label of the first failure.
pub fn check_h1_identities(n: usize) -> Result<usize, (String, InvariantsError)> {
    let subs = standard_substitutions(n);
    let catalog = h1_identity_catalog(n);
    for id in &catalog {
        check_monomial_identity(&id.lhs, &id.rhs, &subs).map_err(|e| (id.label.clone(), e))?;
    }
    Ok(catalog.len())
}

// Twisted conjugation.

/// Generators `e_k + i·e_n`, `k < n`, of the subgroup `G_i` (order 3) or
/// `H_i` (order 4) of `(Z/d)^n`, written as exponent vectors of `τ`.
pub fn twisted_family(d: u32, n: usize, i: u32) -> Vec<Vec<u32>> {
    (0..n.saturating_sub(1))
        .map(|k| {
            let mut g = vec![0; n];
            g[k] = 1;
            g[n - 1] = (g[n - 1] + i) % d;
            g
        })
        .collect()
}

/// The subgroup of `(Z/d)^n` generated by `gens`, sorted.
pub fn subgroup_closure(d: u32, n: usize, gens: &[Vec<u32>]) -> Vec<Vec<u32>> {
    let mut seen: HashSet<Vec<u32>> = HashSet::new();
    let mut frontier = vec![vec![0; n]];
    seen.insert(vec![0; n]);
    while let Some(x) = frontier.pop() {
        for g in gens {
            let y: Vec<u32> = x.iter().zip(g).map(|(a, b)| (a + b) % d).collect();
            if seen.insert(y.clone()) {
                frontier.push(y);
            }
        }
    }
    let mut out: Vec<Vec<u32>> = seen.into_iter().collect();
    out.sort();
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TwistReport {
    pub d: u32,
    pub n: usize,
    pub twist: u32,
    pub source_order: usize,
    pub target_order: usize,
}

/// Conjugating by an endomorphism `F` of the last factor with
/// `F τ = τ^twist F` sends `(m_1, ..., m_n)` to `(m_1, ..., twist·m_n)`.
/// Passes iff this carries the family with `i = 1` onto the family with
/// `i = twist`.
pub fn twist_conjugation_check(d: u32, n: usize, twist: u32) -> Result<TwistReport, InvariantsError> {
    if d == 0 {
        return Err(InvariantsError::ZeroModulus);
    }
    if twist.gcd(&d) != 1 {
        return Err(InvariantsError::TwistNotCoprime { d, twist });
    }
    let source = twisted_family(d, n, 1);
    let target = subgroup_closure(d, n, &twisted_family(d, n, twist));
    let target_set: HashSet<&Vec<u32>> = target.iter().collect();
    let image: Vec<Vec<u32>> = source
        .iter()
        .map(|g| {
            let mut h = g.clone();
            h[n - 1] = (h[n - 1] * twist) % d;
            h
        })
        .collect();
    for (index, h) in image.iter().enumerate() {
        if !target_set.contains(h) {
            return Err(InvariantsError::TwistImageOutside { index, image: h.clone() });
        }
    }
    let generated = subgroup_closure(d, n, &image);
    if generated.len() != target.len() {
        return Err(InvariantsError::TwistProperSubgroup { got: generated.len(), expected: target.len() });
    }
    Ok(TwistReport { d, n, twist, source_order: subgroup_closure(d, n, &source).len(), target_order: target.len() })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mono(e: &[i64]) -> Monomial {
        Monomial(e.to_vec())
    }

    #[test]
    fn invariance_examples() {
        let g1 = DiagonalAction::g_family_x_only(3, 1);
        assert!(is_invariant(&mono(&[1, 1, 2]), &g1));
        assert!(is_invariant(&mono(&[0, 0, 0]), &g1));
        assert!(!is_invariant(&mono(&[1, 0, 0]), &g1));
        let full = DiagonalAction::g_family(3, 1);
        assert!(is_invariant(&mono(&[0, 0, 0, 1, 0, 0]), &full));
    }

    #[test]
    fn g1_generators_n2() {
        let g1 = DiagonalAction::g_family_x_only(2, 1);
        let mut gens = generators_up_to_degree(&g1, 6, None).unwrap();
        gens.sort();
        let mut expected = vec![mono(&[1, 2]), mono(&[2, 1]), mono(&[3, 0]), mono(&[0, 3])];
        expected.sort();
        assert_eq!(gens, expected);
    }

    #[test]
    fn trivial_action_generators() {
        let t = DiagonalAction::trivial(3);
        let gens = generators_up_to_degree(&t, 4, None).unwrap();
        assert_eq!(gens, (0..3).map(|j| Monomial::var(3, j)).collect::<Vec<_>>());
    }

    #[test]
    fn h1_generators_contain_listed_ones() {
        let h1 = DiagonalAction::h_family(2, 1);
        let gens = generators_up_to_degree(&h1, 8, None).unwrap();
        let names: Vec<String> = gens.iter().map(|m| h1.render(m)).collect();
        for want in ["y1^4", "y2^4", "x1^2", "x2^2", "x1*x2", "y1*y2^3", "y1^3*y2", "x1*y1^2", "x2*y2^2"] {
            assert!(names.iter().any(|s| s == want), "{want} missing from {names:?}");
        }
    }

    #[test]
    fn g1_lists() {
        for n in [2, 3] {
            let a = DiagonalAction::g_family(n, 1);
            verify_generator_list(&a, &g1_generators_with_cubes(n), 9, None).unwrap();
            assert_eq!(
                verify_generator_list(&a, &g1_displayed_generators(n), 9, None),
                Err(InvariantsError::NotGenerated { monomial: "x1^3".into() })
            );
        }
    }

    #[test]
    fn h1_even_list_alone_misses_odd_invariants() {
        let a = DiagonalAction::h_family(2, 1);
        let err = verify_generator_list(&a, &h1_even_generators(2), 10, None).unwrap_err();
        let InvariantsError::NotGenerated { monomial } = err else { panic!("{err:?}") };
        // The first odd witness in degree order is an item of the odd list.
        let odd: Vec<String> = h1_odd_generators(2).iter().map(|m| a.render(m)).collect();
        assert!(odd.contains(&monomial), "{monomial}");
    }

    #[test]
    fn h1_lists_miss_even_square() {
        // y1^2 y2^2 is invariant (b1 + b2 = 4) but is no product of the
        // listed monomials.
        let a = DiagonalAction::h_family(2, 1);
        let y1y2sq = mono(&[0, 0, 2, 2]);
        assert!(is_invariant(&y1y2sq, &a));
        let missing = missing_generators(&a, &h1_listed_generators(2), 10, None).unwrap();
        assert!(missing.contains(&y1y2sq));
        assert!(verify_generator_list(&a, &h1_listed_generators(2), 10, None).is_err());
    }

    #[test]
    fn claimed_must_be_invariant() {
        let a = DiagonalAction::g_family_x_only(2, 1);
        assert_eq!(
            verify_generator_list(&a, &[mono(&[1, 0])], 3, None),
            Err(InvariantsError::ClaimedNotInvariant { monomial: "x1".into() })
        );
    }

    #[test]
    fn listed_monomials_are_invariant() {
        for n in 2..=4 {
            let a = DiagonalAction::h_family(n, 1);
            assert!(h1_listed_generators(n).iter().all(|m| is_invariant(m, &a)));
            let g = DiagonalAction::g_family(n, 1);
            assert!(g1_generators_with_cubes(n).iter().all(|m| is_invariant(m, &g)));
        }
    }

    #[test]
    fn criteria_agree_with_characters() {
        let a = DiagonalAction::h_family(2, 1);
        for e in 0..(6i64.pow(4)) {
            let v: Vec<i64> = (0..4).map(|k| (e / 6i64.pow(k)) % 6).collect();
            assert_eq!(h1_criterion(&v[..2], &v[2..]), is_invariant(&Monomial(v.clone()), &a), "{v:?}");
        }
    }

    #[test]
    fn uniform_reading_is_too_strong() {
        // x2 y2^2 with n = 3: index 1 falls in the even case, index 2 in the odd one.
        let a = DiagonalAction::h_family(3, 1);
        let m = mono(&[0, 1, 0, 0, 2, 0]);
        assert!(is_invariant(&m, &a));
        assert!(h1_criterion(&[0, 1, 0], &[0, 2, 0]));
        assert!(!h1_criterion_uniform(&[0, 1, 0], &[0, 2, 0]));
    }

    #[test]
    fn identities() {
        for n in 2..=4 {
            assert_eq!(check_h1_identities(n), Ok(12));
        }
        let subs = standard_substitutions(3);
        let z1 = subs["z1"].clone();
        assert!(matches!(
            check_monomial_identity(&z1, &rhs(&[("z2", 1)]), &subs),
            Err(InvariantsError::IdentityMismatch { .. })
        ));
        assert_eq!(
            check_monomial_identity(&z1, &rhs(&[("w", 1)]), &subs),
            Err(InvariantsError::UnknownName("w".into()))
        );
    }

    #[test]
    fn y2_in_place_of_yn_only_works_for_n2() {
        let lit = |n: usize| {
            let v = 2 * n;
            let lhs = prod(v, &concat(&[ys(n, 2), vec![(2 * n - 1, 4), (n - 1, 1)]]));
            (lhs, rhs(&[("z2", 2), ("y2", 2), ("xn", 1), ("yn", 4)]))
        };
        let (l, r) = lit(2);
        assert!(check_monomial_identity(&l, &r, &standard_substitutions(2)).is_ok());
        let (l, r) = lit(3);
        assert!(check_monomial_identity(&l, &r, &standard_substitutions(3)).is_err());
    }

    #[test]
    fn twists() {
        for n in 2..=5 {
            let r = twist_conjugation_check(3, n, 2).unwrap();
            assert_eq!(r.target_order, 3usize.pow(n as u32 - 1));
            twist_conjugation_check(4, n, 3).unwrap();
            twist_conjugation_check(3, n, 1).unwrap();
        }
        assert_eq!(twist_conjugation_check(4, 3, 2), Err(InvariantsError::TwistNotCoprime { d: 4, twist: 2 }));
    }

    #[test]
    fn twisted_target_is_the_kummer_group() {
        use crate::orbifold::{enumerate_group, Modulus};
        for (d, n) in [(3u32, 3usize), (4, 3), (3, 4)] {
            let target = subgroup_closure(d, n, &twisted_family(d, n, d - 1));
            let mut kummer: Vec<Vec<u32>> = enumerate_group(Modulus::new(d).unwrap(), n)
                .unwrap()
                .iter()
                .map(|g| g.residues().iter().map(|&r| r as u32).collect())
                .collect();
            kummer.sort();
            assert_eq!(target, kummer);
        }
    }

    #[test]
    fn budget() {
        let a = DiagonalAction::trivial(10);
        assert!(matches!(
            generators_up_to_degree(&a, 40, Some(1000)),
            Err(InvariantsError::BudgetExceeded { cap: 1000, .. })
        ));
        assert_eq!(monomial_count(2, 2), 6);
    }

    #[test]
    fn rendering() {
        let a = DiagonalAction::h_family(2, 1);
        assert_eq!(a.render(&mono(&[1, 0, 2, 0])), "x1*y1^2");
        assert_eq!(a.render(&Monomial::one(4)), "1");
        assert_eq!(a.render(&standard_substitutions(2)["z2"]), "y1/y2");
        assert_eq!(mono(&[1, -2]).to_string(), "v1/v2^2");
    }

    #[test]
    fn action_json() {
        let a = DiagonalAction::new(3, 2, vec![vec![1, 4]]).unwrap();
        assert_eq!(a.generators, vec![vec![1, 1]]);
        assert_eq!(serde_json::to_string(&a).unwrap(), r#"{"d":3,"vars":2,"generators":[[1,1]]}"#);
        let bad: DiagonalAction = serde_json::from_str(r#"{"d":3,"vars":2,"generators":[[1]]}"#).unwrap();
        assert!(bad.validate().is_err());
    }
}
