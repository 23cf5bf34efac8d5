use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FracPolyError {
    #[error("term X^({x_num}/12) Y^({y_num}/12) has a fractional exponent")]
    FractionalExponent { x_num: i64, y_num: i64 },
    #[error("cannot parse coefficient {0:?} as a decimal integer")]
    BadCoefficient(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OrbifoldError {
    #[error("unsupported modulus d = {0} (expected one of 2, 3, 4, 6)")]
    UnsupportedModulus(u32),
    #[error("dimension must be at least 1")]
    ZeroDimension,
    #[error("group element {residues:?} has residue sum not divisible by {d}")]
    NotInGroup { d: u8, residues: Vec<u8> },
    #[error("enumeration budget exceeded: d = {d}, n = {n} but the budget allows n <= {max_n}")]
    BudgetExceeded { d: u8, n: usize, max_n: usize },
    #[error(transparent)]
    Diamond(#[from] DiamondError),
    #[error(transparent)]
    Poly(#[from] FracPolyError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DiamondError {
    #[error("h^({p},{q}) = {value} is negative")]
    Negative { p: usize, q: usize, value: String },
    #[error("Hodge symmetry fails: h^({p},{q}) = {a} but h^({q},{p}) = {b}")]
    Symmetry { p: usize, q: usize, a: String, b: String },
    #[error("Serre duality fails: h^({p},{q}) = {a} but h^(n-{p},n-{q}) = {b}")]
    Duality { p: usize, q: usize, a: String, b: String },
    #[error("Calabi-Yau shape fails at h^({p},{q}) = {value}, expected {expected}")]
    CalabiYau { p: usize, q: usize, value: String, expected: u32 },
    #[error("term X^({x_num}/12) Y^({y_num}/12) lies outside the diamond")]
    OutOfRange { x_num: i64, y_num: i64 },
    #[error("Poincare polynomial has a surviving fractional term X^({x_num}/12) Y^({y_num}/12)")]
    Fractional { x_num: i64, y_num: i64 },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ToricError {
    #[error("chart {label:?} is not square: row {row} has length {len}, expected {expected}")]
    NotSquare { label: String, row: usize, len: usize, expected: usize },
    #[error("chart {label:?} is singular")]
    Singular { label: String },
    #[error("chart {label:?} has dimension {chart} but the quotient has {quotient} weights")]
    DimensionMismatch { label: String, chart: usize, quotient: usize },
    #[error("chart {label:?} row {row} = {exponents:?} is not invariant: character {character} mod {r}")]
    NotInvariant { label: String, row: usize, exponents: Vec<i64>, character: i64, r: u32 },
    #[error("chart {label:?} column {column} sums to {sum}, expected 1")]
    ColumnSum { label: String, column: usize, sum: i64 },
    #[error("chart {label:?} has |det| = {det}, expected {r}")]
    Determinant { label: String, det: i64, r: u32 },
    #[error("chart {label:?} ray {ray} = {point} is not in the quotient lattice")]
    NotLatticePoint { label: String, ray: usize, point: String },
    #[error("chart {label:?} lifts to {got:?}, expected {expected:?}")]
    LiftMismatch { label: String, got: Vec<u32>, expected: Vec<u32> },
    #[error("invalid quotient: {0}")]
    InvalidQuotient(String),
    #[error("triangulation has no cones")]
    EmptyTriangulation,
    #[error("cone {cone} has {got} rays, expected {expected}")]
    ConeArity { cone: usize, got: usize, expected: usize },
    #[error("cone {cone} ray {ray} = {point} is not in the quotient lattice")]
    RayNotInLattice { cone: usize, ray: usize, point: String },
    #[error("cone {cone} ray {ray} = {point} has coordinate sum {sum}, expected 1")]
    NotJunior { cone: usize, ray: usize, point: String, sum: String },
    #[error("cone {cone} is not unimodular: normalized determinant {det}")]
    NotUnimodular { cone: usize, det: String },
    #[error("normalized volumes sum to {total}, expected {r}")]
    Coverage { total: String, r: u32 },
    #[error("cones {first} and {second} have overlapping interiors")]
    Overlap { first: usize, second: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InvariantsError {
    #[error("action needs at least one generator")]
    NoGenerators,
    #[error("generator {index} has length {len}, expected {vars}")]
    GeneratorLength { index: usize, len: usize, vars: usize },
    #[error("modulus must be at least 1")]
    ZeroModulus,
    #[error("monomial has {got} exponents, expected {vars}")]
    MonomialLength { got: usize, vars: usize },
    #[error("enumeration budget exceeded: {count} monomials exceeds cap {cap}")]
    BudgetExceeded { count: u128, cap: u128 },
    #[error("claimed generator {monomial} is not invariant")]
    ClaimedNotInvariant { monomial: String },
    #[error("invariant monomial {monomial} is not generated by the claimed list")]
    NotGenerated { monomial: String },
    #[error("unknown name {0:?} in identity")]
    UnknownName(String),
    #[error("identity fails: lhs - rhs = {difference:?}")]
    IdentityMismatch { difference: Vec<i64> },
    #[error("twist {twist} is not coprime to {d}")]
    TwistNotCoprime { d: u32, twist: u32 },
    #[error("image of generator {index} is {image:?}, outside the target group")]
    TwistImageOutside { index: usize, image: Vec<u32> },
    #[error("twisted image generates a proper subgroup of order {got}, target has order {expected}")]
    TwistProperSubgroup { got: usize, expected: usize },
}
