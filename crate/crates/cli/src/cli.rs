use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(
    name = "kummer",
    version,
    about = "Hodge numbers, resolution charts and invariant monomials of Kummer-type Calabi-Yau manifolds"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Table, global = true)]
    pub format: Format,

    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,

    /// Worker threads for the orbifold enumeration (0 = rayon default).
    #[arg(long, default_value_t = 0, global = true)]
    pub threads: usize,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Table,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Brute,
    Closed,
    Both,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Hodge numbers h^{p,q}(X_{d,n}) as a grid.
    Hodge(HodgeArgs),
    /// Euler characteristic of X_{d,n}.
    Euler(HodgeArgs),
    /// Hodge diamond of X_{d,n} in the usual layout.
    Diamond(HodgeArgs),
    /// Cyclic quotient singularities and resolution charts.
    #[command(subcommand)]
    Toric(ToricCommand),
    /// Invariant monomials of diagonal actions.
    #[command(subcommand)]
    Invariants(InvariantsCommand),
}

#[derive(Args, Debug)]
pub struct HodgeArgs {
    /// Order of the curve automorphism: 2, 3, 4 or 6.
    #[arg(long)]
    pub d: u32,
    /// Dimension.
    #[arg(long)]
    pub n: usize,
    #[arg(long, value_enum, default_value_t = MethodArg::Closed)]
    pub method: MethodArg,
    /// Largest n the brute-force enumeration may attempt.
    #[arg(long)]
    pub budget: Option<usize>,
    /// Report only h^{p,q} (hodge only).
    #[arg(long, requires = "q")]
    pub p: Option<usize>,
    #[arg(long, requires = "p")]
    pub q: Option<usize>,
}

#[derive(Subcommand, Debug)]
pub enum ToricCommand {
    /// Ages of the elements of 1/r(a_1, ..., a_k) and its junior elements.
    Juniors {
        #[arg(long)]
        r: u32,
        #[arg(long, value_delimiter = ',', required = true)]
        weights: Vec<u32>,
    },
    /// Check a chart file or a triangulation file (default: the bundled charts).
    Verify {
        #[arg(long)]
        file: Option<PathBuf>,
    },
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Family {
    G1,
    G2,
    H1,
    H3,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum ListName {
    /// y_i and the two mixed x-monomials.
    G1Displayed,
    /// The above plus the cubes x_i^3.
    G1Cubes,
    /// The H_1 list with even x-parities.
    H1Even,
    /// The H_1 list with odd x-parities.
    H1Odd,
    /// Both H_1 lists.
    H1Listed,
}

#[derive(Args, Debug, Clone)]
pub struct ActionArgs {
    #[arg(long, value_enum)]
    pub family: Option<Family>,
    /// Must agree with the family when both are given.
    #[arg(long)]
    pub d: Option<u32>,
    #[arg(long)]
    pub n: Option<usize>,
    /// Include the y-variables for the order-3 families.
    #[arg(long)]
    pub with_y: bool,
    /// Action as JSON `{d, vars, generators}`.
    #[arg(long, conflicts_with = "family")]
    pub file: Option<PathBuf>,
    /// Cap on the number of monomials enumerated.
    #[arg(long)]
    pub budget: Option<u128>,
}

#[derive(Subcommand, Debug)]
pub enum InvariantsCommand {
    /// Minimal invariant monomials up to a degree bound.
    Gens {
        #[command(flatten)]
        action: ActionArgs,
        #[arg(long, default_value_t = 6)]
        max_degree: u32,
    },
    /// Check that a list generates every invariant monomial up to a degree bound.
    Verify {
        #[command(flatten)]
        action: ActionArgs,
        #[arg(long, value_enum, conflicts_with = "claimed")]
        list: Option<ListName>,
        /// JSON array of exponent arrays.
        #[arg(long)]
        claimed: Option<PathBuf>,
        #[arg(long, default_value_t = 10)]
        max_degree: u32,
    },
    /// Check the formal monomial identities for H_1, or a custom one from a file.
    Identity {
        /// Only this n (default: 2, 3 and 4).
        #[arg(long)]
        n: Option<usize>,
        /// JSON `{lhs, rhs: [[name, mult]], substitutions: {name: exps}}`.
        #[arg(long)]
        file: Option<PathBuf>,
    },
    /// Check that twisting the last factor carries G_1 (H_1) onto G_2 (H_3).
    Twist {
        #[arg(long)]
        d: u32,
        #[arg(long)]
        n: usize,
        /// Defaults to d - 1.
        #[arg(long)]
        twist: Option<u32>,
    },
}
