//! Command-line surface. Every exact quantity travels as a string:
//! integers as decimal literals, rationals as `p/q` in lowest terms.

use clap::{Args, Parser, Subcommand, ValueEnum};
use num::bigint::BigInt;
use num::rational::BigRational;
use slope_theorems::ratio::parse_ratio;
use std::path::PathBuf;

pub fn parse_bigint(s: &str) -> Result<BigInt, String> {
    s.trim()
        .parse::<BigInt>()
        .map_err(|_| format!("expected an integer, got '{s}'"))
}

#[derive(Debug, Parser)]
#[command(
    name = "slope-lab",
    version,
    about = "Exact slope arithmetic for fibered families of polarized varieties",
    disable_help_subcommand = true
)]
pub struct Cli {
    /// Rendering: aligned key = value lines, or one JSON document.
    #[arg(long, global = true, value_enum, default_value_t = OutputMode::Table)]
    pub output: OutputMode,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputMode {
    Table,
    Json,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build a family and print its invariants as one JSON object.
    ///
    /// The output is always JSON, whatever --output says, so it can be
    /// piped straight into `check --input -`.
    #[command(subcommand)]
    Family(FamilyKind),
    /// Evaluate one slope inequality on a family invariant record.
    Check(CheckArgs),
    /// Classical bounds on genus and embedding degree.
    #[command(subcommand)]
    Bound(BoundKind),
    /// Staircase bounds from a Harder-Narasimhan profile.
    #[command(subcommand)]
    Hn(HnCommand),
    /// Weighted projective space queries.
    #[command(subcommand)]
    Wps(WpsCommand),
    /// Positivity ranges for polarizations twisted along the base.
    #[command(subcommand)]
    Cone(ConeCommand),
    /// Slope checks for families with log Fano fibers.
    #[command(subcommand)]
    Fano(FanoCommand),
    /// Tables over the built-in example families.
    #[command(subcommand)]
    Report(ReportCommand),
}

#[derive(Debug, Args)]
pub struct BundleArgs {
    /// Rank of the bundle on the base curve.
    #[arg(long)]
    pub rank: u64,
    /// Degree of the bundle, as an exact fraction.
    #[arg(long, value_parser = parse_ratio, allow_hyphen_values = true)]
    pub deg: BigRational,
    /// Smallest Harder-Narasimhan slope, as an exact fraction.
    #[arg(long, value_parser = parse_ratio, allow_hyphen_values = true)]
    pub mu: BigRational,
}

#[derive(Debug, Subcommand)]
pub enum FamilyKind {
    /// Projectivized bundle polarized by the tautological class.
    Pn(BundleArgs),
    /// Rank-3 bundle re-embedded by the conic system.
    Veronese(BundleArgs),
    /// Quadric bundle in P(E), polarization restricted from there.
    Quadric {
        #[command(flatten)]
        bundle: BundleArgs,
        /// Degree of the base class added to the defining form.
        #[arg(long, value_parser = parse_ratio, allow_hyphen_values = true)]
        deg_a: BigRational,
    },
    /// Quadric bundle cut out by a form of deficient rank.
    QuadricLowRank {
        /// Fiber dimension.
        #[arg(long)]
        n: u32,
        /// Rank of the defining quadratic form, 3..=n+2.
        #[arg(long)]
        r: u64,
        /// Degree of the nontrivial summands, at least 1.
        #[arg(long, allow_hyphen_values = true)]
        dd: i64,
    },
    /// Two-stage scroll over a ruled surface.
    Scroll {
        #[command(flatten)]
        bundle: BundleArgs,
        /// Fiber degrees d_i, largest first, comma separated.
        #[arg(long, required = true, value_delimiter = ',', allow_hyphen_values = true)]
        fiber_degrees: Vec<i64>,
        /// Base twists a_i, comma separated fractions, one per degree.
        #[arg(long, required = true, value_delimiter = ',', value_parser = parse_ratio, allow_hyphen_values = true)]
        twists: Vec<BigRational>,
    },
    /// Double cover of a listed family; the spec arrives as JSON.
    DoubleCover {
        /// File with the cover spec; stdin when omitted or `-`.
        #[arg(long)]
        input: Option<PathBuf>,
    },
    /// Hypersurface in a weighted projective bundle.
    Wps(WpsFamilyArgs),
    /// Hypersurfaces in (1, 1, alpha, ..) whose slope decays with alpha.
    VanishingSlope {
        /// Fiber dimension.
        #[arg(long)]
        n: u32,
        /// Repeated weight.
        #[arg(long)]
        alpha: u64,
        /// Degree multiplier: the hypersurface has degree m alpha.
        #[arg(long)]
        m: u64,
    },
    /// Hypersurfaces in (1, .., 1, 2, n+3) just above the reference slope.
    NearExtremal {
        /// Fiber dimension, at least 2.
        #[arg(long)]
        n: u32,
    },
    /// Sylvester-weight hypersurfaces with superexponentially small slope.
    Sylvester {
        /// Number of Sylvester weights after the two units.
        #[arg(long)]
        n: u32,
    },
    /// Surface family probing the doubled bound for large twists.
    ThresholdProbe {
        #[arg(long)]
        alpha: u64,
        #[arg(long)]
        beta: u64,
        /// Twist multiplier; the probe succeeds once k >= 2.
        #[arg(long)]
        k: u64,
    },
}

#[derive(Debug, Args)]
pub struct WpsFamilyArgs {
    /// Fiber weights, comma separated positive integers.
    #[arg(long = "a", required = true, value_delimiter = ',', value_parser = parse_bigint)]
    pub weights: Vec<BigInt>,
    /// Hypersurface degree, a multiple of the Cartier index.
    #[arg(long, value_parser = parse_bigint)]
    pub d: BigInt,
    /// Fiberwise degree of the polarization.
    #[arg(long, value_parser = parse_bigint)]
    pub e: BigInt,
    /// Scale of the fiberwise part.
    #[arg(long, value_parser = parse_bigint)]
    pub h: BigInt,
    /// Base twist, nonnegative.
    #[arg(long, value_parser = parse_bigint)]
    pub l: BigInt,
}

#[derive(Debug, Args)]
pub struct CheckArgs {
    /// Inequality to evaluate: XIAO_H1, XIAO_H2, XIAO_BIR1, XIAO_BIR2,
    /// BARJA_1, BARJA_2, KSB_1..KSB_4, or F_POSITIVE.
    #[arg(long)]
    pub theorem: String,
    /// File with the invariant record; stdin when omitted or `-`.
    #[arg(long)]
    pub input: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum BoundKind {
    /// Largest genus of a nondegenerate degree-d curve in P^N.
    Castelnuovo {
        #[arg(long)]
        d: i64,
        #[arg(long)]
        ambient_dim: i64,
    },
    /// Smallest degree of a birational subcanonical system.
    MinDegree {
        #[arg(long)]
        h0: i64,
        /// Subcanonicity index p >= 0.
        #[arg(long)]
        p: i64,
    },
    /// Degree bound for n-folds with p-subcanonical hyperplane class.
    Harris {
        #[arg(long)]
        n: i64,
        #[arg(long)]
        p: i64,
        #[arg(long)]
        h0: i64,
    },
    /// Degree of a curve against a big system with k-dimensional image.
    NoetherI {
        #[arg(long)]
        k: i64,
        #[arg(long)]
        h0: i64,
    },
    /// The same intersection when the image is a curve.
    NoetherIbis {
        #[arg(long)]
        k: i64,
        #[arg(long)]
        h0: i64,
    },
    /// Self-intersection of a moving class on a surface.
    NoetherIi {
        #[arg(long)]
        h0_m: i64,
        /// Surface has nonnegative Kodaira dimension and the image of the
        /// moving system is 2-dimensional.
        #[arg(long)]
        kodaira_nonneg: bool,
    },
    /// Mixed degree M^(n-1) L on an n-fold from two section counts.
    NoetherIii {
        #[arg(long)]
        h0_m: i64,
        #[arg(long)]
        h0_l: i64,
        #[arg(long)]
        n: i64,
        /// h0(M) - h0(L); must be 0 or at least 2.
        #[arg(long, allow_hyphen_values = true)]
        gap: i64,
    },
    /// Degree of an n-fold whose system has a k-codimensional base locus.
    Castelnuovo2 {
        #[arg(long)]
        n: i64,
        #[arg(long)]
        p: i64,
        #[arg(long)]
        k: i64,
        #[arg(long)]
        h0_m: i64,
    },
    /// Degree of an n-fold with p-subcanonical big system.
    Castelnuovo3 {
        #[arg(long)]
        n: i64,
        #[arg(long)]
        p: i64,
        #[arg(long)]
        h0_m: i64,
    },
    /// Degree of a special system on a curve.
    Clifford {
        #[arg(long)]
        h0: i64,
    },
}

#[derive(Debug, Subcommand)]
pub enum HnCommand {
    /// Lower bound for the top self-intersection from a profile and an
    /// intersection table.
    Bound(HnBoundArgs),
}

#[derive(Debug, Args)]
pub struct HnBoundArgs {
    /// JSON file with the Harder-Narasimhan profile.
    #[arg(long)]
    pub profile: PathBuf,
    /// JSON file with the intersection number table.
    #[arg(long)]
    pub model: PathBuf,
    /// One of: general, 1A, 1B, 2, best.
    #[arg(long)]
    pub strategy: String,
    /// Step subsequence for `general` and `2`, comma separated.
    #[arg(long, value_delimiter = ',')]
    pub seq_s: Option<Vec<u32>>,
    /// Band boundaries for `general`, comma separated.
    #[arg(long, value_delimiter = ',')]
    pub seq_m: Option<Vec<u32>>,
    /// Slope assigned to the class after the last step.
    #[arg(long, value_enum, default_value_t = ExtraArg::MEll)]
    pub extra: ExtraArg,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ExtraArg {
    /// Reuse the last profile slope.
    ReuseLast,
    /// Pullback class, slope zero.
    PullbackL,
    /// Limit class of the staircase, slope zero.
    MEll,
}

#[derive(Debug, Args)]
pub struct WeightsArg {
    /// Weights, comma separated positive integers.
    #[arg(long, required = true, value_delimiter = ',', value_parser = parse_bigint)]
    pub weights: Vec<BigInt>,
}

#[derive(Debug, Subcommand)]
pub enum WpsCommand {
    /// Dimension of the degree-m graded piece of the weighted ring.
    Dim {
        #[command(flatten)]
        weights: WeightsArg,
        #[arg(long, value_parser = parse_bigint, allow_hyphen_values = true)]
        m: BigInt,
    },
    /// Smallest multiple of the tautological class that is Cartier.
    Cartier {
        #[command(flatten)]
        weights: WeightsArg,
    },
    /// Whether every n of the n+1 weights are coprime.
    Wellformed {
        #[command(flatten)]
        weights: WeightsArg,
    },
}

#[derive(Debug, Subcommand)]
pub enum ConeCommand {
    /// Interval of twists t for which L - t F stays ample.
    Interval {
        /// 1 bounds through the fiber volume, 2 through a section witness.
        #[arg(long)]
        part: u8,
        /// Fiber dimension.
        #[arg(long)]
        n: u32,
        /// Cartier multiple of the polarization.
        #[arg(long, value_parser = parse_bigint)]
        m: BigInt,
        /// Fiber volume of the polarization (part 1).
        #[arg(long, value_parser = parse_ratio)]
        w: Option<BigRational>,
        /// Multiple at which sections separate points (part 2).
        #[arg(long, value_parser = parse_bigint)]
        q: Option<BigInt>,
    },
    /// Slope coefficient valid once the twisted class is nef away from
    /// finitely many fibers.
    Away {
        /// 1a, 1b (volume form, doubled or not), 2a, 2b (witness form).
        #[arg(long)]
        case: String,
        #[arg(long)]
        n: u32,
        #[arg(long, value_parser = parse_bigint)]
        m: BigInt,
        /// Fiber volume (cases 1a, 1b).
        #[arg(long, value_parser = parse_ratio)]
        v: Option<BigRational>,
        /// Section witness (cases 2a, 2b).
        #[arg(long, value_parser = parse_bigint)]
        q: Option<BigInt>,
    },
    /// Nef threshold of the twisted determinant for large twists.
    Asymptotic {
        #[arg(long)]
        n: u32,
        #[arg(long, value_parser = parse_bigint)]
        m: BigInt,
    },
}

#[derive(Debug, Subcommand)]
pub enum FanoCommand {
    /// Evaluate one of the three log Fano slope inequalities.
    Check {
        /// i, ii, or iii.
        #[arg(long)]
        variant: String,
        /// File with the family data; stdin when omitted or `-`.
        #[arg(long)]
        input: Option<PathBuf>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ReportFormat {
    Md,
    Csv,
    Json,
}

#[derive(Debug, Subcommand)]
pub enum ReportCommand {
    /// Slope, reference value and positivity for every example family.
    Examples {
        /// Defaults to md, or json when --output json is active.
        #[arg(long, value_enum)]
        format: Option<ReportFormat>,
    },
}
