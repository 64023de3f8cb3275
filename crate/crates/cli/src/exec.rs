//! Runs a parsed command and captures what the process would print.
//! Keeping the outcome a plain value lets the tests drive every path
//! without spawning.
//!
//! Exit codes: 0 when the quantity was computed (and any inequality
//! holds), 2 when an inequality was evaluated and fails, 1 when the
//! request never got that far (bad arguments, unreadable input, or a
//! hypothesis required by the statement is not met).

use crate::args::{
    BoundKind, CheckArgs, Cli, Command, ConeCommand, ExtraArg, FamilyKind, FanoCommand,
    HnBoundArgs, HnCommand, OutputMode, ReportCommand, ReportFormat, WpsCommand,
};
use crate::report as tables;
use families::{
    family_double_cover, family_pn, family_quadric, family_quadric_low_rank, family_scroll,
    family_veronese, near_extremal_family, sylvester_family, threshold_probe,
    vanishing_slope_family, wps_family, BundleOnCurve, DoubleCoverSpec, FamilyError, ScrollFamily,
    WpsHypersurfaceFamily,
};
use hn_engine::{
    best_xiao_bound, xiao_bound_1a, xiao_bound_1b, xiao_bound_2, xiao_bound_general, BestBound,
    ExtraClassChoice, HNProfile, IntersectionModel, DEFAULT_SEARCH_CAP,
};
use num::bigint::BigInt;
use num::rational::BigRational;
use num::traits::{Signed, ToPrimitive};
use serde_json::json;
use slope_theorems::cone::{
    ample_interval_from_volume, ample_interval_from_witness, asymptotic_nef_threshold,
    nef_away_coefficient, Interval, NefAwayBound, NefAwayCase,
};
use slope_theorems::ratio::format_ratio;
use slope_theorems::{
    check_f_positive, check_fano_slope, check_slope_inequality, CheckReport, FamilyInvariants,
    FanoFamilyData, FanoVariant, TheoremId,
};
use std::fmt::Display;
use std::fmt::Write as _;
use std::io::Read;
use std::path::Path;
use wps_ring::{cartier_index, graded_dim, WeightVector};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// What went wrong and where, before any inequality could be evaluated.
type Failure = (&'static str, String);

fn hyp(e: impl Display) -> Failure {
    ("hypothesis", e.to_string())
}

impl Outcome {
    fn printed(stdout: String) -> Outcome {
        Outcome {
            code: 0,
            stdout,
            stderr: String::new(),
        }
    }

    fn value(mode: OutputMode, v: impl Display) -> Outcome {
        Outcome::printed(match mode {
            OutputMode::Table => format!("{v}\n"),
            OutputMode::Json => format!("{}\n", json!({ "value": v.to_string() })),
        })
    }

    fn fail(mode: OutputMode, (kind, message): Failure) -> Outcome {
        match mode {
            OutputMode::Json => Outcome {
                code: 1,
                stdout: format!(
                    "{}\n",
                    json!({ "error": { "kind": kind, "message": message } })
                ),
                stderr: String::new(),
            },
            OutputMode::Table => Outcome {
                code: 1,
                stdout: String::new(),
                stderr: format!("error: {message}\n"),
            },
        }
    }

    fn usage(mode: OutputMode, message: impl Into<String>) -> Outcome {
        Outcome::fail(mode, ("usage", message.into()))
    }

    fn from_report(mode: OutputMode, rep: &CheckReport) -> Outcome {
        let stdout = match mode {
            OutputMode::Json => {
                let mut s = serde_json::to_string(rep).expect("reports are plain data");
                s.push('\n');
                s
            }
            OutputMode::Table => {
                let mut s = String::new();
                let _ = writeln!(s, "theorem = {}", rep.theorem);
                let _ = writeln!(s, "lhs = {}", format_ratio(&rep.lhs));
                let _ = writeln!(s, "rhs = {}", format_ratio(&rep.rhs));
                let _ = writeln!(s, "holds = {}", rep.holds);
                let _ = writeln!(s, "slack = {}", format_ratio(&rep.slack));
                let _ = writeln!(s, "hypothesis_ok = {}", rep.hypothesis_ok);
                for note in &rep.notes {
                    let _ = writeln!(s, "note = {note}");
                }
                s
            }
        };
        Outcome {
            code: if rep.holds { 0 } else { 2 },
            stdout,
            stderr: String::new(),
        }
    }
}

pub fn execute(cli: Cli, stdin: &mut dyn Read) -> Outcome {
    let mode = cli.output;
    match cli.command {
        Command::Family(kind) => family_cmd(mode, kind, stdin),
        Command::Check(args) => check_cmd(mode, args, stdin),
        Command::Bound(kind) => bound_cmd(mode, kind),
        Command::Hn(HnCommand::Bound(args)) => hn_cmd(mode, args),
        Command::Wps(cmd) => wps_cmd(mode, cmd),
        Command::Cone(cmd) => cone_cmd(mode, cmd),
        Command::Fano(cmd) => fano_cmd(mode, cmd, stdin),
        Command::Report(ReportCommand::Examples { format }) => report_cmd(mode, format),
    }
}

fn read_source(input: Option<&Path>, stdin: &mut dyn Read) -> Result<String, Failure> {
    match input {
        Some(path) if path.as_os_str() != "-" => std::fs::read_to_string(path)
            .map_err(|e| ("io", format!("{}: {e}", path.display()))),
        _ => {
            let mut text = String::new();
            stdin
                .read_to_string(&mut text)
                .map_err(|e| ("io", format!("stdin: {e}")))?;
            Ok(text)
        }
    }
}

fn parse_json<T: serde::de::DeserializeOwned>(text: &str) -> Result<T, Failure> {
    serde_json::from_str(text).map_err(|e| ("parse", e.to_string()))
}

fn bundle(args: &crate::args::BundleArgs) -> Result<BundleOnCurve, Failure> {
    BundleOnCurve::new(args.rank, args.deg.clone(), args.mu.clone()).map_err(hyp)
}

fn build_family(kind: FamilyKind, stdin: &mut dyn Read) -> Result<FamilyInvariants, Failure> {
    let fam = |r: Result<FamilyInvariants, FamilyError>| r.map_err(hyp);
    match kind {
        FamilyKind::Pn(b) => fam(family_pn(&bundle(&b)?)),
        FamilyKind::Veronese(b) => fam(family_veronese(&bundle(&b)?)),
        FamilyKind::Quadric { bundle: b, deg_a } => fam(family_quadric(&bundle(&b)?, &deg_a)),
        FamilyKind::QuadricLowRank { n, r, dd } => fam(family_quadric_low_rank(n, r, dd)),
        FamilyKind::Scroll {
            bundle: b,
            fiber_degrees,
            twists,
        } => {
            let s = ScrollFamily::new(bundle(&b)?, fiber_degrees, twists).map_err(hyp)?;
            Ok(family_scroll(&s))
        }
        FamilyKind::DoubleCover { input } => {
            let text = read_source(input.as_deref(), stdin)?;
            let spec: DoubleCoverSpec = parse_json(&text)?;
            fam(family_double_cover(&spec))
        }
        FamilyKind::Wps(a) => {
            let weights = WeightVector::new(a.weights).map_err(hyp)?;
            let f = WpsHypersurfaceFamily::new(weights, a.d, a.e, a.h, a.l).map_err(hyp)?;
            Ok(wps_family(&f))
        }
        FamilyKind::VanishingSlope { n, alpha, m } => {
            Ok(wps_family(&vanishing_slope_family(n, alpha, m).map_err(hyp)?))
        }
        FamilyKind::NearExtremal { n } => Ok(wps_family(&near_extremal_family(n).map_err(hyp)?)),
        FamilyKind::Sylvester { n } => Ok(wps_family(&sylvester_family(n).map_err(hyp)?.family)),
        FamilyKind::ThresholdProbe { alpha, beta, k } => {
            Ok(threshold_probe(alpha, beta, k).map_err(hyp)?.invariants)
        }
    }
}

fn family_cmd(mode: OutputMode, kind: FamilyKind, stdin: &mut dyn Read) -> Outcome {
    let inv = match build_family(kind, stdin) {
        Ok(inv) => inv,
        Err(failure) => return Outcome::fail(mode, failure),
    };
    // Always JSON, whatever --output says: the record is the interchange
    // format the check subcommand reads back.
    match serde_json::to_string(&inv) {
        Ok(mut s) => {
            s.push('\n');
            Outcome::printed(s)
        }
        Err(e) => Outcome::fail(mode, ("serialize", e.to_string())),
    }
}

fn check_cmd(mode: OutputMode, args: CheckArgs, stdin: &mut dyn Read) -> Outcome {
    let text = match read_source(args.input.as_deref(), stdin) {
        Ok(text) => text,
        Err(failure) => return Outcome::fail(mode, failure),
    };
    let inv: FamilyInvariants = match parse_json(&text) {
        Ok(inv) => inv,
        Err(failure) => return Outcome::fail(mode, failure),
    };
    let result = if args.theorem == "F_POSITIVE" {
        check_f_positive(&inv)
    } else {
        match args.theorem.parse::<TheoremId>() {
            Ok(theorem) => check_slope_inequality(theorem, &inv),
            Err(e) => {
                return Outcome::usage(
                    mode,
                    format!(
                        "{e}; expected one of XIAO_H1, XIAO_H2, XIAO_BIR1, XIAO_BIR2, \
                         BARJA_1, BARJA_2, KSB_1, KSB_2, KSB_3, KSB_4, F_POSITIVE"
                    ),
                )
            }
        }
    };
    match result {
        Ok(rep) => Outcome::from_report(mode, &rep),
        Err(e) => Outcome::fail(mode, hyp(e)),
    }
}

fn bound_cmd(mode: OutputMode, kind: BoundKind) -> Outcome {
    let result: Result<BigInt, Failure> = match kind {
        BoundKind::Castelnuovo { d, ambient_dim } => {
            bound_lib::castelnuovo_genus_bound(d, ambient_dim).map_err(hyp)
        }
        BoundKind::MinDegree { h0, p } => {
            bound_lib::min_degree_birational_subcanonical(h0, p).map_err(hyp)
        }
        BoundKind::Harris { n, p, h0 } => bound_lib::harris_bound(n, p, h0).map_err(hyp),
        BoundKind::NoetherI { k, h0 } => bound_lib::noether_i_bound(k, h0).map_err(hyp),
        BoundKind::NoetherIbis { k, h0 } => bound_lib::noether_ibis_bound(k, h0).map_err(hyp),
        BoundKind::NoetherIi {
            h0_m,
            kodaira_nonneg,
        } => {
            if h0_m < 1 {
                Err(("usage", "need h0_m >= 1".to_string()))
            } else {
                Ok(bound_lib::noether_ii_bound(h0_m, kodaira_nonneg))
            }
        }
        BoundKind::NoetherIii { h0_m, h0_l, n, gap } => bound_lib::GapCase::from_gap(gap)
            .and_then(|case| bound_lib::noether_iii_bound(h0_m, h0_l, n, case))
            .map_err(hyp),
        BoundKind::Castelnuovo2 { n, p, k, h0_m } => {
            bound_lib::castelnuovo2_bound(n, p, k, h0_m).map_err(hyp)
        }
        BoundKind::Castelnuovo3 { n, p, h0_m } => {
            bound_lib::castelnuovo3_bound(n, p, h0_m).map_err(hyp)
        }
        BoundKind::Clifford { h0 } => {
            if h0 < 1 {
                Err(("usage", "need h0 >= 1".to_string()))
            } else {
                Ok(bound_lib::clifford_bound(h0))
            }
        }
    };
    match result {
        Ok(v) => Outcome::value(mode, v),
        Err(failure) => Outcome::fail(mode, failure),
    }
}

fn seq_args(args: &HnBoundArgs) -> (Option<&[u32]>, Option<&[u32]>) {
    (args.seq_s.as_deref(), args.seq_m.as_deref())
}

fn join_seq(seq: &[u32]) -> String {
    seq.iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

fn best_outcome(mode: OutputMode, best: &BestBound) -> Outcome {
    Outcome::printed(match mode {
        OutputMode::Json => format!(
            "{}\n",
            json!({
                "value": format_ratio(&best.value),
                "seq_s": best.seq_s,
                "seq_m": best.seq_m,
                "exhaustive": best.exhaustive,
            })
        ),
        OutputMode::Table => format!(
            "value = {}\nseq_s = {}\nseq_m = {}\nexhaustive = {}\n",
            format_ratio(&best.value),
            join_seq(&best.seq_s),
            join_seq(&best.seq_m),
            best.exhaustive
        ),
    })
}

fn search_cap() -> Result<u64, Failure> {
    match std::env::var("SLOPE_LAB_SEARCH_CAP") {
        Ok(s) => s.trim().parse::<u64>().map_err(|_| {
            (
                "usage",
                format!("SLOPE_LAB_SEARCH_CAP must be a nonnegative integer, got '{s}'"),
            )
        }),
        Err(std::env::VarError::NotPresent) => Ok(DEFAULT_SEARCH_CAP),
        Err(e) => Err(("usage", format!("SLOPE_LAB_SEARCH_CAP: {e}"))),
    }
}

fn hn_cmd(mode: OutputMode, args: HnBoundArgs) -> Outcome {
    let profile: HNProfile = match std::fs::read_to_string(&args.profile)
        .map_err(|e| ("io", format!("{}: {e}", args.profile.display())))
        .and_then(|text| parse_json(&text))
    {
        Ok(p) => p,
        Err(failure) => return Outcome::fail(mode, failure),
    };
    let model: IntersectionModel = match std::fs::read_to_string(&args.model)
        .map_err(|e| ("io", format!("{}: {e}", args.model.display())))
        .and_then(|text| parse_json(&text))
    {
        Ok(m) => m,
        Err(failure) => return Outcome::fail(mode, failure),
    };
    let extra = match args.extra {
        ExtraArg::ReuseLast => ExtraClassChoice::ReuseLast,
        ExtraArg::PullbackL => ExtraClassChoice::PullbackL,
        ExtraArg::MEll => ExtraClassChoice::MEll,
    };

    let result = match args.strategy.to_ascii_lowercase().as_str() {
        "general" => match seq_args(&args) {
            (Some(seq_s), Some(seq_m)) => xiao_bound_general(&profile, &model, extra, seq_s, seq_m),
            _ => return Outcome::usage(mode, "strategy general needs --seq-s and --seq-m"),
        },
        "1a" => match seq_args(&args) {
            (None, None) => xiao_bound_1a(&profile, &model, extra),
            _ => return Outcome::usage(mode, "strategy 1A chooses its own sequences"),
        },
        "1b" => match seq_args(&args) {
            (None, None) => xiao_bound_1b(&profile, &model, extra),
            _ => return Outcome::usage(mode, "strategy 1B chooses its own sequences"),
        },
        "2" => match seq_args(&args) {
            (Some(seq_s), None) => xiao_bound_2(&profile, &model, extra, seq_s),
            (None, _) => return Outcome::usage(mode, "strategy 2 needs --seq-s"),
            (_, Some(_)) => return Outcome::usage(mode, "strategy 2 chooses its own --seq-m"),
        },
        "best" => {
            if seq_args(&args) != (None, None) {
                return Outcome::usage(mode, "strategy best searches all sequences itself");
            }
            let cap = match search_cap() {
                Ok(cap) => cap,
                Err(failure) => return Outcome::fail(mode, failure),
            };
            return match best_xiao_bound(&profile, &model, extra, cap) {
                Ok(best) => best_outcome(mode, &best),
                Err(e) => Outcome::fail(mode, hyp(e)),
            };
        }
        other => {
            return Outcome::usage(
                mode,
                format!("unknown strategy '{other}', expected general, 1A, 1B, 2 or best"),
            )
        }
    };
    match result {
        Ok(v) => Outcome::value(mode, format_ratio(&v)),
        Err(e) => Outcome::fail(mode, hyp(e)),
    }
}

fn wps_cmd(mode: OutputMode, cmd: WpsCommand) -> Outcome {
    let vector = |weights: Vec<BigInt>| WeightVector::new(weights).map_err(hyp);
    match cmd {
        WpsCommand::Dim { weights, m } => {
            let a = match vector(weights.weights) {
                Ok(a) => a,
                Err(failure) => return Outcome::fail(mode, failure),
            };
            if m.is_positive() && m.to_usize().is_none() {
                return Outcome::usage(mode, format!("degree {m} is too large to tabulate"));
            }
            Outcome::value(mode, graded_dim(&a, &m))
        }
        WpsCommand::Cartier { weights } => match vector(weights.weights) {
            Ok(a) => Outcome::value(mode, cartier_index(&a)),
            Err(failure) => Outcome::fail(mode, failure),
        },
        WpsCommand::Wellformed { weights } => match vector(weights.weights) {
            Ok(a) => Outcome::value(mode, a.is_well_formed()),
            Err(failure) => Outcome::fail(mode, failure),
        },
    }
}

fn interval_outcome(mode: OutputMode, iv: &Interval) -> Outcome {
    Outcome::printed(match mode {
        OutputMode::Table => format!("{iv}\n"),
        OutputMode::Json => format!(
            "{}\n",
            json!({
                "lo": format_ratio(&iv.lo),
                "hi": format_ratio(&iv.hi),
                "hi_exclusive": iv.hi_exclusive,
                "display": iv.to_string(),
            })
        ),
    })
}

fn away_outcome(mode: OutputMode, bound: &NefAwayBound) -> Outcome {
    Outcome::printed(match mode {
        OutputMode::Table => format!(
            "coeff = {}\nlhs_scale = {}\n",
            format_ratio(&bound.coeff),
            bound.lhs_scale
        ),
        OutputMode::Json => format!(
            "{}\n",
            json!({
                "coeff": format_ratio(&bound.coeff),
                "lhs_scale": bound.lhs_scale.to_string(),
            })
        ),
    })
}

fn cone_cmd(mode: OutputMode, cmd: ConeCommand) -> Outcome {
    match cmd {
        ConeCommand::Interval { part, n, m, w, q } => {
            let iv = match (part, w, q) {
                (1, Some(w), None) => ample_interval_from_volume(n, &m, &w),
                (1, _, _) => return Outcome::usage(mode, "part 1 takes --w and no --q"),
                (2, None, Some(q)) => ample_interval_from_witness(n, &m, &q),
                (2, _, _) => return Outcome::usage(mode, "part 2 takes --q and no --w"),
                _ => return Outcome::usage(mode, "part must be 1 or 2"),
            };
            match iv {
                Ok(iv) => interval_outcome(mode, &iv),
                Err(e) => Outcome::fail(mode, hyp(e)),
            }
        }
        ConeCommand::Away { case, n, m, v, q } => {
            let volume = |v: Option<BigRational>, make: fn(BigRational) -> NefAwayCase| {
                v.map(make)
                    .ok_or("volume cases take --v and no --q".to_string())
            };
            let witness = |q: Option<BigInt>, make: fn(BigInt) -> NefAwayCase| {
                q.map(make)
                    .ok_or("witness cases take --q and no --v".to_string())
            };
            let picked = match (case.to_ascii_lowercase().as_str(), &q, &v) {
                ("1a", None, _) => volume(v, |v| NefAwayCase::VolumeDoubled { v }),
                ("1b", None, _) => volume(v, |v| NefAwayCase::VolumeSingle { v }),
                ("2a", _, None) => witness(q, |q| NefAwayCase::WitnessDoubled { q }),
                ("2b", _, None) => witness(q, |q| NefAwayCase::WitnessSingle { q }),
                ("1a" | "1b", Some(_), _) => Err("volume cases take --v and no --q".to_string()),
                ("2a" | "2b", _, Some(_)) => Err("witness cases take --q and no --v".to_string()),
                (other, _, _) => Err(format!("unknown case '{other}', expected 1a, 1b, 2a or 2b")),
            };
            let picked = match picked {
                Ok(p) => p,
                Err(msg) => return Outcome::usage(mode, msg),
            };
            match nef_away_coefficient(&picked, n, &m) {
                Ok(bound) => away_outcome(mode, &bound),
                Err(e) => Outcome::fail(mode, hyp(e)),
            }
        }
        ConeCommand::Asymptotic { n, m } => match asymptotic_nef_threshold(n, &m) {
            Ok(v) => Outcome::value(mode, format_ratio(&v)),
            Err(e) => Outcome::fail(mode, hyp(e)),
        },
    }
}

fn fano_cmd(mode: OutputMode, cmd: FanoCommand, stdin: &mut dyn Read) -> Outcome {
    let FanoCommand::Check { variant, input } = cmd;
    let variant: FanoVariant = match variant.parse() {
        Ok(v) => v,
        Err(e) => return Outcome::usage(mode, format!("{e}")),
    };
    let text = match read_source(input.as_deref(), stdin) {
        Ok(text) => text,
        Err(failure) => return Outcome::fail(mode, failure),
    };
    let data: FanoFamilyData = match parse_json(&text) {
        Ok(data) => data,
        Err(failure) => return Outcome::fail(mode, failure),
    };
    match check_fano_slope(variant, &data) {
        Ok(rep) => Outcome::from_report(mode, &rep),
        Err(e) => Outcome::fail(mode, hyp(e)),
    }
}

fn report_cmd(mode: OutputMode, format: Option<ReportFormat>) -> Outcome {
    let rows = tables::example_rows();
    let format = format.unwrap_or(match mode {
        OutputMode::Json => ReportFormat::Json,
        OutputMode::Table => ReportFormat::Md,
    });
    let stdout = match format {
        ReportFormat::Md => tables::render_md(&rows),
        ReportFormat::Csv => tables::render_csv(&rows),
        ReportFormat::Json => tables::render_json(&rows),
    };
    Outcome {
        code: if rows.iter().all(|r| r.matches) { 0 } else { 2 },
        stdout,
        stderr: String::new(),
    }
}
