//! Subcommands. Each one builds its output tables without touching stdout so
//! that it can be exercised directly from tests.

use std::path::PathBuf;

use clap::{Args, Subcommand};
use kunz_core::analytics::{self, PAPER_S_LOWER_BOUND};
use kunz_core::census::{self, OracleConfig, DEFAULT_ORACLE_CAP};
use kunz_core::stressed::{self, StressedOptions};
use kunz_core::Count;

use crate::error::CliError;
use crate::ngfile::read_ng_file;
use crate::table::{Cell, OutputTable};

/// Length at which [`PAPER_S_LOWER_BOUND`] was truncated.
const S_BOUND_LENGTH: u32 = 50;

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Exhaustive census: n_g, t_g, s_g, n̂_g and the depth histogram.
    Census(CensusArgs),
    /// Stressed-word counts s_g by genus, or by (length, genus).
    Stressed(StressedArgs),
    /// t_g from the stressed counts, with n̂_g when n_g is supplied.
    Ttable(TtableArgs),
    /// Partial sums of φ^-g over stressed words by length, and the implied bound on S.
    Weights(WeightsArgs),
    /// Growth constants found by bisection.
    Constants(ConstantsArgs),
    /// Limiting distribution of f - 2m.
    Fm2m(Fm2mArgs),
    /// Growth-ratio diagnostics against 1/g.
    Ratios(RatiosArgs),
}

#[derive(Debug, Args)]
pub struct CensusArgs {
    #[arg(long)]
    pub max_genus: u32,
    /// Also emit the histogram of f - 2m per genus.
    #[arg(long)]
    pub emit_fm2m: bool,
    /// Largest genus the enumeration may reach.
    #[arg(long, default_value_t = DEFAULT_ORACLE_CAP)]
    pub cap: u32,
}

#[derive(Debug, Args)]
pub struct StressedArgs {
    #[arg(long)]
    pub max_genus: u32,
    /// Only search words up to this length; rows stop where counts become partial.
    #[arg(long)]
    pub max_length: Option<u32>,
    /// Emit (length, genus, count) rows instead of totals.
    #[arg(long)]
    pub by_length: bool,
}

#[derive(Debug, Args)]
pub struct TtableArgs {
    #[arg(long)]
    pub max_genus: u32,
    /// CSV of n_g values (g,n_g per line).
    #[arg(long)]
    pub ng_file: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct WeightsArgs {
    #[arg(long)]
    pub max_length: u32,
}

#[derive(Debug, Args)]
pub struct ConstantsArgs {
    #[arg(long, default_value_t = 1e-6)]
    pub tolerance: f64,
}

#[derive(Debug, Args)]
pub struct Fm2mArgs {
    #[arg(long, allow_negative_numbers = true)]
    pub k_min: i64,
    #[arg(long, allow_negative_numbers = true)]
    pub k_max: i64,
    /// Longest stressed words counted; must be at least k-max.
    #[arg(long)]
    pub max_length: u32,
    /// Value used for S; defaults to the published lower bound 3.8073.
    #[arg(long, conflicts_with = "self_consistent_s")]
    pub s_estimate: Option<f64>,
    /// Estimate S from the same words of length at most max-length.
    #[arg(long)]
    pub self_consistent_s: bool,
}

#[derive(Debug, Args)]
pub struct RatiosArgs {
    #[arg(long)]
    pub ng_file: PathBuf,
    /// Defaults to the largest genus in the n_g file.
    #[arg(long)]
    pub max_genus: Option<u32>,
}

pub fn run(command: &Command, threads: Option<usize>) -> Result<Vec<OutputTable>, CliError> {
    match command {
        Command::Census(args) => census_tables(args, threads),
        Command::Stressed(args) => stressed_table(args, threads).map(|t| vec![t]),
        Command::Ttable(args) => ttable(args, threads).map(|t| vec![t]),
        Command::Weights(args) => weights(args, threads).map(|t| vec![t]),
        Command::Constants(args) => constants(args).map(|t| vec![t]),
        Command::Fm2m(args) => fm2m(args, threads).map(|t| vec![t]),
        Command::Ratios(args) => ratios(args, threads).map(|t| vec![t]),
    }
}

pub fn census_tables(args: &CensusArgs, threads: Option<usize>) -> Result<Vec<OutputTable>, CliError> {
    let config = OracleConfig {
        threads,
        ..OracleConfig::with_cap(args.cap)
    };
    let rows = census::census(args.max_genus, &config)?;
    let s = census::stressed_from_census(&rows)?;
    let max_depth = rows
        .iter()
        .filter_map(|r| r.depth_histogram.keys().next_back().copied())
        .max()
        .unwrap_or(0);

    let mut header: Vec<String> = ["g", "n_g", "t_g", "s_g", "n_hat_g"]
        .iter()
        .map(|h| h.to_string())
        .collect();
    header.extend((0..=max_depth).map(|q| format!("depth_{q}")));
    let mut main = OutputTable::with_header("census", header);
    for (row, &s_g) in rows.iter().zip(&s) {
        let mut cells = vec![
            row.genus.into(),
            row.n.into(),
            row.t.into(),
            s_g.into(),
            row.n_hat.into(),
        ];
        cells.extend(
            (0..=max_depth).map(|q| Cell::Int(row.depth_histogram.get(&q).copied().unwrap_or(0))),
        );
        main.push(cells);
    }

    let mut tables = vec![main];
    if args.emit_fm2m {
        let mut fm2m = OutputTable::new("fm2m", &["g", "k", "count"]);
        for row in &rows {
            for (&k, &count) in &row.fm2m_histogram {
                fm2m.push(vec![row.genus.into(), k.into(), count.into()]);
            }
        }
        tables.push(fm2m);
    }
    Ok(tables)
}

fn stressed_options(max_genus: u32, threads: Option<usize>) -> StressedOptions {
    StressedOptions {
        threads,
        ..StressedOptions::new(max_genus)
    }
}

pub fn stressed_table(args: &StressedArgs, threads: Option<usize>) -> Result<OutputTable, CliError> {
    let options = StressedOptions {
        max_length: args.max_length,
        ..stressed_options(args.max_genus, threads)
    };
    let table = stressed::count_stressed(&options)?;
    if table.complete_through < args.max_genus {
        log::warn!(
            "lengths capped at {}: s_g is exact only through genus {}",
            table.max_length,
            table.complete_through
        );
    }
    if args.by_length {
        let mut out = OutputTable::new("stressed_by_length", &["length", "g", "count"]);
        for (&(len, g), &count) in &table.by_length {
            out.push(vec![len.into(), g.into(), count.into()]);
        }
        Ok(out)
    } else {
        let mut out = OutputTable::new("stressed", &["g", "s_g"]);
        for g in 3..=table.complete_through {
            out.push(vec![g.into(), table.by_genus[g as usize].into()]);
        }
        Ok(out)
    }
}

fn exact_s(max_genus: u32, threads: Option<usize>) -> Result<Vec<Count>, CliError> {
    Ok(stressed::count_stressed(&stressed_options(max_genus, threads))?.by_genus)
}

pub fn ttable(args: &TtableArgs, threads: Option<usize>) -> Result<OutputTable, CliError> {
    let s = exact_s(args.max_genus, threads)?;
    let t = analytics::t_from_s(&s, args.max_genus)?;
    let Some(path) = &args.ng_file else {
        let mut out = OutputTable::new("ttable", &["g", "s_g", "t_g"]);
        for (g, (&s_g, &t_g)) in s.iter().zip(&t).enumerate() {
            out.push(vec![(g as u32).into(), s_g.into(), t_g.into()]);
        }
        return Ok(out);
    };
    let ng = read_ng_file(path)?;
    let nhat = analytics::nhat(&ng, &t)?;
    let mut out = OutputTable::new("ttable", &["g", "s_g", "t_g", "n_g", "n_hat_g"]);
    for (g, (&s_g, &t_g)) in s.iter().zip(&t).enumerate() {
        let known = |v: Option<&Count>| v.map_or(Cell::Empty, |&v| v.into());
        out.push(vec![
            (g as u32).into(),
            s_g.into(),
            t_g.into(),
            known(ng.values().get(g)),
            known(nhat.get(g)),
        ]);
    }
    Ok(out)
}

pub fn weights(args: &WeightsArgs, threads: Option<usize>) -> Result<OutputTable, CliError> {
    if args.max_length == 0 {
        return Err(CliError::Usage("--max-length must be at least 1".into()));
    }
    let table = stressed::count_stressed_by_length(args.max_length, threads)?;
    let sums = analytics::weight_partial_sums(&table, args.max_length)?;
    let mut out = OutputTable::new("weights", &["length", "partial_sum", "s_lower_bound"]);
    for (len, &sum) in (1u32..).zip(&sums) {
        out.push(vec![len.into(), sum.into(), analytics::s_constant_bound(sum).into()]);
    }
    Ok(out)
}

pub fn constants(args: &ConstantsArgs) -> Result<OutputTable, CliError> {
    if args.tolerance.is_nan() || args.tolerance <= 0.0 {
        return Err(CliError::Usage("--tolerance must be positive".into()));
    }
    let c = analytics::solve_constants(args.tolerance)?;
    let mut out = OutputTable::new("constants", &["name", "value"]);
    for (name, value) in [
        ("r151", c.r151),
        ("r154", c.r154),
        ("phi", c.phi),
        ("ratio_reference", c.ratio_reference),
    ] {
        out.push(vec![name.into(), value.into()]);
    }
    Ok(out)
}

pub fn fm2m(args: &Fm2mArgs, threads: Option<usize>) -> Result<OutputTable, CliError> {
    if args.k_min > args.k_max {
        return Err(CliError::Usage(format!(
            "--k-min {} exceeds --k-max {}",
            args.k_min, args.k_max
        )));
    }
    if args.k_max > i64::from(args.max_length) {
        return Err(CliError::Usage(format!(
            "--max-length {} must be at least --k-max {}",
            args.max_length, args.k_max
        )));
    }
    let length = args.max_length.max(1);
    let table = stressed::count_stressed_by_length(length, threads)?;
    let (s, note) = match (args.s_estimate, args.self_consistent_s) {
        (Some(s), _) => (s, format!("approximate, S = {s} supplied")),
        (None, true) => {
            let sums = analytics::weight_partial_sums(&table, length)?;
            let s = analytics::s_constant_bound(*sums.last().expect("length >= 1"));
            (s, format!("approximate, S truncated at ℓ = {length}"))
        }
        (None, false) => (
            PAPER_S_LOWER_BOUND,
            format!("approximate, S truncated at ℓ = {S_BOUND_LENGTH}"),
        ),
    };
    let rows = analytics::fm2m_limit_table(args.k_min, args.k_max, &table, s)?;
    let mut out = OutputTable::new("fm2m", &["k", "probability", "note"]);
    for row in rows {
        out.push(vec![row.k.into(), row.probability.into(), note.as_str().into()]);
    }
    Ok(out)
}

pub fn ratios(args: &RatiosArgs, threads: Option<usize>) -> Result<OutputTable, CliError> {
    let ng = read_ng_file(&args.ng_file)?;
    let max_genus = args.max_genus.unwrap_or(ng.max_genus());
    if max_genus > ng.max_genus() {
        return Err(CliError::Usage(format!(
            "--max-genus {max_genus} exceeds the n_g file, which stops at genus {}",
            ng.max_genus()
        )));
    }
    let s = exact_s(max_genus, threads)?;
    let t = analytics::t_from_s(&s, max_genus)?;
    let nhat = analytics::nhat(&ng, &t)?;
    let reference = analytics::solve_constants(1e-9)?.ratio_reference;
    let mut out = OutputTable::new(
        "ratios",
        &["g", "inv_g", "nhat_ratio", "s_ratio", "nhat_over_s", "reference"],
    );
    for row in analytics::ratio_diagnostics(&s, &nhat) {
        if row.flagged() {
            log::info!("genus {}: ratio with zero denominator left empty", row.genus);
        }
        out.push(vec![
            row.genus.into(),
            row.inv_genus.into(),
            row.nhat_ratio.into(),
            row.s_ratio.into(),
            row.nhat_over_s.into(),
            reference.into(),
        ]);
    }
    Ok(out)
}
