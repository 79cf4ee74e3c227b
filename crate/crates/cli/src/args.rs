use binrel::tablegen::{ConfidenceSource, Format, Preset, RenderOptions};
use binrel::{Probability, ReliabilityMethod, ZConvention};
use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};

/// Confidence, reliability and assurance for binomial success/failure trials.
///
/// Probabilities are written as fractions (0.95) or with a percent sign
/// (95%). Scalar answers print as percentages unless --fraction is given.
#[derive(Debug, Parser)]
#[command(name = "binrel", version)]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalOpts,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct GlobalOpts {
    /// Absolute root-finder tolerance in (0, 0.1]. Presets default to 1e-3,
    /// everything else to 1e-10.
    #[arg(long, global = true, value_parser = parse_tolerance)]
    pub tolerance: Option<f64>,

    /// Table layout: csv, markdown or text.
    #[arg(long, global = true, env = "BINREL_FORMAT", default_value = "csv", value_parser = parse_format)]
    pub format: Format,

    /// Decimal places [default: 1 for percentages, 6 for fractions]
    #[arg(long, global = true)]
    pub precision: Option<usize>,

    /// Print fractions instead of percentages.
    #[arg(long, global = true)]
    pub fraction: bool,
}

impl GlobalOpts {
    pub fn render_options(&self) -> RenderOptions {
        let percent = !self.fraction;
        RenderOptions {
            precision: self.precision.unwrap_or(if percent { 1 } else { 6 }),
            percent,
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Confidence that the true reliability is at least --reliability.
    Confidence {
        #[command(flatten)]
        outcome: OutcomeArgs,
        #[arg(long, value_parser = parse_probability)]
        reliability: Probability,
    },
    /// Reliability demonstrated at --confidence.
    Reliability {
        #[command(flatten)]
        outcome: OutcomeArgs,
        #[arg(long, value_parser = parse_probability)]
        confidence: Probability,
        #[arg(long, value_enum, default_value_t = Method::Exact)]
        method: Method,
        /// Use the one-sided normal quantile in the Wilson bound.
        #[arg(long)]
        one_sided_z: bool,
    },
    /// Assurance: the level at which reliability equals confidence.
    Assurance {
        #[command(flatten)]
        outcome: OutcomeArgs,
    },
    /// Smallest sample count reaching a target assurance or confidence.
    SampleSize {
        #[arg(long, value_enum)]
        metric: Metric,
        #[arg(long, value_parser = parse_probability)]
        target: Probability,
        /// Required with --metric confidence.
        #[arg(long, value_parser = parse_probability)]
        reliability: Option<Probability>,
        #[arg(long, default_value_t = 0)]
        failures: u64,
    },
    /// A published table or a custom grid.
    Table(TableArgs),
    /// Accuracy of the Wilson bounds against exact inversion, one row per
    /// failure count. Values are fractions.
    Sweep {
        #[arg(long)]
        samples: u64,
        #[arg(long, value_enum, default_value_t = Source::Binomial)]
        c_source: Source,
        /// Add r_point, confidence and err_exact columns.
        #[arg(long)]
        detail: bool,
        #[arg(long)]
        one_sided_z: bool,
    },
}

#[derive(Debug, Args)]
pub struct OutcomeArgs {
    #[arg(long)]
    pub samples: u64,
    #[arg(long, default_value_t = 0)]
    pub failures: u64,
}

#[derive(Debug, Args)]
#[command(group(ArgGroup::new("grid").args(["preset", "quantity"]).required(true)))]
pub struct TableArgs {
    #[arg(long, value_enum, conflicts_with_all = ["samples", "failures", "confidence", "reliability"])]
    pub preset: Option<PresetArg>,

    #[arg(long, value_enum, requires_all = ["samples", "failures"])]
    pub quantity: Option<QuantityArg>,

    /// Column sample counts: comma-separated `start..end:step` ranges
    /// (inclusive) or single values. Each range becomes a panel.
    #[arg(long, value_parser = parse_ranges)]
    pub samples: Option<Ranges>,

    /// Row failure counts, same syntax as --samples.
    #[arg(long, value_parser = parse_ranges)]
    pub failures: Option<Ranges>,

    /// Fixed confidence for --quantity reliability.
    #[arg(long, value_parser = parse_probability)]
    pub confidence: Option<Probability>,

    /// Fixed reliability for --quantity confidence.
    #[arg(long, value_parser = parse_probability)]
    pub reliability: Option<Probability>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Exact,
    Wilson,
    WilsonCc,
    ClosedForm,
}

impl From<Method> for ReliabilityMethod {
    fn from(m: Method) -> Self {
        match m {
            Method::Exact => ReliabilityMethod::BrentExact,
            Method::Wilson => ReliabilityMethod::Wilson,
            Method::WilsonCc => ReliabilityMethod::WilsonCc,
            Method::ClosedForm => ReliabilityMethod::ClosedFormZeroFailure,
        }
    }
}

pub fn z_convention(one_sided: bool) -> ZConvention {
    if one_sided {
        ZConvention::OneSided
    } else {
        ZConvention::TwoSided
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Metric {
    Assurance,
    Confidence,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum PresetArg {
    Table1,
    Table2,
    Table3,
}

impl From<PresetArg> for Preset {
    fn from(p: PresetArg) -> Self {
        match p {
            PresetArg::Table1 => Preset::Table1,
            PresetArg::Table2 => Preset::Table2,
            PresetArg::Table3 => Preset::Table3,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum QuantityArg {
    Reliability,
    Confidence,
    Assurance,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Source {
    /// Confidence from the binomial survival function.
    Binomial,
    /// Confidence from the zero-failure formula 1 - r^n.
    ZeroFailure,
}

impl From<Source> for ConfidenceSource {
    fn from(s: Source) -> Self {
        match s {
            Source::Binomial => ConfidenceSource::Binomial,
            Source::ZeroFailure => ConfidenceSource::ZeroFailure,
        }
    }
}

/// Groups of axis values, one group per comma-separated range.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ranges(pub Vec<Vec<u64>>);

impl Ranges {
    pub fn values(&self) -> Vec<u64> {
        self.0.iter().flatten().copied().collect()
    }

    pub fn widths(&self) -> Vec<usize> {
        self.0.iter().map(Vec::len).collect()
    }
}

pub fn parse_probability(s: &str) -> Result<Probability, String> {
    let s = s.trim();
    let value = if let Some(pct) = s.strip_suffix('%') {
        let v: f64 = pct
            .trim()
            .parse()
            .map_err(|_| format!("'{s}' is not a percentage"))?;
        if !(0.0..=100.0).contains(&v) {
            return Err(format!("{s} is outside 0%..100%"));
        }
        v / 100.0
    } else {
        let v: f64 = s
            .parse()
            .map_err(|_| format!("'{s}' is not a probability"))?;
        if v > 1.0 {
            return Err(format!("{s} exceeds 1; write {s}% for a percentage"));
        }
        v
    };
    Probability::new(value).map_err(|e| e.to_string())
}

pub fn parse_tolerance(s: &str) -> Result<f64, String> {
    let v: f64 = s
        .trim()
        .parse()
        .map_err(|_| format!("'{s}' is not a number"))?;
    if v > 0.0 && v <= 0.1 {
        Ok(v)
    } else {
        Err(format!("tolerance must lie in (0, 0.1], got {s}"))
    }
}

pub fn parse_format(s: &str) -> Result<Format, String> {
    s.parse().map_err(|e: binrel::Error| e.to_string())
}

pub fn parse_ranges(s: &str) -> Result<Ranges, String> {
    s.split(',')
        .map(parse_range)
        .collect::<Result<_, _>>()
        .map(Ranges)
}

fn parse_range(s: &str) -> Result<Vec<u64>, String> {
    let s = s.trim();
    let int = |t: &str| {
        t.trim()
            .parse::<u64>()
            .map_err(|_| format!("'{t}' is not a non-negative integer in range '{s}'"))
    };
    let Some((start, rest)) = s.split_once("..") else {
        return Ok(vec![int(s)?]);
    };
    let (end, step) = match rest.split_once(':') {
        Some((end, step)) => (int(end)?, int(step)?),
        None => (int(rest)?, 1),
    };
    let start = int(start)?;
    if step == 0 {
        return Err(format!("step must be positive in '{s}'"));
    }
    if start > end {
        return Err(format!("range '{s}' runs backwards"));
    }
    Ok((start..=end).step_by(step as usize).collect())
}
