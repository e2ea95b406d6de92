//! Command-line driver: `roots`, `weyl`, `equidist`, `selftest`.

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::factorize::{FactorTable, ModulusFilter};
use crate::polynomial::{eval_reduced, IntPolynomial, IrreducibilityEvidence};
use crate::roots::RootCache;
use crate::selftest;
use crate::stats::{
    run_experiment, CheckpointReport, ExperimentOptions, Rect, SequenceSpec,
};

#[derive(Parser, Debug)]
#[command(name = "equidist", version, about = "Roots of polynomial congruences and joint equidistribution experiments")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Print the root set of f mod n for every modulus up to the cutoff
    Roots(RootsArgs),
    /// Normalized Weyl averages per checkpoint and frequency
    Weyl(WeylArgs),
    /// Full equidistribution report (boxes, discrepancy, ratio, densities)
    Equidist(EquidistArgs),
    /// Run the built-in exact-identity suites
    Selftest,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum FilterArg {
    All,
    Prime,
    Squarefree,
}

impl FilterArg {
    fn to_filter(self) -> ModulusFilter {
        match self {
            FilterArg::All => ModulusFilter::All,
            FilterArg::Prime => ModulusFilter::Prime,
            FilterArg::Squarefree => ModulusFilter::Squarefree,
        }
    }

    fn name(self) -> &'static str {
        match self {
            FilterArg::All => "all",
            FilterArg::Prime => "prime",
            FilterArg::Squarefree => "squarefree",
        }
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum FormatArg {
    Csv,
    Json,
}

#[derive(Args, Debug)]
pub struct RootsArgs {
    /// Ascending comma-separated coefficients of f (constant term first)
    #[arg(long, allow_hyphen_values = true)]
    pub f: String,
    /// Largest modulus
    #[arg(long)]
    pub x: u64,
    #[arg(long, value_enum, default_value = "all")]
    pub moduli: FilterArg,
    /// Root-set cache file (overridden default: env EQUIDIST_CACHE)
    #[arg(long)]
    pub cache: Option<PathBuf>,
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long)]
    pub threads: Option<usize>,
}

#[derive(Args, Debug)]
pub struct WeylArgs {
    #[arg(long, allow_hyphen_values = true)]
    pub f: String,
    /// Defaults to f when omitted
    #[arg(long, allow_hyphen_values = true)]
    pub g: Option<String>,
    #[arg(long)]
    pub x: u64,
    /// Ascending cutoffs ending at x (default: powers of 10 up to x)
    #[arg(long, value_delimiter = ',')]
    pub checkpoints: Option<Vec<u64>>,
    #[arg(long, value_enum, default_value = "all")]
    pub moduli: FilterArg,
    /// Frequencies "h1:h2[,h1:h2...]"
    #[arg(long, allow_hyphen_values = true)]
    pub freq: String,
    /// Permit the trivial frequency (0,0)
    #[arg(long, default_value_t = false)]
    pub allow_zero: bool,
    #[arg(long, value_enum, default_value = "csv")]
    pub format: FormatArg,
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long)]
    pub threads: Option<usize>,
}

#[derive(Args, Debug)]
pub struct EquidistArgs {
    #[arg(long, allow_hyphen_values = true)]
    pub f: String,
    #[arg(long, allow_hyphen_values = true)]
    pub g: Option<String>,
    #[arg(long)]
    pub x: u64,
    #[arg(long, value_delimiter = ',')]
    pub checkpoints: Option<Vec<u64>>,
    #[arg(long, value_enum, default_value = "all")]
    pub moduli: FilterArg,
    /// Extra Weyl frequencies "h1:h2[,...]" to include in the report
    #[arg(long, allow_hyphen_values = true)]
    pub freq: Option<String>,
    /// Rectangles "a:b:c:d[,a:b:c:d...]" (default 0:0.5:0:0.5)
    #[arg(long)]
    pub rect: Option<String>,
    /// Star-discrepancy grid resolution
    #[arg(long, default_value_t = 256)]
    pub grid: u32,
    /// Diagonal concentration width (used when f = g)
    #[arg(long, default_value_t = 0.0)]
    pub eps: f64,
    #[arg(long, default_value_t = false)]
    pub allow_zero: bool,
    #[arg(long, value_enum, default_value = "json")]
    pub format: FormatArg,
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long)]
    pub threads: Option<usize>,
}

/// Fully parsed run configuration shared by the computational commands.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub f: IntPolynomial,
    pub g: IntPolynomial,
    pub x: u64,
    pub checkpoints: Vec<u64>,
    pub filter: ModulusFilter,
    pub filter_name: &'static str,
    pub frequencies: Vec<(i64, i64)>,
    pub rectangles: Vec<Rect>,
    pub grid: u32,
    pub eps: f64,
    pub format: FormatArg,
    pub out: Option<PathBuf>,
    pub cache: Option<PathBuf>,
    pub threads: Option<usize>,
}

pub fn main() -> i32 {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            1
        }
    }
}

pub fn run(cli: Cli) -> Result<i32> {
    match cli.command {
        Command::Roots(args) => {
            let cfg = roots_config(&args)?;
            let text = with_pool(cfg.threads, || cmd_roots(&cfg))?;
            write_output(cfg.out.as_deref(), &text)?;
            Ok(0)
        }
        Command::Weyl(args) => {
            let cfg = weyl_config(&args)?;
            let text = with_pool(cfg.threads, || cmd_weyl(&cfg))?;
            write_output(cfg.out.as_deref(), &text)?;
            Ok(0)
        }
        Command::Equidist(args) => {
            let cfg = equidist_config(&args)?;
            let text = with_pool(cfg.threads, || cmd_equidist(&cfg))?;
            write_output(cfg.out.as_deref(), &text)?;
            Ok(0)
        }
        Command::Selftest => {
            let (text, passed) = cmd_selftest();
            print!("{text}");
            Ok(if passed { 0 } else { 1 })
        }
    }
}

fn with_pool<T: Send>(threads: Option<usize>, body: impl FnOnce() -> T + Send) -> T {
    match threads {
        Some(t) => rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build()
            .expect("thread pool")
            .install(body),
        None => body(),
    }
}

fn write_output(path: Option<&Path>, text: &str) -> Result<()> {
    match path {
        Some(p) => fs::write(p, text).map_err(|e| Error::io(p.display().to_string(), e)),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn cache_path(flag: &Option<PathBuf>) -> Option<PathBuf> {
    flag.clone()
        .or_else(|| std::env::var_os("EQUIDIST_CACHE").map(PathBuf::from))
}

/// Default checkpoints: powers of 10 up to x, always ending at x.
fn default_checkpoints(x: u64) -> Vec<u64> {
    let mut cps = Vec::new();
    let mut c = 10u64;
    while c < x {
        cps.push(c);
        match c.checked_mul(10) {
            Some(next) => c = next,
            None => break,
        }
    }
    cps.push(x);
    cps
}

fn validate_checkpoints(cps: Option<&Vec<u64>>, x: u64) -> Result<Vec<u64>> {
    match cps {
        None => Ok(default_checkpoints(x)),
        Some(list) => {
            if list.is_empty() {
                return Err(Error::Config("checkpoint list is empty".into()));
            }
            for w in list.windows(2) {
                if w[0] >= w[1] {
                    return Err(Error::Config("checkpoints must be strictly ascending".into()));
                }
            }
            if *list.last().unwrap() != x {
                return Err(Error::Config(format!(
                    "last checkpoint must equal x = {x}"
                )));
            }
            if list[0] == 0 {
                return Err(Error::Config("checkpoints start at 1".into()));
            }
            Ok(list.clone())
        }
    }
}

/// "h1:h2[,h1:h2...]", deduplicated with order preserved.
fn parse_frequencies(s: &str, allow_zero: bool) -> Result<Vec<(i64, i64)>> {
    let mut out: Vec<(i64, i64)> = Vec::new();
    let mut pos = 0usize;
    for token in s.split(',') {
        let err = |message: String| Error::Parse {
            input: s.to_string(),
            position: pos,
            message,
        };
        let (a, b) = token
            .split_once(':')
            .ok_or_else(|| err(format!("expected h1:h2, got {token:?}")))?;
        let h1: i64 = a.trim().parse().map_err(|_| err(format!("invalid integer {a:?}")))?;
        let h2: i64 = b.trim().parse().map_err(|_| err(format!("invalid integer {b:?}")))?;
        if (h1, h2) == (0, 0) && !allow_zero {
            return Err(err("frequency (0,0) requires --allow-zero".into()));
        }
        if !out.contains(&(h1, h2)) {
            out.push((h1, h2));
        }
        pos += token.len() + 1;
    }
    if out.is_empty() {
        return Err(Error::Config("frequency list is empty".into()));
    }
    Ok(out)
}

fn parse_rects(s: &str) -> Result<Vec<Rect>> {
    s.split(',').map(Rect::parse).collect()
}

fn parse_poly_pair(f: &str, g: &Option<String>) -> Result<(IntPolynomial, IntPolynomial)> {
    let pf = IntPolynomial::parse(f)?;
    let pg = match g {
        Some(s) => IntPolynomial::parse(s)?,
        None => pf.clone(),
    };
    Ok((pf, pg))
}

fn roots_config(args: &RootsArgs) -> Result<RunConfig> {
    let f = IntPolynomial::parse(&args.f)?;
    Ok(RunConfig {
        g: f.clone(),
        f,
        x: args.x,
        checkpoints: vec![args.x],
        filter: args.moduli.to_filter(),
        filter_name: args.moduli.name(),
        frequencies: Vec::new(),
        rectangles: Vec::new(),
        grid: 0,
        eps: 0.0,
        format: FormatArg::Csv,
        out: args.out.clone(),
        cache: cache_path(&args.cache),
        threads: args.threads,
    })
}

fn weyl_config(args: &WeylArgs) -> Result<RunConfig> {
    let (f, g) = parse_poly_pair(&args.f, &args.g)?;
    Ok(RunConfig {
        f,
        g,
        x: args.x,
        checkpoints: validate_checkpoints(args.checkpoints.as_ref(), args.x)?,
        filter: args.moduli.to_filter(),
        filter_name: args.moduli.name(),
        frequencies: parse_frequencies(&args.freq, args.allow_zero)?,
        rectangles: Vec::new(),
        grid: 0,
        eps: 0.0,
        format: args.format,
        out: args.out.clone(),
        cache: None,
        threads: args.threads,
    })
}

fn equidist_config(args: &EquidistArgs) -> Result<RunConfig> {
    let (f, g) = parse_poly_pair(&args.f, &args.g)?;
    let frequencies = match &args.freq {
        Some(s) => parse_frequencies(s, args.allow_zero)?,
        None => Vec::new(),
    };
    let rectangles = match &args.rect {
        Some(s) => parse_rects(s)?,
        None => vec![Rect::parse("0:0.5:0:0.5").expect("default rectangle")],
    };
    Ok(RunConfig {
        f,
        g,
        x: args.x,
        checkpoints: validate_checkpoints(args.checkpoints.as_ref(), args.x)?,
        filter: args.moduli.to_filter(),
        filter_name: args.moduli.name(),
        frequencies,
        rectangles,
        grid: args.grid,
        eps: args.eps,
        format: args.format,
        out: args.out.clone(),
        cache: None,
        threads: args.threads,
    })
}

fn warn_inconclusive(spec: &SequenceSpec) {
    let (ef, eg) = spec.irreducibility();
    for (label, poly, ev) in [("f", spec.f(), ef), ("g", spec.g(), eg)] {
        if let IrreducibilityEvidence::Inconclusive { primes_tested } = ev {
            eprintln!(
                "warning: irreducibility of {label} = {poly} is unverified \
                 ({primes_tested} primes tested); proceeding on the stated hypothesis"
            );
        }
    }
}

/// Fixed 12-significant-digit format shared by the CSV writers.
fn fmt12(v: f64) -> String {
    format!("{v:.11e}")
}

fn opt12(v: Option<f64>) -> String {
    v.map(fmt12).unwrap_or_default()
}

// ---------------------------------------------------------------------------
// roots

/// One line per modulus: `n:r:mu1,mu2,...`
fn root_line(n: u64, roots: &[u64]) -> String {
    let list = roots.iter().map(|r| r.to_string()).collect::<Vec<_>>().join(",");
    format!("{n}:{}:{list}", roots.len())
}

fn parse_cache_line(line: &str, f: &IntPolynomial) -> Result<(u64, Vec<u64>)> {
    let mut parts = line.splitn(3, ':');
    let bad = |n: u64, reason: &str| Error::CacheInvalid { n, reason: reason.to_string() };
    let n: u64 = parts
        .next()
        .and_then(|s| s.parse().ok())
        .ok_or_else(|| bad(0, "missing modulus"))?;
    let count: usize =
        parts.next().and_then(|s| s.parse().ok()).ok_or_else(|| bad(n, "missing count"))?;
    let rest = parts.next().ok_or_else(|| bad(n, "missing root list"))?;
    let roots: Vec<u64> = if rest.is_empty() {
        Vec::new()
    } else {
        rest.split(',')
            .map(|t| t.parse::<u64>().map_err(|_| bad(n, "invalid root")))
            .collect::<Result<_>>()?
    };
    if roots.len() != count {
        return Err(bad(n, "count disagrees with list"));
    }
    if !roots.windows(2).all(|w| w[0] < w[1]) || roots.iter().any(|&r| r >= n) {
        return Err(bad(n, "roots must be sorted and smaller than the modulus"));
    }
    let reduced = f.reduce_mod(n);
    if roots.iter().any(|&mu| eval_reduced(&reduced, mu, n) != 0) {
        return Err(bad(n, "entry does not match the polynomial"));
    }
    Ok((n, roots))
}

fn load_cache(path: &Path, f: &IntPolynomial) -> Result<BTreeMap<u64, Vec<u64>>> {
    if !path.exists() {
        return Ok(BTreeMap::new());
    }
    let text =
        fs::read_to_string(path).map_err(|e| Error::io(path.display().to_string(), e))?;
    let mut map = BTreeMap::new();
    for line in text.lines() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let (n, roots) = parse_cache_line(line, f)?;
        map.insert(n, roots);
    }
    Ok(map)
}

fn save_cache(path: &Path, map: &BTreeMap<u64, Vec<u64>>) -> Result<()> {
    let mut text = String::new();
    for (&n, roots) in map {
        text.push_str(&root_line(n, roots));
        text.push('\n');
    }
    fs::write(path, text).map_err(|e| Error::io(path.display().to_string(), e))
}

pub fn cmd_roots(cfg: &RunConfig) -> Result<String> {
    let table = FactorTable::build(cfg.x)?;
    let mut cached = match &cfg.cache {
        Some(p) => load_cache(p, &cfg.f)?,
        None => BTreeMap::new(),
    };
    let mut computed_any = false;
    let mut root_cache: Option<RootCache> = None;
    let mut out = String::new();
    for (n, fac) in table.moduli(cfg.filter) {
        if let std::collections::btree_map::Entry::Vacant(slot) = cached.entry(n) {
            let cache = match &root_cache {
                Some(c) => c,
                None => {
                    root_cache = Some(RootCache::build(&cfg.f, &table)?);
                    root_cache.as_ref().unwrap()
                }
            };
            slot.insert(cache.assemble(n, &fac));
            computed_any = true;
        }
        out.push_str(&root_line(n, &cached[&n]));
        out.push('\n');
    }
    if computed_any {
        if let Some(p) = &cfg.cache {
            save_cache(p, &cached)?;
        }
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// weyl

#[derive(Serialize)]
struct WeylRow {
    x: u64,
    h1: i64,
    h2: i64,
    re: f64,
    im: f64,
    abs: f64,
    m: u64,
}

#[derive(Serialize)]
struct WeylReportJson {
    f: String,
    g: String,
    moduli: &'static str,
    rows: Vec<WeylRow>,
}

pub fn cmd_weyl(cfg: &RunConfig) -> Result<String> {
    let spec = SequenceSpec::new(cfg.f.clone(), cfg.g.clone(), cfg.x, cfg.filter)?;
    warn_inconclusive(&spec);
    let opts = ExperimentOptions {
        checkpoints: cfg.checkpoints.clone(),
        frequencies: cfg.frequencies.clone(),
        rectangles: Vec::new(),
        grid_resolution: None,
        diagonal_eps: None,
    };
    let reports = run_experiment(&spec, &opts)?;
    let rows: Vec<WeylRow> = reports
        .iter()
        .flat_map(|rep| {
            rep.weyl.iter().map(|w| WeylRow {
                x: rep.x,
                h1: w.h1,
                h2: w.h2,
                re: w.re,
                im: w.im,
                abs: w.abs,
                m: rep.m_pairs,
            })
        })
        .collect();
    match cfg.format {
        FormatArg::Csv => {
            let mut out = String::from("x,h1,h2,re,im,abs,m\n");
            for r in rows {
                out.push_str(&format!(
                    "{},{},{},{},{},{},{}\n",
                    r.x,
                    r.h1,
                    r.h2,
                    fmt12(r.re),
                    fmt12(r.im),
                    fmt12(r.abs),
                    r.m
                ));
            }
            Ok(out)
        }
        FormatArg::Json => {
            let report = WeylReportJson {
                f: cfg.f.coeff_string(),
                g: cfg.g.coeff_string(),
                moduli: cfg.filter_name,
                rows,
            };
            Ok(serde_json::to_string_pretty(&report).expect("serializable") + "\n")
        }
    }
}

// ---------------------------------------------------------------------------
// equidist

#[derive(Serialize)]
struct EquidistReportJson {
    f: String,
    f_pretty: String,
    g: String,
    g_pretty: String,
    moduli: &'static str,
    x: u64,
    degree_product: usize,
    grid_resolution: u32,
    diagonal_eps: Option<f64>,
    checkpoints: Vec<CheckpointReport>,
}

pub fn cmd_equidist(cfg: &RunConfig) -> Result<String> {
    let spec = SequenceSpec::new(cfg.f.clone(), cfg.g.clone(), cfg.x, cfg.filter)?;
    warn_inconclusive(&spec);
    let diagonal_eps = spec.same_polynomials().then_some(cfg.eps);
    let opts = ExperimentOptions {
        checkpoints: cfg.checkpoints.clone(),
        frequencies: cfg.frequencies.clone(),
        rectangles: cfg.rectangles.clone(),
        grid_resolution: Some(cfg.grid),
        diagonal_eps,
    };
    let reports = run_experiment(&spec, &opts)?;
    match cfg.format {
        FormatArg::Json => {
            let report = EquidistReportJson {
                f: cfg.f.coeff_string(),
                f_pretty: cfg.f.to_string(),
                g: cfg.g.coeff_string(),
                g_pretty: cfg.g.to_string(),
                moduli: cfg.filter_name,
                x: cfg.x,
                degree_product: cfg.f.degree() * cfg.g.degree(),
                grid_resolution: cfg.grid,
                diagonal_eps,
                checkpoints: reports,
            };
            Ok(serde_json::to_string_pretty(&report).expect("serializable") + "\n")
        }
        FormatArg::Csv => Ok(equidist_csv(cfg, &reports)),
    }
}

fn equidist_csv(cfg: &RunConfig, reports: &[CheckpointReport]) -> String {
    let mut header = vec!["x".to_string(), "m".to_string(), "sum_rs_all".to_string()];
    for &(h1, h2) in &cfg.frequencies {
        header.push(format!("w_abs_{h1}_{h2}"));
    }
    for (i, _) in cfg.rectangles.iter().enumerate() {
        header.push(format!("box{i}_observed"));
        header.push(format!("box{i}_deviation"));
    }
    header.extend(
        [
            "disc_lower",
            "disc_upper",
            "counting_ratio",
            "density_f",
            "density_g",
            "density_joint",
            "diag_fraction",
        ]
        .map(String::from),
    );
    let mut out = header.join(",");
    out.push('\n');
    for rep in reports {
        let mut row = vec![rep.x.to_string(), rep.m_pairs.to_string(), rep.sum_rs_all.to_string()];
        for w in &rep.weyl {
            row.push(fmt12(w.abs));
        }
        for b in &rep.boxes {
            row.push(fmt12(b.observed));
            row.push(fmt12(b.deviation));
        }
        row.push(opt12(rep.discrepancy.as_ref().map(|d| d.lower)));
        row.push(opt12(rep.discrepancy.as_ref().map(|d| d.upper)));
        row.push(opt12(rep.counting_ratio));
        row.push(opt12(rep.split.as_ref().map(|s| s.density_f)));
        row.push(opt12(rep.split.as_ref().map(|s| s.density_g)));
        row.push(opt12(rep.split.as_ref().map(|s| s.density_joint)));
        row.push(opt12(rep.diagonal.as_ref().map(|d| d.fraction)));
        out.push_str(&row.join(","));
        out.push('\n');
    }
    out
}

// ---------------------------------------------------------------------------
// selftest

pub fn cmd_selftest() -> (String, bool) {
    let report = selftest::run_selftest();
    (report.render(), report.passed())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn frequencies_dedup_preserves_order() {
        let v = parse_frequencies("1:0,0:1,1:0,2:-3", false).unwrap();
        assert_eq!(v, vec![(1, 0), (0, 1), (2, -3)]);
        assert!(parse_frequencies("0:0", false).is_err());
        assert!(parse_frequencies("0:0", true).is_ok());
        assert!(parse_frequencies("1", false).is_err());
        assert!(parse_frequencies("1:b", false).is_err());
    }

    #[test]
    fn default_checkpoint_ladder() {
        assert_eq!(default_checkpoints(100_000), vec![10, 100, 1000, 10_000, 100_000]);
        assert_eq!(default_checkpoints(5000), vec![10, 100, 1000, 5000]);
        assert_eq!(default_checkpoints(5), vec![5]);
        assert_eq!(default_checkpoints(10), vec![10]);
    }

    #[test]
    fn checkpoint_validation() {
        assert!(validate_checkpoints(Some(&vec![10, 5]), 10).is_err());
        assert!(validate_checkpoints(Some(&vec![10, 20]), 30).is_err());
        assert!(validate_checkpoints(Some(&vec![0, 10]), 10).is_err());
        assert_eq!(validate_checkpoints(Some(&vec![5, 10]), 10).unwrap(), vec![5, 10]);
    }

    #[test]
    fn fixed_precision_format() {
        assert_eq!(fmt12(0.25), "2.50000000000e-1");
        assert_eq!(fmt12(-1.0 / 3.0), "-3.33333333333e-1");
        assert_eq!(fmt12(196814.0), "1.96814000000e5");
    }

    #[test]
    fn cache_line_round_trip() {
        let f = IntPolynomial::parse("1,0,1").unwrap();
        let line = root_line(65, &[8, 18, 47, 57]);
        assert_eq!(line, "65:4:8,18,47,57");
        let (n, roots) = parse_cache_line(&line, &f).unwrap();
        assert_eq!((n, roots), (65, vec![8, 18, 47, 57]));
        // empty root set keeps its trailing colon
        let line = root_line(3, &[]);
        assert_eq!(line, "3:0:");
        let (n, roots) = parse_cache_line(&line, &f).unwrap();
        assert_eq!((n, roots), (3, vec![]));
    }

    #[test]
    fn cache_rejects_wrong_polynomial() {
        let g = IntPolynomial::parse("-2,0,1").unwrap();
        // these are roots of x^2+1 mod 65, not of x^2-2
        let err = parse_cache_line("65:4:8,18,47,57", &g).unwrap_err();
        assert!(matches!(err, Error::CacheInvalid { n: 65, .. }));
        let f = IntPolynomial::parse("1,0,1").unwrap();
        assert!(parse_cache_line("65:2:8,18,47,57", &f).is_err());
        assert!(parse_cache_line("65:4:8,18,18,57", &f).is_err());
        assert!(parse_cache_line("65:4:8,18,47,70", &f).is_err());
    }
}
