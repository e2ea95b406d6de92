//! The normalized root-pair sequence and its equidistribution statistics:
//! Weyl averages, box counts, a star-discrepancy bracket, the counting
//! ratio, split-prime densities, and diagonal concentration.
//!
//! For a pair of primitive polynomials f, g of degree > 1 and each modulus
//! n, the pairs (mu/n, nu/n) run over roots mu of f and nu of g mod n,
//! ordered by (n, mu, nu). All interval membership is decided on exact
//! rationals; floating point enters only in trig sums and final ratios.
//!
//! Moduli are processed in fixed-size blocks. Blocks may run in parallel,
//! but partial results are merged in ascending block order, so every
//! reported number is independent of the thread count.

use num_complex::Complex64;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::expsum::exp_sum_raw;
use crate::factorize::{FactorTable, ModulusFilter};
use crate::modular::gcd_u64;
use crate::polynomial::{IntPolynomial, IrreducibilityEvidence};
use crate::roots::RootCache;

const BLOCK_SIZE: u64 = 8192;
const MAX_GRID_RESOLUTION: u32 = 4096;
const IRREDUCIBILITY_BUDGET: usize = 8;

/// Exact nonnegative rational in lowest terms, used for box boundaries.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Frac {
    num: u64,
    den: u64,
}

impl Frac {
    pub fn new(num: u64, den: u64) -> Result<Frac> {
        if den == 0 {
            return Err(Error::MalformedRectangle("zero denominator".into()));
        }
        let g = gcd_u64(num, den).max(1);
        Ok(Frac { num: num / g, den: den / g })
    }

    /// Parse a decimal literal such as "0", "0.25", or "1".
    pub fn parse(s: &str) -> Result<Frac> {
        let s = s.trim();
        let bad = |msg: &str| Error::MalformedRectangle(format!("{msg}: {s:?}"));
        if s.is_empty() {
            return Err(bad("empty bound"));
        }
        let (int_part, frac_part) = match s.split_once('.') {
            Some((i, f)) => (i, f),
            None => (s, ""),
        };
        if frac_part.len() > 9 {
            return Err(bad("too many decimal digits"));
        }
        if !int_part.chars().all(|c| c.is_ascii_digit())
            || !frac_part.chars().all(|c| c.is_ascii_digit())
            || (int_part.is_empty() && frac_part.is_empty())
        {
            return Err(bad("invalid decimal"));
        }
        let int_val: u64 = if int_part.is_empty() { 0 } else { int_part.parse().map_err(|_| bad("integer part too large"))? };
        let den = 10u64.pow(frac_part.len() as u32);
        let frac_val: u64 = if frac_part.is_empty() { 0 } else { frac_part.parse().unwrap() };
        Frac::new(int_val * den + frac_val, den)
    }

    pub fn to_f64(self) -> f64 {
        self.num as f64 / self.den as f64
    }

    /// self < a/n, exactly.
    #[inline]
    fn lt_root(self, a: u64, n: u64) -> bool {
        (self.num as u128) * (n as u128) < (a as u128) * (self.den as u128)
    }

    /// self > a/n, exactly.
    #[inline]
    fn gt_root(self, a: u64, n: u64) -> bool {
        (self.num as u128) * (n as u128) > (a as u128) * (self.den as u128)
    }

    fn le_one(self) -> bool {
        self.num <= self.den
    }
}

impl std::fmt::Display for Frac {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

/// Open rectangle (alpha,beta) x (gamma,delta) inside the unit square.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Rect {
    pub alpha: Frac,
    pub beta: Frac,
    pub gamma: Frac,
    pub delta: Frac,
}

impl Rect {
    pub fn new(alpha: Frac, beta: Frac, gamma: Frac, delta: Frac) -> Result<Rect> {
        let ordered = |lo: Frac, hi: Frac| {
            (lo.num as u128) * (hi.den as u128) < (hi.num as u128) * (lo.den as u128)
        };
        if !ordered(alpha, beta) || !ordered(gamma, delta) || !beta.le_one() || !delta.le_one() {
            return Err(Error::MalformedRectangle(format!(
                "need 0 <= {alpha} < {beta} <= 1 and 0 <= {gamma} < {delta} <= 1"
            )));
        }
        Ok(Rect { alpha, beta, gamma, delta })
    }

    /// "a:b:c:d" with decimal bounds.
    pub fn parse(s: &str) -> Result<Rect> {
        let parts: Vec<&str> = s.split(':').collect();
        if parts.len() != 4 {
            return Err(Error::MalformedRectangle(format!(
                "expected a:b:c:d, got {s:?}"
            )));
        }
        Rect::new(
            Frac::parse(parts[0])?,
            Frac::parse(parts[1])?,
            Frac::parse(parts[2])?,
            Frac::parse(parts[3])?,
        )
    }

    pub fn area(&self) -> f64 {
        (self.beta.to_f64() - self.alpha.to_f64()) * (self.delta.to_f64() - self.gamma.to_f64())
    }

    pub fn label(&self) -> String {
        format!("({},{})x({},{})", self.alpha, self.beta, self.gamma, self.delta)
    }
}

impl std::fmt::Display for Rect {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.label())
    }
}

/// The root-pair sequence: polynomials, cutoff, moduli filter. Ordering is
/// fixed (n ascending, then root of f ascending, then root of g ascending)
/// so runs are reproducible.
#[derive(Debug, Clone)]
pub struct SequenceSpec {
    f: IntPolynomial,
    g: IntPolynomial,
    limit: u64,
    filter: ModulusFilter,
    evidence_f: IrreducibilityEvidence,
    evidence_g: IrreducibilityEvidence,
}

impl SequenceSpec {
    pub fn new(
        f: IntPolynomial,
        g: IntPolynomial,
        limit: u64,
        filter: ModulusFilter,
    ) -> Result<SequenceSpec> {
        if limit == 0 {
            return Err(Error::Config("cutoff x must be at least 1".into()));
        }
        let evidence_f = f.irreducibility_evidence(IRREDUCIBILITY_BUDGET)?;
        let evidence_g = g.irreducibility_evidence(IRREDUCIBILITY_BUDGET)?;
        for (poly, ev) in [(&f, &evidence_f), (&g, &evidence_g)] {
            if let IrreducibilityEvidence::ProvedReducible { rational_root } = ev {
                return Err(Error::Reducible(format!(
                    "{poly} has rational root {}/{}",
                    rational_root.0, rational_root.1
                )));
            }
        }
        Ok(SequenceSpec { f, g, limit, filter, evidence_f, evidence_g })
    }

    pub fn f(&self) -> &IntPolynomial {
        &self.f
    }

    pub fn g(&self) -> &IntPolynomial {
        &self.g
    }

    pub fn limit(&self) -> u64 {
        self.limit
    }

    pub fn filter(&self) -> ModulusFilter {
        self.filter
    }

    pub fn same_polynomials(&self) -> bool {
        self.f == self.g
    }

    /// Screening verdicts; Inconclusive does not block experiments.
    pub fn irreducibility(&self) -> (&IrreducibilityEvidence, &IrreducibilityEvidence) {
        (&self.evidence_f, &self.evidence_g)
    }
}

#[derive(Debug, Clone)]
pub struct ExperimentOptions {
    pub checkpoints: Vec<u64>,
    pub frequencies: Vec<(i64, i64)>,
    pub rectangles: Vec<Rect>,
    pub grid_resolution: Option<u32>,
    pub diagonal_eps: Option<f64>,
}

impl ExperimentOptions {
    pub fn at_cutoff(x: u64) -> ExperimentOptions {
        ExperimentOptions {
            checkpoints: vec![x],
            frequencies: Vec::new(),
            rectangles: Vec::new(),
            grid_resolution: None,
            diagonal_eps: None,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct WeylValue {
    pub h1: i64,
    pub h2: i64,
    pub re: f64,
    pub im: f64,
    pub abs: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct BoxCountReport {
    pub rect: String,
    pub inside: u64,
    pub observed: f64,
    pub expected: f64,
    pub deviation: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct DiscrepancyBracket {
    pub resolution: u32,
    pub lower: f64,
    pub upper: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct SplitDensities {
    pub primes: u64,
    pub split_f: u64,
    pub split_g: u64,
    pub split_both: u64,
    pub density_f: f64,
    pub density_g: f64,
    pub density_joint: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct DiagonalReport {
    pub eps: f64,
    pub hits: u64,
    pub fraction: f64,
}

/// Everything measured at one cutoff checkpoint.
#[derive(Debug, Clone, Serialize)]
pub struct CheckpointReport {
    pub x: u64,
    /// number of root pairs in the filtered sequence up to x
    pub m_pairs: u64,
    /// sum of r(n)s(n) over ALL moduli n <= x (counting-ratio denominator)
    pub sum_rs_all: u64,
    pub weyl: Vec<WeylValue>,
    pub boxes: Vec<BoxCountReport>,
    pub discrepancy: Option<DiscrepancyBracket>,
    pub counting_ratio: Option<f64>,
    pub split: Option<SplitDensities>,
    pub diagonal: Option<DiagonalReport>,
}

#[derive(Debug, Clone, Serialize)]
pub struct BracketCheck {
    pub m: u64,
    pub last_modulus: u64,
    pub sum_to_last: u64,
    pub slack: u64,
}

struct EngineContext<'a> {
    table: &'a FactorTable,
    cache_f: &'a RootCache,
    cache_g: Option<&'a RootCache>,
    r_table: &'a [u32],
    s_table: &'a [u32],
    deg_f: u64,
    deg_g: u64,
    filter: ModulusFilter,
    frequencies: &'a [(i64, i64)],
    rectangles: &'a [Rect],
    grid: Option<u32>,
    diagonal_eps: Option<f64>,
    needs_roots: bool,
}

struct BlockAccum {
    m_pairs: u64,
    sum_rs_all: u64,
    weyl: Vec<Complex64>,
    box_in: Vec<u64>,
    grid: Option<Vec<u64>>,
    diag_hits: u64,
    primes: u64,
    split_f: u64,
    split_g: u64,
    split_both: u64,
    log_prod: f64,
}

impl BlockAccum {
    fn new(ctx: &EngineContext) -> BlockAccum {
        BlockAccum {
            m_pairs: 0,
            sum_rs_all: 0,
            weyl: vec![Complex64::new(0.0, 0.0); ctx.frequencies.len()],
            box_in: vec![0; ctx.rectangles.len()],
            grid: ctx.grid.map(|g| vec![0u64; (g as usize) * (g as usize)]),
            diag_hits: 0,
            primes: 0,
            split_f: 0,
            split_g: 0,
            split_both: 0,
            log_prod: 0.0,
        }
    }

    fn merge(&mut self, other: BlockAccum) {
        self.m_pairs += other.m_pairs;
        self.sum_rs_all += other.sum_rs_all;
        for (a, b) in self.weyl.iter_mut().zip(other.weyl) {
            *a += b;
        }
        for (a, b) in self.box_in.iter_mut().zip(other.box_in) {
            *a += b;
        }
        if let (Some(g), Some(og)) = (self.grid.as_mut(), other.grid) {
            for (a, b) in g.iter_mut().zip(og) {
                *a += b;
            }
        }
        self.diag_hits += other.diag_hits;
        self.primes += other.primes;
        self.split_f += other.split_f;
        self.split_g += other.split_g;
        self.split_both += other.split_both;
        self.log_prod += other.log_prod;
    }
}

fn process_block(ctx: &EngineContext, lo: u64, hi: u64) -> BlockAccum {
    let mut acc = BlockAccum::new(ctx);
    let mut roots_g_buf: Vec<u64>;
    for n in lo..=hi {
        let r = ctx.r_table[n as usize] as u64;
        let s = ctx.s_table[n as usize] as u64;
        let rs = r * s;
        acc.sum_rs_all += rs;
        if ctx.table.is_prime(n) {
            acc.primes += 1;
            acc.log_prod += ((rs as f64) / (n as f64)).ln_1p();
            if r == ctx.deg_f {
                acc.split_f += 1;
            }
            if s == ctx.deg_g {
                acc.split_g += 1;
            }
            if r == ctx.deg_f && s == ctx.deg_g {
                acc.split_both += 1;
            }
        }
        if rs == 0 {
            continue;
        }
        let in_filter = match ctx.filter {
            ModulusFilter::All => true,
            ModulusFilter::Prime => ctx.table.is_prime(n),
            ModulusFilter::Squarefree => ctx.table.is_squarefree(n),
        };
        if !in_filter {
            continue;
        }
        acc.m_pairs += rs;
        if !ctx.needs_roots {
            continue;
        }
        let fac = ctx.table.factor(n).expect("modulus within table");
        let roots_f = ctx.cache_f.assemble(n, &fac);
        let roots_g: &[u64] = match ctx.cache_g {
            Some(cg) => {
                roots_g_buf = cg.assemble(n, &fac);
                &roots_g_buf
            }
            None => &roots_f,
        };
        for (k, &(h1, h2)) in ctx.frequencies.iter().enumerate() {
            let sf = exp_sum_raw(&roots_f, h1, n);
            let sg = exp_sum_raw(roots_g, h2, n);
            acc.weyl[k] += sf * sg;
        }
        for (k, rect) in ctx.rectangles.iter().enumerate() {
            let cf = roots_f
                .iter()
                .filter(|&&a| rect.alpha.lt_root(a, n) && rect.beta.gt_root(a, n))
                .count() as u64;
            let cg = roots_g
                .iter()
                .filter(|&&b| rect.gamma.lt_root(b, n) && rect.delta.gt_root(b, n))
                .count() as u64;
            acc.box_in[k] += cf * cg;
        }
        if let (Some(res), Some(grid)) = (ctx.grid, acc.grid.as_mut()) {
            let res = res as u64;
            for &a in &roots_f {
                let ca = a * res / n;
                let row = (ca * res) as usize;
                for &b in roots_g {
                    let cb = b * res / n;
                    grid[row + cb as usize] += 1;
                }
            }
        }
        if let Some(eps) = ctx.diagonal_eps {
            for &a in &roots_f {
                for &b in roots_g {
                    // integer distance (times n) to the torus diagonals
                    // y = x and y = 1 - x
                    let d1 = a.abs_diff(b);
                    let sum = a + b;
                    let d2 = sum.abs_diff(n);
                    let min = d1.min(d2).min(sum).min(2 * n - sum);
                    if (min as f64) <= eps * (n as f64) {
                        acc.diag_hits += 1;
                    }
                }
            }
        }
    }
    acc
}

fn bracket_from_grid(grid: &[u64], resolution: u32, m_pairs: u64) -> DiscrepancyBracket {
    let g = resolution as usize;
    let m = m_pairs as f64;
    let mut prefix = vec![0u64; (g + 1) * (g + 1)];
    for i in 1..=g {
        for j in 1..=g {
            prefix[i * (g + 1) + j] = grid[(i - 1) * g + (j - 1)] + prefix[(i - 1) * (g + 1) + j]
                + prefix[i * (g + 1) + j - 1]
                - prefix[(i - 1) * (g + 1) + j - 1];
        }
    }
    let mut lower = 0.0f64;
    for i in 0..=g {
        for j in 0..=g {
            let emp = prefix[i * (g + 1) + j] as f64 / m;
            let area = (i as f64) * (j as f64) / ((resolution as f64) * (resolution as f64));
            let dev = (emp - area).abs();
            if dev > lower {
                lower = dev;
            }
        }
    }
    let max_cell = grid.iter().copied().max().unwrap_or(0);
    let upper = lower + 2.0 / resolution as f64 + max_cell as f64 / m;
    DiscrepancyBracket { resolution, lower, upper }
}

/// Run the full pipeline, reporting at every checkpoint.
pub fn run_experiment(
    spec: &SequenceSpec,
    opts: &ExperimentOptions,
) -> Result<Vec<CheckpointReport>> {
    if opts.checkpoints.is_empty() {
        return Err(Error::Config("at least one checkpoint required".into()));
    }
    for w in opts.checkpoints.windows(2) {
        if w[0] >= w[1] {
            return Err(Error::Config("checkpoints must be strictly ascending".into()));
        }
    }
    let last = *opts.checkpoints.last().unwrap();
    if last > spec.limit || opts.checkpoints[0] == 0 {
        return Err(Error::Config(format!(
            "checkpoints must lie in [1, {}]",
            spec.limit
        )));
    }
    if let Some(res) = opts.grid_resolution {
        if !(2..=MAX_GRID_RESOLUTION).contains(&res) {
            return Err(Error::Config(format!(
                "grid resolution must be in [2, {MAX_GRID_RESOLUTION}]"
            )));
        }
    }
    if opts.diagonal_eps.is_some() && !spec.same_polynomials() {
        return Err(Error::PolynomialsDiffer);
    }
    if opts.diagonal_eps.is_some_and(|e| e.is_nan() || e < 0.0) {
        return Err(Error::Config("diagonal width must be nonnegative".into()));
    }

    let table = FactorTable::build(last)?;
    let cache_f = RootCache::build(spec.f(), &table)?;
    let cache_g = if spec.same_polynomials() {
        None
    } else {
        Some(RootCache::build(spec.g(), &table)?)
    };
    let r_table = cache_f.count_table(&table);
    let s_table = match &cache_g {
        Some(cg) => cg.count_table(&table),
        None => r_table.clone(),
    };
    let ctx = EngineContext {
        table: &table,
        cache_f: &cache_f,
        cache_g: cache_g.as_ref(),
        r_table: &r_table,
        s_table: &s_table,
        deg_f: spec.f().degree() as u64,
        deg_g: spec.g().degree() as u64,
        filter: spec.filter(),
        frequencies: &opts.frequencies,
        rectangles: &opts.rectangles,
        grid: opts.grid_resolution,
        diagonal_eps: opts.diagonal_eps,
        needs_roots: !opts.frequencies.is_empty()
            || !opts.rectangles.is_empty()
            || opts.grid_resolution.is_some()
            || opts.diagonal_eps.is_some(),
    };

    let mut master = BlockAccum::new(&ctx);
    let mut reports = Vec::with_capacity(opts.checkpoints.len());
    let mut segment_start = 1u64;
    for &cp in &opts.checkpoints {
        // fixed-size blocks, mapped in parallel, merged in ascending order
        let blocks: Vec<(u64, u64)> = (segment_start..=cp)
            .step_by(BLOCK_SIZE as usize)
            .map(|lo| (lo, (lo + BLOCK_SIZE - 1).min(cp)))
            .collect();
        let partials: Vec<BlockAccum> = blocks
            .into_par_iter()
            .map(|(lo, hi)| process_block(&ctx, lo, hi))
            .collect();
        for p in partials {
            master.merge(p);
        }
        reports.push(snapshot(opts, &master, cp)?);
        segment_start = cp + 1;
    }
    Ok(reports)
}

fn snapshot(
    opts: &ExperimentOptions,
    acc: &BlockAccum,
    x: u64,
) -> Result<CheckpointReport> {
    if acc.m_pairs == 0 {
        return Err(Error::EmptySequence);
    }
    let m = acc.m_pairs as f64;
    let weyl = opts
        .frequencies
        .iter()
        .zip(&acc.weyl)
        .map(|(&(h1, h2), w)| {
            let v = w / m;
            WeylValue { h1, h2, re: v.re, im: v.im, abs: v.norm() }
        })
        .collect();
    let boxes = opts
        .rectangles
        .iter()
        .zip(&acc.box_in)
        .map(|(rect, &inside)| {
            let observed = inside as f64 / m;
            let expected = rect.area();
            BoxCountReport {
                rect: rect.label(),
                inside,
                observed,
                expected,
                deviation: (observed - expected).abs(),
            }
        })
        .collect();
    let discrepancy = match (opts.grid_resolution, acc.grid.as_ref()) {
        (Some(res), Some(grid)) => Some(bracket_from_grid(grid, res, acc.m_pairs)),
        _ => None,
    };
    let counting_ratio = (x >= 3).then(|| {
        (x as f64) * acc.log_prod.exp() / ((x as f64).ln() * acc.sum_rs_all as f64)
    });
    let split = (acc.primes > 0).then(|| SplitDensities {
        primes: acc.primes,
        split_f: acc.split_f,
        split_g: acc.split_g,
        split_both: acc.split_both,
        density_f: acc.split_f as f64 / acc.primes as f64,
        density_g: acc.split_g as f64 / acc.primes as f64,
        density_joint: acc.split_both as f64 / acc.primes as f64,
    });
    let diagonal = opts.diagonal_eps.map(|eps| DiagonalReport {
        eps,
        hits: acc.diag_hits,
        fraction: acc.diag_hits as f64 / m,
    });
    Ok(CheckpointReport {
        x,
        m_pairs: acc.m_pairs,
        sum_rs_all: acc.sum_rs_all,
        weyl,
        boxes,
        discrepancy,
        counting_ratio,
        split,
        diagonal,
    })
}

/// Normalized Weyl average (sum of S(h1,h2;n)) / (sum of r(n)s(n)) at the
/// spec's cutoff.
pub fn weyl_average(spec: &SequenceSpec, h1: i64, h2: i64) -> Result<Complex64> {
    let mut opts = ExperimentOptions::at_cutoff(spec.limit());
    opts.frequencies.push((h1, h2));
    let reports = run_experiment(spec, &opts)?;
    let w = &reports[0].weyl[0];
    Ok(Complex64::new(w.re, w.im))
}

/// Fraction of normalized root pairs strictly inside the open rectangle.
pub fn box_count(spec: &SequenceSpec, rect: &Rect) -> Result<f64> {
    let mut opts = ExperimentOptions::at_cutoff(spec.limit());
    opts.rectangles.push(*rect);
    let reports = run_experiment(spec, &opts)?;
    Ok(reports[0].boxes[0].observed)
}

/// Star-discrepancy bracket of the pair sequence over anchored grid boxes.
pub fn star_discrepancy_2d(spec: &SequenceSpec, resolution: u32) -> Result<DiscrepancyBracket> {
    let mut opts = ExperimentOptions::at_cutoff(spec.limit());
    opts.grid_resolution = Some(resolution);
    let reports = run_experiment(spec, &opts)?;
    Ok(reports[0].discrepancy.clone().expect("grid requested"))
}

/// x * prod_{p<=x} (1 + r(p)s(p)/p) / (log x * sum_{n<=x} r(n)s(n)).
///
/// Always taken over all moduli and all primes, whatever the spec filter.
pub fn counting_ratio(spec: &SequenceSpec) -> Result<f64> {
    if spec.limit() < 3 {
        return Err(Error::Config("counting ratio needs x >= 3".into()));
    }
    let reports = run_experiment(spec, &ExperimentOptions::at_cutoff(spec.limit()))?;
    Ok(reports[0].counting_ratio.expect("x >= 3"))
}

/// Fractions of primes p <= x with r(p) = deg f, s(p) = deg g, and both.
pub fn split_prime_density(
    f: &IntPolynomial,
    g: &IntPolynomial,
    x: u64,
) -> Result<SplitDensities> {
    if x < 100 {
        return Err(Error::Config("split densities need x >= 100".into()));
    }
    let spec = SequenceSpec::new(f.clone(), g.clone(), x, ModulusFilter::All)?;
    let reports = run_experiment(&spec, &ExperimentOptions::at_cutoff(x))?;
    Ok(reports[0].split.clone().expect("primes below x"))
}

/// Fraction of pairs within torus distance eps of the diagonals y = x and
/// y = 1 - x. Requires f = g.
pub fn diagonal_concentration(spec: &SequenceSpec, eps: f64) -> Result<f64> {
    if !spec.same_polynomials() {
        return Err(Error::PolynomialsDiffer);
    }
    let mut opts = ExperimentOptions::at_cutoff(spec.limit());
    opts.diagonal_eps = Some(eps);
    let reports = run_experiment(spec, &opts)?;
    Ok(reports[0].diagonal.as_ref().expect("eps requested").fraction)
}

/// Locate the modulus N carrying the M-th pair and check
/// M <= sum_{n<=N} r(n)s(n) <= M + r(N)s(N).
pub fn normalization_bracket(spec: &SequenceSpec, m: u64) -> Result<BracketCheck> {
    if m == 0 {
        return Err(Error::Config("pair count M must be positive".into()));
    }
    let table = FactorTable::build(spec.limit())?;
    let cache_f = RootCache::build(spec.f(), &table)?;
    let cache_g = if spec.same_polynomials() {
        None
    } else {
        Some(RootCache::build(spec.g(), &table)?)
    };
    let mut cum = 0u64;
    for (n, fac) in table.moduli(spec.filter()) {
        let r = cache_f.count(&fac);
        let s = match &cache_g {
            Some(cg) => cg.count(&fac),
            None => r,
        };
        let rs = r * s;
        if rs == 0 {
            continue;
        }
        cum += rs;
        if cum >= m {
            let check = BracketCheck { m, last_modulus: n, sum_to_last: cum, slack: rs };
            if !(m <= check.sum_to_last && check.sum_to_last <= m + check.slack) {
                return Err(Error::BracketViolation { m, sum: cum, slack: rs });
            }
            return Ok(check);
        }
    }
    Err(Error::EmptySequence)
}

/// Discrepancy bracket for an arbitrary finite set of exact rational
/// points ((a_num, a_den), (b_num, b_den)) in the unit square.
pub fn star_discrepancy_of_points<I>(points: I, resolution: u32) -> Result<DiscrepancyBracket>
where
    I: IntoIterator<Item = ((u64, u64), (u64, u64))>,
{
    if !(2..=MAX_GRID_RESOLUTION).contains(&resolution) {
        return Err(Error::Config(format!(
            "grid resolution must be in [2, {MAX_GRID_RESOLUTION}]"
        )));
    }
    let res = resolution as u64;
    let mut grid = vec![0u64; (res * res) as usize];
    let mut count = 0u64;
    for ((an, ad), (bn, bd)) in points {
        debug_assert!(an < ad && bn < bd);
        let ca = (an as u128 * res as u128 / ad as u128) as u64;
        let cb = (bn as u128 * res as u128 / bd as u128) as u64;
        grid[(ca * res + cb) as usize] += 1;
        count += 1;
    }
    if count == 0 {
        return Err(Error::EmptySequence);
    }
    Ok(bracket_from_grid(&grid, resolution, count))
}
