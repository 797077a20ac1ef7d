//! Command implementations behind the `numsg` binary.
//!
//! Every command writes to a caller-supplied writer or directory so the
//! same code drives the binary and the tests.

use std::collections::BTreeMap;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};

use numsg::enumeration::{build_tables, CountTable, Tables};
use numsg::families::{
    family_as_enumerate, family_counts, family_general_enumerate, parse_rational, FamilyKind,
};
use numsg::transforms::{
    is_almost_symmetric, is_max_ed, is_ordinary, is_staircase, is_symmetric, TransformReport,
};
use numsg::verify::{self, VerifyConfig};
use numsg::NumericalSet;

#[derive(Debug, Parser)]
#[command(
    name = "numsg",
    version,
    about = "Numerical semigroups: types, T-sets and exhaustive counts"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub opts: Options,
}

#[derive(Debug, Clone, Args)]
pub struct Options {
    /// Largest Frobenius number to sweep.
    #[arg(long, global = true)]
    pub max_f: Option<i64>,
    /// Largest genus to sweep.
    #[arg(long, global = true)]
    pub max_g: Option<i64>,
    /// Comma-separated type values for the plot series.
    #[arg(long, global = true, value_delimiter = ',')]
    pub alpha: Vec<i64>,
    #[arg(long, global = true)]
    pub k: Option<i64>,
    /// Exact rational such as `43/100+1/1000000`.
    #[arg(long, global = true)]
    pub beta: Option<String>,
    /// Output directory (tables, plotdata) or file (family).
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Worker threads; defaults to the available parallelism.
    #[arg(long, global = true)]
    pub workers: Option<usize>,
    #[arg(long, global = true, value_enum, default_value_t = Mode::Fast)]
    pub mode: Mode,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Fast,
    Full,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print every derived quantity of one set, given as `gaps=...` or `gens=...`.
    Analyze { spec: String },
    /// Write type and parity counts by Frobenius number and genus as CSV.
    Tables,
    /// Write the normalized series behind the growth conjectures as CSV.
    Plotdata,
    /// Run every exhaustive check; exits non-zero on any failure.
    Verify,
    /// Enumerate a family: `family as F=19 k=0` or `family gen F=23 k=1 beta=43/100+1/1000000`.
    Family {
        kind: FamilyArg,
        /// `F=..`, `k=..` and `beta=..` tokens.
        params: Vec<String>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FamilyArg {
    As,
    Gen,
}

impl Options {
    pub fn max_f(&self) -> i64 {
        self.max_f.unwrap_or(match self.mode {
            Mode::Fast => 22,
            Mode::Full => 30,
        })
    }

    pub fn max_g(&self) -> i64 {
        self.max_g.unwrap_or(match self.mode {
            Mode::Fast => 16,
            Mode::Full => 20,
        })
    }

    pub fn workers(&self) -> usize {
        self.workers
            .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()))
            .max(1)
    }
}

/// Runs one command and returns the process exit code.
pub fn run(cli: &Cli, out: &mut dyn Write) -> Result<i32> {
    let opts = &cli.opts;
    match &cli.command {
        Command::Analyze { spec } => {
            let set: NumericalSet = spec
                .parse()
                .with_context(|| format!("cannot parse {spec:?}"))?;
            out.write_all(analyze(&set).as_bytes())?;
            Ok(0)
        }
        Command::Tables => {
            let dir = out_dir(opts)?;
            let tables = tables_for(opts)?;
            let files = write_files(&dir, &table_files(&tables))?;
            report_files(out, &files)?;
            Ok(0)
        }
        Command::Plotdata => {
            let dir = out_dir(opts)?;
            let tables = tables_for(opts)?;
            let files = write_files(&dir, &plot_files(&tables, &opts.alpha))?;
            report_files(out, &files)?;
            Ok(0)
        }
        Command::Verify => {
            let mut cfg = match opts.mode {
                Mode::Fast => VerifyConfig::fast(),
                Mode::Full => VerifyConfig::full(),
            };
            if let Some(g) = opts.max_g {
                cfg.max_genus = g;
            }
            if let Some(f) = opts.max_f {
                cfg.max_set_frobenius = f;
            }
            check_bounds(cfg.max_set_frobenius, cfg.max_genus)?;
            let mut failed = 0;
            for res in verify::run_all(&cfg) {
                writeln!(out, "{}", res.summary_line())?;
                for f in &res.failures {
                    writeln!(out, "  {f}")?;
                }
                failed += usize::from(!res.passed());
            }
            writeln!(
                out,
                "{}",
                if failed == 0 {
                    "all checks passed".to_string()
                } else {
                    format!("{failed} checks failed")
                }
            )?;
            Ok(i32::from(failed > 0))
        }
        Command::Family { kind, params } => {
            let text = family(*kind, params, opts)?;
            match &opts.out {
                Some(path) => {
                    fs::write(path, &text)
                        .with_context(|| format!("cannot write {}", path.display()))?;
                    writeln!(out, "wrote {}", path.display())?;
                }
                None => out.write_all(text.as_bytes())?,
            }
            Ok(0)
        }
    }
}

fn check_bounds(max_f: i64, max_g: i64) -> Result<()> {
    if !(1..=60).contains(&max_f) {
        bail!("--max-f must be between 1 and 60, got {max_f}");
    }
    if !(1..=60).contains(&max_g) {
        bail!("--max-g must be between 1 and 60, got {max_g}");
    }
    Ok(())
}

fn out_dir(opts: &Options) -> Result<PathBuf> {
    let dir = opts.out.clone().unwrap_or_else(|| PathBuf::from("."));
    fs::create_dir_all(&dir)
        .with_context(|| format!("cannot create output directory {}", dir.display()))?;
    Ok(dir)
}

fn tables_for(opts: &Options) -> Result<Tables> {
    check_bounds(opts.max_f(), opts.max_g())?;
    Ok(build_tables(opts.max_f(), opts.max_g(), opts.workers()))
}

fn write_files(dir: &Path, files: &[(String, String)]) -> Result<Vec<PathBuf>> {
    files
        .iter()
        .map(|(name, body)| {
            let path = dir.join(name);
            fs::write(&path, body).with_context(|| format!("cannot write {}", path.display()))?;
            Ok(path)
        })
        .collect()
}

fn report_files(out: &mut dyn Write, files: &[PathBuf]) -> Result<()> {
    for f in files {
        writeln!(out, "wrote {}", f.display())?;
    }
    Ok(())
}

fn join(xs: &[i64]) -> String {
    xs.iter().map(i64::to_string).collect::<Vec<_>>().join(",")
}

fn flag(v: numsg::Result<bool>) -> String {
    v.map_or_else(|_| "n/a".to_string(), |b| b.to_string())
}

/// The `analyze` report, one `key: value` per line.
pub fn analyze(set: &NumericalSet) -> String {
    let r = TransformReport::new(set.clone());
    let p = r.profile();
    let na = || "n/a".to_string();
    let mut lines = vec![
        format!("set: {set}"),
        format!("F: {}", p.frobenius),
        format!("g: {}", p.genus),
        format!("m: {}", p.multiplicity),
        format!("n: {}", p.small_elements),
        format!("gaps: {}", join(&set.gap_list())),
        format!("semigroup: {}", r.semigroup().is_some()),
        format!(
            "minimal generators: {}",
            r.semigroup()
                .map_or_else(na, |s| join(&s.minimal_generators()))
        ),
        format!("PF: {}", r.pf().map_or_else(na, join)),
        format!("t: {}", r.t().map_or_else(na, |t| t.to_string())),
        format!("T-set: {}", r.tset().map_or_else(na, |t| t.to_string())),
        format!("A: {}", r.assoc()),
        format!("A*: {}", r.astar().map_or_else(na, |a| a.to_string())),
        format!("B: {}", r.bset().map_or_else(na, join)),
        format!("L: {}", r.chain_length()),
        format!(
            "chain: {}",
            r.chain()
                .iter()
                .map(|h| h.to_string())
                .collect::<Vec<_>>()
                .join(" -> ")
        ),
        format!("ordinary: {}", flag(is_ordinary(set))),
    ];
    match r.semigroup() {
        Some(s) => {
            lines.push(format!("symmetric: {}", flag(is_symmetric(s))));
            lines.push(format!(
                "almost symmetric: {}",
                flag(is_almost_symmetric(s))
            ));
            lines.push(format!("max embedding dimension: {}", flag(is_max_ed(s))));
            lines.push(format!("staircase: {}", flag(is_staircase(s))));
        }
        None => {
            for name in [
                "symmetric",
                "almost symmetric",
                "max embedding dimension",
                "staircase",
            ] {
                lines.push(format!("{name}: n/a"));
            }
        }
    }
    lines.join("\n") + "\n"
}

fn counts_csv(table: &CountTable) -> String {
    let mut s = format!("{},t,count\n", table.axis.column());
    for (i, t, c) in table.rows() {
        s += &format!("{i},{t},{c}\n");
    }
    s
}

fn parity_csv(table: &CountTable) -> String {
    let mut s = format!("{},odd,even\n", table.axis.column());
    for (i, (odd, even)) in table.parity_rollup() {
        s += &format!("{i},{odd},{even}\n");
    }
    s
}

/// `(file name, contents)` for every table CSV.
pub fn table_files(tables: &Tables) -> Vec<(String, String)> {
    vec![
        (
            "t_by_frobenius.csv".into(),
            counts_csv(&tables.by_frobenius),
        ),
        (
            "t1_by_frobenius.csv".into(),
            counts_csv(&tables.almost_symmetric_by_frobenius),
        ),
        ("t_by_genus.csv".into(), counts_csv(&tables.by_genus)),
        (
            "parity_by_frobenius.csv".into(),
            parity_csv(&tables.by_frobenius),
        ),
        ("parity_by_genus.csv".into(), parity_csv(&tables.by_genus)),
    ]
}

fn decimal(x: f64) -> String {
    format!("{x:.6}")
}

fn ratio(num: u64, den: u64) -> String {
    if den == 0 {
        String::new()
    } else {
        decimal(num as f64 / den as f64)
    }
}

/// `log_base(count) / index`, empty for a zero count.
fn normalized_log(count: u64, index: i64, base: f64) -> String {
    if count == 0 {
        String::new()
    } else {
        decimal((count as f64).ln() / base.ln() / index as f64)
    }
}

fn series_csv(
    table: &CountTable,
    indices: impl Iterator<Item = i64>,
    alphas: &[i64],
    base: f64,
) -> String {
    let mut s = table.axis.column().to_string();
    for a in alphas {
        s += &format!(",t{a}");
    }
    s.push('\n');
    for i in indices {
        s += &i.to_string();
        for &a in alphas {
            s.push(',');
            s += &normalized_log(table.get(i, a), i, base);
        }
        s.push('\n');
    }
    s
}

/// `(file name, contents)` for every plot series. An empty `alphas` selects
/// types 2..=5 for the Frobenius series and 1..=5 for the genus series.
pub fn plot_files(tables: &Tables, alphas: &[i64]) -> Vec<(String, String)> {
    let by_f = &tables.by_frobenius;
    let by_g = &tables.by_genus;
    let f_alphas: Vec<i64> = if alphas.is_empty() {
        (2..=5).collect()
    } else {
        alphas.to_vec()
    };
    let g_alphas: Vec<i64> = if alphas.is_empty() {
        (1..=5).collect()
    } else {
        alphas.to_vec()
    };

    let parity: BTreeMap<i64, (u64, u64)> = by_f.parity_rollup();
    let mut f_ratio = String::from("F,odd,even,odd_ratio,same_parity_ratio\n");
    for (&f, &(odd, even)) in &parity {
        let same = if f % 2 == 1 { odd } else { even };
        f_ratio += &format!(
            "{f},{odd},{even},{},{}\n",
            ratio(odd, odd + even),
            ratio(same, odd + even)
        );
    }
    let mut g_ratio = String::from("g,odd,even,odd_ratio\n");
    for (g, (odd, even)) in by_g.parity_rollup() {
        g_ratio += &format!("{g},{odd},{even},{}\n", ratio(odd, odd + even));
    }

    let fs = || 1..=by_f.max_index;
    let golden = (1.0 + 5f64.sqrt()) / 2.0;
    vec![
        ("parity_ratio_by_frobenius.csv".into(), f_ratio),
        ("parity_ratio_by_genus.csv".into(), g_ratio),
        (
            "log2_t_by_frobenius_odd.csv".into(),
            series_csv(by_f, fs().filter(|f| f % 2 == 1), &f_alphas, 2.0),
        ),
        (
            "log2_t_by_frobenius_even.csv".into(),
            series_csv(by_f, fs().filter(|f| f % 2 == 0), &f_alphas, 2.0),
        ),
        (
            "logphi_l_by_genus.csv".into(),
            series_csv(by_g, 1..=by_g.max_index, &g_alphas, golden),
        ),
    ]
}

struct FamilyParams {
    f: i64,
    k: i64,
    beta: Option<String>,
}

fn family_params(tokens: &[String], opts: &Options) -> Result<FamilyParams> {
    let mut f = None;
    let mut k = opts.k;
    let mut beta = opts.beta.clone();
    for tok in tokens {
        let Some((key, value)) = tok.split_once('=') else {
            bail!("expected key=value (F=, k=, beta=), got {tok:?}");
        };
        let int = || {
            value
                .parse::<i64>()
                .with_context(|| format!("{key} must be an integer, got {value:?}"))
        };
        match key {
            "F" | "f" => f = Some(int()?),
            "k" => k = Some(int()?),
            "beta" => beta = Some(value.to_string()),
            _ => bail!("unknown family parameter {key:?}; expected F, k or beta"),
        }
    }
    Ok(FamilyParams {
        f: f.context("family needs F=<Frobenius number>")?,
        k: k.unwrap_or(0),
        beta,
    })
}

/// Members as `gaps=` lines followed by a `#`-prefixed summary.
pub fn family(kind: FamilyArg, tokens: &[String], opts: &Options) -> Result<String> {
    let p = family_params(tokens, opts)?;
    let (kind, members, beta) = match kind {
        FamilyArg::As => (
            FamilyKind::AlmostSymmetric,
            family_as_enumerate(p.f, p.k)?,
            None,
        ),
        FamilyArg::Gen => {
            let text = p
                .beta
                .context("general family needs beta=<p/q> strictly between 2/5 and 1/2")?;
            let beta = parse_rational(&text)?;
            (
                FamilyKind::General,
                family_general_enumerate(p.f, p.k, beta)?,
                Some(beta),
            )
        }
    };
    let report = family_counts(kind, p.f, p.k, beta, 0)?;
    let mut s = String::new();
    for m in &members {
        s += &format!("{m}\n");
    }
    let types = report
        .observed_types
        .iter()
        .map(i64::to_string)
        .collect::<Vec<_>>()
        .join(",");
    s += &format!("# family: {kind} F={} k={}", p.f, p.k);
    if let Some(b) = beta {
        s += &format!(" beta={b}");
    }
    s += "\n";
    s += &format!("# candidates: {}\n", join(&report.candidates));
    s += &format!("# members: {}\n", report.count);
    s += &format!("# type: {types}\n");
    s += &format!("# constant type: {}\n", report.constant_type().is_some());
    s += &format!("# all almost symmetric: {}\n", report.all_almost_symmetric);
    s += &format!("# stated type: {}\n", report.stated_type);
    if let (Some(b), Some(met)) = (report.stated_bound, report.meets_stated_bound()) {
        s += &format!("# stated bound: {} (met: {met})\n", decimal(b));
    }
    Ok(s)
}
