//! Command-line front end: argument parsing, dispatch and CSV/JSON rendering.

use std::fs::File;
use std::io::{self, Write};
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use crate::asymptotics::{cycle_index_check, cycle_index_rhs, GlSampler, Marker};
use crate::characters::{character_table, CycleType};
use crate::error::{Error, Result};
use crate::gl::{
    fixed_space_counts, gl_l2_sum, gl_lower_bound, gl_upper_bound, plancherel_gl,
    unipotent_tail_bound,
};
use crate::hsp::{
    hsp_bounds, induced_character_check, parse_generators, subgroup_catalogue, subgroup_closure,
};
use crate::numeric::{q_parse, q_render, Q};
use crate::partition::Partition;
use crate::walk::distribution::{tv_curve, walk_distribution, Mode};
use crate::walk::moments::{moment_fc, moment_fc_direct, moment_transposition_closed_form};
use crate::walk::sample::{histogram, rsk_batch, sample_plancherel_batch, sample_walk_batch};
use crate::walk::{sn_cutoff_ceiling, sn_cutoff_steps, sn_lower_bound_estimate, sn_upper_bound};

/// Exit status for a successful run.
pub const EXIT_OK: i32 = 0;
/// Exit status when a computed check does not hold, or on I/O failure.
pub const EXIT_FAILURE: i32 = 1;
/// Exit status for invalid flags or parameters.
pub const EXIT_USAGE: i32 = 2;
/// Exit status when a module capacity limit is exceeded.
pub const EXIT_CAPACITY: i32 = 3;

/// Largest sample count accepted by the sampling commands.
pub const MAX_SAMPLE_COUNT: usize = 10_000_000;
/// Largest `n` accepted by the trajectory samplers.
pub const MAX_SAMPLE_N: usize = 2_000;

#[derive(Parser, Debug)]
#[command(
    name = "irrwalk",
    version,
    about = "Random walks on irreducible representations of S_n and GL(n,q)"
)]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalOpts,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct GlobalOpts {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Csv, global = true)]
    pub format: Format,
    /// Write output to this file instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Base seed for every sampler.
    #[arg(long, default_value_t = 0, global = true)]
    pub seed: u64,
    /// Worker threads for parallel sections.
    #[arg(long, default_value_t = 1, global = true)]
    pub threads: usize,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Args, Debug, Clone, Copy)]
pub struct ModeFlags {
    /// Rational arithmetic.
    #[arg(long, conflicts_with = "float")]
    pub exact: bool,
    /// Floating-point arithmetic.
    #[arg(long)]
    pub float: bool,
}

impl ModeFlags {
    fn mode(self, default: Mode) -> Mode {
        match (self.exact, self.float) {
            (true, _) => Mode::Exact,
            (_, true) => Mode::Float,
            _ => default,
        }
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum MarkerArg {
    None,
    Unipotent,
    Both,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Character table of S_n.
    Characters {
        #[arg(long)]
        n: usize,
    },
    /// Distribution after r steps of the walk on Irr(S_n).
    SnWalk {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: usize,
        /// Starting partition; defaults to the trivial representation.
        #[arg(long)]
        start: Option<String>,
        #[command(flatten)]
        mode: ModeFlags,
    },
    /// Total variation to Plancherel for r = 1..=rmax with the L² bound.
    SnTvCurve {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        rmax: usize,
        #[command(flatten)]
        mode: ModeFlags,
    },
    /// Steps ⌈½·n·ln n + c·n⌉ with the bound e^{−2c}/2 and the computed distance.
    SnCutoff {
        #[arg(long)]
        n: usize,
        #[arg(long, allow_negative_numbers = true)]
        c: f64,
    },
    /// Seeded samples of the walk after r steps, or of Plancherel measure when r is omitted.
    SnSample {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: Option<usize>,
        #[arg(long, default_value_t = 1)]
        count: usize,
        /// Emit counts per partition instead of one sample per row.
        #[arg(long)]
        histogram: bool,
    },
    /// Shapes of RSK applied to r top-to-random shuffles.
    SnRsk {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: usize,
        #[arg(long, default_value_t = 1)]
        count: usize,
        #[arg(long)]
        histogram: bool,
    },
    /// E[f_C^s] for r = 0..=rmax computed by every available method.
    SnMoments {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        rmax: usize,
        /// Cycle type of C; defaults to the transpositions.
        #[arg(long)]
        class: Option<String>,
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u8).range(1..=2))]
        s: u8,
    },
    /// Irreducible families of GL(n,q) with dimension and Plancherel mass.
    GlIrreps {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        q: u64,
    },
    /// Number of elements of GL(n,q) with an i-dimensional fixed space.
    GlCounts {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        q: u64,
    },
    /// Upper bound on the distance to Plancherel after r steps on Irr(GL(n,q)).
    GlBound {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        q: u64,
        #[arg(long)]
        r: usize,
    },
    /// Lower bound on the distance to Plancherel after n − c steps on Irr(GL(n,q)).
    GlLower {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        q: u64,
        #[arg(long)]
        c: usize,
    },
    /// Exact Plancherel samples from Irr(GL(n,q)), one family per row.
    GlSample {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        q: u64,
        #[arg(long, default_value_t = 1)]
        count: usize,
        /// Size-biasing parameter in (0, 1), as `p/q` or a decimal.
        #[arg(long)]
        u: Option<String>,
    },
    /// Coefficients of the GL cycle index product, optionally checked against enumeration.
    GlCycleIndex {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        order: usize,
        #[arg(long, value_enum, default_value_t = MarkerArg::Both)]
        marker: MarkerArg,
        /// Compare with the enumerated Plancherel side.
        #[arg(long)]
        check: bool,
    },
    /// Weak Fourier sampling distribution for a hidden subgroup of S_n and its bounds.
    Hsp {
        #[arg(long, required_unless_present = "catalogue")]
        n: Option<usize>,
        /// Generators as cycles, e.g. "(1 2)(3 4),(1 3)".
        #[arg(long, default_value = "")]
        gens: String,
        /// Use a named subgroup from the bundled catalogue.
        #[arg(long, conflicts_with_all = ["n", "gens"])]
        catalogue: Option<String>,
    },
}

/// Rendered result: summary fields and a table.
#[derive(Debug, Default)]
pub struct Report {
    pub summary: Vec<(String, Value)>,
    pub rows_key: &'static str,
    pub columns: Vec<String>,
    pub rows: Vec<Vec<Value>>,
    /// False when a requested check failed.
    pub ok: bool,
}

impl Report {
    fn table(columns: &[&str]) -> Self {
        Report {
            rows_key: "rows",
            columns: columns.iter().map(|c| c.to_string()).collect(),
            ok: true,
            ..Default::default()
        }
    }

    fn push(&mut self, row: Vec<Value>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }

    fn note(&mut self, key: &str, v: impl Into<Value>) {
        self.summary.push((key.to_string(), v.into()));
    }
}

fn cell(v: &Value) -> String {
    match v {
        Value::Null => String::new(),
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn csv_rows(report: &Report) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    let write = |w: &mut csv::Writer<Vec<u8>>| -> csv::Result<()> {
        w.write_record(&report.columns)?;
        for row in &report.rows {
            w.write_record(row.iter().map(cell))?;
        }
        w.flush()?;
        Ok(())
    };
    write(&mut w).expect("writing to memory cannot fail");
    String::from_utf8(w.into_inner().expect("buffer flushed")).expect("cells are UTF-8")
}

/// Renders a report with a metadata header; output depends only on the arguments.
pub fn render(report: &Report, format: Format, command_line: &str) -> String {
    let version = env!("CARGO_PKG_VERSION");
    match format {
        Format::Csv => {
            let mut out = format!("# irrwalk {version}\n# command: {command_line}\n");
            for (k, v) in &report.summary {
                out.push_str(&format!("# {k}: {}\n", cell(v)));
            }
            out.push_str(&csv_rows(report));
            out
        }
        Format::Json => {
            let mut obj = Map::new();
            obj.insert(
                "meta".into(),
                json!({ "tool": "irrwalk", "version": version, "command": command_line }),
            );
            for (k, v) in &report.summary {
                obj.insert(k.clone(), v.clone());
            }
            let rows: Vec<Value> = report
                .rows
                .iter()
                .map(|row| {
                    Value::Object(
                        report
                            .columns
                            .iter()
                            .cloned()
                            .zip(row.iter().cloned())
                            .collect(),
                    )
                })
                .collect();
            obj.insert(report.rows_key.into(), Value::Array(rows));
            let mut s =
                serde_json::to_string_pretty(&Value::Object(obj)).expect("json values serialize");
            s.push('\n');
            s
        }
    }
}

fn q_val(x: &Q) -> Value {
    Value::String(q_render(x))
}

fn parse_partition(s: &str) -> Result<Partition> {
    s.parse::<Partition>()
        .map_err(|_| Error::Parse(format!("bad partition {s:?}")))
}

fn check_count(count: usize) -> Result<()> {
    if count > MAX_SAMPLE_COUNT {
        return Err(Error::capacity(
            "cli-harness",
            "sample count",
            count,
            MAX_SAMPLE_COUNT,
        ));
    }
    Ok(())
}

fn check_sample_n(n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::invalid("n must be at least 1"));
    }
    if n > MAX_SAMPLE_N {
        return Err(Error::capacity("sn-walk", "sampler n", n, MAX_SAMPLE_N));
    }
    Ok(())
}

fn sample_report(n: usize, samples: &[Partition], as_histogram: bool) -> Report {
    if as_histogram {
        let mut rep = Report::table(&["partition", "count"]);
        let space = crate::walk::state_space(n);
        for (p, c) in space.partitions().iter().zip(histogram(n, samples)) {
            rep.push(vec![p.to_string().into(), c.into()]);
        }
        rep
    } else {
        let mut rep = Report::table(&["index", "partition"]);
        for (i, p) in samples.iter().enumerate() {
            rep.push(vec![i.into(), p.to_string().into()]);
        }
        rep
    }
}

/// Runs one parsed command.
pub fn execute(command: &Command, global: &GlobalOpts) -> Result<Report> {
    let seed = global.seed;
    match command {
        Command::Characters { n } => {
            let table = character_table(*n)?;
            let mut cols = vec!["partition".to_string()];
            cols.extend(table.classes.iter().map(|c| c.cycle_lengths.to_string()));
            let mut rep = Report::table(&[]);
            rep.columns = cols;
            for (i, p) in table.partitions.iter().enumerate() {
                let mut row: Vec<Value> = vec![p.to_string().into()];
                row.extend(table.values[i].iter().map(|v| Value::from(*v)));
                rep.push(row);
            }
            Ok(rep)
        }
        Command::SnWalk { n, r, start, mode } => {
            let start = match start {
                Some(s) => parse_partition(s)?,
                None => Partition::row(*n),
            };
            let dist = walk_distribution(*n, *r, &start, mode.mode(Mode::Exact))?;
            let mut rep = Report::table(&["partition", "mass"]);
            rep.note("mode", format!("{:?}", dist.mode()).to_lowercase());
            match dist.exact() {
                Some(d) => rep.note(
                    "tv",
                    q_render(&crate::walk::distribution::tv_to_plancherel(d)),
                ),
                None => rep.note("tv", dist.tv_to_plancherel_f64()),
            }
            for (p, m) in dist.rows() {
                rep.push(vec![p.into(), m.into()]);
            }
            Ok(rep)
        }
        Command::SnTvCurve { n, rmax, mode } => {
            let mode = mode.mode(Mode::Float);
            let points = tv_curve(*n, *rmax, mode)?;
            let mut rep = match mode {
                Mode::Exact => Report::table(&["r", "tv", "l2_bound", "tv_exact"]),
                Mode::Float => Report::table(&["r", "tv", "l2_bound", "float_error"]),
            };
            for p in points {
                let last = match mode {
                    Mode::Exact => Value::from(p.tv_exact.unwrap_or_default()),
                    Mode::Float => Value::from(p.float_error),
                };
                rep.push(vec![p.r.into(), p.tv.into(), p.l2_bound.into(), last]);
            }
            Ok(rep)
        }
        Command::SnCutoff { n, c } => {
            let r = sn_cutoff_steps(*n, *c);
            let tv =
                walk_distribution(*n, r, &Partition::row(*n), Mode::Float)?.tv_to_plancherel_f64();
            let mut rep = Report::table(&[
                "n",
                "c",
                "r",
                "ceiling",
                "l2_bound",
                "tv",
                "chebyshev_lower",
            ]);
            rep.push(vec![
                (*n).into(),
                (*c).into(),
                r.into(),
                sn_cutoff_ceiling(*c).into(),
                sn_upper_bound(*n, r).into(),
                tv.into(),
                sn_lower_bound_estimate(*n, r, (-*c).exp()).into(),
            ]);
            Ok(rep)
        }
        Command::SnSample {
            n,
            r,
            count,
            histogram,
        } => {
            check_sample_n(*n)?;
            check_count(*count)?;
            let samples = match r {
                Some(r) => sample_walk_batch(*n, *r, *count, seed),
                None => sample_plancherel_batch(*n, *count, seed),
            };
            check_histogram_n(*n, *histogram)?;
            Ok(sample_report(*n, &samples, *histogram))
        }
        Command::SnRsk {
            n,
            r,
            count,
            histogram,
        } => {
            check_sample_n(*n)?;
            check_count(*count)?;
            check_histogram_n(*n, *histogram)?;
            Ok(sample_report(
                *n,
                &rsk_batch(*n, *r, *count, seed),
                *histogram,
            ))
        }
        Command::SnMoments { n, rmax, class, s } => {
            let class = CycleType::new(match class {
                Some(c) => parse_partition(c)?,
                None if *n >= 2 => CycleType::transpositions(*n).cycle_lengths,
                None => {
                    return Err(Error::invalid(
                        "n must be at least 2 for the transposition class",
                    ))
                }
            });
            if class.n() != *n {
                return Err(Error::SizeMismatch {
                    expected: *n,
                    actual: class.n(),
                });
            }
            let s = *s as usize;
            let is_transposition = *n >= 2 && class == CycleType::transpositions(*n);
            let direct = *n <= Mode::Exact.limit();
            let mut rep = Report::table(&["r", "method", "value", "value_f64"]);
            rep.note("class", class.cycle_lengths.to_string());
            rep.note("s", s);
            for r in 0..=*rmax {
                let mut methods = vec![("transfer", moment_fc(*n, &class, s, r)?)];
                if direct {
                    methods.push(("direct", moment_fc_direct(*n, &class, s, r)?));
                }
                if is_transposition {
                    methods.push(("closed_form", moment_transposition_closed_form(*n, s, r)?));
                }
                if methods.windows(2).any(|w| w[0].1 != w[1].1) {
                    rep.ok = false;
                }
                for (name, v) in methods {
                    rep.push(vec![
                        r.into(),
                        name.into(),
                        v.to_string().into(),
                        v.to_f64().into(),
                    ]);
                }
            }
            rep.note("methods_agree", rep.ok);
            Ok(rep)
        }
        Command::GlIrreps { n, q } => {
            let mut rep = Report::table(&["family", "dimension", "plancherel_mass"]);
            for e in plancherel_gl(*n, *q)? {
                rep.push(vec![
                    e.family.descriptor().into(),
                    e.dimension.to_string().into(),
                    q_val(&e.mass),
                ]);
            }
            Ok(rep)
        }
        Command::GlCounts { n, q } => {
            let mut rep = Report::table(&["fixed_dim", "count"]);
            for (i, c) in fixed_space_counts(*n, *q)? {
                rep.push(vec![i.into(), c.to_string().into()]);
            }
            Ok(rep)
        }
        Command::GlBound { n, q, r } => {
            let l2 = gl_l2_sum(*n, *q, *r)?;
            let bound = gl_upper_bound(*n, *q, *r)?;
            let mut rep = Report::table(&["n", "q", "r", "l2_sum", "bound", "ceiling"]);
            // 1/(2q^c) with c = r − n, meaningful when r > n.
            let ceiling = if r > n {
                Value::from(0.5 / (*q as f64).powi((r - n) as i32))
            } else {
                Value::Null
            };
            rep.push(vec![
                (*n).into(),
                (*q).into(),
                (*r).into(),
                q_val(&l2),
                bound.into(),
                ceiling,
            ]);
            Ok(rep)
        }
        Command::GlLower { n, q, c } => {
            let lb = gl_lower_bound(*n, *q, *c)?;
            let mut rep = Report::table(&[
                "n",
                "q",
                "c",
                "steps",
                "lower_bound",
                "exact",
                "method",
                "tail_bound",
            ]);
            rep.push(vec![
                (*n).into(),
                (*q).into(),
                (*c).into(),
                n.checked_sub(*c).map(Value::from).unwrap_or(Value::Null),
                lb.value.into(),
                lb.exact.map(Value::from).unwrap_or(Value::Null),
                serde_json::to_value(lb.method).expect("enum serializes"),
                unipotent_tail_bound(*q, *c).into(),
            ]);
            Ok(rep)
        }
        Command::GlSample { n, q, count, u } => {
            check_count(*count)?;
            let u = match u {
                Some(s) => {
                    Some(q_parse(s).ok_or_else(|| Error::Parse(format!("bad rational {s:?}")))?)
                }
                None => None,
            };
            let sampler = GlSampler::new(*n, *q, u)?;
            let mut rep = Report::table(&["family"]);
            rep.note("u", q_render(sampler.u()));
            for phi in sampler.sample_batch(*count, seed)? {
                rep.push(vec![phi.descriptor().into()]);
            }
            Ok(rep)
        }
        Command::GlCycleIndex {
            q,
            order,
            marker,
            check,
        } => {
            let markers = match marker {
                MarkerArg::None => vec![Marker::None],
                MarkerArg::Unipotent => vec![Marker::Unipotent],
                MarkerArg::Both => vec![Marker::None, Marker::Unipotent],
            };
            let marker_name = |m: Marker| serde_json::to_value(m).expect("enum serializes");
            if *check {
                let mut rep = Report::table(&["marker", "u_power", "t_power", "lhs", "rhs"]);
                for m in markers {
                    let c = cycle_index_check(*q, *order, m)?;
                    rep.ok &= c.equal;
                    for (n, j, l, r) in c.coefficients {
                        rep.push(vec![marker_name(m), n.into(), j.into(), l.into(), r.into()]);
                    }
                }
                rep.note("equal", rep.ok);
                Ok(rep)
            } else {
                let mut rep = Report::table(&["marker", "u_power", "t_power", "coefficient"]);
                for m in markers {
                    let s = cycle_index_rhs(*q, *order, m)?;
                    for n in 0..=*order {
                        for j in 0..=n {
                            let c = s.coeff(n, j);
                            if !num_traits::Zero::is_zero(c) {
                                rep.push(vec![marker_name(m), n.into(), j.into(), q_val(c)]);
                            }
                        }
                    }
                }
                Ok(rep)
            }
        }
        Command::Hsp { n, gens, catalogue } => {
            let (n, gens) = match catalogue {
                Some(name) => {
                    let entry = subgroup_catalogue()?
                        .into_iter()
                        .find(|e| &e.name == name)
                        .ok_or_else(|| {
                            Error::invalid(format!("no catalogue entry named {name:?}"))
                        })?;
                    (entry.n, entry.generators)
                }
                None => (n.expect("clap requires n"), gens.clone()),
            };
            let h = subgroup_closure(n, &parse_generators(n, &gens)?)?;
            let b = hsp_bounds(&h)?;
            let mut rep = Report::table(&["class", "size", "intersection"]);
            rep.rows_key = "per_class";
            rep.note("subgroup_order", h.order());
            rep.note("tv", b.tv);
            rep.note("sharp", b.sharp);
            rep.note("ks", b.ks);
            rep.note("tv_exact", b.tv_exact.clone());
            rep.note("sharp_squared", b.sharp_squared.clone());
            rep.note("tv_le_sharp", b.tv_le_sharp);
            rep.note("sharp_le_ks", b.sharp_le_ks);
            rep.ok = b.tv_le_sharp && b.sharp_le_ks;
            if n <= crate::hsp::COSET_CHECK_MAX_N {
                let induced = induced_character_check(&h)?;
                rep.note("induced_character_check", induced);
                rep.ok &= induced;
            }
            for row in b.per_class {
                rep.push(vec![
                    row.class.into(),
                    row.size.into(),
                    row.intersection.into(),
                ]);
            }
            Ok(rep)
        }
    }
}

fn check_histogram_n(n: usize, as_histogram: bool) -> Result<()> {
    let limit = crate::walk::distribution::FLOAT_WALK_LIMIT;
    if as_histogram && n > limit {
        return Err(Error::capacity("sn-walk", "histogram n", n, limit));
    }
    Ok(())
}

/// Exit status for a library error.
pub fn exit_code(err: &Error) -> i32 {
    match err {
        Error::Capacity { .. } => EXIT_CAPACITY,
        Error::InvalidParameter(_) | Error::Parse(_) | Error::SizeMismatch { .. } => EXIT_USAGE,
        Error::Internal(_) | Error::AcceptanceFailure { .. } | Error::Io(_) => EXIT_FAILURE,
    }
}

fn write_output(text: &str, out: &Option<PathBuf>, stdout: &mut dyn Write) -> io::Result<()> {
    match out {
        Some(path) => File::create(path)?.write_all(text.as_bytes()),
        None => stdout.write_all(text.as_bytes()),
    }
}

/// Parses `args` (including the program name), runs the command and returns the exit status.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let args: Vec<std::ffi::OsString> = args.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if code == EXIT_OK {
                stdout.write_all(text.as_bytes())
            } else {
                stderr.write_all(text.as_bytes())
            };
            return code;
        }
    };
    if cli.global.threads == 0 {
        let _ = writeln!(
            stderr,
            "error: invalid parameter: --threads must be at least 1"
        );
        return EXIT_USAGE;
    }
    let command_line = args
        .iter()
        .skip(1)
        .map(|a| a.to_string_lossy().into_owned())
        .collect::<Vec<_>>()
        .join(" ");
    let started = Instant::now();
    let pool = match rayon::ThreadPoolBuilder::new()
        .num_threads(cli.global.threads)
        .build()
    {
        Ok(p) => p,
        Err(e) => {
            let _ = writeln!(stderr, "error: thread pool: {e}");
            return EXIT_FAILURE;
        }
    };
    let result = pool.install(|| execute(&cli.command, &cli.global));
    let report = match result {
        Ok(r) => r,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            return exit_code(&e);
        }
    };
    let text = render(&report, cli.global.format, &command_line);
    if let Err(e) = write_output(&text, &cli.global.out, stdout) {
        let _ = writeln!(stderr, "error: {e}");
        return EXIT_FAILURE;
    }
    let _ = writeln!(
        stderr,
        "wall_time_s: {:.3}",
        started.elapsed().as_secs_f64()
    );
    if report.ok {
        EXIT_OK
    } else {
        let _ = writeln!(stderr, "check failed");
        EXIT_FAILURE
    }
}
