use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use forestrep::character::{fixed_point_character, ClassFunction};
use forestrep::forest_rep::{
    export_frobenius_cache, import_frobenius_cache, odun_representation, rook_frobenius,
    rook_sign_count, sign_by_stratum, sign_by_stratum_by_coefficient, stratum_character, FrobeniusCacheJson,
    Method,
};
use forestrep::odun::{blossoming_split, count_blossoming, enumerate_oduns, has_only_even_symmetries, is_blossoming};
use forestrep::symfunc::{inverse_frobenius_of_degree, Basis};
use forestrep::tables::{compute_table, format_table_line};
use forestrep::transform::{count_nilpotent, count_nilpotent_by_enumeration, enumerate_nilpotent, to_json};
use forestrep::verify::{run, VerifyConfig};
use forestrep::{Error, Odun};
use num_bigint::BigUint;
use num_rational::BigRational;
use serde_json::{json, Value};

/// Largest n for commands that walk every nilpotent map, unless `--force`.
const ENUMERATION_CAP: usize = 8;
const CACHE_FILE: &str = "frobenius-cache.json";

#[derive(Parser, Debug)]
#[command(name = "forestrep", version, about = "Conjugation representations on nilpotent partial transformations")]
struct Cli {
    /// Worker threads for enumeration and per-forest work (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Lift the n <= 8 cap on commands that enumerate every map.
    #[arg(long, global = true)]
    force: bool,
    /// Directory where the forest characteristic cache is read and written.
    #[arg(long, global = true, env = "FORESTREP_CACHE_DIR")]
    cache_dir: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    FixedPoint,
    Plethysm,
}

impl From<MethodArg> for Method {
    fn from(m: MethodArg) -> Self {
        match m {
            MethodArg::FixedPoint => Method::FixedPoint,
            MethodArg::Plethysm => Method::Plethysm,
        }
    }
}

#[derive(Args, Debug)]
struct Stratum {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    k: usize,
    #[arg(long, value_enum, default_value_t = MethodArg::Plethysm)]
    method: MethodArg,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// |C(k,n)| from the closed form; all strata when --k is omitted.
    Count {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: Option<usize>,
        /// Also count by enumeration and fail on any difference.
        #[arg(long)]
        check: bool,
    },
    /// Lists the nilpotent maps of rank k on [n] in one-line notation.
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        limit: Option<usize>,
    },
    /// Lists forests on n vertices by canonical string.
    Oduns {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        components: Option<usize>,
        #[arg(long)]
        blossoming_only: bool,
    },
    /// Character of C(k,n), one value per cycle type.
    Character(Stratum),
    /// Irreducible decomposition of C(k,n).
    Decompose(Stratum),
    /// Characteristic, decomposition and dimension of one forest orbit.
    DecomposeOdun {
        #[arg(long)]
        odun: String,
    },
    /// All strata of C_n in the table layout.
    Table {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = MethodArg::Plethysm)]
        method: MethodArg,
    },
    /// Multiplicity of the sign representation.
    Sign {
        #[arg(long)]
        n: usize,
        #[arg(long, conflicts_with = "total")]
        per_stratum: bool,
        #[arg(long)]
        total: bool,
    },
    /// Blossoming census on n vertices.
    Blossoming {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        list: bool,
    },
    /// Orbits of injective nilpotent maps with the given number of chains.
    Rooks {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        parts: usize,
    },
    /// Runs the numbered self-check suite.
    Verify {
        #[arg(long, default_value_t = 7)]
        max_n: usize,
        #[arg(long, default_value_t = VerifyConfig::default().seed)]
        seed: u64,
    },
}

/// Failures, split by exit code.
enum Failure {
    Usage(String),
    Integrity(String),
    Io(io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Integrity(_) => Failure::Integrity(e.to_string()),
            other => Failure::Usage(other.to_string()),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

type Outcome = Result<(), Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(t) = cli.threads {
        if t == 0 {
            eprintln!("error: --threads must be at least 1");
            return ExitCode::from(2);
        }
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(t).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    if let Some(dir) = &cli.cache_dir {
        if let Err(e) = load_cache(dir) {
            eprintln!("warning: ignoring cache in {}: {e}", dir.display());
        }
    }
    let stdout = io::stdout();
    let mut out = io::BufWriter::new(stdout.lock());
    let result = dispatch(&cli, &mut out).and_then(|()| out.flush().map_err(Failure::Io));
    if let Some(dir) = &cli.cache_dir {
        if let Err(e) = save_cache(dir) {
            eprintln!("warning: could not write cache to {}: {e}", dir.display());
        }
    }
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(Failure::Io(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Integrity(msg)) => {
            eprintln!("integrity failure: {msg}");
            ExitCode::from(1)
        }
    }
}

fn load_cache(dir: &std::path::Path) -> Result<(), String> {
    let path = dir.join(CACHE_FILE);
    if !path.exists() {
        return Ok(());
    }
    let text = std::fs::read_to_string(&path).map_err(|e| e.to_string())?;
    let json: FrobeniusCacheJson = serde_json::from_str(&text).map_err(|e| e.to_string())?;
    import_frobenius_cache(&json).map(|_| ()).map_err(|e| e.to_string())
}

fn save_cache(dir: &std::path::Path) -> io::Result<()> {
    std::fs::create_dir_all(dir)?;
    let text = serde_json::to_string(&export_frobenius_cache()).map_err(io::Error::other)?;
    let tmp = dir.join(format!("{CACHE_FILE}.tmp"));
    std::fs::write(&tmp, text)?;
    std::fs::rename(tmp, dir.join(CACHE_FILE))
}

fn dispatch(cli: &Cli, out: &mut impl Write) -> Outcome {
    let json = cli.format == Format::Json;
    match &cli.command {
        Command::Count { n, k, check } => {
            check_n(*n)?;
            let ks: Vec<usize> = match k {
                Some(k) => {
                    check_k(*n, *k)?;
                    vec![*k]
                }
                None => (0..*n).collect(),
            };
            if *check {
                enumeration_cap(*n, cli.force)?;
                for &k in &ks {
                    let counted = count_nilpotent_by_enumeration(*n, k);
                    if BigUint::from(counted) != count_nilpotent(*n, k) {
                        return Err(Failure::Integrity(format!("C({k},{n}): enumeration gives {counted}")));
                    }
                }
            }
            let counts: Vec<(usize, BigUint)> = ks.iter().map(|&k| (k, count_nilpotent(*n, k))).collect();
            if json {
                let rows: Vec<Value> = counts.iter().map(|(k, c)| json!({ "n": n, "k": k, "count": big(c) })).collect();
                write_json(out, &if k.is_some() { rows[0].clone() } else { Value::Array(rows) })
            } else if k.is_some() {
                writeln!(out, "{}", counts[0].1).map_err(Failure::Io)
            } else {
                for (k, c) in &counts {
                    writeln!(out, "C({k},{n}) {c}")?;
                }
                let total: BigUint = counts.iter().map(|(_, c)| c).sum();
                writeln!(out, "total {total}").map_err(Failure::Io)
            }
        }
        Command::Enumerate { n, k, limit } => {
            check_n(*n)?;
            check_k(*n, *k)?;
            enumeration_cap(*n, cli.force)?;
            for f in enumerate_nilpotent(*n, *k).take(limit.unwrap_or(usize::MAX)) {
                if json {
                    writeln!(out, "{}", to_json(&f))?;
                } else {
                    writeln!(out, "{f}")?;
                }
            }
            Ok(())
        }
        Command::Oduns { n, components, blossoming_only } => {
            check_n(*n)?;
            if let Some(c) = components {
                if *c == 0 || c > n {
                    return Err(Failure::Usage(format!("--components must be in 1..={n}")));
                }
            }
            let list: Vec<Odun> =
                enumerate_oduns(*n, *components).into_iter().filter(|o| !blossoming_only || is_blossoming(o)).collect();
            if json {
                let rows: Vec<Value> = list
                    .iter()
                    .map(|o| {
                        json!({
                            "code": o.code(),
                            "components": o.component_count(),
                            "blossoming": is_blossoming(o),
                            "odun": o.to_json(),
                        })
                    })
                    .collect();
                write_json(out, &Value::Array(rows))
            } else {
                for o in &list {
                    writeln!(out, "{o}")?;
                }
                Ok(())
            }
        }
        Command::Character(s) => {
            let chi = stratum(s, cli.force)?;
            if json {
                write_json(out, &json!({ "n": s.n, "k": s.k, "values": class_function_json(&chi) }))
            } else {
                write!(out, "{chi}").map_err(Failure::Io)
            }
        }
        Command::Decompose(s) => {
            let chi = stratum(s, cli.force)?;
            let d = forestrep::character::decompose(&chi)?;
            if json {
                write_json(out, &json!({ "n": s.n, "k": s.k, "decomposition": d.to_json() }))
            } else {
                writeln!(out, "{}", format_table_line(s.n, s.k, &d)).map_err(Failure::Io)
            }
        }
        Command::DecomposeOdun { odun } => {
            let o: Odun = odun.parse()?;
            let r = odun_representation(&o)?;
            if json {
                write_json(
                    out,
                    &json!({
                        "odun": o.code(),
                        "n": o.vertex_count(),
                        "dimension": big(&r.dimension),
                        "blossoming": is_blossoming(&o),
                        "sign_multiplicity": u8::from(has_only_even_symmetries(&o)),
                        "frobenius": r.frobenius.to_json(Basis::S),
                        "decomposition": r.decomposition.to_json(),
                    }),
                )
            } else {
                writeln!(out, "odun {}", o.code())?;
                writeln!(out, "vertices {}", o.vertex_count())?;
                writeln!(out, "dimension {}", r.dimension)?;
                writeln!(out, "frobenius {}", r.frobenius.to_text(Basis::S))?;
                writeln!(out, "power sums {}", r.frobenius.to_text(Basis::P))?;
                writeln!(out, "decomposition {}", r.decomposition).map_err(Failure::Io)
            }
        }
        Command::Table { n, method } => {
            check_n(*n)?;
            if *method == MethodArg::FixedPoint {
                enumeration_cap(*n, cli.force)?;
            }
            let rows = compute_table(*n, (*method).into())?;
            if json {
                let rows: Vec<Value> =
                    rows.iter().enumerate().map(|(k, d)| json!({ "k": k, "decomposition": d.to_json() })).collect();
                write_json(out, &json!({ "n": n, "rows": rows }))
            } else {
                for (k, d) in rows.iter().enumerate() {
                    writeln!(out, "{}", format_table_line(*n, k, d))?;
                }
                Ok(())
            }
        }
        Command::Sign { n, per_stratum, total } => {
            check_n(*n)?;
            let strata = sign_by_stratum(*n);
            let audit = sign_by_stratum_by_coefficient(*n)?;
            for (k, (a, b)) in strata.iter().zip(&audit).enumerate() {
                if BigRational::from_integer((*a).into()) != *b {
                    return Err(Failure::Integrity(format!("sign multiplicity in C({k},{n}): {a} by symmetry, {b} by coefficient")));
                }
            }
            let sum: usize = strata.iter().sum();
            let show_strata = *per_stratum || !*total;
            if json {
                let mut v = json!({ "n": n, "total": sum });
                if show_strata {
                    v["per_stratum"] = json!(strata);
                }
                write_json(out, &v)
            } else {
                if show_strata {
                    for (k, m) in strata.iter().enumerate() {
                        writeln!(out, "C({k},{n}) {m}")?;
                    }
                }
                if *total && !*per_stratum {
                    writeln!(out, "{sum}").map_err(Failure::Io)
                } else {
                    writeln!(out, "total {sum}").map_err(Failure::Io)
                }
            }
        }
        Command::Blossoming { n, list } => {
            check_n(*n)?;
            let count = count_blossoming(*n);
            let (without, with) = blossoming_split(*n);
            let forests: Vec<Odun> = if *list {
                enumerate_oduns(*n, None).into_iter().filter(is_blossoming).collect()
            } else {
                Vec::new()
            };
            if json {
                let mut v = json!({
                    "n": n,
                    "count": count,
                    "without_isolated_vertex": without,
                    "with_isolated_vertex": with,
                });
                if *list {
                    v["forests"] = json!(forests.iter().map(Odun::code).collect::<Vec<_>>());
                }
                write_json(out, &v)
            } else {
                writeln!(out, "blossoming {count}")?;
                writeln!(out, "without isolated vertex {without}")?;
                writeln!(out, "with isolated vertex {with}")?;
                for o in &forests {
                    writeln!(out, "{o}")?;
                }
                Ok(())
            }
        }
        Command::Rooks { n, parts } => {
            check_n(*n)?;
            if *parts == 0 || parts > n {
                return Err(Failure::Usage(format!("--parts must be in 1..={n}")));
            }
            let f = rook_frobenius(*n, *parts)?;
            let d = forestrep::character::decompose(&inverse_frobenius_of_degree(&f, *n)?)?;
            let sign = rook_sign_count(*n, *parts);
            if d.get(&forestrep::Partition::column(*n)) != BigUint::from(sign) {
                return Err(Failure::Integrity(format!("sign count {sign} disagrees with {d}")));
            }
            if json {
                write_json(
                    out,
                    &json!({
                        "n": n,
                        "parts": parts,
                        "frobenius": f.to_json(Basis::S),
                        "decomposition": d.to_json(),
                        "sign_count": sign,
                    }),
                )
            } else {
                writeln!(out, "frobenius {}", f.to_text(Basis::S))?;
                writeln!(out, "decomposition {d}")?;
                writeln!(out, "sign {sign}").map_err(Failure::Io)
            }
        }
        Command::Verify { max_n, seed } => {
            if *max_n < 1 {
                return Err(Failure::Usage("--max-n must be at least 1".into()));
            }
            if *max_n > ENUMERATION_CAP && !cli.force {
                return Err(Failure::Usage(format!("--max-n above {ENUMERATION_CAP} needs --force")));
            }
            let report = run(&VerifyConfig { max_n: *max_n, seed: *seed });
            if json {
                write_json(out, &serde_json::to_value(&report).map_err(|e| Failure::Io(io::Error::other(e)))?)?;
            } else {
                write!(out, "{report}")?;
            }
            if report.all_passed() {
                Ok(())
            } else {
                let failed: Vec<String> = report.failed().iter().map(|id| format!("criterion {id}")).collect();
                Err(Failure::Integrity(failed.join(", ")))
            }
        }
    }
}

fn check_n(n: usize) -> Outcome {
    if n == 0 {
        return Err(Failure::Usage("--n must be at least 1".into()));
    }
    Ok(())
}

fn check_k(n: usize, k: usize) -> Outcome {
    if k >= n {
        return Err(Failure::Usage(format!("--k must be in 0..={}", n - 1)));
    }
    Ok(())
}

fn enumeration_cap(n: usize, force: bool) -> Outcome {
    if n > ENUMERATION_CAP && !force {
        return Err(Failure::Usage(format!("n = {n} enumerates (n+1)^(n-1) maps; pass --force to go above {ENUMERATION_CAP}")));
    }
    Ok(())
}

fn stratum(s: &Stratum, force: bool) -> Result<ClassFunction, Failure> {
    check_n(s.n)?;
    check_k(s.n, s.k)?;
    if s.method == MethodArg::FixedPoint {
        enumeration_cap(s.n, force)?;
        return Ok(fixed_point_character(s.n, s.k)?);
    }
    Ok(stratum_character(s.n, s.k, s.method.into())?)
}

fn class_function_json(chi: &ClassFunction) -> Vec<Value> {
    chi.values()
        .iter()
        .map(|(rho, v)| json!({ "cycle_type": rho, "value": rational(v) }))
        .collect()
}

fn big(n: &BigUint) -> Value {
    Value::Number(n.to_string().parse().expect("integer literal"))
}

fn rational(v: &BigRational) -> Value {
    if v.is_integer() {
        Value::Number(v.to_integer().to_string().parse().expect("integer literal"))
    } else {
        Value::String(v.to_string())
    }
}

fn write_json(out: &mut impl Write, v: &Value) -> Outcome {
    serde_json::to_writer_pretty(&mut *out, v).map_err(|e| Failure::Io(io::Error::other(e)))?;
    writeln!(out).map_err(Failure::Io)
}
