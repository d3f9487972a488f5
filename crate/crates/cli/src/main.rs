//! hdpart: exact higher-dimensional partition counts and the triangle
//! transforms built on them.
//!
//! Subcommands: `count` (direct enumeration), `triangle` (compute a named
//! triangle by enumeration, by transform, or both with cross-checking),
//! `pdn` (p_d(n) for n <= 25 from the embedded data), `verify` (the
//! verification suites), `dump` (stream diagrams), `golden` (export the
//! embedded reference tables).
//!
//! Exit codes: 0 success, 1 verification failure or cross-method
//! disagreement, 2 usage/configuration error.

mod cache;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use hdpart_core::boxext::{abox2_from_cbox2, cd_triangle, chat_from_c, fhat_from_a};
use hdpart_core::counts::{
    a_triangle_by_enumeration, c_triangle_by_enumeration, count_pd, f_triangle_by_enumeration,
    EnumOptions,
};
use hdpart_core::enumerate::{enumerate_with, EnumConfig, FnVisitor, Parallelism};
use hdpart_core::golden::{assemble_full_a, complete_c, golden, golden_ids};
use hdpart_core::suites::{suite_all, suite_enumeration, suite_tables, suite_transforms};
use hdpart_core::transform::{a_from_f, b_from_a, c_from_a, d_from_c, f_from_a};
use hdpart_core::triangle::{Triangle, TriangleKind};
use hdpart_core::{alpha, hanna, pdn, Error};

#[derive(Parser)]
#[command(name = "hdpart", version, about = "Exact enumeration of higher-dimensional partitions")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,

    /// Cache file for computed triangles (HDPART_CACHE when unset)
    #[arg(long, global = true, value_name = "FILE")]
    cache: Option<PathBuf>,

    /// Worker threads for enumeration (default: all cores)
    #[arg(long, global = true, value_name = "K")]
    threads: Option<usize>,

    /// Lift the desk-scale guards (ambient dimension, projected visits)
    #[arg(long, global = true)]
    allow_large: bool,

    /// Report enumeration progress on stderr
    #[arg(long, global = true)]
    progress: bool,
}

#[derive(Subcommand)]
enum Cmd {
    /// Print p_D(1..N), one comma-separated line, by direct enumeration
    Count {
        /// Partition dimension d (ambient dimension is d+1)
        #[arg(long)]
        dim: usize,
        /// Largest n to count
        #[arg(long = "max-n")]
        max_n: usize,
        /// Restrict to a symmetric box of this size
        #[arg(long = "box")]
        box_bound: Option<u32>,
    },
    /// Compute a named triangle (A, B, C, D, F, T, alpha, beta, Abox2,
    /// Cbox2, Fbox2, Chat, Fhat, cD)
    Triangle {
        #[arg(long)]
        name: String,
        /// Number of rows, counted in the triangle's own row index
        #[arg(long)]
        rows: usize,
        #[arg(long, value_enum, default_value_t = Method::Transform)]
        method: Method,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        /// Write to a file instead of stdout
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
    },
    /// Print the single exact value p_d(n), n <= 25, from the embedded
    /// F data
    Pdn {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: usize,
    },
    /// Run verification suites; exits nonzero on any failure
    Verify {
        #[arg(long, value_enum, default_value_t = Suite::All)]
        suite: Suite,
    },
    /// Stream every diagram of an enumeration as one JSON line
    /// (compressed column form), sequentially
    Dump {
        #[arg(long)]
        dim: usize,
        #[arg(long = "max-n")]
        max_n: usize,
        #[arg(long = "box")]
        box_bound: Option<u32>,
    },
    /// Export an embedded reference table as JSON (or list the ids)
    Golden {
        #[arg(long)]
        table: Option<String>,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Enumerate,
    Transform,
    All,
}

impl std::fmt::Display for Method {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Method::Enumerate => "enumerate",
            Method::Transform => "transform",
            Method::All => "all",
        })
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum Suite {
    All,
    Tables,
    Transforms,
    Enumeration,
}

fn exit_code_for(e: &Error) -> u8 {
    match e {
        Error::Integrality(_) | Error::Support(_) | Error::Disagreement(_) => 1,
        _ => 2,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code_for(&e))
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, Error> {
    let opts = EnumOptions {
        threads: match cli.threads {
            None => Parallelism::Auto,
            Some(1) => Parallelism::Sequential,
            Some(k) => Parallelism::Threads(k),
        },
        allow_large: cli.allow_large,
        progress: cli.progress,
    };
    let cache_path = cache::resolve(cli.cache);

    match cli.cmd {
        Cmd::Count {
            dim,
            max_n,
            box_bound,
        } => {
            if max_n == 0 {
                return Err(Error::Config("--max-n must be at least 1".into()));
            }
            let key = cache::Cache::key(&[
                ("count", dim.to_string()),
                ("max_n", max_n.to_string()),
                ("box", format!("{box_bound:?}")),
            ]);
            let mut cache = cache_path.as_deref().map(cache::Cache::open);
            let values: Vec<String> = match cache.as_ref().and_then(|c| c.get_strings(&key)) {
                Some(v) => v,
                None => {
                    let counts = count_pd(dim, max_n, box_bound, &opts)?;
                    let v: Vec<String> = counts.iter().map(|c| c.to_string()).collect();
                    if let Some(c) = cache.as_mut() {
                        c.put_strings(&key, &v);
                        c.save()?;
                    }
                    v
                }
            };
            println!("{}", values.join(","));
            Ok(ExitCode::SUCCESS)
        }

        Cmd::Triangle {
            name,
            rows,
            method,
            format,
            out,
        } => {
            let kind: TriangleKind = name.parse()?;
            let key = cache::Cache::key(&[
                ("triangle", kind.name().to_string()),
                ("rows", rows.to_string()),
                ("method", method.to_string()),
            ]);
            let mut cache = cache_path.as_deref().map(cache::Cache::open);
            let tri = match cache.as_ref().and_then(|c| c.get_triangle(&key)) {
                Some(t) => t,
                None => {
                    let t = compute_triangle(kind, rows, method, &opts)?;
                    if let Some(c) = cache.as_mut() {
                        c.put_triangle(&key, &t);
                        c.save()?;
                    }
                    t
                }
            };
            let text = match format {
                Format::Json => tri.to_json(),
                Format::Csv => tri.to_csv(),
            };
            match out {
                Some(path) => std::fs::write(path, text)?,
                None => {
                    let mut stdout = std::io::stdout().lock();
                    stdout.write_all(text.as_bytes())?;
                    if !text.ends_with('\n') {
                        stdout.write_all(b"\n")?;
                    }
                }
            }
            Ok(ExitCode::SUCCESS)
        }

        Cmd::Pdn { n, d } => {
            println!("{}", pdn::pd(n, d)?);
            Ok(ExitCode::SUCCESS)
        }

        Cmd::Verify { suite } => {
            let outcomes = match suite {
                Suite::All => suite_all(&opts)?,
                Suite::Tables => suite_tables()?,
                Suite::Transforms => suite_transforms()?,
                Suite::Enumeration => suite_enumeration(&opts)?,
            };
            let mut failures = 0usize;
            for o in &outcomes {
                println!("{o}");
                if !o.pass {
                    failures += 1;
                }
            }
            if failures == 0 {
                println!("verify: all {} checks passed", outcomes.len());
                Ok(ExitCode::SUCCESS)
            } else {
                println!("verify: {failures} of {} checks FAILED", outcomes.len());
                Ok(ExitCode::from(1))
            }
        }

        Cmd::Dump {
            dim,
            max_n,
            box_bound,
        } => {
            if max_n == 0 {
                return Err(Error::Config("--max-n must be at least 1".into()));
            }
            let mut cfg = EnumConfig::origin_seeded(dim + 1, max_n - 1);
            cfg.box_bound = box_bound;
            cfg.allow_large = cli.allow_large;
            cfg.progress = cli.progress;
            cfg.serialize_visitor = true; // keep the stream deterministic
            let visitor = FnVisitor(|d: &hdpart_core::diagram::FerrersDiagram| {
                println!("{}", d.to_json());
            });
            enumerate_with(&cfg, &visitor)?;
            Ok(ExitCode::SUCCESS)
        }

        Cmd::Golden { table } => {
            match table {
                Some(id) => {
                    let t = golden(&id)?;
                    let cells: Vec<Vec<Option<String>>> = t
                        .cells
                        .iter()
                        .map(|row| row.iter().map(|c| c.as_ref().map(|v| v.to_string())).collect())
                        .collect();
                    let value = serde_json::json!({
                        "id": t.id,
                        "row_origin": t.row_origin,
                        "col_origin": t.col_origin,
                        "row_label": t.row_label,
                        "col_label": t.col_label,
                        "rows": cells,
                        "notes": t.notes,
                    });
                    println!("{}", serde_json::to_string_pretty(&value)?);
                }
                None => {
                    for id in golden_ids() {
                        println!("{id}");
                    }
                }
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

/// Row limits for the transform paths, set by how far the embedded data
/// reaches (see the golden-table notes).
fn transform_triangle(kind: TriangleKind, rows: usize) -> Result<Triangle, Error> {
    let limit = |max: usize| -> Result<(), Error> {
        if rows > max {
            Err(Error::MissingData(format!(
                "{} by transform is available up to {max} rows (requested {rows})",
                kind.name()
            )))
        } else {
            Ok(())
        }
    };
    match kind {
        TriangleKind::A => {
            limit(25)?;
            a_from_f(&golden("F")?.triangle()?, rows)
        }
        TriangleKind::B => {
            limit(25)?;
            b_from_a(&a_from_f(&golden("F")?.triangle()?, rows)?)
        }
        TriangleKind::T => {
            limit(25)?;
            let a = a_from_f(&golden("F")?.triangle()?, rows)?;
            hanna::t_from_b(&b_from_a(&a)?, rows)
        }
        TriangleKind::C => {
            // row m needs the A diagonal up to n = 3m+1 <= 25
            limit(8)?;
            let a = a_from_f(&golden("F")?.triangle()?, 3 * rows + 1)?;
            c_from_a(&a, rows)
        }
        TriangleKind::D => {
            limit(10)?;
            d_from_c(&complete_c(10)?, rows)
        }
        TriangleKind::F => {
            limit(23)?;
            f_from_a(&assemble_full_a(23)?, rows)
        }
        TriangleKind::Alpha => {
            limit(10)?;
            alpha::alpha_from_c(&complete_c(10)?, rows)
        }
        TriangleKind::Beta => {
            limit(10)?;
            alpha::beta_triangle(&alpha::alpha_from_c(&complete_c(10)?, 10)?, rows)
        }
        TriangleKind::CD => {
            limit(30)?;
            Ok(cd_triangle(rows))
        }
        TriangleKind::Chat => {
            limit(10)?;
            chat_from_c(&complete_c(10)?, &golden("Cbox2")?.triangle()?, rows)
        }
        TriangleKind::Fhat => {
            limit(12)?;
            fhat_from_a(&assemble_full_a(23)?, &golden("Cbox2")?.triangle()?, rows)
        }
        TriangleKind::ABox2 => {
            limit(11)?;
            abox2_from_cbox2(&golden("Cbox2")?.triangle()?, rows)
        }
        TriangleKind::FBox2 => {
            limit(11)?;
            hdpart_core::suites::fbox2_from_embedded_cbox2(rows)
        }
        TriangleKind::CBox2 => Err(Error::Config(
            "Cbox2 has no transform path; use --method enumerate".into(),
        )),
        TriangleKind::PdGrid => Err(Error::Config(
            "pd is a grid, not a triangle; use the count or pdn subcommands".into(),
        )),
    }
}

fn enumerate_triangle(
    kind: TriangleKind,
    rows: usize,
    opts: &EnumOptions,
) -> Result<Triangle, Error> {
    match kind {
        TriangleKind::A => a_triangle_by_enumeration(rows, None, opts),
        TriangleKind::C => c_triangle_by_enumeration(rows, None, opts),
        TriangleKind::F => f_triangle_by_enumeration(rows, None, opts),
        TriangleKind::ABox2 => a_triangle_by_enumeration(rows, Some(2), opts),
        TriangleKind::CBox2 => c_triangle_by_enumeration(rows, Some(2), opts),
        TriangleKind::FBox2 => f_triangle_by_enumeration(rows, Some(2), opts),
        _ => Err(Error::Config(format!(
            "{} cannot be enumerated directly; use --method transform",
            kind.name()
        ))),
    }
}

fn compute_triangle(
    kind: TriangleKind,
    rows: usize,
    method: Method,
    opts: &EnumOptions,
) -> Result<Triangle, Error> {
    match method {
        Method::Enumerate => enumerate_triangle(kind, rows, opts),
        Method::Transform => transform_triangle(kind, rows),
        Method::All => {
            let enumerable = matches!(
                kind,
                TriangleKind::A
                    | TriangleKind::C
                    | TriangleKind::F
                    | TriangleKind::ABox2
                    | TriangleKind::CBox2
                    | TriangleKind::FBox2
            );
            let transformable = !matches!(kind, TriangleKind::CBox2 | TriangleKind::PdGrid);
            match (enumerable, transformable) {
                (true, true) => {
                    let e = enumerate_triangle(kind, rows, opts)?;
                    let t = transform_triangle(kind, rows)?;
                    if e != t {
                        return Err(Error::Disagreement(format!(
                            "{} rows 1..{rows}: enumeration and transform differ",
                            kind.name()
                        )));
                    }
                    Ok(e)
                }
                (true, false) => enumerate_triangle(kind, rows, opts),
                (false, true) => transform_triangle(kind, rows),
                (false, false) => Err(Error::Config(format!(
                    "no method available for {}",
                    kind.name()
                ))),
            }
        }
    }
}
