//! Command dispatch for the `nimtri` binary.
//!
//! Every subcommand writes one stable line (or one table) to the output
//! stream. `--json` switches to a single JSON object carrying the same fields.
//! Exit codes: 0 success, 1 failed check or I/O error, 2 usage error, 3 a
//! size cap was exceeded.

use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use nimtri::applications::{census_with_cap, closed_form, DEFAULT_MAX_K};
use nimtri::render::{render_pgm_with_cap, DEFAULT_MAX_RENDER_K};
use nimtri::{
    advise_move, mex, reorder_dominant, verify_table_equals_xor, Error, GreedyTable, MoveAdvice,
    Natural, NimPosition, RenderSpec, Triangle,
};

/// Environment variable that replaces the census and render width caps.
pub const MAX_K_ENV: &str = "NIM_TRIPLE_MAX_K";

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_CAP: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "nimtri", version, about = "Nim sums and triangles of numbers")]
#[command(allow_negative_numbers = true)]
struct Cli {
    /// Emit one JSON object instead of text.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Nim sum of two numbers.
    Sum { a: Natural, b: Natural },
    /// Classify the triangle (a, b, c).
    Classify { a: Natural, b: Natural, c: Natural },
    /// Put a number at least the Nim sum of the other two first.
    Reorder { a: Natural, b: Natural, c: Natural },
    /// Nim sum computed as the minimum excludant of the exclusion set.
    Mex { a: Natural, b: Natural },
    /// Greedy minimal operation table of size n.
    Table {
        n: usize,
        /// Check the table against XOR instead of printing it.
        #[arg(long)]
        verify: bool,
    },
    /// Winning move advice for a Nim position.
    Move {
        #[arg(required = true)]
        piles: Vec<Natural>,
    },
    /// Count flat, tight and loose triangles over [0, 2^k)^3.
    Census {
        k: u32,
        /// Compare the counts with the closed-form prediction.
        #[arg(long)]
        check_closed_form: bool,
        /// Append elapsed milliseconds.
        #[arg(long)]
        timing: bool,
    },
    /// Write a 2^k x 2^k PGM map of classes of (row, col, c).
    Render {
        k: u32,
        c: Natural,
        #[arg(long)]
        out: PathBuf,
    },
}

/// Settings taken from the environment.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Config {
    /// Replaces both the census and the render width caps.
    pub max_k: Option<u32>,
}

impl Config {
    pub fn from_env() -> Result<Config, String> {
        match std::env::var(MAX_K_ENV) {
            Ok(v) => v
                .trim()
                .parse()
                .map(|k| Config { max_k: Some(k) })
                .map_err(|_| format!("{MAX_K_ENV} must be a non-negative integer, got {v:?}")),
            Err(_) => Ok(Config::default()),
        }
    }

    fn census_cap(&self) -> u32 {
        self.max_k.unwrap_or(DEFAULT_MAX_K)
    }

    fn render_cap(&self) -> u32 {
        self.max_k.unwrap_or(DEFAULT_MAX_RENDER_K)
    }
}

enum Failure {
    Usage(String),
    Cap(String),
    Runtime(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::CapExceeded { .. } => Failure::Cap(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

/// Runs with configuration read from the environment.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Config::from_env() {
        Ok(config) => run_with(args, config, out, err),
        Err(msg) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
    }
}

pub fn run_with<I, T>(args: I, config: Config, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            let _ = write!(out, "{e}");
            return EXIT_OK;
        }
        Err(e) => {
            let rendered = e.to_string();
            let line = rendered.lines().next().unwrap_or("error: invalid usage");
            let _ = writeln!(err, "{line}");
            return EXIT_USAGE;
        }
    };
    let (code, msg) = match execute(&cli, config, out) {
        Ok(code) => (code, None),
        Err(Failure::Usage(m)) => (EXIT_USAGE, Some(m)),
        Err(Failure::Cap(m)) => (EXIT_CAP, Some(m)),
        Err(Failure::Runtime(m)) => (EXIT_FAILURE, Some(m)),
    };
    if let Some(m) = msg {
        let _ = writeln!(err, "error: {m}");
    }
    code
}

fn emit(
    out: &mut dyn Write,
    json: bool,
    text: impl FnOnce() -> String,
    value: impl FnOnce() -> Value,
) -> Result<(), Failure> {
    let res = if json {
        writeln!(out, "{}", value())
    } else {
        writeln!(out, "{}", text())
    };
    res.map_err(|e| Failure::Runtime(format!("writing output: {e}")))
}

fn execute(cli: &Cli, config: Config, out: &mut dyn Write) -> Result<i32, Failure> {
    let json = cli.json;
    match &cli.command {
        Command::Sum { a, b } => {
            let s = a ^ b;
            emit(
                out,
                json,
                || s.to_string(),
                || json!({ "a": a.to_string(), "b": b.to_string(), "sum": s.to_string() }),
            )?;
        }
        Command::Classify { a, b, c } => {
            let t = Triangle::new(a.clone(), b.clone(), c.clone());
            let cl = t.classify();
            emit(
                out,
                json,
                || cl.to_string(),
                || {
                    json!({
                        "class": cl.class.as_str(),
                        "j": cl.discriminant,
                        "a": cl.status_a().as_str(),
                        "b": cl.status_b().as_str(),
                        "c": cl.status_c().as_str(),
                    })
                },
            )?;
        }
        Command::Reorder { a, b, c } => {
            let r = reorder_dominant(a.clone(), b.clone(), c.clone());
            let perm: Vec<usize> = r.permutation.iter().map(|i| i + 1).collect();
            emit(
                out,
                json,
                || {
                    let [x, y, z] = &r.values;
                    let p: Vec<String> = perm.iter().map(|i| i.to_string()).collect();
                    format!("{x} {y} {z} perm={}", p.join(","))
                },
                || {
                    json!({
                        "values": r.values.iter().map(|v| v.to_string()).collect::<Vec<_>>(),
                        "permutation": perm,
                    })
                },
            )?;
        }
        Command::Mex { a, b } => {
            let set = mex::exclusion_set(a, b)?;
            let m = set.mex();
            emit(
                out,
                json,
                || m.to_string(),
                || json!({ "a": a.to_string(), "b": b.to_string(), "mex": m.to_string(), "excluded": set.len() }),
            )?;
        }
        Command::Table { n, verify } => {
            if *n == 0 {
                return Err(Failure::Usage("table size must be at least 1".into()));
            }
            let table = GreedyTable::build(*n);
            if *verify {
                let check = verify_table_equals_xor(&table);
                let latin = table.is_latin();
                emit(
                    out,
                    json,
                    || match check {
                        Ok(()) => format!("n={n} latin={latin} xor=true"),
                        Err(m) => {
                            format!("n={n} latin={latin} xor=false row={} col={}", m.row, m.col)
                        }
                    },
                    || {
                        json!({
                            "n": n,
                            "latin": latin,
                            "xor": check.is_ok(),
                            "mismatch": check.err().map(|m| json!({ "row": m.row, "col": m.col, "found": m.found })),
                        })
                    },
                )?;
                if check.is_err() || !latin {
                    return Ok(EXIT_FAILURE);
                }
            } else if json {
                let rows: Vec<&[u64]> = table.rows().collect();
                emit(out, true, String::new, || json!({ "n": n, "rows": rows }))?;
            } else {
                write!(out, "{table}")
                    .map_err(|e| Failure::Runtime(format!("writing output: {e}")))?;
            }
        }
        Command::Move { piles } => {
            let advice = advise_move(&NimPosition::from(piles.clone()))?;
            emit(
                out,
                json,
                || advice.to_string(),
                || match &advice {
                    MoveAdvice::Winning { pile, new_size } => {
                        json!({ "advice": "win", "pile": pile, "size": new_size.to_string() })
                    }
                    MoveAdvice::NoWinningMove => json!({ "advice": "none" }),
                },
            )?;
        }
        Command::Census {
            k,
            check_closed_form,
            timing,
        } => {
            let report = census_with_cap(*k, config.census_cap())?;
            let matches = check_closed_form.then(|| report.tally == closed_form(*k));
            emit(
                out,
                json,
                || {
                    let mut line = report.to_string();
                    if let Some(m) = matches {
                        line.push_str(&format!(" closed_form={m}"));
                    }
                    if *timing {
                        line.push_str(&format!(" elapsed_ms={}", report.elapsed_ms()));
                    }
                    line
                },
                || {
                    let mut v = json!({
                        "k": report.k,
                        "flat": report.flat(),
                        "tight": report.tight(),
                        "loose": report.loose(),
                    });
                    if let Some(m) = matches {
                        v["closed_form"] = json!(m);
                    }
                    if *timing {
                        v["elapsed_ms"] = json!(report.elapsed_ms() as u64);
                    }
                    v
                },
            )?;
            if matches == Some(false) {
                return Ok(EXIT_FAILURE);
            }
        }
        Command::Render { k, c, out: path } => {
            let spec = RenderSpec::new(*k, c.clone());
            let bytes = render_pgm_with_cap(&spec, config.render_cap())?;
            std::fs::write(path, &bytes)
                .map_err(|e| Failure::Runtime(format!("writing {}: {e}", path.display())))?;
            let side = spec.side();
            emit(
                out,
                json,
                || format!("out={} width={side} height={side}", path.display()),
                || json!({ "out": path.display().to_string(), "width": side, "height": side }),
            )?;
        }
    }
    Ok(EXIT_OK)
}
