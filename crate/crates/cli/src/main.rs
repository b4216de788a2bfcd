use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use constacode::analysis::{DEFAULT_BUDGET, DEFAULT_SEED};
use constacode::fixtures::{self, Reproduction};
use constacode::{
    css_params, distance, factor_xn_minus_1, find_tob, mu_lift, paper_form, parse_rpoly, pretty_rpoly,
    xn_minus_lambda, BinaryCodeExport, ChainRing, CodeDescriptor, ConstaCode, DistanceStrategy, GrayMap,
    RPoly, RWord,
};
use serde::Serialize;
use serde_json::{json, Value};

/// Exit status for a reproduction that disagrees with the published values.
const EXIT_MISMATCH: u8 = 1;
/// Exit status for malformed or invalid input.
const EXIT_INVALID: u8 = 2;

#[derive(Parser)]
#[command(name = "constacode", version, about = "(1+u)-constacyclic codes over GF(2^m) + u GF(2^m)")]
struct Cli {
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    output: Format,
    /// Seed for the randomized distance search.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// Number of random information sets tried by the distance search.
    #[arg(long, global = true, default_value_t = DEFAULT_BUDGET)]
    budget: u64,
    /// Print lifted factors as (1+u) p((1+u) x) instead of the monic lift.
    #[arg(long, global = true)]
    paper_form: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Table,
}

#[derive(Subcommand)]
enum Command {
    /// Factor x^n - 1 over GF(2^m) into monic irreducibles.
    Factor {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 2)]
        m: u32,
        /// Also show each factor's lift to a factor of x^n - (1+u).
        #[arg(long)]
        lift: bool,
    },
    /// Build a code and report its size, duality and Gray image.
    Build {
        #[command(flatten)]
        code: CodeInput,
        /// Include the Gray image basis rows.
        #[arg(long)]
        matrix: bool,
    },
    /// Validate a factor triple; exits 2 if any check fails.
    Verify {
        #[command(flatten)]
        code: CodeInput,
    },
    /// Gray image of a word given as JSON, e.g. '[[1,0],[2,3],[0,1]]'.
    Gray {
        word: String,
        #[arg(long, default_value_t = 2)]
        m: u32,
    },
    /// Minimum distance of the Gray image.
    Distance {
        #[command(flatten)]
        code: CodeInput,
        #[arg(long, value_enum, default_value_t = Mode::Auto)]
        mode: Mode,
    },
    /// CSS parameters of a dual-containing code.
    Quantum {
        #[command(flatten)]
        code: CodeInput,
        #[arg(long, value_enum, default_value_t = Mode::UpperBound)]
        mode: Mode,
    },
    /// Recompute a worked example: 5.5, 6.6-85, 6.6-93 or all.
    Reproduce {
        #[arg(default_value = "all")]
        example: String,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Mode {
    Exact,
    UpperBound,
    Auto,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Fixture {
    Len3U,
    Len3Mixed,
    Len5,
    Len85,
    Len93,
}

/// A code given as a descriptor file, a bundled fixture, or factor text.
/// Missing g or h is solved from f g h = x^n - (1+u); h defaults to 1 when
/// both are omitted.
#[derive(Args)]
struct CodeInput {
    /// Descriptor JSON {n, m, f, g, h}; "-" reads stdin.
    #[arg(long, conflicts_with_all = ["fixture", "f", "g", "h"])]
    descriptor: Option<PathBuf>,
    #[arg(long, value_enum, conflicts_with_all = ["f", "g", "h"])]
    fixture: Option<Fixture>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long, default_value_t = 2)]
    m: u32,
    #[arg(long, allow_hyphen_values = true)]
    f: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    g: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    h: Option<String>,
}

impl CodeInput {
    fn load(&self) -> anyhow::Result<ConstaCode> {
        if let Some(path) = &self.descriptor {
            let text = if path.as_os_str() == "-" {
                std::io::read_to_string(std::io::stdin())?
            } else {
                std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?
            };
            let d: CodeDescriptor = serde_json::from_str(&text).context("parsing descriptor")?;
            return Ok(ConstaCode::from_descriptor(&d)?);
        }
        if let Some(fx) = self.fixture {
            return Ok(match fx {
                Fixture::Len3U => fixtures::len3_u_code()?,
                Fixture::Len3Mixed => fixtures::len3_mixed_code()?,
                Fixture::Len5 => fixtures::len5_code()?,
                Fixture::Len85 => fixtures::len85_code()?,
                Fixture::Len93 => fixtures::len93_code()?,
            });
        }
        let n = self.n.ok_or_else(|| anyhow!("--n is required with factor text"))?;
        let m = self.m;
        let ring = ChainRing::new(m)?;
        let parse = |s: &Option<String>, name: &str| -> anyhow::Result<Option<RPoly>> {
            s.as_deref()
                .map(|t| parse_rpoly(t, m).with_context(|| format!("parsing --{name}")))
                .transpose()
        };
        let f = parse(&self.f, "f")?.ok_or_else(|| anyhow!("one of --descriptor, --fixture or --f is required"))?;
        let (g, h) = (parse(&self.g, "g")?, parse(&self.h, "h")?);
        let solve = |known: &RPoly| -> anyhow::Result<RPoly> {
            let (q, r) = xn_minus_lambda(n, &ring).divmod(&f.mul(known, &ring), &ring)?;
            if !r.is_zero() {
                bail!("the given factors do not divide x^{n} - (1+u)");
            }
            Ok(q)
        };
        let (g, h) = match (g, h) {
            (Some(g), Some(h)) => (g, h),
            (Some(g), None) => {
                let h = solve(&g)?;
                (g, h)
            }
            (None, h) => {
                let h = h.unwrap_or_else(|| RPoly::one(&ring));
                (solve(&h)?, h)
            }
        };
        Ok(ConstaCode::new(f, g, h, n, m)?)
    }
}

fn strategy(cli: &Cli, mode: Mode) -> DistanceStrategy {
    let (budget, seed) = (cli.budget, cli.seed);
    match mode {
        Mode::Exact => DistanceStrategy::Exact,
        Mode::UpperBound => DistanceStrategy::UpperBound { budget, seed },
        Mode::Auto => DistanceStrategy::Auto { budget, seed },
    }
}

fn table(rows: &[(&str, String)]) -> String {
    let width = rows.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
    rows.iter().fold(String::new(), |mut s, (k, v)| {
        let _ = writeln!(s, "{k:<width$}  {v}");
        s
    })
}

fn emit(cli: &Cli, json: &impl Serialize, text: impl FnOnce() -> String) -> anyhow::Result<()> {
    match cli.output {
        Format::Json => println!("{}", serde_json::to_string_pretty(json)?),
        Format::Table => print!("{}", text()),
    }
    Ok(())
}

fn show_lift(cli: &Cli, lift: &RPoly, ring: &ChainRing) -> RPoly {
    if cli.paper_form {
        paper_form(lift, ring)
    } else {
        lift.clone()
    }
}

fn code_summary(cli: &Cli, code: &ConstaCode, matrix: bool) -> (Value, Vec<(&'static str, String)>) {
    let img = code.gray_image();
    let ring = code.ring();
    let f_shown = show_lift(cli, code.f(), ring);
    let mut v = json!({
        "descriptor": code.descriptor(),
        "f": pretty_rpoly(&f_shown),
        "g": pretty_rpoly(code.g()),
        "h": pretty_rpoly(code.h()),
        "log2_size": code.log2_size(),
        "cardinality": code.cardinality_pretty(),
        "dual_containing": code.is_dual_containing(),
        "gray": { "length": img.length(), "dimension": img.dimension() },
    });
    if matrix {
        v["gray_code"] = serde_json::to_value(img.export()).expect("export serializes");
    }
    let mut rows = vec![
        ("n", code.n().to_string()),
        ("m", code.m().to_string()),
        ("f", pretty_rpoly(&f_shown)),
        ("g", pretty_rpoly(code.g())),
        ("h", pretty_rpoly(code.h())),
        ("|C|", code.cardinality_pretty()),
        ("dual-containing", code.is_dual_containing().to_string()),
        ("Gray image", format!("[{}, {}]", img.length(), img.dimension())),
    ];
    if matrix {
        let export: BinaryCodeExport = img.export();
        rows.extend(export.rows.into_iter().map(|r| ("row", r)));
    }
    (v, rows)
}

fn run(cli: &Cli) -> anyhow::Result<u8> {
    match &cli.command {
        Command::Factor { n, m, lift } => {
            let ring = ChainRing::new(*m)?;
            let field = *ring.field();
            let mut items = Vec::new();
            let mut rows = Vec::new();
            for p in factor_xn_minus_1(*n, *m)? {
                let mut item = json!({
                    "degree": p.deg(),
                    "factor": p,
                    "text": p.render(&field),
                });
                let mut line = p.render(&field);
                if *lift {
                    let l = show_lift(cli, &mu_lift(&p, *n, &ring)?, &ring);
                    item["lift"] = serde_json::to_value(&l)?;
                    item["lift_text"] = pretty_rpoly(&l).into();
                    let _ = write!(line, "  ->  {}", pretty_rpoly(&l));
                }
                items.push(item);
                rows.push(line);
            }
            emit(cli, &items, || rows.iter().map(|r| format!("{r}\n")).collect())?;
        }
        Command::Build { code, matrix } => {
            let code = code.load()?;
            let (v, rows) = code_summary(cli, &code, *matrix);
            emit(cli, &v, || table(&rows))?;
        }
        Command::Verify { code } => {
            // every structural check happens in the constructor
            let code = code.load()?;
            let v = json!({
                "valid": true,
                "product_is_xn_minus_lambda": true,
                "monic": true,
                "pairwise_coprime": true,
                "dual_containing": code.is_dual_containing(),
                "log2_size": code.log2_size(),
                "gray_rank_matches": code.gray_image().dimension() == code.log2_size(),
            });
            let rows = [
                ("f g h = x^n - (1+u)", "ok".to_string()),
                ("monic factors", "ok".into()),
                ("pairwise coprime", "ok".into()),
                ("Gray rank = log2 |C|", "ok".into()),
                ("dual-containing", code.is_dual_containing().to_string()),
            ];
            emit(cli, &v, || table(&rows))?;
        }
        Command::Gray { word, m } => {
            let w: RWord = serde_json::from_str(word).context("parsing word")?;
            let ring = ChainRing::new(*m)?;
            if let Some(bad) = w.entries.iter().find(|&&c| !ring.contains(c)) {
                bail!(constacode::Error::InvalidElement { bits: bad.a.0.max(bad.b.0) as u32, m: *m });
            }
            let gray = GrayMap::new(&find_tob(*m)?);
            let img = gray.phi(&w);
            let v = json!({
                "length": img.bits().len(),
                "hex": img.to_hex(),
                "blocks": img.block_string(),
                "lee_weight": gray.lee_weight_word(&w),
            });
            let rows = [
                ("length", img.bits().len().to_string()),
                ("blocks", img.block_string()),
                ("hex", img.to_hex()),
                ("Lee weight", gray.lee_weight_word(&w).to_string()),
            ];
            emit(cli, &v, || table(&rows))?;
        }
        Command::Distance { code, mode } => {
            let code = code.load()?;
            let r = distance(code.gray_image(), strategy(cli, *mode))?;
            let rows = [
                ("distance", r.value.to_string()),
                ("mode", serde_json::to_value(r.mode)?.as_str().unwrap_or_default().to_string()),
                ("witness", r.witness.to_hex()),
                ("effort", r.effort.to_string()),
            ];
            emit(cli, &r, || table(&rows))?;
        }
        Command::Quantum { code, mode } => {
            let code = code.load()?;
            let q = css_params(&code, code.tob(), strategy(cli, *mode))?;
            emit(cli, &q, || format!("{q}\n"))?;
        }
        Command::Reproduce { example } => {
            let targets: Vec<Reproduction> = if example == "all" {
                Reproduction::ALL.to_vec()
            } else {
                vec![Reproduction::from_id(example)
                    .ok_or_else(|| anyhow!("unknown example {example:?}; expected 5.5, 6.6-85, 6.6-93 or all"))?]
            };
            let mut all = Vec::new();
            for t in targets {
                all.extend(fixtures::reproduce(t, cli.budget, cli.seed)?);
            }
            let ok = all.iter().all(|r| r.pass);
            emit(cli, &all, || {
                let mut s = String::new();
                for r in &all {
                    let mark = if r.pass { "ok" } else { "MISMATCH" };
                    let _ = writeln!(
                        s,
                        "{:<16} {:<32} expected {:<12} got {:<12} {mark}",
                        r.example, r.quantity, r.expected, r.actual
                    );
                }
                s
            })?;
            if !ok {
                return Ok(EXIT_MISMATCH);
            }
        }
    }
    Ok(0)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(EXIT_INVALID)
        }
    }
}
