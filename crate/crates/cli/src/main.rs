//! `cjones`: colored Jones polynomials of braid closures from the command
//! line.

use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, ValueEnum};
use serde::{Deserialize, Serialize};

use cjones::braid::{preset, weaving, BraidWord, PRESET_NAMES};
use cjones::corpus::DEFAULT_SEED;
use cjones::exec::with_threads;
use cjones::states::{self, Convention};
use cjones::statesum::{evaluate, unframe, ModelChoice};
use cjones::verify::{self, Suite};
use cjones::{Diagram, ExecMode, LaurentQ};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Model {
    Rmatrix,
    #[value(name = "gl")]
    ArcGraph,
    Both,
}

impl From<Model> for ModelChoice {
    fn from(m: Model) -> Self {
        match m {
            Model::Rmatrix => ModelChoice::RMatrix,
            Model::ArcGraph => ModelChoice::ArcGraph,
            Model::Both => ModelChoice::Both,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum StatesMode {
    Count,
    Dump,
}

#[derive(Debug, Parser)]
#[command(name = "cjones", version, about = "Exact colored Jones polynomials of braid closures")]
struct Args {
    /// Braid word as signed generator indices, e.g. "-1 2 -1 2".
    #[arg(long, allow_hyphen_values = true, conflicts_with_all = ["preset", "weaving"])]
    braid: Option<String>,
    /// Named braid (see --list-presets).
    #[arg(long, conflicts_with = "weaving")]
    preset: Option<String>,
    /// Weaving braid (sigma_1^-1 sigma_2)^M on three strands.
    #[arg(long, value_name = "M")]
    weaving: Option<usize>,
    /// Strand count; defaults to one more than the largest generator.
    #[arg(long, value_name = "S")]
    strands: Option<usize>,
    /// Color: n+1 is the dimension of the representation.
    #[arg(long, default_value_t = 1)]
    n: i64,
    #[arg(long, value_enum, default_value_t = Model::Both)]
    model: Model,
    /// Print the framed invariant (default).
    #[arg(long, conflicts_with = "unframed")]
    framed: bool,
    /// Print the writhe-normalized invariant.
    #[arg(long)]
    unframed: bool,
    /// Report contributing states instead of the polynomial.
    #[arg(long, value_enum)]
    states: Option<StatesMode>,
    /// Print the crossing table; with a path, also write a dot graph there.
    #[arg(long, value_name = "GRAPH_FILE", num_args = 0..=1, default_missing_value = "")]
    dump_diagram: Option<String>,
    /// Run a verification suite: all, models, props, skein, identity, oracle.
    #[arg(long, value_name = "SUITE")]
    verify: Option<String>,
    #[arg(long)]
    json: bool,
    /// Worker threads for the parallel paths.
    #[arg(long, value_name = "K")]
    threads: Option<usize>,
    /// Seed for randomized verification inputs.
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// Force the sequential code path.
    #[arg(long)]
    sequential: bool,
    #[arg(long)]
    list_presets: bool,
}

/// Polynomial as `[quarter_exponent, "coefficient"]` pairs.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Terms {
    pub terms: Vec<(i64, String)>,
}

impl From<&LaurentQ> for Terms {
    fn from(p: &LaurentQ) -> Self {
        Terms { terms: p.terms().iter().map(|(k, c)| (*k, c.to_string())).collect() }
    }
}

#[derive(Debug, Serialize, Deserialize)]
struct Output {
    braid: String,
    strands: usize,
    n: i64,
    model: String,
    framed: Terms,
    unframed: Terms,
    writhe: i64,
    components: usize,
    state_count: Option<usize>,
}

fn usage(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}");
    eprintln!("usage: cjones (--braid WORD | --preset NAME | --weaving M) [--n N] [--model rmatrix|gl|both]");
    eprintln!("              [--framed | --unframed] [--states count|dump] [--dump-diagram [FILE]] [--json]");
    eprintln!("       cjones --verify all|models|props|skein|identity|oracle [--seed SEED]");
    ExitCode::from(2)
}

fn resolve_braid(a: &Args) -> Result<BraidWord, String> {
    let b = match (&a.braid, &a.preset, a.weaving) {
        (Some(w), _, _) => BraidWord::parse_with_strands(w, a.strands).map_err(|e| e.to_string())?,
        (_, Some(p), _) => preset(p).ok_or_else(|| format!("unknown preset '{p}'"))?,
        (_, _, Some(m)) => weaving(m),
        _ => return Err("one of --braid, --preset or --weaving is required".into()),
    };
    match a.strands {
        Some(s) if a.braid.is_none() && s != b.strands() => {
            BraidWord::new(s, b.letters().to_vec()).map_err(|e| e.to_string())
        }
        _ => Ok(b),
    }
}

fn main() -> ExitCode {
    let args = match Args::try_parse() {
        Ok(a) => a,
        Err(e) if e.use_stderr() => return usage(e.to_string().lines().next().unwrap_or("bad arguments")),
        Err(e) => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
    };
    with_threads(args.threads, || run(&args))
}

fn run(a: &Args) -> ExitCode {
    if a.list_presets {
        for name in PRESET_NAMES {
            let b = preset(name).expect("listed preset");
            println!("{name}\tstrands={}\t{b}", b.strands());
        }
        return ExitCode::SUCCESS;
    }
    if let Some(s) = &a.verify {
        let suite: Suite = match s.parse() {
            Ok(x) => x,
            Err(e) => return usage(e),
        };
        println!("seed {}", a.seed);
        let reports = verify::run(suite, a.seed);
        for r in &reports {
            println!("{r}");
        }
        return if reports.iter().all(|r| r.passed()) { ExitCode::SUCCESS } else { ExitCode::from(1) };
    }
    if a.n < 1 {
        return usage(format!("--n must be at least 1, got {}", a.n));
    }
    let b = match resolve_braid(a) {
        Ok(b) => b,
        Err(e) => return usage(e),
    };
    let mode = if a.sequential { ExecMode::Sequential } else { ExecMode::Parallel };

    if let Some(path) = &a.dump_diagram {
        let d = Diagram::build(&b);
        print!("{}", d.dump());
        if !path.is_empty() {
            if let Err(e) = std::fs::write(PathBuf::from(path), d.graph_description()) {
                eprintln!("error: cannot write {path}: {e}");
                return ExitCode::from(2);
            }
        }
        return ExitCode::SUCCESS;
    }
    if let Some(sm) = a.states {
        return print_states(&b, a.n, a.model.into(), sm, mode);
    }

    let model: ModelChoice = a.model.into();
    let ev = match evaluate(&b, a.n, model, mode) {
        Ok(ev) => ev,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(1);
        }
    };
    let unframed = unframe(&ev.framed, b.writhe(), a.n);
    if a.json {
        let out = Output {
            braid: b.to_string(),
            strands: b.strands(),
            n: a.n,
            model: model.to_string(),
            framed: (&ev.framed).into(),
            unframed: (&unframed).into(),
            writhe: b.writhe(),
            components: b.component_count(),
            state_count: ev.rmatrix_states.or(ev.arcgraph_states),
        };
        println!("{}", serde_json::to_string(&out).expect("serializable"));
    } else if a.unframed {
        println!("{unframed}");
    } else {
        println!("{}", ev.framed);
    }
    ExitCode::SUCCESS
}

/// Contributing states of the selected model; `both` reports the two
/// enumerations side by side. Free strands are kept explicit here.
fn print_states(b: &BraidWord, n: i64, model: ModelChoice, sm: StatesMode, mode: ExecMode) -> ExitCode {
    let d = Diagram::build(b);
    let convs: &[Convention] = match model {
        ModelChoice::RMatrix => &[Convention::Minus],
        ModelChoice::ArcGraph => &[Convention::Plus],
        ModelChoice::Both => &[Convention::Minus, Convention::Plus],
    };
    let mut out = String::new();
    for &conv in convs {
        let label = if conv == Convention::Minus { "rmatrix" } else { "gl" };
        let mut st = match states::enumerate(&d, n, conv, mode) {
            Ok(s) => s,
            Err(e) => {
                eprintln!("error: {e}");
                return ExitCode::from(1);
            }
        };
        let _ = writeln!(out, "{label} states: {}", st.len());
        if sm == StatesMode::Dump {
            st.sort_by(|x, y| x.potential.cmp(&y.potential));
            for s in &st {
                let _ = writeln!(
                    out,
                    "  bases={:?} jumps={:?} i={:?}",
                    s.potential.bases, s.potential.jumps, s.colors.i
                );
            }
        }
    }
    print!("{out}");
    ExitCode::SUCCESS
}
