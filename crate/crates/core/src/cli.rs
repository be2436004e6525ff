//! The `pmc` command-line front end. All output is deterministic; JSON is
//! the default format.

use std::collections::BTreeMap;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::cartan::{RootDatum, Weight};
use crate::crystal::{self, MonomialCrystal};
use crate::error::{Error, Result};
use crate::product::{decompose, product_crystal, PointMultiset};
use crate::truncation::{build_plan, char_by_plan, full_character, truncate, ThresholdSet};
use crate::typea::{self, Diagram, Partition, PartitionSequence};

#[derive(Parser, Debug)]
#[command(name = "pmc", version, about = "Product monomial crystals, Demazure truncations and Schur modules")]
pub struct Cli {
    /// Worker threads for parallel sections (default: all cores).
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Dot,
    Ascii,
}

#[derive(Args, Debug, Clone)]
pub struct Target {
    /// Cartan type: A, D, E (or E6/E7/E8) or GL.
    #[arg(long, default_value = "A")]
    pub cartan: String,
    /// Rank; for GL this is n in GL_n.
    #[arg(long, default_value_t = 1)]
    pub rank: usize,
    /// Point multiset as JSON `[[i, c, mult], ...]`.
    #[arg(long = "R", default_value = "[]")]
    pub r: String,
    #[arg(long, value_enum, default_value = "json")]
    pub format: Format,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Highest-weight decomposition of M(R).
    Decompose(Target),
    /// Character of M(R), or of the truncation M(R, J) with --truncation.
    Character {
        #[command(flatten)]
        target: Target,
        /// Threshold set JSON `{"thresholds": {"i": k}}`.
        #[arg(long)]
        truncation: Option<String>,
    },
    /// Elements of the truncation M(R, J) (default J = up(R)).
    Truncate {
        #[command(flatten)]
        target: Target,
        #[arg(long = "J")]
        j: Option<String>,
    },
    /// Build plan for M(R, J) (default J = up(R)).
    Plan {
        #[command(flatten)]
        target: Target,
        #[arg(long = "J")]
        j: Option<String>,
    },
    /// The product crystal graph M(R).
    Graph(Target),
    /// Schur module of a partition sequence or diagram.
    Schur {
        #[arg(long, conflicts_with = "diagram", required_unless_present = "diagram")]
        sequence: Option<String>,
        #[arg(long)]
        diagram: Option<String>,
        /// n in GL_n (default: large enough that no summand is lost).
        #[arg(long)]
        rank: Option<usize>,
        /// Also run the skew Littlewood–Richardson and Specht oracles.
        #[arg(long)]
        verify: bool,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Stable multiplicities of a multiset over the infinite type A diagram.
    Stable {
        #[arg(long = "R")]
        r: String,
        #[arg(long, group = "mode")]
        bound: bool,
        #[arg(long, group = "mode")]
        coeffs: bool,
        #[arg(long, group = "mode")]
        restrict: Option<usize>,
    },
}

/// Exit code and text produced by one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub output: String,
}

fn ok(result: Value, extra: &[(&str, Value)]) -> Value {
    let mut v = json!({"status": "ok", "result": result});
    for (k, x) in extra {
        v[*k] = x.clone();
    }
    v["diagnostics"] = json!([]);
    v
}

fn partition_key(p: &Partition) -> String {
    format!("({})", p.parts().iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","))
}

fn partition_map(m: &BTreeMap<Partition, i64>) -> Value {
    let obj: serde_json::Map<String, Value> = m.iter().map(|(p, &c)| (partition_key(p), json!(c))).collect();
    Value::Object(obj)
}

fn weight_map(datum: &RootDatum, m: &BTreeMap<Weight, i64>) -> Value {
    let obj: serde_json::Map<String, Value> =
        m.iter().map(|(w, &c)| (datum.format_weight(w), json!(c))).collect();
    Value::Object(obj)
}

fn fundamental_map(datum: &RootDatum, m: &BTreeMap<Weight, i64>) -> Value {
    let obj: serde_json::Map<String, Value> =
        m.iter().map(|(w, &c)| (datum.format_fundamental(w), json!(c))).collect();
    Value::Object(obj)
}

fn load(t: &Target) -> Result<(RootDatum, PointMultiset)> {
    let datum = RootDatum::parse(&t.cartan, t.rank)?;
    let r = PointMultiset::from_json(&datum, &t.r)?;
    Ok((datum, r))
}

fn pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("json") + "\n"
}

fn no_dot(f: Format, cmd: &str) -> Result<()> {
    if f == Format::Dot {
        return Err(Error::Invalid(format!("--format dot is not available for {cmd}")));
    }
    Ok(())
}

fn decomposition_text(datum: &RootDatum, dec: &BTreeMap<Weight, i64>) -> String {
    let mut out = String::new();
    for (w, c) in dec.iter().rev() {
        let label = if datum.is_gl() {
            Partition::from_weight(w).map_or_else(|| w.to_string(), |p| p.to_string())
        } else {
            datum.format_weight(w)
        };
        out.push_str(&format!("B({label}) x {c}\n"));
    }
    out
}

fn execute(cmd: &Command) -> Result<String> {
    match cmd {
        Command::Decompose(t) => {
            no_dot(t.format, "decompose")?;
            let (datum, r) = load(t)?;
            let dec = decompose(&datum, &r)?;
            if t.format == Format::Ascii {
                return Ok(decomposition_text(&datum, &dec));
            }
            if datum.is_gl() {
                let parts = typea::weights_to_partitions(&datum, &dec)?;
                Ok(pretty(&ok(partition_map(&parts), &[("fundamental", fundamental_map(&datum, &dec))])))
            } else {
                Ok(pretty(&ok(weight_map(&datum, &dec), &[])))
            }
        }
        Command::Character { target: t, truncation } => {
            no_dot(t.format, "character")?;
            let (datum, r) = load(t)?;
            let ch = match truncation {
                Some(j) => {
                    let j = ThresholdSet::from_json(&datum, j)?;
                    char_by_plan(&datum, &build_plan(&datum, &r, Some(&j))?)
                }
                None => full_character(&datum, &r)?,
            };
            let rendered = ch.render(&datum);
            if t.format == Format::Ascii {
                return Ok(rendered + "\n");
            }
            let terms: BTreeMap<Weight, i64> = ch.terms().map(|(w, c)| (w.clone(), c)).collect();
            let mut extra = vec![("text", json!(rendered))];
            if datum.is_gl() {
                extra.push(("text_mod_det", json!(ch.normalize_mod_det().render(&datum))));
            }
            Ok(pretty(&ok(weight_map(&datum, &terms), &extra)))
        }
        Command::Truncate { target: t, j } => {
            let (datum, r) = load(t)?;
            let j = match j {
                Some(j) => ThresholdSet::from_json(&datum, j)?,
                None => ThresholdSet::up_closure(&datum, r.support())?,
            };
            let elements = truncate(&datum, &r, &j)?;
            let c = MonomialCrystal::new(&datum);
            match t.format {
                Format::Dot => Ok(crystal::to_dot(&c, &crystal::induced_graph(&c, elements))),
                Format::Ascii => Ok(elements.iter().map(|m| format!("{m}\n")).collect()),
                Format::Json => Ok(pretty(&ok(json!(elements), &[("truncation", json!(j))]))),
            }
        }
        Command::Plan { target: t, j } => {
            no_dot(t.format, "plan")?;
            let (datum, r) = load(t)?;
            let j = j.as_deref().map(|j| ThresholdSet::from_json(&datum, j)).transpose()?;
            let plan = build_plan(&datum, &r, j.as_ref())?;
            if t.format == Format::Ascii {
                let mut out = format!("start from J_0 {}\n", plan.initial);
                for s in &plan.steps {
                    out.push_str(&match s {
                        crate::truncation::PlanStep::Extend { i, k } => format!("extend ({i},{k})\n"),
                        crate::truncation::PlanStep::Multiply { q } => format!("multiply {q}\n"),
                    });
                }
                return Ok(out);
            }
            Ok(pretty(&ok(json!(plan), &[])))
        }
        Command::Graph(t) => {
            let (datum, r) = load(t)?;
            let g = product_crystal(&datum, &r)?;
            let c = MonomialCrystal::new(&datum);
            match t.format {
                Format::Dot => Ok(crystal::to_dot(&c, &g)),
                Format::Json => Ok(pretty(&ok(crystal::to_json(&g), &[]))),
                Format::Ascii => {
                    let mut out = String::new();
                    for (k, b) in g.elements().iter().enumerate() {
                        out.push_str(&format!("{k}: {b}\n"));
                    }
                    for &(s, i, t) in g.edges() {
                        out.push_str(&format!("{s} -{i}-> {t}\n"));
                    }
                    Ok(out)
                }
            }
        }
        Command::Schur { sequence, diagram, rank, verify, format } => {
            no_dot(*format, "schur")?;
            let (seq, input_diagram) = match (sequence, diagram) {
                (Some(s), _) => (PartitionSequence::from_json(s)?, None),
                (None, Some(d)) => {
                    let d = Diagram::from_json(d)?;
                    (typea::sequence_for_diagram(&d)?, Some(d))
                }
                (None, None) => return Err(Error::Invalid("one of --sequence or --diagram is required".into())),
            };
            let n = rank.unwrap_or_else(|| typea::natural_rank(&seq));
            let dec = typea::schur_decompose(&seq, n)?;
            let source = input_diagram.unwrap_or_else(|| typea::diagram_of_sequence(&seq));
            if *verify {
                if let Some(s) = typea::skew_normalise(&source) {
                    let lr = typea::restrict_coeffs(&typea::lr_skew_expand(&s), n);
                    if lr != dec {
                        return Err(Error::Consistency(format!("skew expansion {lr:?} disagrees with {dec:?}")));
                    }
                }
                if source.size() <= typea::specht::DEFAULT_MAX_BOXES {
                    let sp = typea::restrict_coeffs(&typea::specht_decompose_bruteforce(&source, typea::specht::DEFAULT_MAX_BOXES)?, n);
                    if sp != dec {
                        return Err(Error::Consistency(format!("Specht computation {sp:?} disagrees with {dec:?}")));
                    }
                }
            }
            let flagged = typea::flagged_schur_char(&seq, n)?;
            let datum = RootDatum::gl(n)?;
            if *format == Format::Ascii {
                let mut out = source.to_ascii();
                out.push_str(&format!("sequence {seq}\nflagged character {}\n", flagged.render(&datum)));
                for (p, c) in dec.iter().rev() {
                    out.push_str(&format!("Σ_{p} x {c}\n"));
                }
                return Ok(out);
            }
            Ok(pretty(&ok(
                partition_map(&dec),
                &[
                    ("sequence", json!(seq)),
                    ("diagram", json!(source)),
                    ("flagged_character", json!(flagged.render(&datum))),
                ],
            )))
        }
        Command::Stable { r, bound, coeffs, restrict } => {
            let raw: Vec<(usize, i64, i64)> =
                serde_json::from_str(r).map_err(|e| Error::Invalid(format!("point multiset: {e}")))?;
            let top = raw.iter().map(|t| t.0).max().unwrap_or(0);
            let datum = RootDatum::gl(top + 1)?;
            let r = PointMultiset::from_triples(&datum, &raw)?;
            if *bound {
                return Ok(pretty(&ok(json!(typea::stable_bound(&r)), &[])));
            }
            let all = typea::stable_coeffs(&r)?;
            match (coeffs, restrict) {
                (_, Some(n)) => Ok(pretty(&ok(partition_map(&typea::restrict_coeffs(&all, *n)), &[]))),
                (true, None) => Ok(pretty(&ok(partition_map(&all), &[]))),
                _ => Err(Error::Invalid("stable needs one of --bound, --coeffs, --restrict n".into())),
            }
        }
    }
}

fn diagnostic(kind: &str, message: &str) -> String {
    pretty(&json!({"status": "error", "result": null, "diagnostics": [{"kind": kind, "message": message}]}))
}

/// Runs one command line. Exit codes: 0 success, 2 invalid input,
/// 1 internal-consistency failure.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                return Outcome { code: 0, output: e.to_string() };
            }
            return Outcome { code: 2, output: diagnostic("usage", e.to_string().trim()) };
        }
    };
    let work = || execute(&cli.command);
    let result = match cli.threads {
        Some(n) => match rayon::ThreadPoolBuilder::new().num_threads(n).build() {
            Ok(pool) => pool.install(work),
            Err(e) => Err(Error::Invalid(format!("thread pool: {e}"))),
        },
        None => work(),
    };
    match result {
        Ok(output) => Outcome { code: 0, output },
        Err(e) if e.is_consistency() => Outcome { code: 1, output: diagnostic("consistency", &e.to_string()) },
        Err(e) => Outcome { code: 2, output: diagnostic("validation", &e.to_string()) },
    }
}
