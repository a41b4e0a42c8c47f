//! The `logmut` command line.
//!
//! Exit codes:
//!
//! | code | meaning |
//! |------|---------|
//! | 0 | success (and verdict Yes for `decide`) |
//! | 1 | IO, JSON or command-line parse error |
//! | 2 | input violates an invariant (invalid datum, wall shape, ...) |
//! | 3 | illegal or out-of-range mutation |
//! | 4 | `decide` verdict No |
//! | 5 | `decide` verdict Unknown |

pub mod svg;

use std::ffi::OsString;
use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use logmut_core::{
    certificate_to_json, enumerate_zero_mutable, generic_wall_assignment, index_for_value,
    is_generic, is_subordinate, is_zero_mutable, joint_compatible, kinks, mutate_traced,
    walls_from_json, walls_to_json, Datum, DatumDocument, Error, Limits, LogDatum, MutationIndex,
    NamedDatum, Vec2, Verdict, WallAssignment,
};
use serde_json::{json, Value};

pub use svg::{render_svg, RenderSpec};

pub const EXIT_OK: i32 = 0;
pub const EXIT_IO: i32 = 1;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_ILLEGAL_MUTATION: i32 = 3;
pub const EXIT_NO: i32 = 4;
pub const EXIT_UNKNOWN: i32 = 5;

#[derive(Debug, Parser)]
#[command(
    name = "logmut",
    version,
    about = "Mutations of log data on a rank-2 lattice"
)]
struct Cli {
    /// Print machine-readable JSON on stdout.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct SearchLimits {
    #[arg(long, default_value_t = 32)]
    max_depth: usize,
    #[arg(long, default_value_t = 1_000_000)]
    max_states: usize,
    /// Worker threads for frontier expansion.
    #[arg(long, default_value_t = 1)]
    threads: usize,
}

impl SearchLimits {
    fn limits(&self) -> Limits {
        Limits {
            max_depth: self.max_depth,
            max_states: self.max_states,
            threads: self.threads,
        }
    }
}

/// DATUM is a JSON file, `-` for stdin, or `named:<tom|jerry|A<n>>`.
#[derive(Debug, Subcommand)]
enum Command {
    /// Check a datum and print it in canonical order.
    Validate { datum: String },
    /// Apply one mutation.
    Mutate {
        datum: String,
        /// 1-based counterclockwise edge position.
        #[arg(long)]
        edge: usize,
        /// 1-based index into the edge's partition (parts in decreasing order).
        #[arg(
            long,
            conflicts_with = "part_value",
            required_unless_present = "part_value"
        )]
        part: Option<usize>,
        /// Mutate at the first part with this value instead.
        #[arg(long)]
        part_value: Option<i128>,
        /// Report the branches of the mutation rule that were taken.
        #[arg(long)]
        trace: bool,
    },
    /// Search for a mutation sequence to a zero-mutable rank-one datum.
    Decide {
        datum: String,
        #[command(flatten)]
        limits: SearchLimits,
        /// Write the certificate JSON here on Yes.
        #[arg(long)]
        certificate: Option<PathBuf>,
    },
    /// Decide every partition assignment on a fixed closed edge list.
    Enumerate {
        /// JSON list of edge vectors, e.g. `[[3,0],[0,2],[-3,-2]]`.
        #[arg(long)]
        edges: String,
        #[command(flatten)]
        limits: SearchLimits,
    },
    /// Draw the polygon as SVG.
    Render {
        datum: String,
        /// Output file; stdout when absent.
        #[arg(long)]
        svg: Option<PathBuf>,
        /// Pixels per lattice unit.
        #[arg(long, default_value_t = 40, value_parser = clap::value_parser!(u32).range(1..))]
        scale: u32,
        #[arg(long)]
        no_labels: bool,
        #[arg(long)]
        no_lattice: bool,
    },
    /// Fan, components, kinks and optional wall-function checks.
    Report {
        datum: String,
        /// Wall-assignment JSON to check.
        #[arg(long, conflicts_with = "gen_walls")]
        walls: Option<PathBuf>,
        /// Synthesize a generic wall assignment from this seed.
        #[arg(long)]
        gen_walls: Option<u64>,
    },
    /// Print a named datum: tom, jerry or A<n>.
    Named { name: String },
}

/// A failure carrying its exit code.
#[derive(Debug)]
pub struct Failure {
    pub code: i32,
    pub kind: String,
    pub message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match &e {
            Error::Parse(_) => EXIT_IO,
            Error::IllegalMutation { .. }
            | Error::BadMutationIndex { .. }
            | Error::ReplayFailed { .. } => EXIT_ILLEGAL_MUTATION,
            _ => EXIT_INVALID,
        };
        Failure {
            code,
            kind: e.kind().to_string(),
            message: e.to_string(),
        }
    }
}

fn io_failure(what: &str, e: std::io::Error) -> Failure {
    Failure {
        code: EXIT_IO,
        kind: "Io".into(),
        message: format!("Io: {what}: {e}"),
    }
}

type CmdResult = Result<Output, Failure>;

/// What a command produced: text for humans, JSON for `--json`, and the
/// exit code.
struct Output {
    text: String,
    json: Value,
    code: i32,
}

impl Output {
    fn ok(text: String, json: Value) -> Self {
        Output {
            text,
            json,
            code: EXIT_OK,
        }
    }
}

pub fn parse_named(name: &str) -> Result<NamedDatum, Failure> {
    let lower = name.to_ascii_lowercase();
    let bad = || Failure {
        code: EXIT_IO,
        kind: "Parse".into(),
        message: format!("Parse: unknown named datum {name:?}; use tom, jerry or A<n>"),
    };
    match lower.as_str() {
        "tom" => Ok(NamedDatum::Tom),
        "jerry" => Ok(NamedDatum::Jerry),
        _ => {
            let digits = lower
                .strip_prefix("an(")
                .and_then(|r| r.strip_suffix(')'))
                .or_else(|| lower.strip_prefix('a'))
                .ok_or_else(bad)?;
            digits.parse().map(NamedDatum::An).map_err(|_| bad())
        }
    }
}

fn named_title(kind: NamedDatum) -> String {
    match kind {
        NamedDatum::An(n) => format!("A{n}"),
        NamedDatum::Tom => "Tom".into(),
        NamedDatum::Jerry => "Jerry".into(),
    }
}

fn read_source(path: &str) -> Result<String, Failure> {
    if path == "-" {
        let mut text = String::new();
        std::io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| io_failure("stdin", e))?;
        return Ok(text);
    }
    std::fs::read_to_string(path).map_err(|e| io_failure(path, e))
}

/// Loads a datum and the name it carries, if any.
fn load(source: &str) -> Result<(Datum, Option<String>), Failure> {
    if let Some(name) = source.strip_prefix("named:") {
        let kind = parse_named(name)?;
        return Ok((LogDatum::named(kind)?, Some(named_title(kind))));
    }
    let text = read_source(source)?;
    let doc: DatumDocument = serde_json::from_str(&text).map_err(|e| Failure {
        code: EXIT_IO,
        kind: "Parse".into(),
        message: format!("Parse: {e}"),
    })?;
    Ok((doc.to_datum()?, doc.name))
}

fn doc_value(s: &Datum, name: Option<String>) -> Result<Value, Failure> {
    let mut doc = DatumDocument::from_datum(s)?;
    doc.name = name;
    Ok(serde_json::to_value(doc).expect("serializable"))
}

fn numbered_edges(s: &Datum) -> String {
    s.edges()
        .iter()
        .enumerate()
        .map(|(i, e)| format!("  {}: {e}\n", i + 1))
        .collect()
}

fn cmd_validate(source: &str) -> CmdResult {
    let (s, name) = load(source)?;
    let doc = doc_value(&s, name)?;
    Ok(Output::ok(
        doc.to_string(),
        json!({ "valid": true, "datum": doc }),
    ))
}

fn cmd_mutate(
    source: &str,
    edge: usize,
    part: Option<usize>,
    part_value: Option<i128>,
    trace: bool,
) -> CmdResult {
    let (s, _) = load(source)?;
    let m = match (part, part_value) {
        (Some(k), _) => MutationIndex::new(edge, k),
        (None, Some(value)) => index_for_value(&s, edge, &value)?,
        (None, None) => unreachable!("clap requires one of --part, --part-value"),
    };
    let (h, value) = logmut_core::height_and_part(&s, m)?;
    let (out, branches) = mutate_traced(&s, m)?;
    let doc = doc_value(&out, None)?;
    let mut text = doc.to_string();
    if trace {
        text.push_str(&format!("\n{m}: h = {h}, part = {value}"));
        for b in &branches {
            text.push_str(&format!("\n{b}"));
        }
    }
    let tags: Vec<&str> = branches.iter().map(|b| b.tag()).collect();
    let details: Vec<String> = branches.iter().map(ToString::to_string).collect();
    Ok(Output::ok(
        text,
        json!({
            "edge": m.edge,
            "part": m.part,
            "part_value": value,
            "height": h,
            "datum": doc,
            "trace": tags,
            "trace_detail": details,
        }),
    ))
}

fn cmd_decide(source: &str, limits: Limits, certificate: Option<&PathBuf>) -> CmdResult {
    let (s, _) = load(source)?;
    let verdict = is_zero_mutable(&s, &limits)?;
    match verdict {
        Verdict::Yes(c) => {
            let cert_text = certificate_to_json(&c)?;
            if let Some(path) = certificate {
                std::fs::write(path, &cert_text)
                    .map_err(|e| io_failure(&path.display().to_string(), e))?;
            }
            let mut text = format!("Yes ({} steps)\n", c.steps.len());
            for (i, step) in c.steps.iter().enumerate() {
                text.push_str(&format!("  step {}: edge {}, part {}\n", i + 1, step.edge, step.part));
            }
            text.push_str(&format!("terminal {}", c.terminal));
            let cert: Value = serde_json::from_str(&cert_text).expect("own output");
            Ok(Output::ok(
                text,
                json!({ "verdict": "Yes", "steps": c.steps.len(), "certificate": cert }),
            ))
        }
        Verdict::No => Ok(Output {
            text: "No".into(),
            json: json!({ "verdict": "No" }),
            code: EXIT_NO,
        }),
        Verdict::Unknown { explored, depth } => Ok(Output {
            text: format!(
                "Unknown (explored {explored} classes, depth {depth}; raise --max-depth or --max-states)"
            ),
            json: json!({ "verdict": "Unknown", "explored": explored, "depth": depth }),
            code: EXIT_UNKNOWN,
        }),
    }
}

fn cmd_enumerate(edges: &str, limits: Limits) -> CmdResult {
    let raw: Vec<[i128; 2]> = serde_json::from_str(edges).map_err(|e| Failure {
        code: EXIT_IO,
        kind: "Parse".into(),
        message: format!("Parse: --edges: {e}"),
    })?;
    let vecs: Vec<Vec2> = raw.iter().map(|&[x, y]| Vec2::new(x, y)).collect();
    let rows = enumerate_zero_mutable(&vecs, &limits)?;
    let mut text = String::new();
    let mut json_rows = Vec::new();
    for (i, row) in rows.iter().enumerate() {
        let verdict = match &row.verdict {
            Verdict::Yes(c) => format!("Yes ({} steps)", c.steps.len()),
            v => v.name().to_string(),
        };
        text.push_str(&format!("{:>3}  {}  {verdict}\n", i + 1, row.datum));
        let parts: Vec<Vec<i128>> = row.partitions.iter().map(|p| p.parts().to_vec()).collect();
        let mut entry = json!({
            "partitions": parts,
            "datum": doc_value(&row.datum, None)?,
            "verdict": row.verdict.name(),
        });
        if let Verdict::Yes(c) = &row.verdict {
            entry["steps"] = json!(c.steps.len());
        }
        json_rows.push(entry);
    }
    text.push_str(&format!("{} assignments", rows.len()));
    Ok(Output::ok(text, json!({ "rows": json_rows })))
}

fn cmd_render(source: &str, out: Option<&PathBuf>, spec: RenderSpec) -> CmdResult {
    let (s, _) = load(source)?;
    let svg = render_svg(&s, &spec)?;
    match out {
        Some(path) => {
            std::fs::write(path, &svg).map_err(|e| io_failure(&path.display().to_string(), e))?;
            Ok(Output::ok(
                format!("wrote {}", path.display()),
                json!({ "written": path.display().to_string(), "bytes": svg.len() }),
            ))
        }
        None => Ok(Output::ok(
            svg.trim_end().to_string(),
            json!({ "svg": svg }),
        )),
    }
}

fn triple(v: &[i128; 3]) -> String {
    format!("({},{},{})", v[0], v[1], v[2])
}

fn wall_checks(
    s: &Datum,
    w: &WallAssignment<logmut_core::BigRational>,
) -> Result<(String, Value), Failure> {
    let joint = joint_compatible(s, w)?;
    let report = is_subordinate(s, w)?;
    let generic = if report.subordinate {
        Some(is_generic(s, w)?)
    } else {
        None
    };
    let mut text = String::from("walls:\n");
    for (i, wall) in w.walls.iter().enumerate() {
        let factors: Vec<String> = wall.iter().map(|f| format!("({f})")).collect();
        text.push_str(&format!("  edge {}: {}\n", i + 1, factors.join(" ")));
    }
    text.push_str(&format!("joint compatible: {joint}\n"));
    if report.subordinate {
        text.push_str("subordinate\n");
    } else {
        text.push_str("not subordinate\n");
        for issue in &report.issues {
            text.push_str(&format!("  {issue}\n"));
        }
    }
    match generic {
        Some(g) => text.push_str(&format!("generic: {g}")),
        None => text.push_str("generic: requires subordination"),
    }
    let factors: Vec<Value> = report
        .factors
        .iter()
        .map(|c| {
            json!({
                "edge": c.edge,
                "factor": c.factor,
                "restriction_degree": c.restriction_degree,
                "smooth": c.smooth,
            })
        })
        .collect();
    let assignment: Value = serde_json::from_str(&walls_to_json(w)?).expect("own output");
    Ok((
        text,
        json!({
            "assignment": assignment,
            "joint_compatible": joint,
            "subordinate": report.subordinate,
            "issues": report.issues,
            "factors": factors,
            "generic": generic,
        }),
    ))
}

fn cmd_report(source: &str, walls: Option<&PathBuf>, gen_walls: Option<u64>) -> CmdResult {
    let (s, _) = load(source)?;
    let fan = s.fan_presentation()?;
    let comps = s.component_types()?;
    let ks = kinks(&s).kinks;
    let mut text = format!("edges:\n{}", numbered_edges(&s));
    text.push_str(&format!("fan (joint {}):\n", triple(&fan.joint)));
    for (i, cone) in fan.maximal_cones.iter().enumerate() {
        let gens: Vec<String> = cone.iter().map(triple).collect();
        text.push_str(&format!("  cone {}: <{}>\n", i + 1, gens.join(", ")));
    }
    for (i, wall) in fan.walls.iter().enumerate() {
        text.push_str(&format!(
            "  wall {}: <{}, {}>\n",
            i + 1,
            triple(&wall[0]),
            triple(&wall[1])
        ));
    }
    text.push_str("components:\n");
    for (i, c) in comps.components.iter().enumerate() {
        text.push_str(&format!("  X_{}: {} (index {})\n", i + 1, c.label, c.index));
    }
    let kink_text: Vec<String> = ks.iter().map(ToString::to_string).collect();
    text.push_str(&format!("kinks: [{}]", kink_text.join(", ")));

    let mut value = json!({
        "datum": doc_value(&s, None)?,
        "fan": {
            "joint": fan.joint,
            "maximal_cones": fan.maximal_cones,
            "walls": fan.walls,
        },
        "components": comps.components.iter().map(|c| json!({"index": c.index, "label": c.label})).collect::<Vec<_>>(),
        "kinks": ks,
    });

    let assignment = match (walls, gen_walls) {
        (Some(path), _) => Some(walls_from_json(&read_source(&path.display().to_string())?)?),
        (None, Some(seed)) => Some(generic_wall_assignment(&s, seed)?),
        (None, None) => None,
    };
    if let Some(w) = assignment {
        let (wtext, wvalue) = wall_checks(&s, &w)?;
        text.push('\n');
        text.push_str(&wtext);
        value["walls"] = wvalue;
    }
    Ok(Output::ok(text, value))
}

fn cmd_named(name: &str) -> CmdResult {
    let kind = parse_named(name)?;
    let s = LogDatum::named(kind)?;
    let doc = doc_value(&s, Some(named_title(kind)))?;
    Ok(Output::ok(doc.to_string(), doc))
}

fn dispatch(cli: &Cli) -> CmdResult {
    match &cli.command {
        Command::Validate { datum } => cmd_validate(datum),
        Command::Mutate {
            datum,
            edge,
            part,
            part_value,
            trace,
        } => cmd_mutate(datum, *edge, *part, *part_value, *trace),
        Command::Decide {
            datum,
            limits,
            certificate,
        } => cmd_decide(datum, limits.limits(), certificate.as_ref()),
        Command::Enumerate { edges, limits } => cmd_enumerate(edges, limits.limits()),
        Command::Render {
            datum,
            svg,
            scale,
            no_labels,
            no_lattice,
        } => cmd_render(
            datum,
            svg.as_ref(),
            RenderSpec {
                scale: *scale,
                label_edges: !no_labels,
                show_lattice_points: !no_lattice,
            },
        ),
        Command::Report {
            datum,
            walls,
            gen_walls,
        } => cmd_report(datum, walls.as_ref(), *gen_walls),
        Command::Named { name } => cmd_named(name),
    }
}

/// Runs the command line and returns the exit code.
pub fn run<I, A>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = A>,
    A: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_IO } else { EXIT_OK };
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(target, "{e}");
            return code;
        }
    };
    match dispatch(&cli) {
        Ok(o) => {
            let _ = if cli.json {
                writeln!(out, "{}", o.json)
            } else {
                writeln!(out, "{}", o.text)
            };
            o.code
        }
        Err(f) => {
            if cli.json {
                let _ = writeln!(
                    out,
                    "{}",
                    json!({ "error": { "kind": f.kind, "message": f.message } })
                );
            }
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}
