//! The `tdvc` command line.
//!
//! Every report is a block of `key value` lines; list-valued keys repeat once
//! per entry. With `--json` each report is instead one JSON object per line
//! with the same keys.

use std::ffi::OsString;
use std::fs;
use std::io::{Read, Write};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};
use tdvc_core::dp::{gamma_t_tree, tau_tree};
use tdvc_core::enumerate::{free_trees, Claim, MAX_ENUMERATION_ORDER};
use tdvc_core::family::{check_certificate, random_member, recognize_with, RecognizeOptions};
use tdvc_core::ops::{self, corona, gap_tree_tk, gap_tree_tpk, OpKind};
use tdvc_core::oracle::Exhaustive;
use tdvc_core::{Tree, VertexSet};

use crate::format::{self, FormatError};
use crate::verify::{exhaustive_check, VerifyError};

#[derive(Parser, Debug)]
#[command(name = "tdvc", version, about = "Vertex cover and total domination on trees")]
pub struct Cli {
    /// Print one JSON object per report instead of key-value lines
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Vertex cover and total domination numbers, and the sets realizing both
    Analyze {
        /// Only the linear-time numbers, no set enumeration
        #[arg(long)]
        fast: bool,
        /// Tree file, `-` for stdin
        file: PathBuf,
    },
    /// Decide whether a tree has a set that is both a minimum vertex cover and
    /// a minimum total dominating set, with a construction certificate
    Recognize {
        file: PathBuf,
        /// Skip the precondition re-checks while peeling (may accept non-members)
        #[arg(long)]
        trust_proof: bool,
        /// Also write the certificate to this file
        #[arg(long)]
        cert: Option<PathBuf>,
    },
    /// Check a certificate against a tree
    VerifyCert { tree: PathBuf, cert: PathBuf },
    /// Apply one operation and print the grown tree
    Grow {
        /// O1..O4, or O1P..O3P for the relaxed variants
        #[arg(long, value_parser = parse_op)]
        op: OpKind,
        #[arg(long)]
        at: usize,
        /// Skip the precondition check
        #[arg(long)]
        unchecked: bool,
        file: PathBuf,
    },
    /// Trees where the two parameters differ by k
    GapFamily {
        family: GapFamily,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..=1000))]
        k: u32,
    },
    /// Attach a leaf to every vertex
    Corona { file: PathBuf },
    /// Count, or print, the trees on n vertices up to isomorphism
    Enumerate {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..=MAX_ENUMERATION_ORDER as i64))]
        n: u32,
        #[arg(long)]
        emit: bool,
    },
    /// Check claims on every tree up to the given order
    Verify {
        #[arg(long)]
        max: usize,
        /// `all`, `main`, `lemmas`, or a comma-separated list of claim names
        #[arg(long, default_value = "all", value_parser = parse_claims)]
        claims: ClaimList,
        #[arg(long, default_value_t = 1)]
        threads: usize,
    },
    /// A random tree with a certificate, built from P4
    RandomMember {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Also write the certificate to this file
        #[arg(long)]
        cert: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum GapFamily {
    Tk,
    Tpk,
}

#[derive(Clone, Debug)]
pub struct ClaimList(pub Vec<Claim>);

fn parse_op(s: &str) -> Result<OpKind, String> {
    // O1' is accepted as a spelling of O1P
    let name = match s.strip_suffix('\'') {
        Some(base) => format!("{base}P"),
        None => s.to_string(),
    };
    name.parse().map_err(|_| format!("unknown operation `{s}`"))
}

fn parse_claims(s: &str) -> Result<ClaimList, String> {
    let mut claims = Vec::new();
    for name in s.split(',').map(str::trim) {
        let group: &[Claim] = match name {
            "all" => &Claim::ALL,
            "main" => &Claim::MAIN,
            "lemmas" => &Claim::LEMMAS,
            _ => &[],
        };
        let picked = if group.is_empty() {
            vec![Claim::from_name(name).ok_or_else(|| format!("unknown claim `{name}`"))?]
        } else {
            group.to_vec()
        };
        for c in picked {
            if !claims.contains(&c) {
                claims.push(c);
            }
        }
    }
    Ok(ClaimList(claims))
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("{path}: {source}")]
    Format { path: String, source: FormatError },
    #[error(transparent)]
    Core(#[from] tdvc_core::Error),
    #[error(transparent)]
    Verify(#[from] VerifyError),
    #[error("certificate rejected: {0}")]
    Rejected(tdvc_core::Error),
    #[error("output: {0}")]
    Output(#[from] std::io::Error),
}

/// One report: ordered keys with scalar or list values.
#[derive(Default)]
struct Record(Map<String, Value>);

impl Record {
    fn put(&mut self, key: &str, value: impl Into<Value>) -> &mut Self {
        self.0.insert(key.to_string(), value.into());
        self
    }

    fn text(&self) -> String {
        let mut out = String::new();
        for (k, v) in &self.0 {
            match v {
                // a list of lists: one line per entry
                Value::Array(items) if items.iter().all(Value::is_array) => {
                    for item in items {
                        out.push_str(&format!("{k} {}\n", scalar_line(item)));
                    }
                }
                v => out.push_str(&format!("{k} {}\n", scalar_line(v))),
            }
        }
        out
    }
}

fn scalar_line(v: &Value) -> String {
    match v {
        Value::Null => "none".to_string(),
        Value::String(s) => s.clone(),
        Value::Array(a) => a.iter().map(scalar_line).collect::<Vec<_>>().join(" "),
        other => other.to_string(),
    }
}

/// Sets sorted as vertex lists.
fn sorted_sets(sets: &[VertexSet]) -> Vec<Vec<usize>> {
    let mut v: Vec<Vec<usize>> = sets.iter().map(VertexSet::to_vec).collect();
    v.sort();
    v
}

struct Io<'a> {
    stdin: &'a mut dyn Read,
    out: &'a mut dyn Write,
    json: bool,
    first: bool,
}

impl Io<'_> {
    fn read(&mut self, path: &Path) -> Result<String, CliError> {
        let mut text = String::new();
        let res = if path == Path::new("-") {
            self.stdin.read_to_string(&mut text).map(|_| ())
        } else {
            fs::read_to_string(path).map(|t| text = t)
        };
        res.map_err(|source| CliError::Io { path: path.display().to_string(), source })?;
        Ok(text)
    }

    fn trees(&mut self, path: &Path) -> Result<Vec<Tree>, CliError> {
        let text = self.read(path)?;
        format::parse_trees(&text).map_err(|source| CliError::Format { path: path.display().to_string(), source })
    }

    fn tree(&mut self, path: &Path) -> Result<Tree, CliError> {
        let text = self.read(path)?;
        format::parse_tree(&text).map_err(|source| CliError::Format { path: path.display().to_string(), source })
    }

    /// Emits a report; consecutive text reports are separated by `--`.
    fn record(&mut self, r: &Record) -> Result<(), CliError> {
        if self.json {
            writeln!(self.out, "{}", Value::Object(r.0.clone()))?;
        } else {
            if !self.first {
                writeln!(self.out, "--")?;
            }
            write!(self.out, "{}", r.text())?;
        }
        self.first = false;
        Ok(())
    }

    fn emit_tree(&mut self, t: &Tree, note: Option<&str>) -> Result<(), CliError> {
        if self.json {
            let mut r = Record::default();
            r.put("n", t.order());
            let mut edges: Vec<(usize, usize)> = t.edges().iter().map(|&(u, v)| (u.min(v), u.max(v))).collect();
            edges.sort_unstable();
            r.put("edges", json!(edges));
            return self.record(&r);
        }
        if !self.first {
            writeln!(self.out, "--")?;
        }
        if let Some(note) = note {
            writeln!(self.out, "# {note}")?;
        }
        write!(self.out, "{}", format::write_tree(t))?;
        self.first = false;
        Ok(())
    }
}

fn write_file(path: &Path, contents: &str) -> Result<(), CliError> {
    fs::write(path, contents).map_err(|source| CliError::Io { path: path.display().to_string(), source })
}

fn analyze(t: &Tree, fast: bool) -> Result<Record, CliError> {
    let mut r = Record::default();
    r.put("n", t.order()).put("tau", tau_tree(t));
    let gamma_t = gamma_t_tree(t).ok();
    r.put("gamma_t", gamma_t);
    r.put("gtt_tree", gamma_t == Some(tau_tree(t)));
    if fast {
        return Ok(r);
    }
    let ex = Exhaustive::new(t)?;
    r.put("min_vertex_covers", ex.min_vertex_covers().len());
    let sets = match ex.gamma_t() {
        Ok(_) => {
            r.put("min_total_dominating_sets", ex.min_total_dominating_sets()?.len());
            sorted_sets(&ex.gtt_sets()?)
        }
        Err(_) => {
            r.put("min_total_dominating_sets", 0);
            Vec::new()
        }
    };
    r.put("gtt_sets", sets.len());
    r.put("witness", sets.first().map_or(Value::Null, |s| json!(s)));
    if sets.len() > 1 {
        r.put("gtt_set", json!(sets));
    }
    Ok(r)
}

fn recognize_record(t: &Tree, trust_proof: bool) -> Result<(Record, Option<String>), CliError> {
    let out = recognize_with(t, RecognizeOptions { trust_proof, ..RecognizeOptions::default() })?;
    let mut r = Record::default();
    r.put("n", t.order()).put("member", out.member);
    if let Some(reason) = out.reason {
        r.put("reason", reason.name());
    }
    let cert = out.certificate.map(|c| {
        r.put("steps", c.len());
        let steps: Vec<Value> = c.steps.iter().map(|s| json!([s.op.name(), s.attach_vertex])).collect();
        if !steps.is_empty() {
            r.put("step", Value::Array(steps));
        }
        format::write_certificate(&c)
    });
    Ok((r, cert))
}

fn execute(cli: Cli, io: &mut Io<'_>, err: &mut dyn Write) -> Result<i32, CliError> {
    match cli.command {
        Command::Analyze { fast, file } => {
            for t in io.trees(&file)? {
                let r = analyze(&t, fast)?;
                io.record(&r)?;
            }
        }
        Command::Recognize { file, trust_proof, cert } => {
            let trees = io.trees(&file)?;
            let mut certs = Vec::new();
            for t in &trees {
                let (r, c) = recognize_record(t, trust_proof)?;
                certs.extend(c);
                io.record(&r)?;
            }
            if let Some(path) = cert {
                if trees.len() != 1 || certs.len() != 1 {
                    writeln!(err, "warning: --cert needs exactly one member tree, nothing written")?;
                } else {
                    write_file(&path, &certs[0])?;
                }
            }
        }
        Command::VerifyCert { tree, cert } => {
            let t = io.tree(&tree)?;
            let text = io.read(&cert)?;
            let c = format::parse_certificate(&text)
                .map_err(|source| CliError::Format { path: cert.display().to_string(), source })?;
            let mut r = Record::default();
            r.put("n", t.order()).put("steps", c.len());
            match check_certificate(&c, &t) {
                Ok(()) => {
                    r.put("valid", true);
                    io.record(&r)?;
                }
                Err(e) => {
                    r.put("valid", false);
                    io.record(&r)?;
                    return Err(CliError::Rejected(e));
                }
            }
        }
        Command::Grow { op, at, unchecked, file } => {
            let t = io.tree(&file)?;
            let grown = ops::apply(&t, op, at, !unchecked)?;
            let added: Vec<String> = grown.new_vertices.clone().map(|v| v.to_string()).collect();
            let note = format!("{op} at {at}, new vertices {}", added.join(" "));
            io.emit_tree(&grown.tree, Some(&note))?;
        }
        Command::GapFamily { family, k } => {
            let k = k as usize;
            let t = match family {
                GapFamily::Tk => gap_tree_tk(k),
                GapFamily::Tpk => gap_tree_tpk(k),
            };
            io.emit_tree(&t, None)?;
        }
        Command::Corona { file } => {
            for t in io.trees(&file)? {
                io.emit_tree(&corona(&t), None)?;
            }
        }
        Command::Enumerate { n, emit } => {
            let n = n as usize;
            if emit {
                for t in free_trees(n) {
                    io.emit_tree(&t, None)?;
                }
            } else {
                let mut r = Record::default();
                r.put("order", n).put("trees", free_trees(n).count());
                io.record(&r)?;
            }
        }
        Command::Verify { max, claims, threads } => {
            let report = exhaustive_check(max, &claims.0, threads)?;
            if io.json {
                let mut v = serde_json::to_value(&report).expect("report serializes");
                v["passed"] = json!(report.passed());
                writeln!(io.out, "{v}")?;
            } else {
                for o in &report.orders {
                    writeln!(
                        io.out,
                        "order {} trees {} gtt_trees {} with_set {} millis {}",
                        o.order, o.trees, o.gtt_trees, o.with_set, o.millis
                    )?;
                }
                for c in &report.claims {
                    let kind = if c.probe { " probe" } else { "" };
                    writeln!(io.out, "claim {} checked {} discrepancies {}{kind}", c.claim, c.checked, c.discrepancies.len())?;
                }
                for c in &report.claims {
                    for d in &c.discrepancies {
                        writeln!(io.out, "discrepancy {} {d}", c.claim)?;
                    }
                }
                writeln!(io.out, "passed {}", report.passed())?;
            }
        }
        Command::RandomMember { n, seed, cert } => {
            let (t, c) = random_member(n, seed)?;
            if let Some(path) = cert {
                write_file(&path, &format::write_certificate(&c))?;
            }
            io.emit_tree(&t, Some(&format!("random member, seed {seed}")))?;
        }
    }
    Ok(0)
}

/// Runs the command line. Returns the process exit code: 0 on success, 1 on
/// domain errors, 2 on usage errors.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { write!(err, "{text}") } else { write!(out, "{text}") };
            return code;
        }
    };
    let mut io = Io { stdin, out, json: cli.json, first: true };
    match execute(cli, &mut io, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            1
        }
    }
}
