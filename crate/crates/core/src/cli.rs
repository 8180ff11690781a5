//! Command-line front end. `run` returns the process exit code so the whole
//! thing is testable in-process.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use crate::decomposer::{decompose_all, ThreeEccReport};
use crate::mader_cs::Certificate;
use crate::multigraph::{parse_graph, random_multigraph, Multigraph, NormalizationLog};
use crate::oracle::{bridges_bf, cut_pairs_bf, three_ecc_bf};
use crate::verifier::verify_report;

pub const EXIT_OK: i32 = 0;
pub const EXIT_IO: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_VERIFY: i32 = 3;
pub const EXIT_TOO_LARGE: i32 = 4;

/// Largest graph the `oracle` command accepts unless overridden.
pub const ORACLE_MAX_N: usize = 14;
pub const ORACLE_MAX_N_VAR: &str = "TECC_ORACLE_MAX_N";

#[derive(Parser, Debug)]
#[command(name = "tecc", version, about = "3-edge-connected components with certificates")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Split a graph into 3-edge-connected components, bridges and cut-pair cacti.
    Decompose {
        file: PathBuf,
        /// Emit JSON instead of text.
        #[arg(long)]
        json: bool,
        /// Include a construction sequence for every non-singleton component.
        #[arg(long)]
        certify: bool,
        /// Include the cut-pair cactus of every 2-edge-connected component.
        #[arg(long)]
        cactus: bool,
        /// Check the result independently; exit 3 on any rejection.
        #[arg(long)]
        verify: bool,
    },
    /// Write a seeded random multigraph without self-loops.
    GenRandom {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Output file; stdout when absent.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Brute-force bridges, cut-pairs and classes for a small graph.
    Oracle { file: PathBuf },
}

pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_PARSE } else { EXIT_OK };
            let _ = write!(err, "{}", e.render());
            return code;
        }
    };
    let result = match cli.command {
        Command::Decompose { file, json, certify, cactus, verify } => {
            cmd_decompose(&file, Flags { json, certify, cactus, verify }, out, err)
        }
        Command::GenRandom { n, m, seed, output } => cmd_gen_random(n, m, seed, output, out, err),
        Command::Oracle { file } => cmd_oracle(&file, out, err),
    };
    result.unwrap_or_else(|e| {
        let _ = writeln!(err, "error: {e}");
        EXIT_IO
    })
}

#[derive(Clone, Copy, Debug, Default)]
pub struct Flags {
    pub json: bool,
    pub certify: bool,
    pub cactus: bool,
    pub verify: bool,
}

fn load(path: &PathBuf, err: &mut dyn Write) -> std::io::Result<Result<(Multigraph, NormalizationLog), i32>> {
    let bytes = std::fs::read(path)?;
    Ok(match parse_graph(&bytes) {
        Ok(x) => Ok(x),
        Err(e) => {
            writeln!(err, "{}: {e}", path.display())?;
            Err(EXIT_PARSE)
        }
    })
}

fn cmd_decompose(path: &PathBuf, flags: Flags, out: &mut dyn Write, err: &mut dyn Write) -> std::io::Result<i32> {
    let (g, log) = match load(path, err)? {
        Ok(x) => x,
        Err(code) => return Ok(code),
    };
    if log.removed_self_loops > 0 {
        writeln!(err, "note: removed {} self-loop(s)", log.removed_self_loops)?;
    }
    let report = decompose_all(&g);
    if flags.json {
        let v = report_json(&g, &log, &report, flags);
        writeln!(out, "{}", serde_json::to_string_pretty(&v).expect("json"))?;
    } else {
        write_text(out, &g, &log, &report, flags)?;
    }
    if flags.verify {
        let verdict = verify_report(&g, &report);
        writeln!(err, "verify: {verdict}")?;
        if !verdict.is_accepted() {
            return Ok(EXIT_VERIFY);
        }
    }
    Ok(EXIT_OK)
}

/// Maps engine edge ids back to the input file: real edges by line order,
/// virtual edges numbered after the last input edge.
struct IdMap<'a> {
    log: &'a NormalizationLog,
    m: usize,
    m_input: usize,
}

impl IdMap<'_> {
    fn new<'a>(g: &Multigraph, log: &'a NormalizationLog) -> IdMap<'a> {
        IdMap { log, m: g.edge_count(), m_input: g.edge_count() + log.removed_self_loops }
    }

    fn id(&self, e: usize, is_virtual: bool) -> usize {
        if is_virtual {
            self.m_input + (e - self.m)
        } else {
            self.log.edge_origin[e]
        }
    }
}

fn certificate_json(cert: &Certificate, ids: &IdMap<'_>) -> Value {
    Value::Array(
        cert.paths
            .iter()
            .map(|p| {
                json!({
                    "vertices": p.vertices,
                    "edges": p.edges.iter()
                        .map(|e| json!({"id": ids.id(e.id, e.is_virtual), "virtual": e.is_virtual}))
                        .collect::<Vec<_>>(),
                    "tag": p.tag.as_str(),
                })
            })
            .collect(),
    )
}

/// Key-sorted JSON report. `certificate` is null unless requested (and for
/// singletons); `cacti` is null unless requested.
pub fn report_json(g: &Multigraph, log: &NormalizationLog, report: &ThreeEccReport, flags: Flags) -> Value {
    let ids = IdMap::new(g, log);
    let components: Vec<Value> = report
        .components
        .iter()
        .map(|c| {
            let cert = match (&c.certificate, flags.certify) {
                (Some(cert), true) => certificate_json(cert, &ids),
                _ => Value::Null,
            };
            json!({
                "members": c.members,
                "virtual_edge": c.virtual_edge.map(|(a, b)| vec![a, b]),
                "virtual_edges": c.virtual_edges.iter().map(|&(a, b)| vec![a, b]).collect::<Vec<_>>(),
                "certificate": cert,
            })
        })
        .collect();
    let bridges: Vec<Value> = report
        .bridges
        .iter()
        .map(|&e| {
            let ed = g.edge(e);
            json!([ed.a, ed.b, ids.id(e, false)])
        })
        .collect();
    let cacti = if flags.cactus {
        json!(report
            .cacti
            .iter()
            .map(|c| json!({"nodes": c.nodes, "cycles": c.cycles}))
            .collect::<Vec<_>>())
    } else {
        Value::Null
    };
    json!({
        "components": components,
        "bridges": bridges,
        "cacti": cacti,
        "is_three_edge_connected": report.is_three_edge_connected(),
    })
}

fn join(xs: &[usize], sep: &str) -> String {
    xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(sep)
}

fn write_text(
    out: &mut dyn Write,
    g: &Multigraph,
    log: &NormalizationLog,
    report: &ThreeEccReport,
    flags: Flags,
) -> std::io::Result<()> {
    let ids = IdMap::new(g, log);
    writeln!(out, "vertices {} edges {}", g.vertex_count(), ids.m_input)?;
    writeln!(out, "3-edge-connected: {}", if report.is_three_edge_connected() { "yes" } else { "no" })?;
    writeln!(out, "components {}", report.components.len())?;
    for (i, c) in report.components.iter().enumerate() {
        write!(out, "  {i}: {}", join(&c.members, " "))?;
        for &(a, b) in &c.virtual_edges {
            write!(out, "  [virtual {a}-{b}]")?;
        }
        writeln!(out)?;
        if let (true, Some(cert)) = (flags.certify, &c.certificate) {
            for p in &cert.paths {
                let edges: Vec<String> = p
                    .edges
                    .iter()
                    .map(|e| {
                        let id = ids.id(e.id, e.is_virtual);
                        if e.is_virtual { format!("v{id}") } else { id.to_string() }
                    })
                    .collect();
                writeln!(out, "     {:<10} {}  ({})", p.tag.as_str(), join(&p.vertices, "-"), edges.join(" "))?;
            }
        }
    }
    writeln!(out, "bridges {}", report.bridges.len())?;
    for &e in &report.bridges {
        let ed = g.edge(e);
        writeln!(out, "  {} {}-{}", ids.id(e, false), ed.a, ed.b)?;
    }
    if flags.cactus {
        writeln!(out, "cacti {}", report.cacti.len())?;
        for c in &report.cacti {
            writeln!(out, "  nodes {}", join(&c.nodes, " "))?;
            for cyc in &c.cycles {
                writeln!(out, "    cycle {}", join(cyc, " "))?;
            }
        }
    }
    Ok(())
}

fn cmd_gen_random(
    n: usize,
    m: usize,
    seed: u64,
    output: Option<PathBuf>,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> std::io::Result<i32> {
    let g = random_multigraph(n, m, seed);
    if g.edge_count() < m {
        writeln!(err, "note: {n} vertex(es) cannot hold loop-free edges; writing {}", g.edge_count())?;
    }
    let text = format!("c random n={n} m={m} seed={seed}\n{}", g.to_text());
    match output {
        Some(path) => std::fs::write(path, text)?,
        None => out.write_all(text.as_bytes())?,
    }
    Ok(EXIT_OK)
}

fn oracle_limit() -> usize {
    std::env::var(ORACLE_MAX_N_VAR)
        .ok()
        .and_then(|s| s.trim().parse().ok())
        .unwrap_or(ORACLE_MAX_N)
}

fn cmd_oracle(path: &PathBuf, out: &mut dyn Write, err: &mut dyn Write) -> std::io::Result<i32> {
    let (g, log) = match load(path, err)? {
        Ok(x) => x,
        Err(code) => return Ok(code),
    };
    let limit = oracle_limit();
    if g.vertex_count() > limit {
        writeln!(err, "oracle refuses n = {} > {limit} (set {ORACLE_MAX_N_VAR} to raise)", g.vertex_count())?;
        return Ok(EXIT_TOO_LARGE);
    }
    let origin = |e: usize| log.edge_origin[e];
    let v = json!({
        "bridges": bridges_bf(&g).into_iter().map(origin).collect::<Vec<_>>(),
        "cut_pairs": cut_pairs_bf(&g).into_iter().map(|(e, f)| [origin(e), origin(f)]).collect::<Vec<_>>(),
        "three_ecc": three_ecc_bf(&g),
    });
    writeln!(out, "{}", serde_json::to_string(&v).expect("json"))?;
    Ok(EXIT_OK)
}
